#!/usr/bin/env python3
# usage: check_cli.py <qverma binary> <schema dir>
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

exe = sys.argv[1]
schemas = Path(sys.argv[2])

registry = Registry()
loaded = {}
for p in schemas.glob("*.schema.json"):
    doc = json.loads(p.read_text())
    loaded[p.name] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = []


def run(args, env=None):
    e = dict(os.environ)
    e.pop("QVERMA_CONFIG", None)
    if env:
        e.update(env)
    return subprocess.run([exe] + args, capture_output=True, text=True, env=e)


def check(cond, what):
    if not cond:
        failures.append(what)


def validate(doc, schema):
    v = Draft202012Validator(loaded[schema], registry=registry)
    errs = sorted(v.iter_errors(doc), key=str)
    check(not errs, f"{schema}: {errs[0].message if errs else ''}")


mult_args = ["mult", "--type", "A1~", "--J", "", "--lambda", "h0=0,h1=2,d=0", "--depth", "5",
             "--format", "json"]
a = run(mult_args)
check(a.returncode == 0, f"mult exit {a.returncode}: {a.stderr}")
doc = json.loads(a.stdout)
validate(doc, "mult.schema.json")
imag = {-r["weight"]["d"]: r["dim"] for r in doc["rows"] if r["weight"]["h"] == [0, 2]}
check([imag.get(k) for k in range(6)] == [1, 1, 2, 3, 5, 7], f"imaginary dims {imag}")

b = run(mult_args)
check(a.stdout == b.stdout, "mult json is not byte identical across runs")

m = run(["mult", "--type", "A2~", "--J", "1", "--lambda", "h0=1,h1=1,h2=0", "--depth", "2",
         "--format", "json", "--monomials"])
check(m.returncode == 0, f"mult --monomials exit {m.returncode}")
mdoc = json.loads(m.stdout)
validate(mdoc, "mult.schema.json")
for r in mdoc["rows"]:
    if r["dim"] != "inf":
        check(len(r["monomials"]) == r["dim"], f"monomial count {r}")

d = run(["verify", "deformation", "--type", "A1~", "--J", "", "--depth", "4", "--format", "json"])
check(d.returncode == 0, f"deformation exit {d.returncode}")
validate(json.loads(d.stdout), "deformation.schema.json")

for args in (["verify", "uq", "--type", "A1~", "--depth", "3"],
             ["verify", "verma", "--type", "A1~", "--J", "1", "--lambda", "h0=1,h1=2", "--depth", "3"],
             ["verify", "level0", "--type", "A1~", "--lambda", "h0=-1,h1=1", "--depth", "3"]):
    r = run(args + ["--format", "json"])
    check(r.returncode == 0, f"{' '.join(args)} exit {r.returncode}")
    validate(json.loads(r.stdout), "verify.schema.json")

csv = run(["order", "--type", "A1~", "--window", "3", "--format", "csv"])
check(csv.stdout.splitlines()[0] == "k,pi,beta", "csv header")
check(len(csv.stdout.splitlines()) == 8, "csv rows")

# usage errors
for args in (["mult", "--type", "B9~"], ["mult", "--lambda", "x=1"], ["mult", "--J", "5"],
             ["mult", "--format", "xml"], ["verify", "level0", "--lambda", "h0=1"], []):
    r = run(args)
    check(r.returncode == 2, f"{args} should be a usage error, got {r.returncode}")

# defaults from the config file named by the environment
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"type": "A1~", "lambda": "h0=0,h1=2,d=0", "depth": 3, "format": "json"}, f)
    cfg = f.name
c = run(["mult"], env={"QVERMA_CONFIG": cfg})
check(c.returncode == 0, f"config run exit {c.returncode}: {c.stderr}")
cdoc = json.loads(c.stdout)
check(cdoc["config"]["depth"] == 3 and cdoc["config"]["lambda"]["h"] == [0, 2], "config defaults")
o = run(["mult", "--depth", "2", "--format", "csv"], env={"QVERMA_CONFIG": cfg})
check(o.stdout.startswith("weight,nu,dim"), "flags override config")
os.unlink(cfg)

for f in failures:
    print("FAIL", f)
print("ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
