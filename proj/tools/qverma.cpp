// qverma: command line front end
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qverma/beckorder.hpp"
#include "qverma/classical.hpp"
#include "qverma/partition.hpp"
#include "qverma/uq.hpp"
#include "qverma/verma.hpp"

using namespace qverma;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, Inconclusive = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type = "A1~";
  std::string cartanFile;
  std::string J;
  std::string lambda;
  int depth = 4;
  int window = 12;
  std::string format = "text";
  std::uint64_t seed = 1;
};

// defaults from a JSON file; keys mirror the long flags
void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  auto get = [&](const char* k, auto& v) {
    if (j.contains(k)) j.at(k).get_to(v);
  };
  get("type", c.type);
  get("cartan", c.cartanFile);
  get("J", c.J);
  get("lambda", c.lambda);
  get("depth", c.depth);
  get("window", c.window);
  get("format", c.format);
  get("seed", c.seed);
}

Weight parse_lambda(const std::string& text, const CartanData& cd) {
  Weight w{std::vector<int>(cd.N + 1, 0), 0};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("lambda entry without '=': " + item);
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("lambda entry is not an integer: " + item);
    }
    if (key == "d") {
      w.dval = value;
    } else if (key.size() > 1 && key[0] == 'h') {
      int i = -1;
      try {
        i = std::stoi(key.substr(1));
      } catch (const std::exception&) {
      }
      if (i < 0 || i > cd.N)
        throw UsageError("lambda key " + key + " out of range, expected h0..h" + std::to_string(cd.N));
      w.h[i] = value;
    } else {
      throw UsageError("unknown lambda key " + key + " (use h0..hN and d)");
    }
  }
  return w;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

// everything derived from RunConfig, validated up front
struct Context {
  RunConfig cfg;
  CartanData cd;
  std::vector<int> J;
  Weight lambda;
  std::unique_ptr<Uq> uq;
  std::unique_ptr<BeckOrdering> ord;
  std::unique_ptr<RootVectors> rv;
  std::unique_ptr<PBWAlgebra> alg;

  explicit Context(const RunConfig& c) : cfg(c) {
    if (cfg.depth < 0) throw UsageError("--depth must be nonnegative");
    if (cfg.window < 1) throw UsageError("--window must be positive");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
      throw UsageError("--format must be text, json or csv");
    try {
      cd = cfg.cartanFile.empty() ? build_cartan(cfg.type) : load_cartan_file(cfg.cartanFile);
      J = parse_J(cfg.J, cd);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    lambda = parse_lambda(cfg.lambda, cd);
  }
  const BeckOrdering& ordering() {
    if (!ord) ord = std::make_unique<BeckOrdering>(find_pi(cd, cfg.window));
    return *ord;
  }
  Uq& quantum() {
    if (!uq) uq = std::make_unique<Uq>(cd);
    return *uq;
  }
  RootVectors& vectors() {
    if (!rv) rv = std::make_unique<RootVectors>(quantum(), ordering());
    return *rv;
  }
  PBWAlgebra& algebra() {
    if (!alg) alg = std::make_unique<PBWAlgebra>(vectors());
    return *alg;
  }
  json config_json() {
    json c;
    c["type"] = cfg.cartanFile.empty() ? cd.tag : cfg.cartanFile;
    c["J"] = J;
    c["lambda"] = {{"h", lambda.h}, {"d", lambda.dval}};
    c["depth"] = cfg.depth;
    c["window"] = cfg.window;
    c["seed"] = cfg.seed;
    json pi = json::object();
    for (auto& [k, i] : ordering().pi) pi[std::to_string(k)] = i;
    c["pi"] = pi;
    return c;
  }
};

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
};

json weight_json(const Weight& w) { return {{"h", w.h}, {"d", w.dval}}; }

json dim_json(const MultResult& m) {
  if (m.kind == MultResult::Kind::Infinite) return "inf";
  return m.count;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(Context& ctx, const std::string& command, const Table& t, json payload,
          const std::vector<std::string>& notes = {}) {
  const std::string& f = ctx.cfg.format;
  if (f == "json") {
    json out;
    out["command"] = command;
    out["config"] = ctx.config_json();
    for (auto& [k, v] : payload.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else if (f == "csv") {
    for (std::size_t i = 0; i < t.cols.size(); ++i) std::cout << (i ? "," : "") << csv_cell(t.cols[i]);
    std::cout << "\n";
    for (auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_cell(r[i]);
      std::cout << "\n";
    }
  } else {
    std::vector<std::size_t> w(t.cols.size());
    for (std::size_t i = 0; i < t.cols.size(); ++i) w[i] = t.cols[i].size();
    for (auto& r : t.rows)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i)
        if (r[i].find('\n') == std::string::npos) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::cout << (i ? "  " : "");
        if (i + 1 < r.size())
          std::cout << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        else
          std::cout << r[i];
      }
      std::cout << "\n";
    };
    line(t.cols);
    for (auto& r : t.rows) line(r);
    for (auto& n : notes) std::cout << n << "\n";
  }
}

// ---------------------------------------------------------------- commands

int cmd_roots(Context& ctx) {
  Table t{{"root", "class", "height"}, {}};
  json rows = json::array();
  for (const Root& r : roots_up_to(ctx.cd, ctx.cfg.depth)) {
    RootClass c = classify(r, ctx.cd);
    std::string cls = c == RootClass::RealRoot ? "real" : "imaginary";
    int h = height(r, ctx.cd);
    t.rows.push_back({r.str(), cls, std::to_string(h)});
    rows.push_back({{"root", r.str()}, {"class", cls}, {"height", h}});
  }
  emit(ctx, "roots", t, {{"rows", rows}});
  return Ok;
}

int cmd_partition(Context& ctx) {
  PartitionSpec p = make_partition(ctx.cd, ctx.J);
  Table t{{"root", "block", "refinement", "in_SJ"}, {}};
  json rows = json::array();
  for (const Root& r : roots_up_to(ctx.cd, ctx.cfg.depth)) {
    BlockTag b = block_of(r, p);
    std::string name = b.str();
    std::string block = name.substr(0, 2), refinement = b.fin ? "fin" : "inf";
    bool s = in_SJ(r, p);
    t.rows.push_back({r.str(), block, refinement, s ? "yes" : "no"});
    rows.push_back({{"root", r.str()}, {"block", block}, {"refinement", refinement}, {"in_SJ", s}});
  }
  emit(ctx, "partition", t, {{"J", p.jstr()}, {"rows", rows}});
  return Ok;
}

int cmd_order(Context& ctx) {
  const BeckOrdering& ord = ctx.ordering();
  Table t{{"k", "pi", "beta"}, {}};
  json rows = json::array();
  for (auto& [k, b] : ord.betas) {
    std::string pi = ord.pi.count(k) ? std::to_string(ord.pi.at(k)) : "";
    t.rows.push_back({std::to_string(k), pi, b.str()});
    json row{{"k", k}, {"beta", b.str()}};
    if (ord.pi.count(k)) row["pi"] = ord.pi.at(k);
    rows.push_back(row);
  }
  BlockReport br = validate_blocks(ord);
  emit(ctx, "order", t, {{"rows", rows}, {"blocksValid", br.ok}, {"coveredDelta", br.coveredDelta}});
  return br.ok ? Ok : CheckFailed;
}

int print_vector(Context& ctx, const std::string& command, const RootVector& v) {
  std::string e = v.element.str();
  Table t{{"root", "terms", "element"}, {{v.root.str(), std::to_string(v.element.size()), e}}};
  json payload{{"root", v.root.str()}, {"terms", v.element.size()}, {"element", e}};
  if (v.color >= 0) payload["color"] = v.color;
  emit(ctx, command, t, payload);
  return Ok;
}

int cmd_rootvec(Context& ctx, int k) {
  if (std::abs(k) > ctx.cfg.window) throw UsageError("--k exceeds --window");
  return print_vector(ctx, "rootvec", ctx.vectors().real(k));
}

int cmd_imagvec(Context& ctx, int color, int level) {
  if (color < 1 || color > ctx.cd.N) throw UsageError("--color must be in 1.." + std::to_string(ctx.cd.N));
  if (level < 1) throw UsageError("--level must be positive");
  return print_vector(ctx, "imagvec", ctx.vectors().imaginary(color, level));
}

// nu = 0, the depth window, and k delta for k up to the depth bound
std::vector<Root> window_with_top(const VermaModule& m, bool imaginary_rows) {
  const CartanData& cd = m.cartan();
  std::vector<Root> out{Root(std::vector<int>(cd.N, 0), 0)};
  for (const Root& nu : m.weights_in_window(false)) out.push_back(nu);
  if (!imaginary_rows) return out;
  for (int k = 1; k <= m.config().maxdepth; ++k) {
    Root nu = cd.delta(k);
    if (in_monoid(nu, m.partition()) && std::find(out.begin(), out.end(), nu) == out.end())
      out.push_back(nu);
  }
  return out;
}

int cmd_mult(Context& ctx, bool monomials) {
  PartitionSpec p = make_partition(ctx.cd, ctx.J);
  VermaModule m(ctx.algebra(), ModuleConfig{ctx.lambda, ctx.J, ctx.cfg.depth});
  Table t{{"weight", "nu", "dim"}, {}};
  json rows = json::array();
  std::vector<Root> nus = window_with_top(m, true);
  std::unique_ptr<VermaModule> deep;
  if (monomials) {
    int top = 0;
    for (const Root& nu : nus) top = std::max(top, depth_of(nu, ctx.cd));
    deep = std::make_unique<VermaModule>(ctx.algebra(), ModuleConfig{ctx.lambda, ctx.J, top});
  }
  for (const Root& nu : nus) {
    MultResult r = nu.is_zero() ? MultResult{MultResult::Kind::Finite, 1} : mult_of(nu, p);
    Weight mu = ctx.cd.shift(ctx.lambda, nu);
    t.rows.push_back({mu.str(), nu.str(), r.str()});
    json row{{"weight", weight_json(mu)}, {"dim", dim_json(r)}};
    if (monomials && r.kind == MultResult::Kind::Finite) {
      json ms = json::array();
      for (const SymWord& w : deep->basis(nu)) ms.push_back(symword_str(w));
      row["monomials"] = ms;
    }
    rows.push_back(row);
  }
  emit(ctx, "mult", t, {{"rows", rows}});
  return Ok;
}

int cmd_module_build(Context& ctx) {
  VermaModule m(ctx.algebra(), ModuleConfig{ctx.lambda, ctx.J, ctx.cfg.depth});
  Table t{{"weight", "dim", "basis"}, {}};
  json rows = json::array();
  for (const Root& nu : window_with_top(m, false)) {
    Weight mu = ctx.cd.shift(ctx.lambda, nu);
    WeightSpace ws = nu.is_zero() ? WeightSpace{nu, {MultResult::Kind::Finite, 1}, {SymWord{}}}
                                  : m.weight_space(nu);
    std::string basis;
    json ms = json::array();
    for (const SymWord& w : ws.basis) {
      std::string s = w.empty() ? "v" : symword_str(w) + ".v";
      basis += (basis.empty() ? "" : " ") + s;
      ms.push_back(s);
    }
    if (ws.mult.kind == MultResult::Kind::Infinite) basis = "(depth slice) " + basis;
    t.rows.push_back({mu.str(), ws.mult.str(), basis});
    json row{{"weight", weight_json(mu)}, {"dim", dim_json(ws.mult)}, {"monomials", ms}};
    rows.push_back(row);
  }
  emit(ctx, "module build", t, {{"rows", rows}});
  return Ok;
}

int cmd_module_singular(Context& ctx, const std::string& nuText) {
  ModuleConfig mc{ctx.lambda, ctx.J, ctx.cfg.depth};
  if (nuText.empty()) {
    IrreducibilityVerdict v = check_irreducibility(ctx.algebra(), mc);
    Table t{{"verdict", "witness"}, {{v.str(), v.irreducible ? "" : modvec_str(v.witness)}}};
    json payload{{"verdict", v.str()}, {"irreducible", v.irreducible}};
    if (!v.irreducible) {
      payload["witnessWeight"] = weight_json(ctx.cd.shift(ctx.lambda, v.witnessWeight));
      payload["witness"] = modvec_str(v.witness);
    }
    emit(ctx, "module singular", t, payload);
    return Ok;
  }
  std::vector<int> coords = parse_ints(nuText);
  if (static_cast<int>(coords.size()) != ctx.cd.N + 1)
    throw UsageError("--nu needs " + std::to_string(ctx.cd.N + 1) + " coordinates over alpha_0..alpha_N");
  Root nu = ctx.cd.from_coords(coords);
  VermaModule m(ctx.algebra(), mc);
  auto sv = m.singular_vectors(nu);
  Table t{{"weight", "singular vector"}, {}};
  json vs = json::array();
  Weight mu = ctx.cd.shift(ctx.lambda, nu);
  for (auto& x : sv) {
    t.rows.push_back({mu.str(), modvec_str(x)});
    vs.push_back(modvec_str(x));
  }
  emit(ctx, "module singular", t, {{"weight", weight_json(mu)}, {"vectors", vs}});
  return Ok;
}

// ---------------------------------------------------------------- verify suites

struct Suite {
  Table t{{"check", "result", "detail"}, {}};
  json rows = json::array();
  bool failed = false, inconclusive = false;
  void add(const std::string& check, const std::string& result, const std::string& detail = "") {
    if (result == "fail") failed = true;
    if (result == "inconclusive") inconclusive = true;
    std::string flat = detail;
    std::replace(flat.begin(), flat.end(), '\n', ';');
    t.rows.push_back({check, result, flat});
    rows.push_back({{"check", check}, {"result", result}, {"detail", detail}});
  }
  int code() const { return failed ? CheckFailed : inconclusive ? Inconclusive : Ok; }
  std::string status() const { return failed ? "fail" : inconclusive ? "inconclusive" : "ok"; }
};

int finish(Context& ctx, const std::string& command, Suite& s, json extra = json::object()) {
  extra["rows"] = s.rows;
  extra["status"] = s.status();
  emit(ctx, command, s.t, extra, {"status: " + s.status()});
  return s.code();
}

int verify_uq(Context& ctx, int height) {
  Suite s;
  Uq& uq = ctx.quantum();
  uq.ensure_completed(height);
  int h = uq.completed_height();
  if (h < 0) {
    s.add("completion", "inconclusive", "rule budget exhausted");
  } else {
    int bad = 0, n = 0;
    for (auto& [name, x] : uq.relations()) {
      if (x.max_height() > h) continue;
      ++n;
      if (!uq.reduce(x).is_zero()) {
        ++bad;
        s.add("relation " + name, "fail");
      }
    }
    if (!bad) s.add("relations", "ok", std::to_string(n) + " reduce to 0 at height " + std::to_string(h));
  }
  int nmax = std::min(ctx.cfg.depth, 4);
  CheckReport r = verify_commutation_suite(uq, nmax);
  s.add("commutation suite", r.ok() ? "ok" : "fail",
        r.ok() ? std::to_string(r.checks) + " checks" : r.failures.front());
  int ids = 0, badIds = 0;
  for (int i = 0; i <= ctx.cd.N; ++i)
    for (int n = 1; n <= nmax; ++n)
      for (int sh = -nmax; sh <= nmax; ++sh) {
        ++ids;
        if (!verify_lusztig_identity(ctx.cd, i, sh, n)) {
          ++badIds;
          s.add("lusztig i=" + std::to_string(i) + " s=" + std::to_string(sh) + " n=" + std::to_string(n),
                "fail");
        }
      }
  if (!badIds) s.add("lusztig identities", "ok", std::to_string(ids) + " identities");
  for (int i = 1; i <= ctx.cd.N; ++i)
    for (int k = 1; 2 * k < ctx.cfg.depth; ++k)
      for (int l = k + 1; k + l <= ctx.cfg.depth; ++l) {
        const Element& x = ctx.vectors().imaginary(i, k).element;
        const Element& y = ctx.vectors().imaginary(i, l).element;
        ZeroVerdict v = uq.zero_test(uq.mul(x, y) - uq.mul(y, x));
        std::string res = v == ZeroVerdict::Zero ? "ok" : v == ZeroVerdict::NonZero ? "fail" : "inconclusive";
        s.add("[E_" + std::to_string(k) + "d, E_" + std::to_string(l) + "d] color " + std::to_string(i),
              res, verdict_str(v));
      }
  return finish(ctx, "verify uq", s, {{"height", h}});
}

int verify_verma(Context& ctx) {
  Suite s;
  ModuleConfig mc{ctx.lambda, ctx.J, ctx.cfg.depth};
  VermaModule a(ctx.algebra(), mc);
  VermaModule b(ctx.algebra(), mc);
  std::mt19937_64 rng(ctx.cfg.seed);
  b.shuffle_choices = &rng;
  int weights = 0, reorders = 0;
  for (const Root& nu : a.weights_in_window(true)) {
    WeightSpace ws = a.weight_space(nu);
    ++weights;
    if (static_cast<long long>(ws.basis.size()) != ws.mult.count)
      s.add("basis " + nu.str(), "fail",
            std::to_string(ws.basis.size()) + " monomials, partition count " + ws.mult.str());
    for (const SymWord& w : ws.basis) {
      if (w.size() < 2) continue;
      SymWord p = w;
      std::shuffle(p.begin(), p.end(), rng);
      ++reorders;
      if (a.apply(p) != b.apply(p)) s.add("straightening " + symword_str(p), "fail", "order dependent");
    }
  }
  s.add("basis identity", s.failed ? "fail" : "ok", std::to_string(weights) + " weights");
  s.add("straightening", s.failed ? "fail" : "ok", std::to_string(reorders) + " reorderings");
  return finish(ctx, "verify verma", s);
}

int verify_deformation_cmd(Context& ctx) {
  LoopAlgebra L(ctx.cd);
  DeformationReport r = verify_deformation(ctx.algebra(), L, ctx.lambda, ctx.J, ctx.cfg.depth);
  Table t{{"weight", "quantum", "partition", "classical", "ok"}, {}};
  json rows = json::array();
  for (auto& row : r.rows) {
    t.rows.push_back({row.mu.str(), row.quantum.str(), row.partition.str(), row.classical.str(),
                      row.ok ? "yes" : "no"});
    json j{{"weight", weight_json(row.mu)},
           {"dimQuantum", dim_json(row.quantum)},
           {"dimPartition", dim_json(row.partition)},
           {"dimClassical", dim_json(row.classical)},
           {"ok", row.ok}};
    if (row.quantum.kind == MultResult::Kind::Infinite) {
      j["sliceQuantum"] = row.quantumSlice;
      j["sliceClassical"] = row.classicalSlice;
    }
    rows.push_back(j);
  }
  std::string status = r.ok() ? "ok" : "fail";
  emit(ctx, "verify deformation", t, {{"rows", rows}, {"status", status}}, {"status: " + status});
  return r.ok() ? Ok : CheckFailed;
}

int verify_level0(Context& ctx) {
  if (ctx.cd.level(ctx.lambda) != 0) throw UsageError("verify level0 needs lambda of level 0");
  Suite s;
  LevelZeroReport r = verify_level_zero(ctx.algebra(), ctx.lambda, ctx.cfg.depth);
  for (auto& f : r.failures) s.add("level0", "fail", f);
  if (r.ok()) s.add("level0", "ok", r.str());
  VermaModule m = reduced_imaginary_module(ctx.algebra(), ctx.lambda, ctx.cfg.depth);
  std::string why;
  bool closed = reduced_quotient_closed(m, &why);
  s.add("quotient closed", closed ? "ok" : "fail", why);
  json extra{{"zeroNodes", r.zeroNodes}, {"vExcluded", r.vExcluded}, {"singular", r.singular.size()}};
  return finish(ctx, "verify level0", s, extra);
}

void common_options(CLI::App* sub, RunConfig& c, std::string& configPath) {
  sub->add_option("--config", configPath, "JSON file with default options (also $QVERMA_CONFIG)");
  sub->add_option("--type", c.type, "Cartan type tag, e.g. A1~, A2~, C2~");
  sub->add_option("--cartan", c.cartanFile, "Cartan matrix file (rows of integers)");
  sub->add_option("--J", c.J, "comma separated subset of 1..N");
  sub->add_option("--lambda", c.lambda, "h0=..,h1=..,d=..");
  sub->add_option("--depth", c.depth, "depth (total height) bound");
  sub->add_option("--window", c.window, "Beck ordering window");
  sub->add_option("--format", c.format, "text, json or csv");
  sub->add_option("--seed", c.seed, "seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    std::string path;
    if (const char* env = std::getenv("QVERMA_CONFIG")) path = env;
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (!path.empty()) load_config(path, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }

  CLI::App app{"quantum Verma-type modules over untwisted quantum affine algebras"};
  app.require_subcommand(1);
  std::string configPath;
  app.add_option("--config", configPath, "JSON file with default options (also $QVERMA_CONFIG)");

  int k = 0, color = 1, level = 1, height = 6;
  bool monomials = false;
  std::string nu;
  std::function<int(Context&)> run;

  auto* roots = app.add_subcommand("roots", "roots up to --depth delta coefficient");
  auto* partition = app.add_subcommand("partition", "block table of the partition for J");
  auto* order = app.add_subcommand("order", "Beck ordering beta table");
  auto* rootvec = app.add_subcommand("rootvec", "real root vector E_{beta_k}");
  rootvec->add_option("--k", k, "index")->required();
  auto* imagvec = app.add_subcommand("imagvec", "imaginary root vector");
  imagvec->add_option("--color", color, "color i in 1..N");
  imagvec->add_option("--level", level, "k in E_{k delta}");
  auto* mult = app.add_subcommand("mult", "weight multiplicities of M_J(lambda)");
  mult->add_flag("--monomials", monomials, "list PBW basis monomials (json)");
  auto* module = app.add_subcommand("module", "truncated module computations");
  module->require_subcommand(1);
  auto* mbuild = module->add_subcommand("build", "weight spaces with PBW bases");
  auto* msing = module->add_subcommand("singular", "singular vectors, or an irreducibility verdict");
  msing->add_option("--nu", nu, "coordinates of nu over alpha_0..alpha_N");
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* vuq = verify->add_subcommand("uq", "relations, commutation, Lusztig, imaginary commutativity");
  vuq->add_option("--height", height, "completion height cap");
  auto* vverma = verify->add_subcommand("verma", "basis identity and straightening");
  auto* vdef = verify->add_subcommand("deformation", "quantum, partition and classical dimensions");
  auto* vl0 = verify->add_subcommand("level0", "level-zero imaginary modules");

  for (CLI::App* sub : {roots, partition, order, rootvec, imagvec, mult, mbuild, msing, vuq, vverma, vdef, vl0})
    common_options(sub, cfg, configPath);

  roots->callback([&] { run = cmd_roots; });
  partition->callback([&] { run = cmd_partition; });
  order->callback([&] { run = cmd_order; });
  rootvec->callback([&] { run = [&](Context& c) { return cmd_rootvec(c, k); }; });
  imagvec->callback([&] { run = [&](Context& c) { return cmd_imagvec(c, color, level); }; });
  mult->callback([&] { run = [&](Context& c) { return cmd_mult(c, monomials); }; });
  mbuild->callback([&] { run = cmd_module_build; });
  msing->callback([&] { run = [&](Context& c) { return cmd_module_singular(c, nu); }; });
  vuq->callback([&] { run = [&](Context& c) { return verify_uq(c, height); }; });
  vverma->callback([&] { run = verify_verma; });
  vdef->callback([&] { run = verify_deformation_cmd; });
  vl0->callback([&] { run = verify_level0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    Context ctx(cfg);
    return run(ctx);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const NotAffine& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const LevelNotZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const TruncationExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return Inconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return CheckFailed;
  }
}
