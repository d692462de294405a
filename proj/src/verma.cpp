#include "qverma/verma.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qverma {

namespace {

bool coords_le(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool all_nonneg(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

void add_scaled(ModVec& out, const ModVec& x, const QRat& c) {
  if (c.is_zero()) return;
  for (auto& [w, a] : x) {
    auto [it, fresh] = out.emplace(w, a * c);
    if (!fresh) {
      it->second += a * c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

SymWord concat(std::initializer_list<const SymWord*> parts) {
  SymWord out;
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

bool is_imag(const Sym& s) { return s.root.fin_zero(); }

// symbols (one per color for imaginary roots) over the given roots
std::vector<Sym> with_colors(const std::vector<Root>& roots, const CartanData& cd) {
  std::vector<Sym> out;
  for (const Root& r : roots) {
    if (r.fin_zero())
      for (int c = 1; c <= cd.N; ++c) out.push_back({r, c});
    else
      out.push_back({r, 0});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- symbols and weights

std::string Sym::str() const {
  std::string s = "E[" + root.str() + "]";
  if (color) s += "^(" + std::to_string(color) + ")";
  return s;
}

std::string symword_str(const SymWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ".";
    out += w[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string modvec_str(const ModVec& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << symword_str(w) << ".v";
  }
  return os.str();
}

int depth_of(const Root& nu, const CartanData& cd) {
  int s = 0;
  for (int c : cd.coords(nu)) s += std::abs(c);
  return s;
}

std::optional<Root> weight_difference(const Weight& lambda, const Weight& mu, const CartanData& cd) {
  int N = cd.N;
  std::vector<Rational> vh(N + 1);
  for (int i = 0; i <= N; ++i) vh[i] = lambda.h[i] - mu.h[i];
  int c0 = lambda.dval - mu.dval;
  // rows 1..N of the Cartan matrix restricted to columns 1..N are invertible
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N + 1));
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) M[i - 1][j - 1] = cd.A[i][j];
    M[i - 1][N] = vh[i] - Rational(cd.A[i][0] * c0);
  }
  for (int col = 0; col < N; ++col) {
    int p = col;
    while (M[p][col] == 0) ++p;
    std::swap(M[p], M[col]);
    for (int r = 0; r < N; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (int k = col; k <= N; ++k) M[r][k] -= f * M[col][k];
    }
  }
  std::vector<int> c(N + 1);
  c[0] = c0;
  for (int j = 1; j <= N; ++j) {
    Rational x = M[j - 1][N] / M[j - 1][j - 1];
    if (x.get_den() != 1) return std::nullopt;
    c[j] = static_cast<int>(x.get_num().get_si());
  }
  Root nu = cd.from_coords(c);
  for (int i = 0; i <= N; ++i)
    if (Rational(cd.pairing(nu, i)) != vh[i]) return std::nullopt;
  return nu;
}

bool in_monoid(const Root& nu, const PartitionSpec& p) {
  bool outside = false;
  for (int j = 1; j <= p.cd->N; ++j) {
    if (p.in_J(j)) continue;
    if (nu.fin[j - 1] < 0) return false;
    if (nu.fin[j - 1] > 0) outside = true;
  }
  // a root of S_J with positive finite part outside J absorbs any multiple of delta
  if (outside) return true;
  return p.in_QJ_plus(nu);
}

std::string MultResult::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Finite: return std::to_string(count);
    case Kind::Infinite: return "inf";
  }
  return "?";
}

MultResult mult_of(const Root& nu, const PartitionSpec& p) {
  const CartanData& cd = *p.cd;
  if (!in_monoid(nu, p)) return {};
  if (!p.in_QJ_plus(nu)) return {MultResult::Kind::Infinite, 0};
  // Kostant-type count over the positive roots of Delta^J, imaginary ones N times
  std::vector<int> top = cd.coords(nu);
  std::vector<int> stride(top.size());
  int total = 1;
  for (std::size_t i = top.size(); i-- > 0;) {
    stride[i] = total;
    total *= top[i] + 1;
  }
  auto flat = [&](const std::vector<int>& c) {
    int x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) x += c[i] * stride[i];
    return x;
  };
  std::vector<long long> dp(total, 0);
  dp[0] = 1;
  for (const Root& r : roots_up_to(cd, top[0] + 1)) {
    if (height(r, cd) <= 0 || !in_SJ(r, p) || !p.in_DeltaJ(r)) continue;
    auto rc = cd.coords(r);
    if (!coords_le(rc, top)) continue;
    int times = r.fin_zero() ? cd.N : 1;
    int shift = flat(rc);
    for (int t = 0; t < times; ++t) {
      // box points in increasing flat order; x - r precedes x
      std::vector<int> c(top.size(), 0);
      for (int x = 0; x < total; ++x) {
        int rem = x;
        bool ok = true;
        for (std::size_t i = 0; i < top.size(); ++i) {
          c[i] = rem / stride[i];
          rem %= stride[i];
          if (c[i] < rc[i]) ok = false;
        }
        if (ok) dp[x] += dp[x - shift];
      }
    }
  }
  return {MultResult::Kind::Finite, dp[total - 1]};
}

MultResult weight_mult(const Weight& lambda, const std::vector<int>& J, const Weight& mu,
                       const CartanData& cd) {
  auto nu = weight_difference(lambda, mu, cd);
  if (!nu) return {};
  return mult_of(*nu, make_partition(cd, J));
}

// ---------------------------------------------------------------- PBWAlgebra

PBWAlgebra::PBWAlgebra(RootVectors& rv) : rv_(rv), uq_(rv.uq()), cd_(rv.uq().cartan()) {}

bool PBWAlgebra::positive(const Sym& s) const { return height(s.root, cd_) > 0; }

int PBWAlgebra::cmp(const Sym& a, const Sym& b) const {
  switch (compare(rv_.ordering(), a.root, b.root)) {
    case Cmp::Less: return -1;
    case Cmp::Greater: return 1;
    default: return 0;
  }
}

bool PBWAlgebra::pbw_less(const Sym& a, const Sym& b) const {
  int c = cmp(a, b);
  if (c != 0) return c < 0;
  return a.color < b.color;
}

Root PBWAlgebra::weight(const SymWord& w) const {
  Root r(std::vector<int>(cd_.N, 0), 0);
  for (const Sym& s : w) r += s.root;
  return r;
}

const Element& PBWAlgebra::element(const Sym& s) {
  auto it = sym_.find(s);
  if (it != sym_.end()) return it->second;
  Element e;
  if (positive(s)) {
    e = is_imag(s) ? rv_.imaginary(s.color, s.root.n).element : rv_.of_root(s.root).element;
    for (auto& [w, c] : e.terms())
      for (unsigned char l : w)
        if (kind_of(l) != Kind::E) throw std::logic_error("root vector not in U^+: " + s.str());
  } else {
    e = uq_.reduce(omega(element(Sym{-s.root, s.color})));
  }
  return sym_.emplace(s, std::move(e)).first->second;
}

const Element& PBWAlgebra::element(const SymWord& w) {
  auto it = mono_.find(w);
  if (it != mono_.end()) return it->second;
  Element e;
  if (w.empty())
    e = Element::scalar(QRat(1));
  else if (w.size() == 1)
    e = element(w[0]);
  else
    e = uq_.mul(element(SymWord(w.begin(), w.end() - 1)), element(w.back()));
  return mono_.emplace(w, std::move(e)).first->second;
}

std::map<Word, QRat> PBWAlgebra::image(const Element& pure) {
  std::map<Word, QRat> out;
  for (auto& [w, c] : pure.terms()) {
    auto it = images_.find(w);
    if (it == images_.end()) it = images_.emplace(w, uq_.shuffle().image(w)).first;
    for (auto& [sw, lp] : it->second) {
      QRat x = c * QRat(lp);
      auto [jt, fresh] = out.emplace(sw, x);
      if (!fresh) {
        jt->second += x;
        if (jt->second.is_zero()) out.erase(jt);
      }
    }
  }
  return out;
}

std::vector<Sym> PBWAlgebra::symbols_below(const Root& wt, bool pos) {
  std::vector<int> top = cd_.coords(pos ? wt : -wt);
  std::vector<Root> roots;
  for (const Root& r : roots_up_to(cd_, top[0] + 1)) {
    if (height(r, cd_) <= 0) continue;
    if (!coords_le(cd_.coords(r), top)) continue;
    roots.push_back(pos ? r : -r);
  }
  return with_colors(roots, cd_);
}

PBWAlgebra::Basis& PBWAlgebra::basis(const Root& wt, bool pos, const std::optional<Sym>& lo,
                                     const std::optional<Sym>& hi) {
  auto key = std::make_tuple(wt, pos, lo, hi);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  std::vector<Sym> syms;
  for (const Sym& s : symbols_below(wt, pos)) {
    if (lo && cmp(*lo, s) >= 0) continue;
    if (hi && cmp(s, *hi) >= 0) continue;
    syms.push_back(s);
  }
  std::sort(syms.begin(), syms.end(), [&](const Sym& a, const Sym& b) { return pbw_less(a, b); });
  std::vector<std::vector<int>> sc;
  for (const Sym& s : syms) sc.push_back(cd_.coords(pos ? s.root : -s.root));
  Basis b;
  SymWord cur;
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t from,
                                                               std::vector<int>& rem) {
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
      b.monomials.push_back(cur);
      return;
    }
    for (std::size_t j = from; j < syms.size(); ++j) {
      if (!coords_le(sc[j], rem)) continue;
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= sc[j][t];
      cur.push_back(syms[j]);
      rec(j, rem);
      cur.pop_back();
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] += sc[j][t];
    }
  };
  std::vector<int> rem = cd_.coords(pos ? wt : -wt);
  rec(0, rem);
  for (const SymWord& m : b.monomials)
    if (b.solver.add_column(image(element(m))))
      throw std::logic_error("ordered monomials are linearly dependent at " + symword_str(m));
  return bases_.emplace(key, std::move(b)).first->second;
}

std::optional<std::map<SymWord, QRat>> PBWAlgebra::solve_in(Basis& b, const Element& x) {
  auto sol = b.solver.solve(image(x));
  if (!sol) return std::nullopt;
  std::map<SymWord, QRat> out;
  for (auto& [j, c] : *sol)
    if (!c.is_zero()) out[b.monomials[j]] = c;
  return out;
}

std::map<SymWord, QRat> PBWAlgebra::expand(const Element& pure, bool pos) {
  std::map<Root, Element> byWeight;
  for (auto& [w, c] : pure.terms()) byWeight[word_weight(w, cd_)].add_term(w, c);
  std::map<SymWord, QRat> out;
  for (auto& [wt, part] : byWeight) {
    auto sol = solve_in(basis(wt, pos, std::nullopt, std::nullopt), part);
    if (!sol) throw std::logic_error("element outside the span of ordered monomials");
    for (auto& [m, c] : *sol) out[m] += c;
  }
  return out;
}

SwapRule PBWAlgebra::same_sign(const Sym& x, const Sym& y) {
  bool pos = positive(x);
  int c = cmp(x, y);
  Sym lo = c <= 0 ? x : y, hi = c <= 0 ? y : x;
  int e = bilinear_form(x.root, y.root, cd_);
  // E_x E_y - xi E_y E_x lies in the span of ordered monomials strictly between x and y for
  // exactly one xi = q^{+-(x|y)}. With these root vectors it is q^{-(x|y)} for positive x > y
  // and q^{(x|y)} for negative x > y.
  int sgn = (c > 0 ? 1 : -1) * (pos ? -1 : 1);
  const Element& exy = uq_.mul(element(x), element(y));
  Element eyx = uq_.mul(element(y), element(x));
  Basis& b = basis(x.root + y.root, pos, lo, hi);
  QRat xi = QRat::q_pow(sgn * e);
  auto sol = solve_in(b, exy - eyx * xi);
  if (!sol && e != 0) {
    xi = QRat::q_pow(-sgn * e);
    sol = solve_in(b, exy - eyx * xi);
    if (sol) ++fallbacks_;
  }
  if (!sol) throw std::logic_error("no convex commutation rule for " + x.str() + " " + y.str());
  SwapRule r{xi, {}};
  std::vector<int> t0(cd_.N + 2, 0);
  for (auto& [m, cm] : *sol) r.rest.push_back(pos ? PBWTerm{{}, t0, m, cm} : PBWTerm{m, t0, {}, cm});
  return r;
}

SwapRule PBWAlgebra::mixed(const Sym& x, const Sym& y) {
  Element R = uq_.mul(element(x), element(y)) - uq_.mul(element(y), element(x));
  TriangularReducer& red = uq_.reducer();
  std::map<std::pair<Word, std::vector<int>>, Element> eparts;
  for (auto& [w, c] : R.terms()) {
    auto s = red.split(w);
    eparts[{s.f, s.torus}].add_term(s.e, c);
  }
  std::map<std::pair<std::vector<int>, SymWord>, Element> fparts;
  for (auto& [key, e] : eparts)
    for (auto& [m, c] : expand(e, true)) fparts[{key.second, m}].add_term(key.first, c);
  SwapRule r{QRat(1), {}};
  for (auto& [key, f] : fparts)
    for (auto& [n, c] : expand(f, false)) r.rest.push_back({n, key.first, key.second, c});
  return r;
}

const SwapRule& PBWAlgebra::swap_rule(const Sym& x, const Sym& y) {
  auto key = std::make_pair(x, y);
  auto it = rules_.find(key);
  if (it != rules_.end()) return it->second;
  SwapRule r = positive(x) == positive(y) ? same_sign(x, y) : mixed(x, y);
  return rules_.emplace(key, std::move(r)).first->second;
}

// ---------------------------------------------------------------- VermaModule

VermaModule::VermaModule(PBWAlgebra& alg, ModuleConfig cfg)
    : alg_(alg), cd_(alg.cartan()), cfg_(std::move(cfg)), part_(make_partition(cd_, cfg_.J)) {
  if (static_cast<int>(cfg_.lambda.h.size()) != cd_.N + 1)
    throw std::invalid_argument("lambda needs values on h_0..h_N");
  if (cfg_.reduced) {
    if (!part_.J.empty()) throw std::invalid_argument("the level-zero quotient needs J empty");
    if (cd_.level(cfg_.lambda) != 0) throw LevelNotZero("LevelNotZero: lambda(c) != 0");
  }
}

bool VermaModule::raising(const Sym& s) const { return in_SJ(s.root, part_); }

int VermaModule::segment(const Sym& s) const {
  BlockTag b = block_of(s.root, part_);
  if (b.block == Block::B1) return b.fin ? 2 : 0;
  if (b.block == Block::A3 && !b.fin) return 1;
  if (b.block == Block::B2) return 3;
  if (b.block == Block::B3 && b.fin) return 4;
  throw std::logic_error("not a lowering symbol: " + s.str());
}

bool VermaModule::canonical_less(const Sym& a, const Sym& b) const {
  int sa = segment(a), sb = segment(b);
  if (sa != sb) return sa < sb;
  int c = alg_.cmp(a, b);
  if (c != 0) return c > 0;
  return a.color < b.color;
}

bool VermaModule::killed(const SymWord& w) const {
  return cfg_.reduced && std::any_of(w.begin(), w.end(), is_imag);
}

int VermaModule::torus_exponent(const std::vector<int>& t, const Root& wt) const {
  int e = 0;
  for (int i = 0; i <= cd_.N; ++i)
    if (t[i]) e += t[i] * cd_.d[i] * (cfg_.lambda.h[i] + cd_.pairing(wt, i));
  if (t[cd_.N + 1]) e += t[cd_.N + 1] * cd_.d[0] * (cfg_.lambda.dval + wt.n);
  return e;
}

ModVec VermaModule::swap_at(const SymWord& w, std::size_t i) {
  const Sym x = w[i], y = w[i + 1];
  const SwapRule& rule = alg_.swap_rule(x, y);
  SymWord prefix(w.begin(), w.begin() + i), suffix(w.begin() + i + 2, w.end());
  SymWord yx{y, x};
  ModVec out;
  add_scaled(out, canon(concat({&prefix, &yx, &suffix})), rule.xi);
  Root sw = alg_.weight(suffix);
  for (const PBWTerm& t : rule.rest) {
    QRat c = t.c;
    if (std::any_of(t.torus.begin(), t.torus.end(), [](int a) { return a != 0; }))
      c = c.shifted(torus_exponent(t.torus, alg_.weight(t.pos) + sw));
    add_scaled(out, canon(concat({&prefix, &t.neg, &t.pos, &suffix})), c);
  }
  return out;
}

const ModVec& VermaModule::canon(const SymWord& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (memo_.size() >= max_memo) throw TruncationExceeded("TruncationExceeded: straightening memo");
  ModVec r;
  int pos = -1;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
    if (raising(w[i])) {
      pos = i;
      break;
    }
  if (pos >= 0) {
    // a raising symbol at the right end kills v
    if (pos + 1 < static_cast<int>(w.size())) r = swap_at(w, pos);
  } else {
    std::vector<std::size_t> inv;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (canonical_less(w[i + 1], w[i])) inv.push_back(i);
    if (inv.empty()) {
      if (!killed(w)) r[w] = QRat(1);
    } else {
      std::size_t i = inv.back();
      if (shuffle_choices) i = inv[(*shuffle_choices)() % inv.size()];
      r = swap_at(w, i);
    }
  }
  return memo_.emplace(w, std::move(r)).first->second;
}

ModVec VermaModule::apply(const SymWord& w) { return canon(w); }

ModVec VermaModule::act(const Sym& s, const ModVec& x) {
  ModVec out;
  for (auto& [w, c] : x) {
    SymWord sw;
    sw.reserve(w.size() + 1);
    sw.push_back(s);
    sw.insert(sw.end(), w.begin(), w.end());
    add_scaled(out, canon(sw), c);
  }
  return out;
}

ModVec VermaModule::act_letter(Letter l, const ModVec& x) {
  int i = index_of(l);
  Kind k = kind_of(l);
  if (k == Kind::E || k == Kind::F) {
    Sym s{k == Kind::E ? cd_.simple(i) : -cd_.simple(i), 0};
    if (!(alg_.element(s) == Element::letter(l)))
      throw std::logic_error("root vector of a simple root differs from the generator");
    return act(s, x);
  }
  std::vector<int> t(cd_.N + 2, 0);
  int sign = (k == Kind::Kplus || k == Kind::Dplus) ? 1 : -1;
  if (k == Kind::Kplus || k == Kind::Kminus)
    t[i] = sign;
  else
    t[cd_.N + 1] = sign;
  ModVec out;
  for (auto& [w, c] : x) out[w] = c.shifted(torus_exponent(t, alg_.weight(w)));
  return out;
}

QRat VermaModule::vacuum(const ModVec& x) {
  auto it = x.find(SymWord{});
  return it == x.end() ? QRat(0) : it->second;
}

std::vector<Sym> VermaModule::candidates(const Root& nu, bool finite) const {
  std::vector<Root> roots;
  if (finite) {
    std::vector<int> top = cd_.coords(nu);
    for (const Root& r : roots_up_to(cd_, top[0] + 1))
      if (height(r, cd_) < 0 && !in_SJ(r, part_) && coords_le(cd_.coords(-r), top))
        roots.push_back(r);
  } else {
    for (const Root& r : roots_up_to(cd_, cfg_.maxdepth))
      if (!in_SJ(r, part_) && depth_of(r, cd_) <= cfg_.maxdepth) roots.push_back(r);
  }
  auto syms = with_colors(roots, cd_);
  std::sort(syms.begin(), syms.end(),
            [&](const Sym& a, const Sym& b) { return canonical_less(a, b); });
  return syms;
}

std::vector<SymWord> VermaModule::basis(const Root& nu) const {
  std::vector<SymWord> out;
  if (!in_monoid(nu, part_)) return out;
  bool finite = part_.in_QJ_plus(nu);
  auto syms = candidates(nu, finite);
  std::vector<std::vector<int>> sc;
  std::vector<int> sd;
  for (const Sym& s : syms) {
    sc.push_back(cd_.coords(s.root));
    sd.push_back(depth_of(s.root, cd_));
  }
  // rem = coordinates of nu + (weight so far); finished when it is 0
  std::vector<int> rem = cd_.coords(nu);
  SymWord cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
      if (!killed(cur)) out.push_back(cur);
      if (finite) return;
    }
    for (std::size_t j = from; j < syms.size(); ++j) {
      if (!finite && sd[j] > budget) continue;
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] += sc[j][t];
      if (!finite || all_nonneg(rem)) {
        cur.push_back(syms[j]);
        rec(j, budget - sd[j]);
        cur.pop_back();
      }
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= sc[j][t];
    }
  };
  rec(0, cfg_.maxdepth);
  return out;
}

WeightSpace VermaModule::weight_space(const Root& nu) const {
  WeightSpace ws{nu, mult_of(nu, part_), basis(nu)};
  if (cfg_.reduced && ws.mult.kind == MultResult::Kind::Finite)
    ws.mult.count = static_cast<long long>(ws.basis.size());
  return ws;
}

std::vector<Root> VermaModule::weights_in_window(bool finite_only) const {
  std::vector<std::pair<int, Root>> found;
  int D = cfg_.maxdepth, n = cd_.N + 1;
  std::vector<int> c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      Root nu = cd_.from_coords(c);
      if (nu.is_zero() || !in_monoid(nu, part_)) return;
      if (finite_only && !part_.in_QJ_plus(nu)) return;
      if (cfg_.reduced && nu.fin_zero()) return;
      found.push_back({D - left, nu});
      return;
    }
    for (int x = -left; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - std::abs(x));
    }
    c[i] = 0;
  };
  rec(0, D);
  std::sort(found.begin(), found.end());
  std::vector<Root> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

std::vector<Sym> VermaModule::raising_window(const Root& nu) const {
  std::vector<Root> roots;
  for (const Root& r : roots_up_to(cd_, cfg_.maxdepth)) {
    if (!in_SJ(r, part_) || depth_of(r, cd_) > cfg_.maxdepth) continue;
    Root rest = nu - r;
    if (!in_monoid(rest, part_)) continue;
    if (cfg_.reduced && rest.fin_zero() && !rest.is_zero()) continue;
    roots.push_back(r);
  }
  return with_colors(roots, cd_);
}

std::vector<ModVec> VermaModule::singular_vectors(const Root& nu) {
  auto B = basis(nu);
  auto ops = raising_window(nu);
  SparseSolver<std::pair<int, SymWord>> solver;
  std::vector<ModVec> out;
  for (std::size_t j = 0; j < B.size(); ++j) {
    std::map<std::pair<int, SymWord>, QRat> img;
    ModVec b{{B[j], QRat(1)}};
    for (std::size_t k = 0; k < ops.size(); ++k)
      for (auto& [w, c] : act(ops[k], b)) img[{static_cast<int>(k), w}] = c;
    if (auto rel = solver.add_column(std::move(img))) {
      ModVec v;
      for (auto& [idx, c] : *rel)
        if (!c.is_zero()) v[B[idx]] = c;
      out.push_back(std::move(v));
    }
  }
  return out;
}

VermaModule build_module(PBWAlgebra& alg, const ModuleConfig& cfg) { return VermaModule(alg, cfg); }

std::vector<ModVec> singular_vectors(VermaModule& m, const Root& nu) { return m.singular_vectors(nu); }

QRat heisenberg_pairing(PBWAlgebra& alg, int i, int j, int k, const Weight& lambda) {
  const CartanData& cd = alg.cartan();
  VermaModule m(alg, ModuleConfig{lambda, {}, k * depth_of(cd.delta(1), cd), false});
  Sym up{cd.delta(k), i}, down{-cd.delta(k), j};
  ModVec x = m.apply({up, down});
  add_scaled(x, m.apply({down, up}), QRat(-1));
  for (auto& [w, c] : x)
    if (!w.empty()) throw std::logic_error("commutator does not act on v by a scalar");
  return VermaModule::vacuum(x);
}

std::string IrreducibilityVerdict::str() const {
  if (irreducible) return "IrreducibleUpToDepth(" + std::to_string(depth) + ")";
  return "ReducibleWithWitness(lambda-(" + witnessWeight.str() + "): " + modvec_str(witness) + ")";
}

IrreducibilityVerdict check_irreducibility(PBWAlgebra& alg, const ModuleConfig& cfg) {
  VermaModule m(alg, cfg);
  IrreducibilityVerdict v;
  v.depth = cfg.maxdepth;
  for (const Root& nu : m.weights_in_window(true)) {
    auto sv = m.singular_vectors(nu);
    if (!sv.empty()) {
      v.irreducible = false;
      v.depth = depth_of(nu, alg.cartan());
      v.witnessWeight = nu;
      v.witness = sv.front();
      return v;
    }
  }
  return v;
}

VermaModule reduced_imaginary_module(PBWAlgebra& alg, const Weight& lambda, int depth) {
  if (alg.cartan().level(lambda) != 0) throw LevelNotZero("LevelNotZero: lambda(c) != 0");
  return VermaModule(alg, ModuleConfig{lambda, {}, depth, true});
}

std::string LevelZeroReport::str() const {
  std::ostringstream os;
  os << "zero nodes:";
  for (int i : zeroNodes) os << " " << i;
  if (zeroNodes.empty()) os << " none";
  os << "\nlemma checks: " << lemmaChecks << " (cases " << lemmaCases[0] << "/" << lemmaCases[1]
     << "/" << lemmaCases[2] << ")";
  os << "\nv excluded from the generated submodule: " << (vExcluded ? "yes" : "no") << " ("
     << closureVectors << " vectors)";
  os << "\nweights searched for singular vectors: " << weightsSearched;
  for (auto& [nu, x] : singular) os << "\nsingular at lambda-(" << nu.str() << "): " << modvec_str(x);
  for (auto& f : failures) os << "\nFAIL " << f;
  return os.str();
}

LevelZeroReport verify_level_zero(PBWAlgebra& alg, const Weight& lambda, int depth) {
  const CartanData& cd = alg.cartan();
  VermaModule m = reduced_imaginary_module(alg, lambda, depth);
  LevelZeroReport rep;
  for (int i = 1; i <= cd.N; ++i)
    if (lambda.h[i] == 0) rep.zeroNodes.push_back(i);

  for (int i : rep.zeroNodes) {
    const Root ai = cd.simple(i);
    ModVec ev = m.apply({Sym{-ai, 0}});
    if (ev.empty()) rep.failures.push_back("E_{-alpha_" + std::to_string(i) + "} v is zero");
    for (const Root& beta : cd.finitePositiveRoots)
      for (int k = -depth; k <= depth; ++k) {
        Root r = beta + cd.delta(k);
        int which = beta != ai ? 0 : (k != 0 ? 1 : 2);
        ++rep.lemmaChecks;
        ++rep.lemmaCases[which];
        ModVec y = m.act(Sym{r, 0}, ev);
        if (!y.empty())
          rep.failures.push_back("E[" + r.str() + "] E_{-alpha_" + std::to_string(i) +
                                 "} v = " + modvec_str(y));
      }
    // the submodule generated by E v, explored by generator words inside the window
    std::map<Root, SparseSolver<SymWord>> span;
    std::vector<ModVec> frontier{ev};
    span[ai].add_column(ev);
    for (int round = 0; round < depth && !frontier.empty(); ++round) {
      std::vector<ModVec> next;
      for (const ModVec& x : frontier)
        for (int j = 0; j <= cd.N; ++j)
          for (Letter l : {E(j), F(j)}) {
            ModVec y = m.act_letter(l, x);
            if (y.empty()) continue;
            Root nu = -m.weight_of(y.begin()->first);
            if (depth_of(nu, cd) > depth) continue;
            if (nu.is_zero()) {
              rep.vExcluded = false;
              rep.failures.push_back("v lies in the submodule generated by E_{-alpha_" +
                                     std::to_string(i) + "} v");
              continue;
            }
            if (!span[nu].add_column(y)) {
              next.push_back(std::move(y));
              ++rep.closureVectors;
            }
          }
      frontier = std::move(next);
    }
  }

  for (const Root& nu : m.weights_in_window(false)) {
    ++rep.weightsSearched;
    for (auto& x : m.singular_vectors(nu)) rep.singular.push_back({nu, x});
  }
  if (rep.zeroNodes.empty())
    for (auto& [nu, x] : rep.singular)
      rep.failures.push_back("singular vector at lambda-(" + nu.str() + ")");
  return rep;
}

bool reduced_quotient_closed(VermaModule& m, std::string* why) {
  const ModuleConfig& cfg = m.config();
  if (!cfg.reduced) throw std::invalid_argument("not a level-zero quotient");
  const CartanData& cd = m.cartan();
  ModuleConfig full = cfg;
  full.reduced = false;
  VermaModule big(m.algebra(), full);
  auto is_killed = [](const SymWord& w) { return std::any_of(w.begin(), w.end(), is_imag); };
  for (const Root& nu : big.weights_in_window(false))
    for (const SymWord& b : big.basis(nu)) {
      if (!is_killed(b)) continue;
      for (int j = 0; j <= cd.N; ++j)
        for (Letter l : {E(j), F(j)})
          for (auto& [w, c] : big.act_letter(l, ModVec{{b, QRat(1)}}))
            if (!is_killed(w)) {
              if (why)
                *why = "generator " + word_str(Word(1, letter_char(l))) + " maps " +
                       symword_str(b) + ".v onto " + symword_str(w) + ".v";
              return false;
            }
    }
  return true;
}

}  // namespace qverma
