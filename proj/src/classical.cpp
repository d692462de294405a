#include "qverma/classical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qverma {

namespace {

Mat zero_mat(int n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

Mat unit(int n, int i, int j) {
  Mat m = zero_mat(n);
  m[i][j] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Mat lie(const Mat& a, const Mat& b) {
  Mat x = mat_mul(a, b), y = mat_mul(b, a);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[i][j] -= y[i][j];
  return x;
}

Mat lin(const Mat& a, const Rational& s, const Mat& b) {
  Mat x = a;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[i][j] += s * b[i][j];
  return x;
}

Mat scaled(const Mat& a, const Rational& s) {
  Mat x = a;
  for (auto& row : x)
    for (auto& v : row) v *= s;
  return x;
}

bool is_zero(const Mat& a) {
  for (auto& row : a)
    for (auto& v : row)
      if (v != 0) return false;
  return true;
}

Rational trace(const Mat& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

// s with y = s x, for x != 0; throws when y is not a multiple of x
Rational ratio(const Mat& y, const Mat& x) {
  std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x[i][j] != 0) {
        Rational s = y[i][j] / x[i][j];
        if (!is_zero(lin(y, -s, x))) throw std::logic_error("not an eigenvector");
        return s;
      }
  throw std::logic_error("ratio against zero");
}

// solves sum_k x_k cols[k] = rhs exactly; throws if inconsistent
std::vector<Rational> solve_dense(const std::vector<std::vector<Rational>>& cols,
                                  const std::vector<Rational>& rhs) {
  std::size_t m = rhs.size(), n = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] = cols[k][i];
    a[i][n] = rhs[i];
  }
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t k = 0; k < n && r < m; ++k) {
    std::size_t p = r;
    while (p < m && a[p][k] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[r][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(static_cast<int>(k));
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) throw std::logic_error("matrix outside the span of the basis");
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a[i][n] / a[i][pivcol[i]];
  return x;
}

std::vector<Rational> flatten(const Mat& a) {
  std::vector<Rational> v;
  for (auto& row : a) v.insert(v.end(), row.begin(), row.end());
  return v;
}

void add_to(std::map<LoopGen, Rational>& x, const LoopGen& g, const Rational& v) {
  if (v == 0) return;
  Rational& s = x[g];
  s += v;
  if (s == 0) x.erase(g);
}

void add_to(LoopPoly& x, const LoopPoly& y, const Rational& f) {
  for (auto& [w, v] : y) {
    Rational& s = x[w];
    s += f * v;
    if (s == 0) x.erase(w);
  }
}

}  // namespace

// ---------------------------------------------------------------- finite algebra

FiniteLie::FiniteLie(const CartanData& cd) : N_(cd.N) {
  auto a = [&](int i, int j) { return cd.A[i][j]; };
  std::vector<Mat> e(N_), f(N_);
  bool path = true;
  std::vector<std::vector<int>> adj(N_ + 1);
  for (int i = 1; i <= N_; ++i)
    for (int j = 1; j <= N_; ++j) {
      if (i == j) continue;
      if (a(i, j) != a(j, i) || a(i, j) < -1) path = false;
      if (a(i, j) == -1) adj[i].push_back(j);
    }
  int edges = 0, start = 1;
  for (int i = 1; i <= N_; ++i) {
    if (adj[i].size() > 2) path = false;
    if (adj[i].size() <= 1) start = i;
    edges += static_cast<int>(adj[i].size());
  }
  if (path && edges == 2 * (N_ - 1)) {
    // walk the diagram from an end; node at position p acts as E_{p,p+1} in gl_{N+1}
    std::vector<int> pos(N_ + 1, -1);
    int cur = start, prev = 0;
    for (int p = 0; p < N_; ++p) {
      pos[cur] = p;
      int next = 0;
      for (int j : adj[cur])
        if (j != prev) next = j;
      prev = cur;
      cur = next;
    }
    if (std::count(pos.begin() + 1, pos.end(), -1)) path = false;
    if (path)
      for (int i = 1; i <= N_; ++i) {
        e[i - 1] = unit(N_ + 1, pos[i], pos[i] + 1);
        f[i - 1] = unit(N_ + 1, pos[i] + 1, pos[i]);
      }
  } else {
    path = false;
  }
  if (!path) {
    if (N_ != 2 || a(1, 2) * a(2, 1) != 2)
      throw std::invalid_argument("no matrix realization for this finite type");
    // sp_4: short simple root acts as E12 - E34, long as E23
    int s = a(1, 2) == -2 ? 1 : 2, l = 3 - s;
    e[s - 1] = lin(unit(4, 0, 1), Rational(-1), unit(4, 2, 3));
    f[s - 1] = lin(unit(4, 1, 0), Rational(-1), unit(4, 3, 2));
    e[l - 1] = unit(4, 1, 2);
    f[l - 1] = unit(4, 2, 1);
  }
  std::vector<Mat> hs;
  for (int i = 0; i < N_; ++i) hs.push_back(lie(e[i], f[i]));
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) {
      if (!is_zero(lin(lie(hs[i], e[j]), Rational(-a(i + 1, j + 1)), e[j])) ||
          (i != j && !is_zero(lie(e[i], f[j]))))
        throw std::logic_error("matrix realization does not match the Cartan matrix");
    }

  // positive roots by iterated brackets; each root space is a line
  std::vector<Mat> pos;
  std::vector<std::vector<int>> proots;
  std::map<std::vector<int>, int> idx;
  auto grow = [&](const std::vector<Mat>& gen, std::vector<Mat>& vecs,
                  std::vector<std::vector<int>>& rts, std::map<std::vector<int>, int>& id) {
    for (int i = 0; i < N_; ++i) {
      std::vector<int> r(N_, 0);
      r[i] = 1;
      id[r] = static_cast<int>(vecs.size());
      vecs.push_back(gen[i]);
      rts.push_back(r);
    }
    for (std::size_t k = 0; k < vecs.size(); ++k)
      for (int i = 0; i < N_; ++i) {
        Mat y = lie(gen[i], vecs[k]);
        if (is_zero(y)) continue;
        std::vector<int> r = rts[k];
        r[i] += 1;
        if (id.count(r)) continue;
        // divide by p+1 (alpha_i string through the old root) to stay in a Chevalley basis
        int p = 0;
        for (std::vector<int> down = rts[k]; id.count(down); ++p) --down[i];
        id[r] = static_cast<int>(vecs.size());
        vecs.push_back(scaled(y, Rational(1, p)));
        rts.push_back(r);
      }
  };
  grow(e, pos, proots, idx);
  std::vector<Mat> neg;
  std::vector<std::vector<int>> nroots;
  std::map<std::vector<int>, int> nidx;
  grow(f, neg, nroots, nidx);
  P_ = static_cast<int>(pos.size());
  if (static_cast<int>(neg.size()) != P_) throw std::logic_error("root count mismatch");
  {
    std::vector<Mat> fixed(P_);
    for (int k = 0; k < P_; ++k) {
      Mat fk = neg[nidx.at(proots[k])];
      Rational s = ratio(lie(lie(pos[k], fk), pos[k]), pos[k]);
      fixed[k] = scaled(fk, Rational(2) / s);
    }
    neg = std::move(fixed);
  }

  for (int k = 0; k < P_; ++k) {
    basis_.push_back(pos[k]);
    roots_.push_back(proots[k]);
  }
  for (int k = 0; k < P_; ++k) {
    basis_.push_back(neg[k]);
    std::vector<int> r = proots[k];
    for (int& x : r) x = -x;
    roots_.push_back(r);
  }
  for (int i = 0; i < N_; ++i) {
    basis_.push_back(hs[i]);
    roots_.push_back(std::vector<int>(N_, 0));
  }
  for (int i = 0; i < N_; ++i) simple_.push_back(idx.at(proots[i]));
  theta_ = 0;
  for (int k = 0; k < P_; ++k)
    if (finite_height(proots[k]) > finite_height(proots[theta_])) theta_ = k;

  int D = dim();
  table_.assign(D, std::vector<std::map<int, Rational>>(D));
  form_.assign(D, std::vector<Rational>(D, Rational(0)));
  Rational kappa = Rational(1) / trace(mat_mul(basis_[e_theta()], basis_[f_theta()]));
  for (int x = 0; x < D; ++x)
    for (int y = 0; y < D; ++y) {
      table_[x][y] = coords(lie(basis_[x], basis_[y]));
      form_[x][y] = kappa * trace(mat_mul(basis_[x], basis_[y]));
    }
}

std::map<int, Rational> FiniteLie::coords(const Mat& m) const {
  std::map<int, Rational> out;
  if (is_zero(m)) return out;
  std::vector<std::vector<Rational>> cols;
  for (const Mat& b : basis_) cols.push_back(flatten(b));
  auto x = solve_dense(cols, flatten(m));
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) out[static_cast<int>(k)] = x[k];
  return out;
}

std::string FiniteLie::name(int b) const {
  if (is_cartan(b)) return "h" + std::to_string(b - 2 * P_ + 1);
  Root r(roots_[b], 0);
  return std::string(b < P_ ? "e[" : "f[") + (b < P_ ? r : -r).str() + "]";
}

// ---------------------------------------------------------------- loop algebra

LoopElement LoopAlgebra::bracket(const LoopGen& x, const LoopGen& y) const {
  LoopElement out;
  int D = g_.dim();
  if (x.b == D || y.b == D) return out;
  if (x.b == D + 1 && y.b == D + 1) return out;
  if (x.b == D + 1) {
    add_to(out, y, Rational(y.t));
    return out;
  }
  if (y.b == D + 1) {
    add_to(out, x, Rational(-x.t));
    return out;
  }
  int t = x.t + y.t;
  for (auto& [k, v] : g_.bracket(x.b, y.b)) add_to(out, LoopGen{k, t}, v);
  if (t == 0 && x.t != 0) add_to(out, c(), Rational(x.t) * g_.form(x.b, y.b));
  return out;
}

Root LoopAlgebra::weight(const LoopGen& x) const {
  int N = cd_.N;
  if (x.b >= g_.dim()) return Root(std::vector<int>(N, 0), 0);
  auto eigen = [&](const LoopGen& op) {
    LoopElement br = bracket(op, x);
    if (br.empty()) return Rational(0);
    if (br.size() != 1 || br.begin()->first != x)
      throw std::logic_error("not a weight vector: " + str(x));
    return br.begin()->second;
  };
  std::vector<Rational> m;
  for (int i = 1; i <= N; ++i) m.push_back(eigen(LoopGen{g_.h(i), 0}));
  Rational n = eigen(d());
  // <beta, h_i> = sum_j a_ij beta_j
  std::vector<std::vector<Rational>> cols(N, std::vector<Rational>(N));
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) cols[j][i] = cd_.A[i + 1][j + 1];
  auto beta = solve_dense(cols, m);
  Root r(std::vector<int>(N, 0), 0);
  for (int j = 0; j < N; ++j) {
    if (beta[j].get_den() != 1) throw std::logic_error("non-integral weight");
    r.fin[j] = static_cast<int>(beta[j].get_num().get_si());
  }
  r.n = static_cast<int>(n.get_num().get_si());
  return r;
}

std::string LoopAlgebra::str(const LoopGen& x) const {
  if (x.b == g_.dim()) return "c";
  if (x.b == g_.dim() + 1) return "d";
  std::string s = g_.name(x.b);
  if (x.t != 0) s += "t^" + std::to_string(x.t);
  return s;
}

std::string LoopAlgebra::str(const LoopElement& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [g, v] : x) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(v) << "*" << str(g);
  }
  return os.str();
}

std::string LoopAlgebra::str(const LoopPoly& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, v] : x) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(v);
    for (auto& g : w) os << "*" << str(g);
  }
  return os.str();
}

LoopPoly LoopAlgebra::normal_order(const std::vector<LoopGen>& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  LoopPoly out;
  std::size_t i = 0;
  while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
  if (i + 1 >= w.size()) {
    out[w] = 1;
  } else {
    std::vector<LoopGen> s = w;
    std::swap(s[i], s[i + 1]);
    add_to(out, normal_order(s), Rational(1));
    for (auto& [g, v] : bracket(w[i], w[i + 1])) {
      std::vector<LoopGen> r(w.begin(), w.begin() + i);
      r.push_back(g);
      r.insert(r.end(), w.begin() + i + 2, w.end());
      add_to(out, normal_order(r), v);
    }
  }
  memo_[w] = out;
  return out;
}

LoopPoly LoopAlgebra::multiply(const LoopPoly& a, const LoopPoly& b) const {
  LoopPoly out;
  for (auto& [u, x] : a)
    for (auto& [v, y] : b) {
      std::vector<LoopGen> w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_to(out, normal_order(w), x * y);
    }
  return out;
}

LoopElement loop_bracket(const LoopAlgebra& L, const LoopElement& x, const LoopElement& y) {
  LoopElement out;
  for (auto& [a, u] : x)
    for (auto& [b, v] : y)
      for (auto& [g, w] : L.bracket(a, b)) add_to(out, g, u * v * w);
  return out;
}

LoopPoly classical_limit_element(const LoopAlgebra& L, const Element& x) {
  const CartanData& cd = L.cartan();
  LoopPoly out;
  for (auto& [w, c] : x.terms()) {
    if (aform_member(c, cd.d).verdict == AFormVerdict::NotMember) throw NotInAForm();
    Rational v = eval_at_one(c);
    if (v == 0) continue;
    std::vector<LoopGen> gens;
    for (char ch : w) {
      Letter l = static_cast<Letter>(ch);
      Kind k = kind_of(l);
      if (k == Kind::E)
        gens.push_back(L.e(index_of(l)));
      else if (k == Kind::F)
        gens.push_back(L.f(index_of(l)));
    }
    add_to(out, L.normal_order(gens), v);
  }
  return out;
}

Root loop_weight(const LoopAlgebra& L, const LoopPoly& x) {
  Root wt(std::vector<int>(L.cartan().N, 0), 0);
  bool first = true;
  for (auto& [w, v] : x) {
    Root r(std::vector<int>(L.cartan().N, 0), 0);
    for (auto& g : w) r += L.weight(g);
    if (!first && r != wt) throw std::logic_error("inhomogeneous loop element");
    wt = r;
    first = false;
  }
  return wt;
}

// ---------------------------------------------------------------- classical Verma

ClassicalVerma::ClassicalVerma(const LoopAlgebra& L, Weight lambda, std::vector<int> J,
                               int maxdepth)
    : L_(L), lambda_(std::move(lambda)), J_(std::move(J)), maxdepth_(maxdepth) {
  std::sort(J_.begin(), J_.end());
}

bool ClassicalVerma::lowering(const LoopGen& x) const {
  const FiniteLie& g = L_.finite();
  if (x.b >= g.dim()) return false;
  if (g.is_cartan(x.b)) return x.t < 0;
  const auto& r = g.root(x.b);
  bool levi = true, neg = false;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (r[i] < 0) neg = true;
    if (r[i] != 0 && !std::binary_search(J_.begin(), J_.end(), i + 1)) levi = false;
  }
  if (levi) return x.t < 0 || (x.t == 0 && neg);
  return neg;
}

void ClassicalVerma::generators(int budget) const {
  if (built_ >= budget) return;
  const CartanData& cd = L_.cartan();
  gens_.clear();
  coords_.clear();
  depth_.clear();
  memo_.clear();
  for (int b = 0; b < L_.finite().dim(); ++b)
    for (int t = -budget; t <= budget; ++t) {
      LoopGen x{b, t};
      if (!lowering(x)) continue;
      auto c = cd.coords(L_.weight(x));
      int dep = 0;
      for (int v : c) dep += std::abs(v);
      if (dep == 0 || dep > budget) continue;
      gens_.push_back(x);
      coords_.push_back(c);
      depth_.push_back(dep);
    }
  built_ = budget;
}

long long ClassicalVerma::slice_dim(const Root& nu, int budget) const {
  generators(budget);
  const CartanData& cd = L_.cartan();
  auto& memo = memo_;
  std::vector<int> target = cd.coords(nu);
  for (int& v : target) v = -v;
  std::size_t n = gens_.size();
  // ways to write rem with generators j.. and total depth <= left
  std::function<long long(std::size_t, std::vector<int>&, int)> count =
      [&](std::size_t j, std::vector<int>& rem, int left) -> long long {
    int need = 0;
    for (int v : rem) need += std::abs(v);
    if (need > left) return 0;
    if (j == n) return need == 0 ? 1 : 0;
    std::vector<int> key{static_cast<int>(j), left};
    key.insert(key.end(), rem.begin(), rem.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    std::vector<int> r = rem;
    int l = left;
    for (;;) {
      total += count(j + 1, r, l);
      l -= depth_[j];
      if (l < 0) break;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coords_[j][i];
    }
    memo[key] = total;
    return total;
  };
  return count(0, target, budget);
}

MultResult ClassicalVerma::dim(const Root& nu) const {
  const CartanData& cd = L_.cartan();
  int B = std::max(depth_of(nu, cd), maxdepth_);
  int hd = depth_of(cd.delta(1), cd);
  long long c0 = slice_dim(nu, B), c1 = slice_dim(nu, B + 2 * hd);
  if (c1 > c0) return {MultResult::Kind::Infinite, 0};
  if (c0 == 0) return {};
  return {MultResult::Kind::Finite, c0};
}

ClassicalVerma classical_verma(const LoopAlgebra& L, const Weight& lambda,
                               const std::vector<int>& J, int maxdepth) {
  return ClassicalVerma(L, lambda, J, maxdepth);
}

// ---------------------------------------------------------------- three-way comparison

bool DeformationReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const DeformationRow& r) { return r.ok; });
}

std::string DeformationReport::str() const {
  std::ostringstream os;
  for (auto& r : rows) {
    os << r.mu.str() << "  quantum " << r.quantum.str() << " partition " << r.partition.str()
       << " classical " << r.classical.str();
    if (r.quantum.kind == MultResult::Kind::Infinite)
      os << " slice " << r.quantumSlice << "/" << r.classicalSlice;
    os << (r.ok ? "" : "  MISMATCH") << "\n";
  }
  return os.str();
}

DeformationReport verify_deformation(PBWAlgebra& alg, const LoopAlgebra& L, const Weight& lambda,
                                     const std::vector<int>& J, int depth) {
  const CartanData& cd = alg.cartan();
  int hd = depth_of(cd.delta(1), cd);
  VermaModule m = build_module(alg, ModuleConfig{lambda, J, depth});
  ClassicalVerma cv(L, lambda, J, depth);
  std::vector<Root> nus{Root(std::vector<int>(cd.N, 0), 0)};
  for (const Root& nu : m.weights_in_window(false)) nus.push_back(nu);
  // imaginary weights k delta up to k = depth, beyond the height window
  for (int k = 1; k <= depth; ++k)
    if (std::find(nus.begin(), nus.end(), cd.delta(k)) == nus.end()) nus.push_back(cd.delta(k));
  DeformationReport rep;
  for (const Root& nu : nus) {
    DeformationRow row;
    row.nu = nu;
    row.mu = cd.shift(lambda, nu);
    int B = std::max(depth_of(nu, cd), depth);
    // the quantum side sees infinite spaces through a deeper slice
    VermaModule deep = build_module(alg, ModuleConfig{lambda, J, B + 2 * hd});
    VermaModule at = build_module(alg, ModuleConfig{lambda, J, B});
    long long q0 = static_cast<long long>(at.basis(nu).size());
    long long q1 = static_cast<long long>(deep.basis(nu).size());
    row.quantum = q1 > q0 ? MultResult{MultResult::Kind::Infinite, 0}
                : q0 == 0 ? MultResult{}
                          : MultResult{MultResult::Kind::Finite, q0};
    row.quantumSlice = static_cast<long long>(m.basis(nu).size());
    row.partition = mult_of(nu, m.partition());
    row.classical = cv.dim(nu);
    row.classicalSlice = cv.slice_dim(nu);
    row.ok = row.quantum == row.partition && row.partition == row.classical &&
             (row.quantum.kind != MultResult::Kind::Infinite ||
              row.quantumSlice == row.classicalSlice);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace qverma
