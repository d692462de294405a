#include "qverma/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qverma {

bool Root::is_zero() const { return n == 0 && fin_zero(); }

bool Root::fin_zero() const {
  return std::all_of(fin.begin(), fin.end(), [](int x) { return x == 0; });
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  return r += o;
}

Root& Root::operator+=(const Root& o) {
  if (fin.size() < o.fin.size()) fin.resize(o.fin.size(), 0);
  for (std::size_t k = 0; k < o.fin.size(); ++k) fin[k] += o.fin[k];
  n += o.n;
  return *this;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.fin) x = -x;
  r.n = -r.n;
  return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root operator*(int k, const Root& r) {
  Root s = r;
  for (auto& x : s.fin) x *= k;
  s.n *= k;
  return s;
}

std::string Root::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int c, const std::string& name) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << std::abs(c);
    os << name;
    first = false;
  };
  for (std::size_t k = 0; k < fin.size(); ++k) term(fin[k], "a" + std::to_string(k + 1));
  term(n, "d");
  if (first) os << "0";
  return os.str();
}

std::size_t RootHash::operator()(const Root& r) const {
  std::size_t h = static_cast<std::size_t>(r.n) * 1000003u;
  for (int x : r.fin) h = (h ^ static_cast<std::size_t>(x + 1024)) * 16777619u;
  return h;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << "h" << i << "=" << h[i];
  os << ",d=" << dval;
  return os.str();
}

Root CartanData::simple(int i) const {
  if (i < 0 || i > N) throw std::out_of_range("simple root index");
  if (i == 0) return delta() - theta;
  Root r(std::vector<int>(N, 0), 0);
  r.fin[i - 1] = 1;
  return r;
}

Root CartanData::delta(int k) const { return Root(std::vector<int>(N, 0), k); }

std::vector<int> CartanData::coords(const Root& r) const {
  std::vector<int> c(N + 1);
  c[0] = r.n;
  for (int j = 1; j <= N; ++j) c[j] = r.fin[j - 1] + r.n * theta.fin[j - 1];
  return c;
}

Root CartanData::from_coords(const std::vector<int>& c) const {
  Root r(std::vector<int>(N), c[0]);
  for (int j = 1; j <= N; ++j) r.fin[j - 1] = c[j] - c[0] * theta.fin[j - 1];
  return r;
}

int CartanData::pairing(const Root& r, int i) const {
  auto c = coords(r);
  int s = 0;
  for (int j = 0; j <= N; ++j) s += A[i][j] * c[j];
  return s;
}

bool CartanData::is_finite_positive(const std::vector<int>& fin) const {
  return std::find_if(finitePositiveRoots.begin(), finitePositiveRoots.end(),
                      [&](const Root& r) { return r.fin == fin; }) != finitePositiveRoots.end();
}

bool CartanData::is_finite_root(const std::vector<int>& fin) const {
  if (is_finite_positive(fin)) return true;
  std::vector<int> neg(fin);
  for (auto& x : neg) x = -x;
  return is_finite_positive(neg);
}

int CartanData::level(const Weight& w) const {
  int s = 0;
  for (int i = 0; i <= N; ++i) s += dualLabels[i] * w.h[i];
  return s;
}

Weight CartanData::shift(const Weight& lambda, const Root& gamma) const {
  Weight w = lambda;
  for (int i = 0; i <= N; ++i) w.h[i] -= pairing(gamma, i);
  w.dval -= gamma.n;
  return w;
}

int finite_height(const std::vector<int>& fin) { return std::accumulate(fin.begin(), fin.end(), 0); }

int bilinear_form(const Root& a, const Root& b, const CartanData& cd) {
  int s = 0;
  for (int i = 1; i <= cd.N; ++i)
    for (int j = 1; j <= cd.N; ++j) s += a.fin[i - 1] * b.fin[j - 1] * cd.d[i] * cd.A[i][j];
  return s;
}

RootClass classify(const Root& r, const CartanData& cd) {
  if (r.fin_zero()) return r.n != 0 ? RootClass::ImaginaryRoot : RootClass::NotRoot;
  return cd.is_finite_root(r.fin) ? RootClass::RealRoot : RootClass::NotRoot;
}

int height(const Root& r, const CartanData& cd) {
  return r.n + finite_height(r.fin) + r.n * finite_height(cd.theta.fin);
}

Root simple_reflection(int i, const Root& r, const CartanData& cd) {
  return r - cd.pairing(r, i) * cd.simple(i);
}

std::vector<Root> roots_up_to(const CartanData& cd, int cutoff) {
  std::vector<Root> out;
  for (int n = -cutoff; n <= cutoff; ++n) {
    for (const Root& a : cd.finitePositiveRoots) {
      out.push_back(Root(a.fin, n));
      out.push_back(Root((-a).fin, n));
    }
    if (n != 0) out.push_back(cd.delta(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Mat = std::vector<std::vector<int>>;

// Positive roots of the finite Cartan matrix Af (indices 0..n-1) by reflection closure.
std::vector<std::vector<int>> finite_positive_roots(const Mat& Af) {
  int n = static_cast<int>(Af.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    todo.push_back(e);
    seen.insert(e);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += Af[i][j] * b[j];
      auto c = b;
      c[i] -= p;
      if (seen.insert(c).second) {
        if (seen.size() > 2000) throw NotAffine("NotAffine: finite part is not of finite type");
        todo.push_back(c);
      }
    }
  }
  std::vector<std::vector<int>> pos;
  for (auto& r : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw NotAffine("NotAffine: finite part is not of finite type");
    if (nonneg) pos.push_back(r);
  }
  return pos;
}

std::vector<int> symmetrizer(const Mat& A) {
  int n = static_cast<int>(A.size());
  std::vector<mpq_class> d(n, 0);
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || A[i][j] == 0) continue;
      // d_i a_ij = d_j a_ji
      mpq_class dj = d[i] * A[i][j] / A[j][i];
      if (d[j] == 0) {
        d[j] = dj;
        stack.push_back(j);
      } else if (d[j] != dj) {
        throw NotAffine("NotAffine: matrix is not symmetrizable");
      }
    }
  }
  mpz_class l = 1;
  for (auto& x : d) {
    if (x == 0) throw NotAffine("NotAffine: Dynkin diagram is disconnected");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<long> di(n);
  long g = 0;
  for (int i = 0; i < n; ++i) {
    mpq_class v = d[i] * l;
    di[i] = v.get_num().get_si();
    g = std::gcd(g, di[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(di[i] / g);
  return out;
}

}  // namespace

CartanData build_cartan_matrix(const Mat& A, const std::string& tag) {
  int n = static_cast<int>(A.size());
  if (n < 2) throw NotAffine("NotAffine: need at least two nodes");
  for (auto& row : A)
    if (static_cast<int>(row.size()) != n) throw NotAffine("NotAffine: matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && A[i][j] != 2) throw NotAffine("NotAffine: diagonal entries must be 2");
      if (i != j && A[i][j] > 0) throw NotAffine("NotAffine: positive off-diagonal entry");
      if (i != j && (A[i][j] == 0) != (A[j][i] == 0))
        throw NotAffine("NotAffine: a_ij = 0 without a_ji = 0");
    }
  CartanData cd;
  cd.N = n - 1;
  cd.tag = tag;
  cd.A = A;
  cd.d = symmetrizer(A);
  Mat Af(cd.N, std::vector<int>(cd.N));
  for (int i = 1; i <= cd.N; ++i)
    for (int j = 1; j <= cd.N; ++j) Af[i - 1][j - 1] = A[i][j];
  auto pos = finite_positive_roots(Af);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = finite_height(a), hb = finite_height(b);
    return ha != hb ? ha < hb : a > b;
  });
  for (auto& r : pos) cd.finitePositiveRoots.push_back(Root(r, 0));
  cd.theta = cd.finitePositiveRoots.back();
  cd.marks.assign(n, 1);
  for (int j = 1; j <= cd.N; ++j) cd.marks[j] = cd.theta.fin[j - 1];
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += A[i][j] * cd.marks[j];
    if (s != 0) throw NotAffine("NotAffine: alpha_0 + theta is not a null root (corank != 1)");
  }
  // A^T (D m) = D A m = 0
  cd.dualLabels.resize(n);
  int g = 0;
  for (int i = 0; i < n; ++i) {
    cd.dualLabels[i] = cd.d[i] * cd.marks[i];
    g = std::gcd(g, cd.dualLabels[i]);
  }
  for (auto& x : cd.dualLabels) x /= g;
  return cd;
}

CartanData build_cartan(const std::string& tag) {
  std::string t = tag;
  if (t == "A1~" || t == "A1(1)" || t == "A_1^(1)") return build_cartan_matrix({{2, -2}, {-2, 2}}, "A1~");
  if (t == "A2~" || t == "A2(1)" || t == "A_2^(1)")
    return build_cartan_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, "A2~");
  if (t == "A3~" || t == "A3(1)" || t == "A_3^(1)")
    return build_cartan_matrix(
        {{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}, "A3~");
  if (t == "C2~" || t == "C2(1)" || t == "C_2^(1)")
    return build_cartan_matrix({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}, "C2~");
  throw NotAffine("NotAffine: unknown type tag '" + tag + "' (known: A1~, A2~, A3~, C2~)");
}

CartanData load_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Cartan matrix file " + path);
  Mat A;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int x;
    while (ls >> x) row.push_back(x);
    if (!row.empty()) A.push_back(row);
  }
  return build_cartan_matrix(A, path);
}

Weight parse_weight(const std::string& text, const CartanData& cd) {
  Weight w;
  w.h.assign(cd.N + 1, 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("weight entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    int val = std::stoi(item.substr(eq + 1));
    if (key == "d") {
      w.dval = val;
    } else if (key.size() > 1 && key[0] == 'h') {
      int i = std::stoi(key.substr(1));
      if (i < 0 || i > cd.N) throw std::invalid_argument("weight index out of range: " + key);
      w.h[i] = val;
    } else {
      throw std::invalid_argument("unknown weight key '" + key + "'");
    }
  }
  return w;
}

}  // namespace qverma
