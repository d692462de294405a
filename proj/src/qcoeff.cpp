#include "qverma/qcoeff.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <climits>
#include <numeric>
#include <sstream>

namespace qverma {

namespace {

std::size_t hash_rational(const Rational& r) {
  std::size_t h = mpz_get_ui(r.get_num_mpz_t()) * 31u + mpz_sgn(r.get_num_mpz_t());
  h = h * 1000003u ^ mpz_get_ui(r.get_den_mpz_t());
  return h;
}

}  // namespace

std::string rational_str(const Rational& r) { return r.get_str(); }

namespace {

bool small_int(const Rational& c, long& v) {
  if (mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0 || !mpz_fits_slong_p(c.get_num_mpz_t())) return false;
  v = mpz_get_si(c.get_num_mpz_t());
  return true;
}

void set_i128(Rational& r, __int128 v) {
  if (v >= LONG_MIN && v <= LONG_MAX) {
    r = static_cast<long>(v);
    return;
  }
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class z = static_cast<unsigned long>(u >> 64);
  z <<= 64;
  z += static_cast<unsigned long>(u & ~0UL);
  r = neg ? mpz_class(-z) : z;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) set_rat({c}, 0);
}

std::vector<Rational> LaurentPoly::rat() const {
  if (big_) return c_;
  std::vector<Rational> r(s_.size());
  for (std::size_t k = 0; k < s_.size(); ++k) r[k] = s_[k];
  return r;
}

void LaurentPoly::set_rat(std::vector<Rational> c, int lo) {
  lo_ = lo;
  s_.clear();
  std::size_t b = 0, e = c.size();
  while (b < e && c[b] == 0) ++b;
  while (e > b && c[e - 1] == 0) --e;
  if (b == e) {
    big_ = false;
    c_.clear();
    lo_ = 0;
    return;
  }
  lo_ += static_cast<int>(b);
  s_.resize(e - b);
  bool small = true;
  for (std::size_t k = b; k < e && small; ++k) small = small_int(c[k], s_[k - b]);
  if (small) {
    big_ = false;
    c_.clear();
    return;
  }
  s_.clear();
  big_ = true;
  if (b > 0 || e < c.size()) c = std::vector<Rational>(c.begin() + b, c.begin() + e);
  c_ = std::move(c);
}

void LaurentPoly::trim() {
  if (big_) {
    set_rat(std::move(c_), lo_);
    return;
  }
  std::size_t b = 0, e = s_.size();
  while (b < e && s_[b] == 0) ++b;
  while (e > b && s_[e - 1] == 0) --e;
  if (b == e) {
    s_.clear();
    lo_ = 0;
    return;
  }
  if (b > 0 || e < s_.size()) {
    s_ = std::vector<long>(s_.begin() + b, s_.begin() + e);
    lo_ += static_cast<int>(b);
  }
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.set_rat({c}, e);
  return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Rational>& m) {
  LaurentPoly p;
  for (auto& [e, c] : m) p += monomial(e, c);
  return p;
}

bool LaurentPoly::is_one() const { return !big_ && lo_ == 0 && s_.size() == 1 && s_[0] == 1; }

Rational LaurentPoly::coeff(int e) const {
  if (is_zero() || e < lo_ || e > high()) return 0;
  if (big_) return c_[e - lo_];
  return Rational(s_[e - lo_]);
}

std::map<int, Rational> LaurentPoly::to_map() const {
  std::map<int, Rational> m;
  std::vector<Rational> c = rat();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) m[lo_ + static_cast<int>(k)] = c[k];
  return m;
}

namespace {

template <class T>
void widen(int& lo, std::vector<T>& c, int olo, int ohi) {
  int hi = lo + static_cast<int>(c.size()) - 1;
  int nlo = std::min(lo, olo), nhi = std::max(hi, ohi);
  if (nlo == lo && nhi == hi) return;
  std::vector<T> n(nhi - nlo + 1);
  for (std::size_t k = 0; k < c.size(); ++k) std::swap(n[lo - nlo + k], c[k]);
  c.swap(n);
  lo = nlo;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!big_ && !o.big_) {
    widen(lo_, s_, o.lo_, o.high());
    for (std::size_t k = 0; k < o.s_.size(); ++k) {
      long& t = s_[o.lo_ - lo_ + k];
      if (__builtin_add_overflow(t, o.s_[k], &t)) {
        // undo the partial sum and redo it with rationals
        for (std::size_t j = 0; j < k; ++j) s_[o.lo_ - lo_ + j] -= o.s_[j];
        std::vector<Rational> c = rat(), oc = o.rat();
        for (std::size_t j = 0; j < oc.size(); ++j) c[o.lo_ - lo_ + j] += oc[j];
        set_rat(std::move(c), lo_);
        return *this;
      }
    }
    trim();
    return *this;
  }
  std::vector<Rational> c = rat(), oc = o.rat();
  int lo = lo_;
  widen(lo, c, o.lo_, o.high());
  for (std::size_t k = 0; k < oc.size(); ++k) c[o.lo_ - lo + k] += oc[k];
  set_rat(std::move(c), lo);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  return *this += -o;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  if (big_) {
    for (auto& c : r.c_) c = -c;
    return r;
  }
  for (std::size_t k = 0; k < s_.size(); ++k) {
    if (s_[k] == LONG_MIN) {
      std::vector<Rational> c = rat();
      for (auto& x : c) x = -x;
      r.set_rat(std::move(c), lo_);
      return r;
    }
    r.s_[k] = -s_[k];
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  int lo = a.lo_ + b.lo_;
  std::size_t n = a.size() + b.size() - 1;
  if (!a.big_ && !b.big_) {
    auto bits = [](const std::vector<long>& v) {
      unsigned long m = 0;
      for (long x : v) m |= x < 0 ? -static_cast<unsigned long>(x) : static_cast<unsigned long>(x);
      return static_cast<int>(std::bit_width(m));
    };
    int ba = bits(a.s_), bb = bits(b.s_);
    int m = static_cast<int>(std::bit_width(std::min(a.s_.size(), b.s_.size())));
    if (ba + bb + m < 63) {
      r.lo_ = lo;
      r.s_.assign(n, 0);
      for (std::size_t i = 0; i < a.s_.size(); ++i) {
        long x = a.s_[i];
        if (x == 0) continue;
        long* out = r.s_.data() + i;
        for (std::size_t j = 0; j < b.s_.size(); ++j) out[j] += x * b.s_[j];
      }
      r.trim();
      return r;
    }
    if (ba + bb + m < 127) {
      std::vector<__int128> acc(n, 0);
      for (std::size_t i = 0; i < a.s_.size(); ++i)
        for (std::size_t j = 0; j < b.s_.size(); ++j)
          acc[i + j] += static_cast<__int128>(a.s_[i]) * b.s_[j];
      bool fits = true;
      for (auto v : acc) fits &= v >= LONG_MIN && v <= LONG_MAX;
      if (fits) {
        r.lo_ = lo;
        r.s_.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.s_[k] = static_cast<long>(acc[k]);
        r.trim();
        return r;
      }
      std::vector<Rational> c(n);
      for (std::size_t k = 0; k < n; ++k) set_i128(c[k], acc[k]);
      r.set_rat(std::move(c), lo);
      return r;
    }
  }
  std::vector<Rational> ac = a.rat(), bc = b.rat();
  auto integral = [](const std::vector<Rational>& c) {
    for (auto& x : c)
      if (mpz_cmp_ui(x.get_den_mpz_t(), 1) != 0) return false;
    return true;
  };
  std::vector<Rational> c(n);
  if (integral(ac) && integral(bc)) {
    std::vector<mpz_class> z(n);
    for (std::size_t i = 0; i < ac.size(); ++i)
      for (std::size_t j = 0; j < bc.size(); ++j)
        mpz_addmul(z[i + j].get_mpz_t(), ac[i].get_num_mpz_t(), bc[j].get_num_mpz_t());
    for (std::size_t k = 0; k < n; ++k) mpq_set_z(c[k].get_mpq_t(), z[k].get_mpz_t());
  } else {
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == 0) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
    }
  }
  r.set_rat(std::move(c), lo);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0 || is_zero()) return *this = LaurentPoly();
  if (c == 1) return *this;
  std::vector<Rational> v = rat();
  for (auto& x : v) x *= c;
  set_rat(std::move(v), lo_);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r = *this;
  std::reverse(r.s_.begin(), r.s_.end());
  std::reverse(r.c_.begin(), r.c_.end());
  r.lo_ = -high();
  return r;
}

LaurentPoly LaurentPoly::subs_power(int d) const {
  if (d == 1 || is_zero()) return *this;
  std::vector<Rational> c = rat(), n((c.size() - 1) * d + 1);
  for (std::size_t k = 0; k < c.size(); ++k) n[k * d] = c[k];
  LaurentPoly r;
  r.set_rat(std::move(n), lo_ * d);
  return r;
}

Rational LaurentPoly::eval_at_one() const {
  Rational s = 0;
  for (auto& c : rat()) s += c;
  return s;
}

void LaurentPoly::poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo,
                              LaurentPoly& rem) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = a.rat();
  const std::vector<Rational> d = b.rat();
  quo = LaurentPoly();
  if (r.size() < d.size()) {
    rem = a.shifted(-a.lo_);
    return;
  }
  std::vector<Rational> q(r.size() - d.size() + 1);
  Rational lead_inv = 1 / d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + d.size() - 1] * lead_inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  quo.set_rat(std::move(q), 0);
  rem.set_rat(std::move(r), 0);
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    LaurentPoly r = *this;
    Rational c = d.low_coeff();
    if (c == -1) r = -r;
    else if (c != 1) r *= Rational(1 / c);
    return r.shifted(-d.lo_);
  }
  LaurentPoly q, r;
  poly_divmod(*this, d, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact Laurent division");
  return q.shifted(lo_ - d.lo_);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return LaurentPoly();
  LaurentPoly a = a0.shifted(-a0.lo_), b = b0.shifted(-b0.lo_);
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.size() == 1) return LaurentPoly(1);
    LaurentPoly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = r.shifted(-r.lo_);
  }
  a *= Rational(1 / a.high_coeff());
  return a;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, int e) {
  Rational a = abs(c);
  if (c < 0)
    os << "-";
  else if (!first)
    os << "+";
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (a != 1) os << a.get_str() << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  std::vector<Rational> c = rat();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    append_term(os, first, c[k], lo_ + k);
    first = false;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(lo_) * 7919u + size();
  if (!big_) {
    for (long c : s_) h = h * 1000003u ^ static_cast<std::size_t>(c);
    return h;
  }
  for (auto& c : c_) h = h * 1000003u ^ hash_rational(c);
  return h;
}

// ---------------------------------------------------------------- QRat

QRat::QRat(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("QRat with zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (g.span() > 1) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  int sh = den_.low();
  Rational lc = den_.low_coeff();
  if (sh != 0) {
    den_ = den_.shifted(-sh);
    num_ = num_.shifted(-sh);
  }
  if (lc != 1) {
    Rational inv = 1 / lc;
    den_ *= inv;
    num_ *= inv;
  }
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return QRat(den_, num_);
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::shifted(int k) const {
  QRat r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

QRat QRat::bar() const { return QRat(num_.bar(), den_.bar()); }

QRat QRat::subs_power(int d) const { return QRat(num_.subs_power(d), den_.subs_power(d)); }

std::string QRat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- q-combinatorics

LaurentPoly qint(int n, int d) {
  if (d <= 0) throw std::invalid_argument("qint: d must be positive");
  int m = n < 0 ? -n : n;
  LaurentPoly r;
  for (int k = 0; k < m; ++k) r += LaurentPoly::monomial(d * (m - 1 - 2 * k));
  return n < 0 ? -r : r;
}

LaurentPoly qfact(int m, int d) {
  if (m < 0) throw std::invalid_argument("qfact: m must be nonnegative");
  LaurentPoly r(1);
  for (int j = 1; j <= m; ++j) r *= qint(j, d);
  return r;
}

LaurentPoly qbinom(int m, int n, int d) {
  if (n < 0) throw std::invalid_argument("qbinom: n must be nonnegative");
  LaurentPoly num(1);
  for (int r = 1; r <= n; ++r) num *= qint(m - r + 1, d);
  return num.divexact(qfact(n, d));
}

Rational eval_at_one(const QRat& x) {
  Rational d = x.den().eval_at_one();
  if (d == 0) throw PoleAtOne();
  return x.num().eval_at_one() / d;
}

namespace {

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

// Cyclotomic polynomial Phi_m as an ordinary polynomial.
const LaurentPoly& cyclotomic(int m) {
  static std::map<int, LaurentPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  LaurentPoly p = LaurentPoly::monomial(m) - LaurentPoly(1);
  for (int k = 1; k < m; ++k)
    if (m % k == 0) p = p.divexact(cyclotomic(k));
  return cache.emplace(m, p).first->second;
}

}  // namespace

// The denominators allowed in A are products of Phi_m with m not dividing 2d for some d,
// since those are exactly the cyclotomic factors of the [n]_{q^d}.
AFormFlag aform_member(const QRat& x, const std::vector<int>& dlist, int bound) {
  LaurentPoly r = x.den();
  int dmax = 1;
  for (int d : dlist) dmax = std::max(dmax, d);
  int mmax = 2 * dmax * bound;
  for (int m = 1; m <= mmax && r.span() > 1; ++m) {
    if (euler_phi(m) > r.span() - 1) continue;
    // Phi_m divides some [n]_{q^d} iff m does not divide 2d; within the bound iff n <= bound
    bool allowed = false, beyond = false;
    for (int d : dlist) {
      if ((2 * d) % m == 0) continue;
      if (m / std::gcd(m, 2 * d) <= bound)
        allowed = true;
      else
        beyond = true;
    }
    const LaurentPoly& phi = cyclotomic(m);
    for (;;) {
      LaurentPoly quo, rem;
      LaurentPoly::poly_divmod(r, phi, quo, rem);
      if (!rem.is_zero()) break;
      if (!allowed) return {beyond ? AFormVerdict::Inconclusive : AFormVerdict::NotMember};
      r = quo;
    }
  }
  if (r.span() <= 1) return {AFormVerdict::Member};
  // phi(m) >= sqrt(m/2), so only m <= 2 deg^2 could still divide what is left
  int deg = r.span() - 1;
  for (int m = mmax + 1; m <= 2 * deg * deg + 2; ++m)
    if (euler_phi(m) <= deg) return {AFormVerdict::Inconclusive};
  return {AFormVerdict::NotMember};
}

// ---------------------------------------------------------------- parsing

namespace {

struct QParser {
  const std::string& s;
  std::size_t p = 0;

  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const char* what) {
    throw std::invalid_argument(std::string("cannot parse coefficient '") + s + "': " + what);
  }
  long integer() {
    skip();
    bool neg = false;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) neg = s[p++] == '-';
    std::size_t b = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (b == p) fail("expected integer");
    long v = std::stol(s.substr(b, p - b));
    return neg ? -v : v;
  }
  QRat factor() {
    skip();
    if (p >= s.size()) fail("unexpected end");
    if (s[p] == '(') {
      ++p;
      QRat v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s[p] == 'q') {
      ++p;
      int e = 1;
      if (eat('^')) {
        skip();
        if (eat('(')) {
          e = static_cast<int>(integer());
          if (!eat(')')) fail("expected ')'");
        } else {
          e = static_cast<int>(integer());
        }
      }
      return QRat::q_pow(e);
    }
    if (std::isdigit(static_cast<unsigned char>(s[p]))) {
      std::size_t b = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      return QRat(Rational(s.substr(b, p - b)));
    }
    fail("unexpected character");
  }
  QRat unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return factor();
  }
  QRat term() {
    QRat v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }
  QRat expr() {
    QRat v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
};

}  // namespace

QRat parse_qrat(const std::string& text) {
  QParser ps{text};
  QRat v = ps.expr();
  ps.skip();
  if (ps.p != text.size()) ps.fail("trailing characters");
  return v;
}

}  // namespace qverma
