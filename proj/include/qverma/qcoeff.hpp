#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qverma {

using Rational = mpq_class;

// Laurent polynomial in q over Q, stored densely from the lowest exponent. Coefficients are
// machine integers while they fit, rationals otherwise.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly monomial(int e, const Rational& c = 1);
  static LaurentPoly from_map(const std::map<int, Rational>& m);

  bool is_zero() const { return size() == 0; }
  bool is_one() const;
  bool is_monomial() const { return size() == 1; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(size()) - 1; }
  int span() const { return static_cast<int>(size()); }
  Rational coeff(int e) const;
  Rational low_coeff() const { return coeff(lo_); }
  Rational high_coeff() const { return coeff(high()); }
  std::map<int, Rational> to_map() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.big_ == b.big_ && a.s_ == b.s_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const;  // multiply by q^k
  LaurentPoly bar() const;           // q -> q^{-1}
  LaurentPoly subs_power(int d) const;  // q -> q^d, d > 0
  Rational eval_at_one() const;

  // Exact division; throws std::domain_error if the quotient is not a Laurent polynomial.
  LaurentPoly divexact(const LaurentPoly& d) const;
  // Division with remainder of the underlying polynomials (both shifted to start at q^0).
  static void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo,
                          LaurentPoly& rem);
  // Monic gcd of the polynomial parts (q-power units removed); gcd(0, 0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;
  std::size_t hash() const;

 private:
  std::size_t size() const { return big_ ? c_.size() : s_.size(); }
  std::vector<Rational> rat() const;
  void set_rat(std::vector<Rational> c, int lo);  // trims and goes back to integers if possible
  void trim();
  int lo_ = 0;
  bool big_ = false;
  std::vector<long> s_;     // used when !big_
  std::vector<Rational> c_;  // used when big_
};

// Element of Q(q) kept in lowest terms: den has lowest exponent 0 and lowest coefficient 1.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(const Rational& c) : num_(c), den_(1) {}
  QRat(long c) : QRat(Rational(c)) {}
  QRat(const LaurentPoly& p) : num_(p), den_(1) {}
  QRat(const LaurentPoly& n, const LaurentPoly& d);

  static QRat q_pow(int e) { return QRat(LaurentPoly::monomial(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  QRat shifted(int k) const;  // multiply by q^k
  QRat inverse() const;
  QRat bar() const;
  QRat subs_power(int d) const;
  std::string str() const;
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  void canonicalize();
  LaurentPoly num_, den_;
};

struct PoleAtOne : std::domain_error {
  PoleAtOne() : std::domain_error("PoleAtOne: denominator vanishes at q=1") {}
};

// [n]_{q^d}
LaurentPoly qint(int n, int d = 1);
// [m]_{q^d}!
LaurentPoly qfact(int m, int d = 1);
// [m choose n]_{q^d}, product form for any integer m
LaurentPoly qbinom(int m, int n, int d = 1);

Rational eval_at_one(const QRat& x);

enum class AFormVerdict { Member, NotMember, Inconclusive };
struct AFormFlag {
  AFormVerdict verdict;
  bool member() const { return verdict == AFormVerdict::Member; }
};
AFormFlag aform_member(const QRat& x, const std::vector<int>& dlist, int bound = 64);

// Parses "q^2+1+q^-2", "2*q-1/3*q^-1", "(q+q^-1)/(q^2)"-style text.
QRat parse_qrat(const std::string& text);

std::string rational_str(const Rational& r);

}  // namespace qverma
