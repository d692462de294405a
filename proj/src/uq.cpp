#include "qverma/uq.hpp"

#include <algorithm>

namespace qverma {

Letter E(int i) { return make_letter(Kind::E, i); }
Letter F(int i) { return make_letter(Kind::F, i); }
Letter Kp(int i) { return make_letter(Kind::Kplus, i); }
Letter Km(int i) { return make_letter(Kind::Kminus, i); }
Letter Dp() { return make_letter(Kind::Dplus); }
Letter Dm() { return make_letter(Kind::Dminus); }

namespace {

Word W(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter l : ls) w += letter_char(l);
  return w;
}

Word pow_word(Letter l, int n) { return Word(static_cast<std::size_t>(n), letter_char(l)); }

QRat qpow(int e) { return QRat::q_pow(e); }

// (K_i - K_i^{-1}) / (q_i - q_i^{-1}) with K-exponent shifts: (q^a K - q^-a K^-1)/(q_i - q_i^-1)
Element kbracket(int i, int di, int a) {
  QRat inv = QRat(LaurentPoly::monomial(di) - LaurentPoly::monomial(-di)).inverse();
  Element r = Element::word(W({Kp(i)}), inv.shifted(a));
  r.add_term(W({Km(i)}), -inv.shifted(-a));
  return r;
}

// sum_{k=0}^{m} (-1)^k [m choose k]_{q_i} X_i^{m-k} X_j X_i^k
Element serre(Letter xi, Letter xj, int m, int di) {
  Element r;
  for (int k = 0; k <= m; ++k) {
    QRat c = QRat(qbinom(m, k, di));
    if (k % 2) c = -c;
    r.add_term(pow_word(xi, m - k) + letter_char(xj) + pow_word(xi, k), c);
  }
  return r;
}

QRat inv_fact(int n, int d) { return QRat(qfact(n, d)).inverse(); }

}  // namespace

Uq::Uq(const CartanData& cd) : cd_(cd), base_(&cd), shuffle_(cd) {
  int n = cd.N;
  std::vector<Letter> torus;
  for (int i = 0; i <= n; ++i) torus.push_back(Km(i));
  for (int i = 0; i <= n; ++i) torus.push_back(Kp(i));
  torus.push_back(Dm());
  torus.push_back(Dp());
  auto inverse_pair = [](Letter a, Letter b) {
    Kind ka = kind_of(a), kb = kind_of(b);
    if ((ka == Kind::Kplus && kb == Kind::Kminus) || (ka == Kind::Kminus && kb == Kind::Kplus))
      return index_of(a) == index_of(b);
    return (ka == Kind::Dplus && kb == Kind::Dminus) || (ka == Kind::Dminus && kb == Kind::Dplus);
  };
  for (Letter a : torus)
    for (Letter b : torus) {
      if (inverse_pair(a, b))
        base_.add_rule(W({a, b}), Element::scalar(1));
      else if (a > b)
        base_.add_rule(W({a, b}), Element::word(W({b, a})));
    }
  auto form = [&](int i, int j) { return cd.d[i] * cd.A[i][j]; };
  int d0 = cd.d[0];
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      // E_j K_i = q^{-(a_i|a_j)} K_i E_j, K_i F_j = q^{-(a_i|a_j)} F_j K_i
      base_.add_rule(W({E(j), Kp(i)}), Element::word(W({Kp(i), E(j)}), qpow(-form(i, j))));
      base_.add_rule(W({E(j), Km(i)}), Element::word(W({Km(i), E(j)}), qpow(form(i, j))));
      base_.add_rule(W({Kp(i), F(j)}), Element::word(W({F(j), Kp(i)}), qpow(-form(i, j))));
      base_.add_rule(W({Km(i), F(j)}), Element::word(W({F(j), Km(i)}), qpow(form(i, j))));
    }
    int e = j == 0 ? d0 : 0;
    base_.add_rule(W({E(j), Dp()}), Element::word(W({Dp(), E(j)}), qpow(-e)));
    base_.add_rule(W({E(j), Dm()}), Element::word(W({Dm(), E(j)}), qpow(e)));
    base_.add_rule(W({Dp(), F(j)}), Element::word(W({F(j), Dp()}), qpow(-e)));
    base_.add_rule(W({Dm(), F(j)}), Element::word(W({F(j), Dm()}), qpow(e)));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Element rhs = Element::word(W({F(j), E(i)}));
      if (i == j) rhs += kbracket(i, cd.d[i], 0);
      base_.add_rule(W({E(i), F(j)}), rhs);
    }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      // commuting pairs give the same relation both ways
      if (i == j || (cd.A[i][j] == 0 && j < i)) continue;
      base_.add_relation(serre(E(i), E(j), 1 - cd.A[i][j], cd.d[i]));
      base_.add_relation(serre(F(i), F(j), 1 - cd.A[i][j], cd.d[i]));
    }
  base_.pure_only = true;
  completed_ = base_;
  completed_.completed_height = 0;
  red_ = std::make_unique<TriangularReducer>(cd_, completed_);
}

std::vector<std::pair<std::string, Element>> Uq::relations() const {
  std::vector<std::pair<std::string, Element>> out;
  int n = cd_.N;
  auto form = [&](int i, int j) { return cd_.d[i] * cd_.A[i][j]; };
  auto nm = [](const std::string& s, int i, int j = -1) {
    return s + "(" + std::to_string(i) + (j >= 0 ? "," + std::to_string(j) : "") + ")";
  };
  for (int i = 0; i <= n; ++i) {
    out.push_back({nm("KK^-1", i), Element::word(W({Kp(i), Km(i)})) - Element::scalar(1)});
    out.push_back({nm("K^-1K", i), Element::word(W({Km(i), Kp(i)})) - Element::scalar(1)});
    out.push_back({nm("KD", i), Element::word(W({Kp(i), Dp()})) - Element::word(W({Dp(), Kp(i)}))});
    for (int j = 0; j <= n; ++j)
      out.push_back({nm("KK", i, j), Element::word(W({Kp(i), Kp(j)})) - Element::word(W({Kp(j), Kp(i)}))});
  }
  out.push_back({"DD^-1", Element::word(W({Dp(), Dm()})) - Element::scalar(1)});
  out.push_back({"D^-1D", Element::word(W({Dm(), Dp()})) - Element::scalar(1)});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      out.push_back({nm("KE", i, j), Element::word(W({Kp(i), E(j)})) -
                                         Element::word(W({E(j), Kp(i)}), qpow(form(i, j)))});
      out.push_back({nm("KF", i, j), Element::word(W({Kp(i), F(j)})) -
                                         Element::word(W({F(j), Kp(i)}), qpow(-form(i, j)))});
      Element ef = Element::word(W({E(i), F(j)})) - Element::word(W({F(j), E(i)}));
      if (i == j) ef -= kbracket(i, cd_.d[i], 0);
      out.push_back({nm("EF", i, j), ef});
      if (i != j) {
        out.push_back({nm("SerreE", i, j), serre(E(i), E(j), 1 - cd_.A[i][j], cd_.d[i])});
        out.push_back({nm("SerreF", i, j), serre(F(i), F(j), 1 - cd_.A[i][j], cd_.d[i])});
      }
    }
  for (int j = 0; j <= n; ++j) {
    int e = j == 0 ? cd_.d[0] : 0;
    out.push_back({nm("DE", j), Element::word(W({Dp(), E(j)})) - Element::word(W({E(j), Dp()}), qpow(e))});
    out.push_back({nm("DF", j), Element::word(W({Dp(), F(j)})) - Element::word(W({F(j), Dp()}), qpow(-e))});
  }
  return out;
}

void Uq::ensure_completed(int height) {
  if (completed_.completed_height >= height) return;
  complete_in_place(completed_, height);
  red_ = std::make_unique<TriangularReducer>(cd_, completed_);
}

Element Uq::reduce(const Element& x) { return red_->reduce(x); }

Element Uq::mul(const Element& x, const Element& y) {
  return red_->mul(red_->reduce(x), y);
}

ZeroVerdict Uq::zero_test(const Element& x) {
  Element r = reduce(x);
  if (r.is_zero() || shuffle_.is_zero(r)) return ZeroVerdict::Zero;
  return ZeroVerdict::NonZero;
}

const Element& Uq::T_image(int i, Letter l, bool inverse) {
  auto key = std::make_pair(inverse ? ~i : i, static_cast<int>(l));
  auto it = timg_.find(key);
  if (it != timg_.end()) return it->second;
  Element img;
  Kind k = kind_of(l);
  int j = index_of(l);
  int di = cd_.d[i];
  int m = j <= cd_.N ? -cd_.A[i][j] : 0;
  auto sgn = [](int e) { return e % 2 ? -1 : 1; };
  switch (k) {
    case Kind::E:
      if (j == i) {
        img = inverse ? Element::word(W({Km(i), F(i)}), -1) : Element::word(W({F(i), Kp(i)}), -1);
      } else {
        for (int r = 0; r <= m; ++r) {
          QRat c = inv_fact(m - r, di) * inv_fact(r, di) * QRat(sgn(r + m));
          if (!inverse)
            img.add_term(pow_word(E(i), m - r) + letter_char(E(j)) + pow_word(E(i), r), c.shifted(-r * di));
          else
            img.add_term(pow_word(E(i), r) + letter_char(E(j)) + pow_word(E(i), m - r), c.shifted(-r * di));
        }
      }
      break;
    case Kind::F:
      if (j == i) {
        img = inverse ? Element::word(W({E(i), Kp(i)}), -1) : Element::word(W({Km(i), E(i)}), -1);
      } else {
        for (int r = 0; r <= m; ++r) {
          QRat c = inv_fact(m - r, di) * inv_fact(r, di) * QRat(sgn(r + m));
          if (!inverse)
            img.add_term(pow_word(F(i), r) + letter_char(F(j)) + pow_word(F(i), m - r), c.shifted(r * di));
          else
            img.add_term(pow_word(F(i), m - r) + letter_char(F(j)) + pow_word(F(i), r), c.shifted(r * di));
        }
      }
      break;
    case Kind::Kplus:
    case Kind::Kminus: {
      // the same image for T_i and its inverse: the reflection is an involution
      int e = -cd_.A[i][j];
      if (k == Kind::Kminus) e = -e;
      img = Element::word(W({l}) + pow_word(e > 0 ? Kp(i) : Km(i), std::abs(e)));
      break;
    }
    case Kind::Dplus:
    case Kind::Dminus: {
      int e = i == 0 ? -1 : 0;
      if (k == Kind::Dminus) e = -e;
      img = Element::word(W({l}) + pow_word(e > 0 ? Kp(i) : Km(i), std::abs(e)));
      break;
    }
  }
  bool drop = red_->drop_F;
  red_->drop_F = false;
  img = red_->reduce(img);
  red_->drop_F = drop;
  return timg_.emplace(key, img).first->second;
}

Element Uq::apply_morphism(const Element& x, const std::function<const Element&(Letter)>& img,
                           bool positive) {
  struct Guard {
    TriangularReducer& r;
    bool old;
    ~Guard() { r.drop_F = old; }
  } guard{*red_, red_->drop_F};
  red_->drop_F = positive;
  std::vector<std::pair<Word, QRat>> ts(x.terms().begin(), x.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Frac> stack{Frac{{{Word(), LaurentPoly(1)}}, LaurentPoly(1)}};
  Word prev;
  Frac out;
  for (auto& [w, c] : ts) {
    std::size_t common = 0;
    while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
    stack.resize(common + 1);
    for (std::size_t p = common; p < w.size(); ++p)
      stack.push_back(red_->mul(stack.back(), img(static_cast<Letter>(w[p]))));
    out.add(stack.back(), c);
    prev = w;
  }
  return out.to_element();
}

Element Uq::braid_T(int i, const Element& x, bool positive) {
  return apply_morphism(x, [&](Letter l) -> const Element& { return T_image(i, l, false); }, positive);
}

Element Uq::braid_T_inv(int i, const Element& x, bool positive) {
  return apply_morphism(x, [&](Letter l) -> const Element& { return T_image(i, l, true); }, positive);
}

Element omega(const Element& x) {
  Element out;
  for (auto& [w, c] : x.terms()) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Letter l = static_cast<Letter>(*it);
      int i = index_of(l);
      switch (kind_of(l)) {
        case Kind::E: r += letter_char(F(i)); break;
        case Kind::F: r += letter_char(E(i)); break;
        case Kind::Kplus: r += letter_char(Km(i)); break;
        case Kind::Kminus: r += letter_char(Kp(i)); break;
        case Kind::Dplus: r += letter_char(Dm()); break;
        case Kind::Dminus: r += letter_char(Dp()); break;
      }
    }
    out.add_term(r, c.bar());
  }
  return out;
}

// ---------------------------------------------------------------- root vectors

RootVectors::RootVectors(Uq& uq, const BeckOrdering& ord) : uq_(uq), ord_(ord) {}

const Element& RootVectors::chain(const std::vector<int>& seq, bool inverse) {
  auto key = std::make_pair(seq, inverse);
  auto it = chain_.find(key);
  if (it != chain_.end()) return it->second;
  Element v;
  if (seq.size() == 1) {
    v = Element::letter(E(seq[0]));
  } else {
    std::vector<int> rest(seq.begin() + 1, seq.end());
    Element inner = chain(rest, inverse);
    v = inverse ? uq_.braid_T_inv(seq[0], inner, true) : uq_.braid_T(seq[0], inner, true);
    // the chain stays in U^+, so terms carrying a torus letter cancel in the algebra
    // (they may survive as uncanceled representatives above the completed height)
    Element pos;
    for (auto& [w, c] : v.terms())
      if (std::all_of(w.begin(), w.end(), [](unsigned char l) { return kind_of(l) == Kind::E; }))
        pos.add_term(w, c);
    v = std::move(pos);
  }
  return chain_.emplace(key, std::move(v)).first->second;
}

const RootVector& RootVectors::real(int k) {
  auto it = real_.find(k);
  if (it != real_.end()) return it->second;
  const Root& b = ord_.beta(k);
  std::vector<int> seq;
  bool inverse = k <= 0;
  if (inverse)
    for (int m = 0; m >= k; --m) seq.push_back(ord_.pi.at(m));
  else
    for (int m = 1; m <= k; ++m) seq.push_back(ord_.pi.at(m));
  RootVector rv;
  rv.root = b;
  rv.betaIndex = k;
  rv.element = chain(seq, inverse);
  if (rv.element.is_zero() || rv.element.weight(uq_.cartan()) != b)
    throw std::logic_error("root vector for beta_" + std::to_string(k) + " has the wrong weight");
  return real_.emplace(k, std::move(rv)).first->second;
}

const RootVector& RootVectors::of_root(const Root& r) { return real(ord_.index_of(r)); }

RootVector RootVectors::negative(const RootVector& rv) {
  RootVector n = rv;
  n.root = -rv.root;
  n.element = uq_.reduce(omega(rv.element));
  n.betaIndex.reset();
  return n;
}

Element RootVectors::psi(int i, int m) {
  auto key = std::make_pair(i, m);
  auto it = psi_.find(key);
  if (it != psi_.end()) return it->second;
  const CartanData& cd = uq_.cartan();
  Root b = cd.delta(m) - cd.simple(i);
  const Element& eb = of_root(b).element;
  Element ei = Element::letter(E(i));
  Element c = uq_.mul(eb, ei);
  Element back = uq_.mul(ei, eb);
  if (q_commutator) back *= QRat::q_pow(bilinear_form(cd.simple(i), b, cd));
  c -= back;
  return psi_.emplace(key, c).first->second;
}

const RootVector& RootVectors::imaginary(int i, int k) {
  auto key = std::make_pair(i, k);
  auto it = imag_.find(key);
  if (it != imag_.end()) return it->second;
  const CartanData& cd = uq_.cartan();
  if (i < 1 || i > cd.N) throw std::invalid_argument("imaginary color must be in 1..N");
  int di = cd.d[i];
  QRat c(LaurentPoly::monomial(di) - LaurentPoly::monomial(-di));
  // coefficient of z^k in (1/c) log(1 + c sum psi_m z^m)
  // P[s][t] = sum over compositions of t into s parts of psi products
  std::vector<std::vector<Element>> P(k + 1, std::vector<Element>(k + 1));
  P[0][0] = Element::scalar(1);
  for (int s = 1; s <= k; ++s)
    for (int t = s; t <= k; ++t)
      for (int last = 1; last <= t - (s - 1); ++last)
        if (!P[s - 1][t - last].is_zero())
          P[s][t] += uq_.mul(P[s - 1][t - last], psi(i, last));
  Element v;
  QRat cpow(1);
  for (int s = 1; s <= k; ++s) {
    Element term = P[s][k];
    term *= cpow * QRat(Rational(s % 2 ? 1 : -1, s));
    v += term;
    cpow *= c;
  }
  RootVector rv;
  rv.root = cd.delta(k);
  rv.color = i;
  rv.element = v;
  if (v.is_zero() || v.weight(cd) != rv.root)
    throw std::logic_error("imaginary root vector has the wrong weight");
  return imag_.emplace(key, std::move(rv)).first->second;
}

const RootVector& root_vector(RootVectors& rv, int k) { return rv.real(k); }
RootVector neg_root_vector(RootVectors& rv, const RootVector& v) { return rv.negative(v); }
const RootVector& imaginary_root_vector(RootVectors& rv, int i, int k) { return rv.imaginary(i, k); }

// ---------------------------------------------------------------- Lusztig elements

KPoly kpoly_mul(const KPoly& a, const KPoly& b) {
  KPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

KPoly kpoly_add(const KPoly& a, const KPoly& b) {
  KPoly r = a;
  for (auto& [e, c] : b) r[e] += c;
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

bool kpoly_equal(const KPoly& a, const KPoly& b) {
  KPoly x = a;
  for (auto& [e, c] : b) x[e] -= c;
  for (auto& [e, c] : x)
    if (!c.is_zero()) return false;
  return true;
}

KPoly kpoly_scale(const KPoly& a, int e) {
  KPoly r;
  for (auto& [k, c] : a) r[k] = c.shifted(e * k);
  return r;
}

KPoly lusztig_poly(int d, int s, int n) {
  KPoly r{{0, QRat(1)}};
  for (int t = 1; t <= n; ++t) {
    QRat den = QRat(LaurentPoly::monomial(d * t) - LaurentPoly::monomial(-d * t)).inverse();
    int a = d * (s - t + 1);
    KPoly f{{1, den.shifted(a)}, {-1, -den.shifted(-a)}};
    r = kpoly_mul(r, f);
  }
  return r;
}

QRat lusztig_K(const CartanData& cd, int i, int s, int n, int m) {
  return QRat(qbinom(m + s, n, cd.d[i]));
}

namespace {

bool lusztig_product_check(const CartanData& cd, int i, int s, int n, bool weighted) {
  int d = cd.d[i];
  KPoly lhs = lusztig_poly(d, s, n);
  KPoly k01 = lusztig_poly(d, 0, 1);
  KPoly rhs{{0, QRat(1)}};
  for (int r = 1; r <= n; ++r) {
    KPoly f = weighted ? kpoly_scale(k01, 0) : k01;
    if (weighted)
      for (auto& [e, c] : f) c = c.shifted(d * (s - r + 1));
    f = kpoly_add(f, KPoly{{-1, QRat(qint(s - r + 1, d))}});
    QRat inv = QRat(qint(r, d)).inverse();
    for (auto& [e, c] : f) c *= inv;
    rhs = kpoly_mul(rhs, f);
  }
  return kpoly_equal(lhs, rhs);
}

}  // namespace

bool verify_lusztig_identity(const CartanData& cd, int i, int s, int n) {
  return lusztig_product_check(cd, i, s, n, true);
}

bool lusztig_identity_unweighted(const CartanData& cd, int i, int s, int n) {
  return lusztig_product_check(cd, i, s, n, false);
}

CheckReport verify_commutation_suite(Uq& uq, int nmax) {
  const CartanData& cd = uq.cartan();
  CheckReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  int n = cd.N;
  // conjugation of Lusztig elements past E_i and F_i: K_j -> q_j^{-a_ji} K_j
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int s = -4; s <= 4; ++s)
        for (int m = 0; m <= nmax; ++m) {
          ++rep.checks;
          KPoly moved = kpoly_scale(lusztig_poly(cd.d[j], s, m), -cd.d[j] * cd.A[j][i]);
          if (!kpoly_equal(moved, lusztig_poly(cd.d[j], s - cd.A[j][i], m)))
            fail("E_" + std::to_string(i) + " past [K_" + std::to_string(j) + ";" +
                 std::to_string(s) + "/" + std::to_string(m) + "]");
        }
  int d0 = cd.d[0];
  for (int i = 0; i <= n; ++i)
    for (int s = -4; s <= 4; ++s)
      for (int m = 0; m <= nmax; ++m) {
        ++rep.checks;
        int sh = i == 0 ? 1 : 0;
        KPoly moved = kpoly_scale(lusztig_poly(d0, s, m), -d0 * sh);
        if (!kpoly_equal(moved, lusztig_poly(d0, s - sh, m)))
          fail("E_" + std::to_string(i) + " past [D;" + std::to_string(s) + "/" + std::to_string(m) + "]");
      }
  uq.ensure_completed(std::max(2, nmax + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      ++rep.checks;
      Element x = Element::word(W({E(i), F(j)})) - Element::word(W({F(j), E(i)}));
      if (uq.zero_test(x) != ZeroVerdict::Zero)
        fail("E_" + std::to_string(i) + "F_" + std::to_string(j) + " = F_jE_i");
    }
  for (int i = 0; i <= n; ++i)
    for (int m = 1; m <= nmax; ++m) {
      ++rep.checks;
      Element lhs = Element::word(W({E(i)}) + pow_word(F(i), m));
      Element rhs = Element::word(pow_word(F(i), m) + W({E(i)}));
      Element sum;
      for (int r = 0; r < m; ++r) sum += kbracket(i, cd.d[i], -2 * r * cd.d[i]);
      rhs += Element::word(pow_word(F(i), m - 1)) * sum;
      if (uq.zero_test(lhs - rhs) != ZeroVerdict::Zero)
        fail("E_" + std::to_string(i) + "F_" + std::to_string(i) + "^" + std::to_string(m));
    }
  return rep;
}

}  // namespace qverma
