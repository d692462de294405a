#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qverma/beckorder.hpp"
#include "qverma/ncalg.hpp"

namespace qverma {

Letter E(int i);
Letter F(int i);
Letter Kp(int i);
Letter Km(int i);
Letter Dp();
Letter Dm();

// U_q of an affine Cartan datum: defining relations, completed normal forms, braid action.
class Uq {
 public:
  explicit Uq(const CartanData& cd);
  Uq(const Uq&) = delete;

  const CartanData& cartan() const { return cd_; }
  // the defining relations oriented as rewrite rules
  const RewriteSystem& rules() const { return base_; }
  // named defining relations as elements that must vanish
  std::vector<std::pair<std::string, Element>> relations() const;

  // Completes the pure E and pure F parts up to the given height.
  void ensure_completed(int height);
  int completed_height() const { return completed_.completed_height; }
  const RewriteSystem& completed() const { return completed_; }

  Element reduce(const Element& x);
  Element mul(const Element& x, const Element& y);
  // exact: Zero or NonZero, decided in the shuffle embedding when rewriting alone does not give 0
  ZeroVerdict zero_test(const Element& x);
  const ShuffleEmbedding& shuffle() const { return shuffle_; }

  // positive: the image is known to lie in U^+, so mixed terms are pruned on the fly
  Element braid_T(int i, const Element& x, bool positive = false);
  Element braid_T_inv(int i, const Element& x, bool positive = false);
  const Element& T_image(int i, Letter l, bool inverse);
  // algebra morphism given by letter images, result in normal form
  Element apply_morphism(const Element& x, const std::function<const Element&(Letter)>& img,
                         bool positive = false);

  TriangularReducer& reducer() { return *red_; }

 private:
  const CartanData& cd_;
  RewriteSystem base_;
  RewriteSystem completed_;
  std::unique_ptr<TriangularReducer> red_;
  ShuffleEmbedding shuffle_;
  std::map<std::pair<int, int>, Element> timg_;  // (i or ~i, letter) -> image
};

// C-linear antiautomorphism: E_i <-> F_i, K_i -> K_i^{-1}, D -> D^{-1}, q -> q^{-1}, word
// reversal. Keeping q fixed would not respect [E_i, F_i].
Element omega(const Element& x);

struct RootVector {
  Root root;
  int color = -1;               // imaginary only
  Element element;
  std::optional<int> betaIndex;  // real positive only
};

// Root vectors for a fixed ordering, cached.
class RootVectors {
 public:
  RootVectors(Uq& uq, const BeckOrdering& ord);

  const RootVector& real(int k);
  // E_{-alpha} = omega(E_alpha)
  RootVector negative(const RootVector& rv);
  // psi_m = E_b E_i - q^{(alpha_i|b)} E_i E_b, b = -alpha_i + m delta. No K_i^{-1} in front, so
  // the log series stays in U^+. This scalar normalization is the one for which the log gives
  // primitive vectors: [E_{k delta}, E_{b}] is a multiple of E_{b + k delta}. With the plain
  // commutator (q_commutator off) the imaginary vectors do not commute.
  Element psi(int i, int m);
  const RootVector& imaginary(int i, int k);
  // real positive root vector by root
  const RootVector& of_root(const Root& r);

  bool q_commutator = true;  // fixed before first use
  Uq& uq() { return uq_; }
  const BeckOrdering& ordering() const { return ord_; }

 private:
  const Element& chain(const std::vector<int>& seq, bool inverse);
  Uq& uq_;
  const BeckOrdering& ord_;
  std::map<int, RootVector> real_;
  std::map<std::pair<int, int>, RootVector> imag_;
  std::map<std::pair<int, int>, Element> psi_;
  std::map<std::pair<std::vector<int>, bool>, Element> chain_;
};

const RootVector& root_vector(RootVectors& rv, int k);
RootVector neg_root_vector(RootVectors& rv, const RootVector& v);
const RootVector& imaginary_root_vector(RootVectors& rv, int i, int k);

// ---- Lusztig elements in a commuting model: Laurent polynomials in K with Q(q) coefficients
using KPoly = std::map<int, QRat>;
KPoly kpoly_mul(const KPoly& a, const KPoly& b);
KPoly kpoly_add(const KPoly& a, const KPoly& b);
bool kpoly_equal(const KPoly& a, const KPoly& b);
// [K; s / n] with q_i = q^d
KPoly lusztig_poly(int d, int s, int n);
// K -> q^e K
KPoly kpoly_scale(const KPoly& a, int e);

// scalar by which [K_i; s/n] acts on a vector with K_i-eigenvalue q_i^m
QRat lusztig_K(const CartanData& cd, int i, int s, int n, int m);
// the product formula in the corrected form
//   [K;s/n] = prod_{r=1}^n ( q_i^{s-r+1} [K;0/1] + [s-r+1] K^{-1} ) / [r]
bool verify_lusztig_identity(const CartanData& cd, int i, int s, int n);
// the same formula without the q_i^{s-r+1} factor
bool lusztig_identity_unweighted(const CartanData& cd, int i, int s, int n);

struct CheckReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
CheckReport verify_commutation_suite(Uq& uq, int nmax);

}  // namespace qverma
