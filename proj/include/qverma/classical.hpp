#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qverma/ncalg.hpp"
#include "qverma/partition.hpp"
#include "qverma/qcoeff.hpp"
#include "qverma/verma.hpp"

namespace qverma {

struct NotInAForm : std::domain_error {
  NotInAForm() : std::domain_error("NotInAForm: coefficient has a pole at a root of unity") {}
};

using Mat = std::vector<std::vector<Rational>>;

// The finite simple Lie algebra as matrices (sl_{n+1} for a path diagram, sp_4 for C2/B2) with a
// Chevalley basis. Index layout: e_alpha for the P positive roots, then f_alpha, then h_1..h_N.
// Root vectors come from iterated brackets of the simple generators, f_alpha is rescaled so that
// [e_alpha, f_alpha] is the coroot.
class FiniteLie {
 public:
  explicit FiniteLie(const CartanData& cd);

  int dim() const { return static_cast<int>(basis_.size()); }
  int rank() const { return N_; }
  int positive_roots() const { return P_; }
  bool is_cartan(int b) const { return b >= 2 * P_; }
  // root over alpha_1..alpha_N, zero for the Cartan part
  const std::vector<int>& root(int b) const { return roots_[b]; }
  int e(int i) const { return simple_[i - 1]; }
  int f(int i) const { return simple_[i - 1] + P_; }
  int h(int i) const { return 2 * P_ + i - 1; }
  int e_theta() const { return theta_; }
  int f_theta() const { return theta_ + P_; }

  const std::map<int, Rational>& bracket(int a, int b) const { return table_[a][b]; }
  // invariant form normalized by (e_theta|f_theta) = 1
  const Rational& form(int a, int b) const { return form_[a][b]; }
  const Mat& matrix(int b) const { return basis_[b]; }
  std::string name(int b) const;

 private:
  std::map<int, Rational> coords(const Mat& m) const;

  int N_ = 0, P_ = 0, theta_ = 0;
  std::vector<Mat> basis_;
  std::vector<std::vector<int>> roots_;
  std::vector<int> simple_;
  std::vector<std::vector<std::map<int, Rational>>> table_;
  std::vector<std::vector<Rational>> form_;
};

// x tensor t^n for x a basis element of the finite algebra; b = dim is c, b = dim + 1 is d (t = 0)
struct LoopGen {
  int b = 0;
  int t = 0;
  friend bool operator==(const LoopGen&, const LoopGen&) = default;
  friend auto operator<=>(const LoopGen&, const LoopGen&) = default;
};
using LoopElement = std::map<LoopGen, Rational>;
// element of U(Lg), PBW monomials in increasing LoopGen order
using LoopPoly = std::map<std::vector<LoopGen>, Rational>;

class LoopAlgebra {
 public:
  explicit LoopAlgebra(const CartanData& cd) : cd_(cd), g_(cd) {}

  const CartanData& cartan() const { return cd_; }
  const FiniteLie& finite() const { return g_; }
  LoopGen c() const { return {g_.dim(), 0}; }
  LoopGen d() const { return {g_.dim() + 1, 0}; }
  // Chevalley generators of the affine algebra: e_0 = f_theta t, f_0 = e_theta t^-1
  LoopGen e(int i) const { return i == 0 ? LoopGen{g_.f_theta(), 1} : LoopGen{g_.e(i), 0}; }
  LoopGen f(int i) const { return i == 0 ? LoopGen{g_.e_theta(), -1} : LoopGen{g_.f(i), 0}; }

  LoopElement bracket(const LoopGen& x, const LoopGen& y) const;
  // weight read off from ad(h_i) and ad(d) eigenvalues; throws if x is not a weight vector
  Root weight(const LoopGen& x) const;

  std::string str(const LoopGen& x) const;
  std::string str(const LoopElement& x) const;
  std::string str(const LoopPoly& x) const;

  // PBW normal form in U(Lg): adjacent out-of-order pairs are swapped, brackets inserted
  LoopPoly normal_order(const std::vector<LoopGen>& w) const;
  LoopPoly multiply(const LoopPoly& a, const LoopPoly& b) const;

 private:
  const CartanData& cd_;
  FiniteLie g_;
  mutable std::map<std::vector<LoopGen>, LoopPoly> memo_;
};

LoopElement loop_bracket(const LoopAlgebra& L, const LoopElement& x, const LoopElement& y);

// q -> 1, K_i -> 1, D -> 1, letters to loop generators, result in PBW normal form.
// Throws NotInAForm or PoleAtOne for coefficients that do not specialize.
LoopPoly classical_limit_element(const LoopAlgebra& L, const Element& x);
// weight of every PBW monomial if they agree; throws std::logic_error otherwise
Root loop_weight(const LoopAlgebra& L, const LoopPoly& x);

// M_J(lambda) for the loop algebra, as a free U(n_{-J}) module: weight spaces are counted by
// PBW monomials in the loop elements spanning n_{-J}.
class ClassicalVerma {
 public:
  ClassicalVerma(const LoopAlgebra& L, Weight lambda, std::vector<int> J, int maxdepth);

  bool lowering(const LoopGen& x) const;
  // PBW monomials of weight lambda - nu whose factors have total depth <= budget
  long long slice_dim(const Root& nu, int budget) const;
  // dimension of the weight space lambda - nu; Infinite when the count keeps growing with depth
  MultResult dim(const Root& nu) const;
  long long slice_dim(const Root& nu) const { return slice_dim(nu, maxdepth_); }

 private:
  void generators(int budget) const;

  const LoopAlgebra& L_;
  Weight lambda_;
  std::vector<int> J_;
  int maxdepth_;
  mutable int built_ = -1;
  mutable std::vector<LoopGen> gens_;
  mutable std::vector<std::vector<int>> coords_;
  mutable std::vector<int> depth_;
  mutable std::map<std::vector<int>, long long> memo_;
};

ClassicalVerma classical_verma(const LoopAlgebra& L, const Weight& lambda,
                               const std::vector<int>& J, int maxdepth);

struct DeformationRow {
  Root nu;
  Weight mu;
  MultResult quantum, partition, classical;
  long long quantumSlice = 0, classicalSlice = 0;
  bool ok = false;
};
struct DeformationReport {
  std::vector<DeformationRow> rows;
  bool ok() const;
  std::string str() const;
};
// Quantum basis (verma), partition function and classical enumeration, weight by weight over
// the depth window. Infinite weight spaces also compare their depth slices.
DeformationReport verify_deformation(PBWAlgebra& alg, const LoopAlgebra& L, const Weight& lambda,
                                     const std::vector<int>& J, int depth);

}  // namespace qverma
