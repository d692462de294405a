#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "qverma/linalg.hpp"
#include "qverma/partition.hpp"
#include "qverma/uq.hpp"

namespace qverma {

struct TruncationExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LevelNotZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A root vector symbol. color is 1..N for imaginary roots and 0 for real ones.
struct Sym {
  Root root;
  int color = 0;
  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;
  std::string str() const;
};
using SymWord = std::vector<Sym>;
std::string symword_str(const SymWord& w);

// sum of |coefficients| over alpha_0..alpha_N; the total height on Q_+
int depth_of(const Root& nu, const CartanData& cd);
// lambda - mu in the root lattice, if it is there
std::optional<Root> weight_difference(const Weight& lambda, const Weight& mu, const CartanData& cd);
// nu in the monoid generated by S_J
bool in_monoid(const Root& nu, const PartitionSpec& p);

struct MultResult {
  enum class Kind { Zero, Finite, Infinite } kind = Kind::Zero;
  long long count = 0;
  std::string str() const;
  friend bool operator==(const MultResult&, const MultResult&) = default;
};
// dim M_J(lambda)_{lambda - nu}: a partition-function count over S_J
MultResult mult_of(const Root& nu, const PartitionSpec& p);
MultResult weight_mult(const Weight& lambda, const std::vector<int>& J, const Weight& mu,
                       const CartanData& cd);

// x y = xi y x + sum c N t M, with N, M ordered monomials of negative and positive symbols and t a
// torus monomial (K_0..K_N exponents, then D)
struct PBWTerm {
  SymWord neg;
  std::vector<int> torus;
  SymWord pos;
  QRat c;
};
struct SwapRule {
  QRat xi;
  std::vector<PBWTerm> rest;
};

// Root vector symbols as elements of U_q, their ordered products and commutation rules.
// Everything here is independent of lambda and J.
class PBWAlgebra {
 public:
  explicit PBWAlgebra(RootVectors& rv);
  PBWAlgebra(const PBWAlgebra&) = delete;

  const CartanData& cartan() const { return cd_; }
  RootVectors& root_vectors() { return rv_; }
  bool positive(const Sym& s) const;
  // Beck order extended to negative symbols (all negatives first); imaginary symbols of equal
  // weight compare equal here
  int cmp(const Sym& a, const Sym& b) const;
  // total order of ordered monomials: cmp, then color
  bool pbw_less(const Sym& a, const Sym& b) const;
  Root weight(const SymWord& w) const;

  const Element& element(const Sym& s);
  const Element& element(const SymWord& w);
  const SwapRule& swap_rule(const Sym& x, const Sym& y);
  // expansion of a pure element (only E letters or only F letters) in ordered monomials
  std::map<SymWord, QRat> expand(const Element& pure, bool positive);

  std::size_t rules_cached() const { return rules_.size(); }
  // same-sign rules whose q-power had the opposite sign from the expected one
  int sign_fallbacks() const { return fallbacks_; }

 private:
  struct Basis {
    std::vector<SymWord> monomials;
    SparseSolver<Word> solver;
  };
  // ordered monomials of the given sign and weight using only symbols strictly between lo and hi
  Basis& basis(const Root& wt, bool positive, const std::optional<Sym>& lo,
               const std::optional<Sym>& hi);
  std::vector<Sym> symbols_below(const Root& wt, bool positive);
  std::map<Word, QRat> image(const Element& pure);
  std::optional<std::map<SymWord, QRat>> solve_in(Basis& b, const Element& x);
  SwapRule same_sign(const Sym& x, const Sym& y);
  SwapRule mixed(const Sym& x, const Sym& y);

  RootVectors& rv_;
  Uq& uq_;
  const CartanData& cd_;
  std::map<Sym, Element> sym_;
  std::map<SymWord, Element> mono_;
  std::map<std::pair<Sym, Sym>, SwapRule> rules_;
  std::map<std::tuple<Root, bool, std::optional<Sym>, std::optional<Sym>>, Basis> bases_;
  std::unordered_map<Word, ShuffleEmbedding::Image> images_;
  int fallbacks_ = 0;
};

struct ModuleConfig {
  Weight lambda;
  std::vector<int> J;
  int maxdepth = 4;
  // quotient by the submodule generated by the imaginary weight spaces (J empty, level 0)
  bool reduced = false;
};

using ModVec = std::map<SymWord, QRat>;
std::string modvec_str(const ModVec& x);

struct WeightSpace {
  Root nu;  // the weight is lambda - nu
  MultResult mult;
  std::vector<SymWord> basis;  // all of it when finite, the depth slice otherwise
};

// Truncated model of M_J(lambda) (or of its level-zero quotient). Vectors are combinations of
// ordered monomials applied to v; products are straightened with the commutation rules of
// PBWAlgebra until every raising symbol has reached v and the rest is in canonical order.
class VermaModule {
 public:
  VermaModule(PBWAlgebra& alg, ModuleConfig cfg);

  const ModuleConfig& config() const { return cfg_; }
  const PartitionSpec& partition() const { return part_; }
  PBWAlgebra& algebra() { return alg_; }
  const CartanData& cartan() const { return cd_; }

  bool raising(const Sym& s) const;  // s in S_J
  // canonical order: segments B1^inf, A3^inf, B1^fin, B2, B3^fin, descending inside a segment
  bool canonical_less(const Sym& a, const Sym& b) const;
  bool killed(const SymWord& canonical) const;

  // canonical monomials of weight lambda - nu
  std::vector<SymWord> basis(const Root& nu) const;
  WeightSpace weight_space(const Root& nu) const;
  // lambda - nu for every nu != 0 in the monoid of S_J with depth <= maxdepth
  std::vector<Root> weights_in_window(bool finite_only) const;

  ModVec apply(const SymWord& w);  // w . v
  ModVec act(const Sym& s, const ModVec& x);
  // Chevalley generator (E_i, F_i, K_i^{+-1}, D^{+-1})
  ModVec act_letter(Letter l, const ModVec& x);
  // raising symbols that can act nontrivially on weight lambda - nu inside the window
  std::vector<Sym> raising_window(const Root& nu) const;
  std::vector<ModVec> singular_vectors(const Root& nu);

  // coefficient of v
  static QRat vacuum(const ModVec& x);
  Root weight_of(const SymWord& w) const { return alg_.weight(w); }
  // eigenvalue exponent of a torus monomial on weight lambda + wt
  int torus_exponent(const std::vector<int>& t, const Root& wt) const;

  // when set, the sorting phase picks a random out-of-order pair instead of the rightmost
  std::mt19937_64* shuffle_choices = nullptr;
  std::size_t max_memo = 2000000;
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const ModVec& canon(const SymWord& w);
  ModVec swap_at(const SymWord& w, std::size_t i);
  int segment(const Sym& s) const;
  std::vector<Sym> candidates(const Root& nu, bool finite) const;

  PBWAlgebra& alg_;
  const CartanData& cd_;
  ModuleConfig cfg_;
  PartitionSpec part_;
  std::map<SymWord, ModVec> memo_;
};

VermaModule build_module(PBWAlgebra& alg, const ModuleConfig& cfg);
std::vector<ModVec> singular_vectors(VermaModule& m, const Root& nu);

// c with [E_{k delta}^{(i)}, E_{-k delta}^{(j)}] v = c v in M_emptyset(lambda)
QRat heisenberg_pairing(PBWAlgebra& alg, int i, int j, int k, const Weight& lambda);

struct IrreducibilityVerdict {
  bool irreducible = true;
  int depth = 0;
  Root witnessWeight;  // lambda - witnessWeight carries the witness
  ModVec witness;
  std::string str() const;
};
// Singular vectors are searched on the weights lambda - nu with nu in Q^J_+; every nonzero
// submodule meets that part.
IrreducibilityVerdict check_irreducibility(PBWAlgebra& alg, const ModuleConfig& cfg);

VermaModule reduced_imaginary_module(PBWAlgebra& alg, const Weight& lambda, int depth);

struct LevelZeroReport {
  std::vector<int> zeroNodes;  // i in 1..N with lambda(h_i) = 0
  int lemmaChecks = 0;
  int lemmaCases[3] = {0, 0, 0};  // beta != alpha_i, beta = alpha_i with k != 0, k = 0
  bool vExcluded = true;          // v not reached from E_{-alpha_i} v
  int closureVectors = 0;
  int weightsSearched = 0;
  std::vector<std::pair<Root, ModVec>> singular;  // nontrivial singular vectors found
  std::vector<std::string> failures;
  // irreducible up to the depth (no zero node) or reducible with witness, and all checks pass
  bool ok() const { return failures.empty(); }
  std::string str() const;
};
LevelZeroReport verify_level_zero(PBWAlgebra& alg, const Weight& lambda, int depth);

// Every generator maps the killed part of the level-zero quotient into itself (window check).
bool reduced_quotient_closed(VermaModule& m, std::string* why = nullptr);

}  // namespace qverma
