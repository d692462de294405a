#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "qverma/qcoeff.hpp"
#include "qverma/rootsys.hpp"

namespace qverma {

// Letter precedence F < K^- < K^+ < D^- < D^+ < E, then ascending index.
enum class Kind : std::uint8_t { F = 0, Kminus = 1, Kplus = 2, Dminus = 3, Dplus = 4, E = 5 };

using Letter = std::uint8_t;
// A word is a string of letter codes; std::string compares bytes as unsigned char.
using Word = std::string;

inline Letter make_letter(Kind k, int index = 0) {
  return static_cast<Letter>(static_cast<int>(k) * 8 + index);
}
inline Kind kind_of(Letter l) { return static_cast<Kind>(l >> 3); }
inline int index_of(Letter l) { return l & 7; }
inline bool is_torus(Letter l) {
  Kind k = kind_of(l);
  return k != Kind::E && k != Kind::F;
}
inline char letter_char(Letter l) { return static_cast<char>(l); }

int word_height(const Word& w);  // number of E and F letters
Root word_weight(const Word& w, const CartanData& cd);
std::string word_str(const Word& w);

// total height, then length, then lexicographic
struct TermLess {
  bool operator()(const Word& a, const Word& b) const;
};

class Element {
 public:
  using Map = std::map<Word, QRat, TermLess>;

  Element() = default;
  static Element scalar(const QRat& c);
  static Element word(const Word& w, const QRat& c = QRat(1));
  static Element letter(Letter l) { return word(Word(1, letter_char(l))); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  QRat coeff(const Word& w) const;
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const QRat& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Word& w, const QRat& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const QRat& c);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const QRat& c) { return a *= c; }
  friend Element operator*(const QRat& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  int max_height() const;
  // weight of every term if homogeneous; throws std::logic_error otherwise
  Root weight(const CartanData& cd) const;
  bool is_homogeneous(const CartanData& cd) const;
  std::string str() const;

 private:
  Map terms_;
};

// free-algebra product
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
Element commutator(const Element& x, const Element& y);

struct HeightOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "(q+q^-1)*F1.K0-.E1 - 2*E0" ; "1" is the empty word
Element parse_element(const std::string& text);

struct Rule {
  Word lead;
  Element rhs;  // lead -> rhs, every term of rhs smaller than lead
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(const CartanData* cd) : cd_(cd) {}

  // Adds lead -> rhs. Checks the order and (if a Cartan datum is attached) weight.
  void add_rule(const Word& lead, const Element& rhs);
  // Adds the relation x = 0, oriented at its leading word.
  void add_relation(const Element& x);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return live_; }
  const CartanData* cartan() const { return cd_; }

  // first (leftmost, then shortest) match of a rule lead inside w
  bool find_match(const Word& w, std::size_t& pos, std::size_t& rule) const;
  void all_matches(const Word& w, std::vector<std::pair<std::size_t, std::size_t>>& out) const;
  bool reducible(const Word& w) const;

  int completed_height = -1;   // completion is exact for words up to this height
  bool max_rules_hit = false;
  std::size_t max_rules = 200000;
  std::vector<int> weight_box;  // optional: completion only inside this box of alpha_0..N coords
  // only resolve overlaps between words in E letters alone or F letters alone
  bool pure_only = false;

  void remove_rule(std::size_t idx);
  bool is_alive(std::size_t idx) const { return alive_[idx]; }

 private:
  void trie_insert(const Word& w, int id);
  void trie_erase(const Word& w);
  const CartanData* cd_ = nullptr;
  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::size_t live_ = 0;
  std::vector<std::array<int, 48>> trie_ = {std::array<int, 48>{}};
  std::vector<int> term_;  // rule id ending at node, or -1
};

Element reduce(const Element& x, const RewriteSystem& rs, int maxheight = 1 << 20);
// Reduction applying a uniformly random applicable rule at every step.
Element reduce_random(const Element& x, const RewriteSystem& rs, std::mt19937_64& rng);
// Overlap completion truncated at total height maxheight.
RewriteSystem complete(const RewriteSystem& rs, int maxheight);
void complete_in_place(RewriteSystem& rs, int maxheight);

enum class ZeroVerdict { Zero, NonZero, Inconclusive };
std::string verdict_str(ZeroVerdict v);
ZeroVerdict is_zero_mod_ideal(const Element& x, const RewriteSystem& completed, int maxheight);

// Numerators over one shared (not necessarily least) denominator. Sums of many terms with
// few distinct denominators avoid a gcd per operation this way.
struct Frac {
  std::unordered_map<Word, LaurentPoly> num;
  LaurentPoly den = LaurentPoly(1);
  static Frac from(const Element& x);
  Element to_element() const;
  // this += c x
  void add(const Frac& x, const QRat& c);
};

class DenAcc;

// Normal forms F-word . torus . E-word for a completed Chevalley system. Uses closed
// straightening formulas for the torus and the E/F exchange, and the rewrite system
// (with a memo) for the pure E and pure F parts.
class TriangularReducer {
 public:
  TriangularReducer(const CartanData& cd, const RewriteSystem& rs);

  Element reduce(const Element& x);
  // product of two normal forms
  Element mul(const Element& x, const Element& y);
  Element mul_word(const Element& x, const Word& w);
  Frac mul_word(const Frac& x, const Word& w);
  Frac mul(const Frac& x, const Element& y);
  std::size_t memo_size() const { return memoE_.size(); }
  // longest pure E or F word that had to be reduced
  int max_part_height() const { return max_part_height_; }
  void reset_max_part_height() { max_part_height_ = 0; }
  // Drop every term with a nonempty F-part. Right multiplication never shortens the F-part,
  // so this computes the F-free component of a product exactly.
  bool drop_F = false;

  struct Split {
    Word f, e;
    std::vector<int> torus;  // K_0..K_N exponents, then D
  };
  Split split(const Word& w) const;
  Word join(const Split& s) const;
  Word join(const Word& f, const std::vector<int>& t, const Word& e) const;

 private:
  struct Part {
    Frac f;
    std::vector<std::pair<int, LaurentPoly>> fden;  // den * (q_j - q_j^{-1}) for used j
  };
  Part& reduce_part(const Word& w);
  const LaurentPoly& exchange_den(Part& p, int j);
  void mul_letter_into(const Word& term, const LaurentPoly& c, Letter l, DenAcc& out);
  int form(int i, const Root& r) const;  // (alpha_i | r)
  const CartanData& cd_;
  const RewriteSystem& rs_;
  std::unordered_map<Word, Part> memoE_;
  int max_part_height_ = 0;
};

// Faithful image of U^+ (and of U^- via E_i -> F_i) in the quantum shuffle algebra. Right
// multiplication by E_j inserts j at every position p with weight q^{(alpha_j | wt of the
// letters after p)}. Stripping a trailing j gives the skew derivation from [x, F_j], so the
// image of a nonzero element is nonzero: zero tests are exact at every height.
class ShuffleEmbedding {
 public:
  explicit ShuffleEmbedding(const CartanData& cd) : cd_(cd) {}
  using Image = std::map<Word, LaurentPoly>;  // shuffle words are written with E letters
  Image image(const Word& pure) const;
  // coordinates over (F image, torus, E image) of an element in triangular normal form
  std::map<std::tuple<Word, Word, Word>, QRat> canonical(const Element& x) const;
  bool is_zero(const Element& x) const { return canonical(x).empty(); }

 private:
  void insert_into(const Image& in, int j, Image& out) const;
  const CartanData& cd_;
};

// Associated graded model of the ordered root-vector basis. Symbols are positive roots
// (imaginary ones repeated per color) listed strictly descending in the root order, and a
// basis monomial is N K M with N built from E_{-beta} (ascending) and M from E_beta
// (descending). In the graded algebra the symbols quasi-commute:
//   E_a E_b = q^{(a|b)} E_b E_a and E_{-a} E_{-b} = q^{(a|b)} E_{-b} E_{-a} for b < a,
// while positive and negative symbols commute.
struct GradedMonomial {
  std::vector<int> neg, pos;  // exponents indexed like the symbol list
  QRat coeff = QRat(1);
};
struct DegreeTuple {
  int total = 0;
  std::vector<int> neg, pos;  // listed from the largest symbol down
  friend auto operator<=>(const DegreeTuple&, const DegreeTuple&) = default;
  friend bool operator==(const DegreeTuple&, const DegreeTuple&) = default;
  DegreeTuple operator+(const DegreeTuple& o) const;
};

class GradedModel {
 public:
  GradedModel(const CartanData& cd, std::vector<Root> symbols);
  std::size_t size() const { return symbols_.size(); }
  const Root& symbol(std::size_t i) const { return symbols_[i]; }

  DegreeTuple degree(const GradedMonomial& m) const;
  // product of two basis monomials in the graded algebra (one monomial with a q-power)
  GradedMonomial product(const GradedMonomial& a, const GradedMonomial& b) const;
  DegreeTuple leading_degree(const std::vector<GradedMonomial>& x) const;

 private:
  const CartanData& cd_;
  std::vector<Root> symbols_;
  std::vector<int> heights_;
};

}  // namespace qverma
