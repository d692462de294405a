#include "qverma/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qverma {

namespace {

inline bool is_EF(unsigned char c) { return c < 8 || c >= 40; }

}  // namespace

int word_height(const Word& w) {
  int h = 0;
  for (unsigned char c : w) h += is_EF(c);
  return h;
}

Root word_weight(const Word& w, const CartanData& cd) {
  Root r(std::vector<int>(cd.N, 0), 0);
  for (unsigned char c : w) {
    Kind k = kind_of(c);
    if (k == Kind::E) r += cd.simple(index_of(c));
    if (k == Kind::F) r = r - cd.simple(index_of(c));
  }
  return r;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) out += '.';
    Letter l = static_cast<Letter>(w[p]);
    int i = index_of(l);
    switch (kind_of(l)) {
      case Kind::E: out += "E" + std::to_string(i); break;
      case Kind::F: out += "F" + std::to_string(i); break;
      case Kind::Kplus: out += "K" + std::to_string(i); break;
      case Kind::Kminus: out += "K" + std::to_string(i) + "-"; break;
      case Kind::Dplus: out += "D"; break;
      case Kind::Dminus: out += "D-"; break;
    }
  }
  return out;
}

bool TermLess::operator()(const Word& a, const Word& b) const {
  int ha = word_height(a), hb = word_height(b);
  if (ha != hb) return ha < hb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------- Element

Element Element::scalar(const QRat& c) { return word(Word(), c); }

Element Element::word(const Word& w, const QRat& c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(w, c);
  return e;
}

QRat Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat() : it->second;
}

void Element::add_term(const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, x] : r.terms_) x = -x;
  return r;
}

int Element::max_height() const {
  int h = 0;
  for (auto& [w, c] : terms_) h = std::max(h, word_height(w));
  return h;
}

Root Element::weight(const CartanData& cd) const {
  if (terms_.empty()) return Root(std::vector<int>(cd.N, 0), 0);
  Root r = word_weight(terms_.begin()->first, cd);
  for (auto& [w, c] : terms_)
    if (word_weight(w, cd) != r) throw std::logic_error("element is not weight-homogeneous");
  return r;
}

bool Element::is_homogeneous(const CartanData& cd) const {
  try {
    weight(cd);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

namespace {

bool negative_constant(const QRat& c) {
  return c.is_poly() && c.num().is_monomial() && c.num().low() == 0 && c.num().low_coeff() < 0;
}

std::string coeff_str(const QRat& c) {
  if (c.is_poly() && c.num().is_monomial() && c.num().low() == 0)
    return rational_str(c.num().low_coeff());
  return "(" + c.str() + ")";
}

}  // namespace

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    QRat c = it->second;
    bool neg = negative_constant(c);
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (c.is_one())
      out += word_str(it->first);
    else if (it->first.empty())
      out += coeff_str(c);
    else
      out += coeff_str(c) + "*" + word_str(it->first);
  }
  return out;
}

Element multiply(const Element& x, const Element& y) {
  Element r;
  for (auto& [a, ca] : x.terms())
    for (auto& [b, cb] : y.terms()) r.add_term(a + b, ca * cb);
  return r;
}

Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

// ---------------------------------------------------------------- parsing

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

Word parse_word(const std::string& text) {
  std::string t = trim(text);
  if (t == "1") return Word();
  Word w;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    tok = trim(tok);
    if (tok.empty()) throw ParseError("empty letter in '" + text + "'");
    char head = tok[0];
    std::string rest = tok.substr(1);
    bool inv = false;
    if (!rest.empty() && (rest.back() == '-' || rest.back() == '+')) {
      inv = rest.back() == '-';
      rest.pop_back();
    }
    if (head == 'D') {
      if (!rest.empty()) throw ParseError("bad letter '" + tok + "'");
      w += letter_char(make_letter(inv ? Kind::Dminus : Kind::Dplus));
      continue;
    }
    if (rest.empty() || rest.size() > 1 || !std::isdigit(static_cast<unsigned char>(rest[0])))
      throw ParseError("bad letter '" + tok + "'");
    int i = rest[0] - '0';
    if (i > 7) throw ParseError("index out of range in '" + tok + "'");
    if (head == 'E' && !inv)
      w += letter_char(make_letter(Kind::E, i));
    else if (head == 'F' && !inv)
      w += letter_char(make_letter(Kind::F, i));
    else if (head == 'K')
      w += letter_char(make_letter(inv ? Kind::Kminus : Kind::Kplus, i));
    else
      throw ParseError("bad letter '" + tok + "'");
  }
  return w;
}

bool letter_start(char c) { return c == 'E' || c == 'F' || c == 'K' || c == 'D'; }

}  // namespace

Element parse_element(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty element");
  // split at top-level signs
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string cur;
  for (std::size_t p = 0; p < s.size(); ++p) {
    char c = s[p];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + text + "'");
    if (depth == 0 && (c == '+' || c == '-')) {
      char prev = p ? s[p - 1] : ' ';
      char next = p + 1 < s.size() ? s[p + 1] : '\0';
      bool marker = false;
      if (prev == '^') marker = true;
      bool after_torus = (prev == 'D') || (p >= 2 && s[p - 2] == 'K' && std::isdigit(static_cast<unsigned char>(prev)));
      if (after_torus && (next == '\0' || next == '.' || next == ' ' || next == '+' || next == '-'))
        marker = true;
      if (!marker) {
        if (!trim(cur).empty()) {
          terms.push_back({sign, trim(cur)});
          sign = 1;
        }
        if (c == '-') sign = -sign;
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + text + "'");
  if (trim(cur).empty()) throw ParseError("dangling sign in '" + text + "'");
  terms.push_back({sign, trim(cur)});

  Element out;
  for (auto& [sg, t] : terms) {
    QRat c(sg);
    Word w;
    int d = 0;
    std::size_t star = std::string::npos;
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (t[p] == '(') ++d;
      if (t[p] == ')') --d;
      if (d == 0 && t[p] == '*') star = p;
    }
    if (star != std::string::npos) {
      c *= parse_qrat(t.substr(0, star));
      w = parse_word(t.substr(star + 1));
    } else if (letter_start(t[0])) {
      w = parse_word(t);
    } else {
      c *= parse_qrat(t);
    }
    out.add_term(w, c);
  }
  return out;
}

// ---------------------------------------------------------------- rewrite system

void RewriteSystem::trie_insert(const Word& w, int id) {
  int node = 0;
  for (unsigned char c : w) {
    if (!trie_[node][c]) {
      trie_[node][c] = static_cast<int>(trie_.size());
      trie_.push_back(std::array<int, 48>{});
    }
    node = trie_[node][c];
  }
  if (term_.size() < trie_.size()) term_.resize(trie_.size(), -1);
  if (term_[node] >= 0) throw std::logic_error("duplicate rule lead " + word_str(w));
  term_[node] = id;
}

void RewriteSystem::trie_erase(const Word& w) {
  int node = 0;
  for (unsigned char c : w) node = trie_[node][c];
  term_[node] = -1;
}

void RewriteSystem::add_rule(const Word& lead, const Element& rhs) {
  for (unsigned char c : lead)
    if (c >= 48) throw std::invalid_argument("bad letter code");
  TermLess lt;
  for (auto& [w, c] : rhs.terms())
    if (!lt(w, lead))
      throw std::invalid_argument("rule " + word_str(lead) + " -> " + rhs.str() +
                                  " does not decrease the term order");
  if (cd_) {
    Root wt = word_weight(lead, *cd_);
    for (auto& [w, c] : rhs.terms())
      if (word_weight(w, *cd_) != wt)
        throw std::invalid_argument("rule " + word_str(lead) + " is not weight-homogeneous");
  }
  trie_insert(lead, static_cast<int>(rules_.size()));
  rules_.push_back({lead, rhs});
  alive_.push_back(true);
  ++live_;
}

void RewriteSystem::add_relation(const Element& x) {
  if (x.is_zero()) return;
  Word lead = x.leading_word();
  QRat lc = x.leading_coeff();
  Element rhs = x;
  rhs.add_term(lead, -lc);
  rhs *= -lc.inverse();
  add_rule(lead, rhs);
}

void RewriteSystem::remove_rule(std::size_t idx) {
  if (!alive_[idx]) return;
  trie_erase(rules_[idx].lead);
  alive_[idx] = false;
  --live_;
}

bool RewriteSystem::find_match(const Word& w, std::size_t& pos, std::size_t& rule) const {
  for (std::size_t s = 0; s < w.size(); ++s) {
    int node = 0;
    for (std::size_t p = s; p < w.size(); ++p) {
      node = trie_[node][static_cast<unsigned char>(w[p])];
      if (!node) break;
      if (term_[node] >= 0) {
        pos = s;
        rule = static_cast<std::size_t>(term_[node]);
        return true;
      }
    }
  }
  return false;
}

void RewriteSystem::all_matches(const Word& w,
                                std::vector<std::pair<std::size_t, std::size_t>>& out) const {
  out.clear();
  for (std::size_t s = 0; s < w.size(); ++s) {
    int node = 0;
    for (std::size_t p = s; p < w.size(); ++p) {
      node = trie_[node][static_cast<unsigned char>(w[p])];
      if (!node) break;
      if (term_[node] >= 0) out.push_back({s, static_cast<std::size_t>(term_[node])});
    }
  }
}

bool RewriteSystem::reducible(const Word& w) const {
  std::size_t a, b;
  return find_match(w, a, b);
}

namespace {

void apply_rule(const Word& w, const QRat& c, std::size_t pos, const Rule& r, Element::Map& work) {
  Word head = w.substr(0, pos), tail = w.substr(pos + r.lead.size());
  for (auto& [m, x] : r.rhs.terms()) {
    QRat v = c * x;
    auto [it, fresh] = work.emplace(head + m + tail, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) work.erase(it);
    }
  }
}

}  // namespace

Element reduce(const Element& x, const RewriteSystem& rs, int maxheight) {
  if (x.max_height() > maxheight)
    throw HeightOverflow("HeightOverflow: input of height " + std::to_string(x.max_height()) +
                         " exceeds " + std::to_string(maxheight));
  Element::Map work = x.terms();
  Element out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    QRat c = it->second;
    work.erase(it);
    std::size_t pos, rule;
    if (rs.find_match(w, pos, rule))
      apply_rule(w, c, pos, rs.rules()[rule], work);
    else
      out.add_term(w, c);
  }
  return out;
}

Element reduce_random(const Element& x, const RewriteSystem& rs, std::mt19937_64& rng) {
  Element::Map work = x.terms();
  Element out;
  std::vector<std::pair<std::size_t, std::size_t>> ms;
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng));
    Word w = it->first;
    QRat c = it->second;
    work.erase(it);
    rs.all_matches(w, ms);
    if (ms.empty()) {
      out.add_term(w, c);
      continue;
    }
    auto [pos, rule] = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    apply_rule(w, c, pos, rs.rules()[rule], work);
  }
  return out;
}

// ---------------------------------------------------------------- completion

namespace {

struct Pending {
  Word w;
  std::size_t a, b, k;  // overlap of lead a (suffix k) with lead b (prefix k)
};

struct PendingLess {
  bool operator()(const Word& x, const Word& y) const { return TermLess()(x, y); }
};

bool in_box(const Word& w, const RewriteSystem& rs) {
  if (rs.weight_box.empty()) return true;
  std::vector<int> e(rs.weight_box.size(), 0), f(rs.weight_box.size(), 0);
  for (unsigned char c : w) {
    Kind k = kind_of(c);
    int i = index_of(c);
    if (i >= static_cast<int>(e.size())) continue;
    if (k == Kind::E && ++e[i] > rs.weight_box[i]) return false;
    if (k == Kind::F && ++f[i] > rs.weight_box[i]) return false;
  }
  return true;
}

bool pure(const Word& w) {
  bool e = false, f = false;
  for (unsigned char c : w) {
    Kind k = kind_of(c);
    if (k == Kind::E) e = true;
    else if (k == Kind::F) f = true;
    else return false;
  }
  return !(e && f);
}

void queue_overlaps(const RewriteSystem& rs, std::size_t r, int maxheight,
                    std::multimap<Word, Pending, PendingLess>& q) {
  const auto& rules = rs.rules();
  auto add = [&](std::size_t a, std::size_t b) {
    const Word& la = rules[a].lead;
    const Word& lb = rules[b].lead;
    std::size_t m = std::min(la.size(), lb.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
      Word w = la + lb.substr(k);
      if (word_height(w) > maxheight || !in_box(w, rs)) continue;
      if (rs.pure_only && !pure(w)) continue;
      q.emplace(w, Pending{w, a, b, k});
    }
  };
  for (std::size_t x = 0; x < rules.size(); ++x) {
    if (!rs.is_alive(x)) continue;
    if (x == r) {
      add(r, r);
      continue;
    }
    add(r, x);
    add(x, r);
  }
}

bool alive(const RewriteSystem& rs, std::size_t i) { return rs.is_alive(i); }

}  // namespace

void complete_in_place(RewriteSystem& rs, int maxheight) {
  std::multimap<Word, Pending, PendingLess> q;
  std::vector<Element> relations;
  for (std::size_t r = 0; r < rs.rules().size(); ++r)
    if (alive(rs, r)) queue_overlaps(rs, r, maxheight, q);

  auto insert_relation = [&](Element s) {
    s = reduce(s, rs);
    if (s.is_zero()) return;
    if (rs.size() >= rs.max_rules) {
      rs.max_rules_hit = true;
      return;
    }
    Word lead = s.leading_word();
    // rules whose lead contains the new lead become redundant; their relations are requeued
    std::vector<Element> requeue;
    for (std::size_t x = 0; x < rs.rules().size(); ++x) {
      if (!alive(rs, x)) continue;
      const Word& lx = rs.rules()[x].lead;
      if (lx.size() > lead.size() && lx.find(lead) != Word::npos) {
        Element rel = Element::word(lx) - rs.rules()[x].rhs;
        requeue.push_back(rel);
        rs.remove_rule(x);
      }
    }
    rs.add_relation(s);
    queue_overlaps(rs, rs.rules().size() - 1, maxheight, q);
    for (auto& rel : requeue) relations.push_back(rel);
  };

  while (!q.empty() || !relations.empty()) {
    if (!relations.empty()) {
      Element rel = relations.back();
      relations.pop_back();
      insert_relation(rel);
      continue;
    }
    auto it = q.begin();
    Pending p = it->second;
    q.erase(it);
    if (!alive(rs, p.a) || !alive(rs, p.b)) continue;
    const Rule& ra = rs.rules()[p.a];
    const Rule& rb = rs.rules()[p.b];
    Word head = ra.lead.substr(0, ra.lead.size() - p.k);
    Word tail = rb.lead.substr(p.k);
    Element s = ra.rhs * Element::word(tail) - Element::word(head) * rb.rhs;
    insert_relation(s);
    if (rs.max_rules_hit) break;
  }
  rs.completed_height = rs.max_rules_hit ? -1 : maxheight;
}

RewriteSystem complete(const RewriteSystem& rs, int maxheight) {
  RewriteSystem out = rs;
  complete_in_place(out, maxheight);
  return out;
}

std::string verdict_str(ZeroVerdict v) {
  switch (v) {
    case ZeroVerdict::Zero: return "Zero";
    case ZeroVerdict::NonZero: return "NonZero";
    default: return "Inconclusive";
  }
}

ZeroVerdict is_zero_mod_ideal(const Element& x, const RewriteSystem& completed, int maxheight) {
  if (x.max_height() > maxheight) return ZeroVerdict::Inconclusive;
  Element r = reduce(x, completed, maxheight);
  if (r.is_zero()) return ZeroVerdict::Zero;
  if (completed.max_rules_hit || completed.completed_height < x.max_height())
    return ZeroVerdict::Inconclusive;
  return ZeroVerdict::NonZero;
}

// ---------------------------------------------------------------- triangular normal forms

TriangularReducer::TriangularReducer(const CartanData& cd, const RewriteSystem& rs)
    : cd_(cd), rs_(rs) {}

int TriangularReducer::form(int i, const Root& r) const {
  return bilinear_form(cd_.simple(i), r, cd_);
}

TriangularReducer::Split TriangularReducer::split(const Word& w) const {
  Split s;
  s.torus.assign(cd_.N + 2, 0);
  std::size_t p = 0;
  while (p < w.size() && kind_of(w[p]) == Kind::F) s.f += w[p++];
  while (p < w.size() && is_torus(w[p])) {
    Letter l = w[p++];
    switch (kind_of(l)) {
      case Kind::Kplus: ++s.torus[index_of(l)]; break;
      case Kind::Kminus: --s.torus[index_of(l)]; break;
      case Kind::Dplus: ++s.torus[cd_.N + 1]; break;
      case Kind::Dminus: --s.torus[cd_.N + 1]; break;
      default: break;
    }
  }
  while (p < w.size() && kind_of(w[p]) == Kind::E) s.e += w[p++];
  if (p != w.size()) throw std::logic_error("word is not in triangular shape: " + word_str(w));
  return s;
}

Word TriangularReducer::join(const Word& f, const std::vector<int>& t, const Word& e) const {
  Word w = f;
  for (int i = 0; i <= cd_.N; ++i)
    if (t[i] < 0) w.append(-t[i], letter_char(make_letter(Kind::Kminus, i)));
  for (int i = 0; i <= cd_.N; ++i)
    if (t[i] > 0) w.append(t[i], letter_char(make_letter(Kind::Kplus, i)));
  int dz = t[cd_.N + 1];
  if (dz < 0) w.append(-dz, letter_char(make_letter(Kind::Dminus)));
  if (dz > 0) w.append(dz, letter_char(make_letter(Kind::Dplus)));
  return w + e;
}

Word TriangularReducer::join(const Split& s) const { return join(s.f, s.torus, s.e); }

// Accumulates terms n/X into numerators over a running denominator M, rescaling when some
// X does not divide M.
class DenAcc {
 public:
  std::unordered_map<Word, LaurentPoly> num;
  LaurentPoly M = LaurentPoly(1);

  // M / X, after enlarging M if needed; the result stays valid until the next call
  LaurentPoly factor(const LaurentPoly& X) {
    if (X == M) return LaurentPoly(1);
    for (auto& [x, f] : cache_)
      if (x == X) return f;
    LaurentPoly f;
    try {
      f = M.divexact(X);
    } catch (const std::domain_error&) {
      LaurentPoly g = LaurentPoly::gcd(M, X);
      LaurentPoly up = X.divexact(g);
      for (auto& [w, n] : num) n = n * up;
      M = M * up;
      cache_.clear();
      f = M.divexact(X);
    }
    cache_.emplace_back(X, f);
    return f;
  }
  void add(Word w, LaurentPoly n) {
    if (n.is_zero()) return;
    auto [it, fresh] = num.try_emplace(std::move(w), std::move(n));
    if (!fresh) {
      it->second += n;
      if (it->second.is_zero()) num.erase(it);
    }
  }

 private:
  std::vector<std::pair<LaurentPoly, LaurentPoly>> cache_;
};

Frac Frac::from(const Element& x) {
  DenAcc acc;
  for (auto& [w, c] : x.terms()) acc.add(w, c.num() * acc.factor(c.den()));
  return Frac{std::move(acc.num), std::move(acc.M)};
}

void Frac::add(const Frac& x, const QRat& c) {
  if (c.is_zero()) return;
  DenAcc acc;
  acc.num = std::move(num);
  acc.M = std::move(den);
  LaurentPoly f = c.num() * acc.factor(x.den * c.den());
  for (auto& [w, n] : x.num) acc.add(w, n * f);
  num = std::move(acc.num);
  den = std::move(acc.M);
}

Element Frac::to_element() const {
  Element out;
  for (auto& [w, n] : num) out.add_term(w, QRat(n, den));
  return out;
}

TriangularReducer::Part& TriangularReducer::reduce_part(const Word& w) {
  max_part_height_ = std::max(max_part_height_, static_cast<int>(w.size()));
  auto it = memoE_.find(w);
  if (it != memoE_.end()) return it->second;
  Element r = qverma::reduce(Element::word(w), rs_);
  return memoE_.emplace(w, Part{Frac::from(r), {}}).first->second;
}

const LaurentPoly& TriangularReducer::exchange_den(Part& p, int j) {
  for (auto& [jj, d] : p.fden)
    if (jj == j) return d;
  int dj = cd_.d[j];
  p.fden.emplace_back(j, p.f.den * (LaurentPoly::monomial(dj) - LaurentPoly::monomial(-dj)));
  return p.fden.back().second;
}

void TriangularReducer::mul_letter_into(const Word& term, const LaurentPoly& c, Letter l,
                                        DenAcc& out) {
  Split s = split(term);
  Kind k = kind_of(l);
  int j = index_of(l);
  if (k == Kind::E) {
    Part& r = reduce_part(s.e + letter_char(l));
    LaurentPoly cf = c * out.factor(r.f.den);
    for (auto& [e2, c2] : r.f.num) out.add(join(s.f, s.torus, e2), cf * c2);
    return;
  }
  if (k != Kind::F) {
    // e . K_j = q^{-(alpha_j | wt e)} K_j . e ;  e . D = q^{-#E_0} D . e
    int exp = 0;
    std::vector<int> t = s.torus;
    if (k == Kind::Kplus || k == Kind::Kminus) {
      int x = form(j, word_weight(s.e, cd_));
      exp = k == Kind::Kplus ? -x : x;
      t[j] += k == Kind::Kplus ? 1 : -1;
    } else {
      int n0 = 0;
      for (unsigned char ch : s.e) n0 += ch == make_letter(Kind::E, 0);
      n0 *= cd_.d[0];
      exp = k == Kind::Dplus ? -n0 : n0;
      t[cd_.N + 1] += k == Kind::Dplus ? 1 : -1;
    }
    out.add(join(s.f, t, s.e), c.shifted(exp) * out.factor(LaurentPoly(1)));
    return;
  }
  // F_j: e . F_j = F_j . e + sum over E_j positions of (q^{-y} K_j - q^{y} K_j^{-1}) A B / (q_j - q_j^{-1})
  Root acc_wt(std::vector<int>(cd_.N, 0), 0);
  for (std::size_t p = 0; p < s.e.size(); ++p) {
    Letter x = s.e[p];
    if (x == make_letter(Kind::E, j)) {
      int y = form(j, acc_wt);
      Word ab = s.e.substr(0, p) + s.e.substr(p + 1);
      Part& r = reduce_part(ab);
      std::vector<int> tp = s.torus, tm = s.torus;
      ++tp[j];
      --tm[j];
      LaurentPoly cf = c * out.factor(exchange_den(r, j));
      LaurentPoly cp = cf.shifted(-y), cm = -cf.shifted(y);
      for (auto& [e2, c2] : r.f.num) {
        out.add(join(s.f, tp, e2), cp * c2);
        out.add(join(s.f, tm, e2), cm * c2);
      }
    }
    acc_wt += cd_.simple(index_of(x));
  }
  if (drop_F) return;
  // t . F_j = q^{-(sum t_i (alpha_i|alpha_j)) - t_D delta_{j0}} F_j . t
  int exp = 0;
  for (int i = 0; i <= cd_.N; ++i) exp -= s.torus[i] * cd_.d[i] * cd_.A[i][j];
  if (j == 0) exp -= s.torus[cd_.N + 1] * cd_.d[0];
  Part& r = reduce_part(s.f + letter_char(l));
  LaurentPoly cf = c.shifted(exp) * out.factor(r.f.den);
  for (auto& [f2, c2] : r.f.num) out.add(join(f2, s.torus, s.e), cf * c2);
}

Frac TriangularReducer::mul_word(const Frac& x, const Word& w) {
  Frac cur = x;
  for (unsigned char l : w) {
    DenAcc next;
    for (auto& [t, c] : cur.num) mul_letter_into(t, c, l, next);
    cur.num = std::move(next.num);
    cur.den = cur.den * next.M;
  }
  return cur;
}

Frac TriangularReducer::mul(const Frac& x, const Element& y) {
  DenAcc acc;
  for (auto& [w, c] : y.terms()) {
    Frac part = mul_word(x, w);
    LaurentPoly f = c.num() * acc.factor(part.den * c.den());
    for (auto& [t, n] : part.num) acc.add(t, n * f);
  }
  return Frac{std::move(acc.num), std::move(acc.M)};
}

Element TriangularReducer::mul_word(const Element& x, const Word& w) {
  return mul_word(Frac::from(x), w).to_element();
}

Element TriangularReducer::mul(const Element& x, const Element& y) {
  return mul(Frac::from(x), y).to_element();
}

Element TriangularReducer::reduce(const Element& x) {
  return mul(Frac{{{Word(), LaurentPoly(1)}}, LaurentPoly(1)}, x).to_element();
}

// ---------------------------------------------------------------- shuffle embedding

void ShuffleEmbedding::insert_into(const Image& in, int j, Image& out) const {
  Letter lj = make_letter(Kind::E, j);
  for (auto& [u, c] : in) {
    // exponent for inserting at p: sum over letters after p of (alpha_j | alpha_letter)
    int e = 0;
    for (unsigned char l : u) e += cd_.d[j] * cd_.A[j][index_of(l)];
    for (std::size_t p = 0; p <= u.size(); ++p) {
      Word w = u.substr(0, p);
      w += letter_char(lj);
      w.append(u, p, Word::npos);
      auto [it, fresh] = out.emplace(w, c.shifted(e));
      if (!fresh) {
        it->second += c.shifted(e);
        if (it->second.is_zero()) out.erase(it);
      }
      if (p < u.size()) e -= cd_.d[j] * cd_.A[j][index_of(u[p])];
    }
  }
}

ShuffleEmbedding::Image ShuffleEmbedding::image(const Word& pure) const {
  Image cur{{Word(), LaurentPoly(1)}};
  for (unsigned char l : pure) {
    Image next;
    insert_into(cur, index_of(l), next);
    cur.swap(next);
  }
  return cur;
}

std::map<std::tuple<Word, Word, Word>, QRat> ShuffleEmbedding::canonical(const Element& x) const {
  using Key = std::tuple<Word, Word, Word>;
  // group by (F-part, torus); E-parts are sorted so shared prefixes are inserted once
  std::map<std::pair<Word, Word>, std::vector<std::pair<Word, const QRat*>>> groups;
  for (auto& [w, c] : x.terms()) {
    std::size_t p = 0;
    while (p < w.size() && kind_of(w[p]) == Kind::F) ++p;
    std::size_t q = p;
    while (q < w.size() && is_torus(w[q])) ++q;
    for (std::size_t r = q; r < w.size(); ++r)
      if (kind_of(w[r]) != Kind::E) throw std::logic_error("not in triangular shape: " + word_str(w));
    groups[{w.substr(0, p), w.substr(p, q - p)}].push_back({w.substr(q), &c});
  }
  // numerators bucketed by denominator, so the sums need no gcds
  std::vector<std::pair<LaurentPoly, std::map<Key, LaurentPoly>>> buckets;
  auto bucket = [&](const LaurentPoly& den) -> std::map<Key, LaurentPoly>& {
    for (auto& b : buckets)
      if (b.first == den) return b.second;
    buckets.push_back({den, {}});
    return buckets.back().second;
  };
  for (auto& [ft, es] : groups) {
    Image fim = image(ft.first);
    std::sort(es.begin(), es.end());
    std::vector<Image> stack{Image{{Word(), LaurentPoly(1)}}};
    Word prev;
    for (auto& [e, c] : es) {
      std::size_t common = 0;
      while (common < prev.size() && common < e.size() && prev[common] == e[common]) ++common;
      stack.resize(common + 1);
      for (std::size_t p = common; p < e.size(); ++p) {
        Image next;
        insert_into(stack.back(), index_of(e[p]), next);
        stack.push_back(std::move(next));
      }
      prev = e;
      auto& out = bucket(c->den());
      for (auto& [u, cu] : fim) {
        LaurentPoly cf = c->num() * cu;
        for (auto& [v, cv] : stack.back()) {
          LaurentPoly t = cf * cv;
          auto [it, fresh] = out.emplace(Key{u, ft.second, v}, t);
          if (!fresh) it->second += t;
        }
      }
    }
  }
  std::map<Key, QRat> res;
  for (auto& [den, m] : buckets)
    for (auto& [k, n] : m) {
      if (n.is_zero()) continue;
      QRat v(n, den);
      auto [it, fresh] = res.emplace(k, v);
      if (!fresh) it->second += v;
    }
  std::erase_if(res, [](const auto& kv) { return kv.second.is_zero(); });
  return res;
}

// ---------------------------------------------------------------- graded model

DegreeTuple DegreeTuple::operator+(const DegreeTuple& o) const {
  DegreeTuple r = *this;
  r.total += o.total;
  for (std::size_t i = 0; i < r.neg.size(); ++i) r.neg[i] += o.neg[i];
  for (std::size_t i = 0; i < r.pos.size(); ++i) r.pos[i] += o.pos[i];
  return r;
}

GradedModel::GradedModel(const CartanData& cd, std::vector<Root> symbols)
    : cd_(cd), symbols_(std::move(symbols)) {
  for (auto& r : symbols_) heights_.push_back(height(r, cd_));
}

DegreeTuple GradedModel::degree(const GradedMonomial& m) const {
  DegreeTuple d;
  d.neg = m.neg;
  d.pos = m.pos;
  for (std::size_t i = 0; i < symbols_.size(); ++i) d.total += (m.neg[i] + m.pos[i]) * heights_[i];
  return d;
}

GradedMonomial GradedModel::product(const GradedMonomial& a, const GradedMonomial& b) const {
  // (N1 M1)(N2 M2) = N1 N2 M1 M2 since positive and negative symbols commute.
  // M is descending (index ascending); moving a factor y of M2 left past x of M1 with y > x
  // (index y < index x) costs E_x E_y = q^{-(x|y)} E_y E_x.
  // N is ascending (index descending); moving y of N2 left past x of N1 with y < x
  // (index y > index x) costs E_{-x} E_{-y} = q^{(x|y)} E_{-y} E_{-x}.
  std::size_t n = symbols_.size();
  int e = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < x; ++y)
      if (a.pos[x] && b.pos[y])
        e -= a.pos[x] * b.pos[y] * bilinear_form(symbols_[x], symbols_[y], cd_);
    for (std::size_t y = x + 1; y < n; ++y)
      if (a.neg[x] && b.neg[y])
        e += a.neg[x] * b.neg[y] * bilinear_form(symbols_[x], symbols_[y], cd_);
  }
  GradedMonomial r;
  r.neg.resize(n);
  r.pos.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.neg[i] = a.neg[i] + b.neg[i];
    r.pos[i] = a.pos[i] + b.pos[i];
  }
  r.coeff = (a.coeff * b.coeff).shifted(e);
  return r;
}

DegreeTuple GradedModel::leading_degree(const std::vector<GradedMonomial>& x) const {
  DegreeTuple best;
  bool first = true;
  for (auto& m : x) {
    if (m.coeff.is_zero()) continue;
    DegreeTuple d = degree(m);
    if (first || best < d) best = d;
    first = false;
  }
  return best;
}

}  // namespace qverma
