#include "qverma/beckorder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qverma {

namespace {

bool in_A1(const Root& r, const CartanData& cd) { return r.n >= 0 && cd.is_finite_positive(r.fin); }

bool in_A3(const Root& r, const CartanData& cd) {
  return r.n > 0 && !r.fin_zero() && cd.is_finite_positive((-r).fin);
}

// r_{w[0]} r_{w[1]} ... r_{w[m-1]} (x)
Root apply_word(const std::vector<int>& w, Root x, const CartanData& cd) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = simple_reflection(*it, x, cd);
  return x;
}

// Depth-first search for a word whose successive roots are distinct and all lie in `allowed`.
// Children are tried by smallest delta-coefficient first. When `allowed` is the inversion set
// of a translation the search cannot get stuck, so the backtracking is only a safety net.
bool extend(std::vector<int>& word, std::set<Root>& seen, const std::set<Root>& allowed,
            const CartanData& cd, long& budget) {
  if (seen.size() == allowed.size()) return true;
  if (--budget < 0) return false;
  std::vector<std::pair<std::pair<int, int>, Root>> cands;
  for (int i = 0; i <= cd.N; ++i) {
    Root b = apply_word(word, cd.simple(i), cd);
    if (allowed.count(b) && !seen.count(b)) cands.push_back({{b.n, i}, b});
  }
  std::sort(cands.begin(), cands.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, b] : cands) {
    word.push_back(key.second);
    seen.insert(b);
    if (extend(word, seen, allowed, cd, budget)) return true;
    seen.erase(b);
    word.pop_back();
  }
  return false;
}

// One period of pi on either side: a reduced word for the translation by m*rho-check, whose
// inversion set is {alpha + n delta, 0 <= n < m ht(alpha)} (A1 side) or
// {-alpha + n delta, 1 <= n <= m ht(alpha)} (A3 side). m = 1 works when rho-check lies in
// the coroot lattice; m = 2 always does.
std::vector<int> period_word(const CartanData& cd, bool a1side) {
  for (int m = 1; m <= 2; ++m) {
    std::set<Root> allowed;
    for (const Root& a : cd.finitePositiveRoots) {
      int h = m * finite_height(a.fin);
      for (int n = 0; n < h; ++n) allowed.insert(a1side ? Root(a.fin, n) : Root((-a).fin, n + 1));
    }
    std::vector<int> word;
    std::set<Root> seen;
    long budget = 200000;
    if (!extend(word, seen, allowed, cd, budget)) continue;
    bool translation = true;
    for (int j = 1; j <= cd.N; ++j)
      if (apply_word(word, cd.simple(j), cd).fin != cd.simple(j).fin) translation = false;
    if (translation) return word;
  }
  throw SearchExhausted("SearchExhausted: no translation word found for " + cd.tag);
}

}  // namespace

const Root& BeckOrdering::beta(int k) const {
  auto it = betas.find(k);
  if (it == betas.end()) throw OutOfWindow("OutOfWindow: beta index " + std::to_string(k));
  return it->second;
}

int BeckOrdering::index_of(const Root& r) const {
  auto it = index.find(r);
  if (it == index.end()) throw OutOfWindow("OutOfWindow: root " + r.str() + " not in window");
  return it->second;
}

std::string BeckOrdering::pi_str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, i] : pi) {
    os << (first ? "" : " ") << k << ":" << i;
    first = false;
  }
  return os.str();
}

const Root& beta(const BeckOrdering& ord, int k) { return ord.beta(k); }

BeckOrdering ordering_from_pi(const CartanData& cd, const std::map<int, int>& pi) {
  BeckOrdering ord;
  ord.cd = &cd;
  ord.pi = pi;
  int lo = 0, hi = 0;
  for (auto& [k, i] : pi) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  ord.window = std::min(-lo, hi);
  std::vector<int> w;
  for (int k = 0; k >= lo && pi.count(k); --k) {
    Root b = apply_word(w, cd.simple(pi.at(k)), cd);
    ord.betas[k] = b;
    w.push_back(pi.at(k));
  }
  w.clear();
  for (int k = 1; k <= hi && pi.count(k); ++k) {
    Root b = apply_word(w, cd.simple(pi.at(k)), cd);
    ord.betas[k] = b;
    w.push_back(pi.at(k));
  }
  for (auto& [k, b] : ord.betas) ord.index.emplace(b, k);
  return ord;
}

BeckOrdering find_pi(const CartanData& cd, int window) {
  if (window <= 0 || window > 256) throw std::invalid_argument("window must be in 1..256");
  std::map<int, int> pi;
  std::vector<int> w1 = period_word(cd, true), w3 = period_word(cd, false);
  for (int m = 0; m <= window; ++m) pi[-m] = w1[m % w1.size()];
  for (int m = 1; m <= window; ++m) pi[m] = w3[(m - 1) % w3.size()];
  BeckOrdering ord = ordering_from_pi(cd, pi);
  ord.window = window;
  BlockReport rep = validate_blocks(ord);
  if (!rep.ok) throw SearchExhausted("SearchExhausted: " + rep.failures.front());
  return ord;
}

namespace {

// rank of the block in the chain B1 < B2 < B3 < A3 < A2 < A1
int block_rank(const Root& r, const CartanData& cd) {
  if (r.fin_zero()) return r.n > 0 ? 4 : 1;
  bool pos = cd.is_finite_positive(r.fin);
  if (pos) return r.n >= 0 ? 5 : 2;
  return r.n > 0 ? 3 : 0;
}

}  // namespace

Cmp compare(const BeckOrdering& ord, const Root& a, const Root& b) {
  const CartanData& cd = *ord.cd;
  if (classify(a, cd) == RootClass::NotRoot || classify(b, cd) == RootClass::NotRoot)
    throw std::invalid_argument("compare: argument is not a root");
  int ra = block_rank(a, cd), rb = block_rank(b, cd);
  if (ra != rb) return ra < rb ? Cmp::Less : Cmp::Greater;
  if (a == b) return Cmp::Equal;
  if (ra <= 2) {
    // -x < -y iff y > x
    return compare(ord, -b, -a);
  }
  if (ra == 4) {
    if (a.n == b.n) return Cmp::Equal;
    return a.n < b.n ? Cmp::Greater : Cmp::Less;  // delta > 2 delta > ...
  }
  // beta_0 > beta_-1 > ... and ... > beta_2 > beta_1: larger index is larger on both sides
  int ka = ord.index_of(a), kb = ord.index_of(b);
  return ka < kb ? Cmp::Less : Cmp::Greater;
}

BlockReport validate_blocks(const BeckOrdering& ord) {
  const CartanData& cd = *ord.cd;
  BlockReport rep;
  std::map<Root, int> seen;
  for (auto& [k, b] : ord.betas) {
    if (classify(b, cd) != RootClass::RealRoot || height(b, cd) <= 0) {
      rep.ok = false;
      rep.failures.push_back("beta_" + std::to_string(k) + " = " + b.str() +
                             " is not a positive real root");
    }
    bool ok = k <= 0 ? in_A1(b, cd) : in_A3(b, cd);
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back("beta_" + std::to_string(k) + " = " + b.str() + " in wrong block");
    }
    auto [it, fresh] = seen.emplace(b, k);
    if (!fresh) {
      rep.ok = false;
      rep.failures.push_back("duplicate root " + b.str() + " at beta_" + std::to_string(it->second) +
                             " and beta_" + std::to_string(k));
    }
  }
  // largest n such that both blocks are fully covered up to delta-coefficient n
  int n = 0;
  for (;; ++n) {
    bool full = true;
    for (const Root& a : cd.finitePositiveRoots) {
      if (!seen.count(Root(a.fin, n))) full = false;
      if (n > 0 && !seen.count(Root((-a).fin, n))) full = false;
    }
    if (!full) break;
  }
  rep.coveredDelta = n - 1;
  if (rep.coveredDelta < 0) {
    rep.ok = false;
    rep.failures.push_back("window does not cover the finite positive roots");
  }
  return rep;
}

}  // namespace qverma
