#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qverma/qcoeff.hpp"

namespace qverma {

// Incremental Gaussian elimination over Q(q) on sparse vectors. Columns are added one at a time;
// each kept column is reduced against the earlier pivots and remembers how it was formed.
template <class Key>
class SparseSolver {
 public:
  using Vec = std::map<Key, QRat>;
  using Combo = std::map<int, QRat>;

  // Adds column number columns(). Returns nullopt if it is independent of the earlier ones,
  // otherwise a relation sum c_j col_j = 0 with c = 1 on the new column (the column is dropped).
  std::optional<Combo> add_column(Vec v) {
    int id = ncols_++;
    Combo combo{{id, QRat(1)}};
    reduce(v, combo);
    if (v.empty()) return combo;
    // pivot on the entry with the shortest coefficient, keeps fill-in small
    auto size = [](const QRat& c) { return c.num().span() + c.den().span(); };
    auto best = v.begin();
    for (auto it = v.begin(); it != v.end(); ++it)
      if (size(it->second) < size(best->second)) best = it;
    piv_.push_back({best->first, std::move(v), std::move(combo)});
    return std::nullopt;
  }

  int columns() const { return ncols_; }
  int rank() const { return static_cast<int>(piv_.size()); }

  // coefficients c with sum c_j col_j = v over the kept columns, or nullopt if v is outside
  std::optional<Combo> solve(Vec v) const {
    Combo combo;
    reduce(v, combo);
    if (!v.empty()) return std::nullopt;
    Combo out;
    for (auto& [j, c] : combo)
      if (!c.is_zero()) out[j] = -c;
    return out;
  }

 private:
  struct Pivot {
    Key key;
    Vec v;
    Combo combo;
  };

  static void axpy(Vec& v, const QRat& f, const Vec& w) {
    for (auto& [k, c] : w) {
      auto it = v.find(k);
      if (it == v.end()) {
        v.emplace(k, -(f * c));
      } else {
        it->second -= f * c;
        if (it->second.is_zero()) v.erase(it);
      }
    }
  }
  static void axpy(Combo& v, const QRat& f, const Combo& w) {
    for (auto& [k, c] : w) {
      QRat& x = v[k];
      x -= f * c;
    }
  }

  // v -= sum f_k pivot_k, combo tracks the same combination
  void reduce(Vec& v, Combo& combo) const {
    for (const Pivot& p : piv_) {
      auto it = v.find(p.key);
      if (it == v.end()) continue;
      QRat f = it->second / p.v.at(p.key);
      axpy(v, f, p.v);
      axpy(combo, f, p.combo);
    }
  }

  std::vector<Pivot> piv_;
  int ncols_ = 0;
};

}  // namespace qverma
