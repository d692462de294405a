#pragma once

#include <map>
#include <string>
#include <vector>

#include "qverma/partition.hpp"
#include "qverma/rootsys.hpp"

namespace qverma {

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfWindow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

enum class Cmp { Less, Equal, Greater };

struct BeckOrdering {
  const CartanData* cd = nullptr;
  int window = 0;
  std::map<int, int> pi;      // k in [-window, window] -> node
  std::map<int, Root> betas;  // k in [-window, window] (k = 0 included)
  std::map<Root, int> index;  // inverse of betas

  const Root& beta(int k) const;
  // beta-index of a positive real root, or throws OutOfWindow
  int index_of(const Root& r) const;
  bool has(const Root& r) const { return index.count(r) > 0; }
  std::string pi_str() const;
};

BeckOrdering find_pi(const CartanData& cd, int window);
// Builds an ordering from an explicit pi (used for validation tests).
BeckOrdering ordering_from_pi(const CartanData& cd, const std::map<int, int>& pi);
const Root& beta(const BeckOrdering& ord, int k);
Cmp compare(const BeckOrdering& ord, const Root& a, const Root& b);

struct BlockReport {
  bool ok = true;
  std::vector<std::string> failures;
  int coveredDelta = 0;  // every positive real root with delta-coefficient <= this is present
};
BlockReport validate_blocks(const BeckOrdering& ord);

}  // namespace qverma
