#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qverma/rootsys.hpp"

namespace qverma {

struct NotARoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PartitionSpec {
  const CartanData* cd = nullptr;
  std::vector<int> J;  // sorted subset of 1..N
  std::vector<std::vector<int>> finJ;  // positive roots of the subsystem generated by J

  bool in_J(int i) const;
  // alpha in +-finJ
  bool fin_in_subsystem(const std::vector<int>& fin) const;
  // root lies in Delta^J (real with finite part in the subsystem, or imaginary)
  bool in_DeltaJ(const Root& r) const;
  // lambda - mu in Q^J_+
  bool in_QJ_plus(const Root& gamma) const;
  std::string jstr() const;
};

PartitionSpec make_partition(const CartanData& cd, std::vector<int> J);
std::vector<int> parse_J(const std::string& text, const CartanData& cd);

enum class Block { A1, A2, A3, B1, B2, B3 };
struct BlockTag {
  Block block;
  bool fin;
  friend bool operator==(const BlockTag&, const BlockTag&) = default;
  std::string str() const;
};

bool in_SJ(const Root& r, const PartitionSpec& p);
BlockTag block_of(const Root& r, const PartitionSpec& p);
bool is_closed(const std::function<bool(const Root&)>& member, const CartanData& cd, int cutoff);

}  // namespace qverma
