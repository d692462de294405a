#include "qverma/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qverma {

bool PartitionSpec::in_J(int i) const { return std::binary_search(J.begin(), J.end(), i); }

bool PartitionSpec::fin_in_subsystem(const std::vector<int>& fin) const {
  std::vector<int> neg(fin);
  for (auto& x : neg) x = -x;
  for (auto& r : finJ)
    if (r == fin || r == neg) return true;
  return false;
}

bool PartitionSpec::in_DeltaJ(const Root& r) const {
  if (r.fin_zero()) return r.n != 0;
  return fin_in_subsystem(r.fin);
}

bool PartitionSpec::in_QJ_plus(const Root& gamma) const {
  auto c = cd->coords(gamma);
  for (int x : c)
    if (x < 0) return false;
  for (int i = 1; i <= cd->N; ++i)
    if (!in_J(i) && gamma.fin[i - 1] != 0) return false;
  return true;
}

std::string PartitionSpec::jstr() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < J.size(); ++k) os << (k ? "," : "") << J[k];
  os << "}";
  return os.str();
}

PartitionSpec make_partition(const CartanData& cd, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J)
    if (j < 1 || j > cd.N) throw std::invalid_argument("J must be a subset of 1..N");
  PartitionSpec p;
  p.cd = &cd;
  p.J = J;
  // the finite roots supported on J form the subsystem generated by those simple roots
  for (const Root& a : cd.finitePositiveRoots) {
    bool ok = true;
    for (int i = 1; i <= cd.N; ++i)
      if (a.fin[i - 1] != 0 && !p.in_J(i)) ok = false;
    if (ok) p.finJ.push_back(a.fin);
  }
  return p;
}

std::vector<int> parse_J(const std::string& text, const CartanData& cd) {
  std::vector<int> J;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || item == "{}" ) continue;
    int j = std::stoi(item);
    if (j < 1 || j > cd.N) throw std::invalid_argument("J entry out of range: " + item);
    J.push_back(j);
  }
  return J;
}

std::string BlockTag::str() const {
  static const char* names[] = {"A1", "A2", "A3", "B1", "B2", "B3"};
  return std::string(names[static_cast<int>(block)]) + (fin ? "^fin" : "^inf");
}

bool in_SJ(const Root& r, const PartitionSpec& p) {
  RootClass c = classify(r, *p.cd);
  if (c == RootClass::NotRoot) throw NotARoot("NotARoot: " + r.str());
  if (c == RootClass::ImaginaryRoot) return r.n > 0;
  bool pos = p.cd->is_finite_positive(r.fin);
  if (p.fin_in_subsystem(r.fin)) return pos ? r.n >= 0 : r.n > 0;
  return pos;
}

BlockTag block_of(const Root& r, const PartitionSpec& p) {
  RootClass c = classify(r, *p.cd);
  if (c == RootClass::NotRoot) throw NotARoot("NotARoot: " + r.str());
  bool fin = p.in_DeltaJ(r);
  if (c == RootClass::ImaginaryRoot) return {r.n > 0 ? Block::A2 : Block::B2, true};
  bool pos = p.cd->is_finite_positive(r.fin);
  Block b;
  if (pos)
    b = r.n >= 0 ? Block::A1 : Block::B3;
  else
    b = r.n > 0 ? Block::A3 : Block::B1;
  return {b, fin};
}

bool is_closed(const std::function<bool(const Root&)>& member, const CartanData& cd, int cutoff) {
  auto roots = roots_up_to(cd, cutoff);
  std::vector<Root> S;
  std::set<Root> Sset;
  for (const Root& r : roots) {
    bool a = member(r), b = member(-r);
    if (a && b) throw NotAPartition("NotAPartition: both " + r.str() + " and its negative");
    if (!a && !b) throw NotAPartition("NotAPartition: neither " + r.str() + " nor its negative");
    if (a) {
      S.push_back(r);
      Sset.insert(r);
    }
  }
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i; j < S.size(); ++j) {
      Root s = S[i] + S[j];
      if (std::abs(s.n) > cutoff || classify(s, cd) == RootClass::NotRoot) continue;
      if (!Sset.count(s)) return false;
    }
  return true;
}

}  // namespace qverma
