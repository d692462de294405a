#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qverma {

// alpha + n*delta with alpha given over alpha_1..alpha_N
struct Root {
  std::vector<int> fin;
  int n = 0;

  Root() = default;
  Root(std::vector<int> f, int nn) : fin(std::move(f)), n(nn) {}

  bool is_zero() const;
  bool fin_zero() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  friend Root operator*(int k, const Root& r);
  Root& operator+=(const Root& o);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  std::string str() const;  // "a1+a2-3d"
};

struct RootHash {
  std::size_t operator()(const Root& r) const;
};

struct Weight {
  std::vector<int> h;  // lambda(h_0..h_N)
  int dval = 0;        // lambda(d)
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  std::string str() const;
};

enum class RootClass { RealRoot, ImaginaryRoot, NotRoot };

struct NotAffine : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CartanData {
  int N = 0;
  std::string tag;
  std::vector<std::vector<int>> A;  // a_ij = <alpha_j, h_i>
  std::vector<int> d;               // symmetrizers
  std::vector<int> dualLabels;      // c = sum dualLabels[i] h_i
  std::vector<int> marks;           // delta = sum marks[i] alpha_i
  std::vector<Root> finitePositiveRoots;
  Root theta;

  int rank() const { return N + 1; }
  Root simple(int i) const;
  Root delta(int k = 1) const;
  // coefficients over alpha_0..alpha_N
  std::vector<int> coords(const Root& r) const;
  Root from_coords(const std::vector<int>& c) const;
  // <r, h_i>
  int pairing(const Root& r, int i) const;
  bool is_finite_root(const std::vector<int>& fin) const;
  bool is_finite_positive(const std::vector<int>& fin) const;
  int level(const Weight& w) const;
  // lambda - gamma as a weight
  Weight shift(const Weight& lambda, const Root& gamma) const;
  // q-exponent of K_i on a vector of weight lambda is d_i * lambda(h_i)
  int qi(int i) const { return d[i]; }
};

CartanData build_cartan(const std::string& tag);
CartanData build_cartan_matrix(const std::vector<std::vector<int>>& A,
                               const std::string& tag = "custom");
// whitespace separated integer rows, one row per line
CartanData load_cartan_file(const std::string& path);

int bilinear_form(const Root& a, const Root& b, const CartanData& cd);
RootClass classify(const Root& r, const CartanData& cd);
int height(const Root& r, const CartanData& cd);
int finite_height(const std::vector<int>& fin);
Root simple_reflection(int i, const Root& r, const CartanData& cd);

// All roots alpha + n delta (and k delta) with |n| <= cutoff, deterministic order.
std::vector<Root> roots_up_to(const CartanData& cd, int cutoff);

Weight parse_weight(const std::string& text, const CartanData& cd);

}  // namespace qverma
