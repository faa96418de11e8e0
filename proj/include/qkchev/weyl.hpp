#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qkchev {

enum class Family { A, C };

// Type A_{n-1} acts on windows over {1..n} (rank n-1); type C_n on signed
// windows over {1..n} (rank n). Barred letters are stored as negatives.
struct GroupDescriptor {
  Family family = Family::A;
  int n = 2;

  int rank() const { return family == Family::A ? n - 1 : n; }
  long long order() const;
  bool operator==(const GroupDescriptor&) const = default;
  std::string str() const;
};

// A permutation or signed permutation in window notation.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(GroupDescriptor d, std::vector<int> window);

  static WeylElement identity(const GroupDescriptor& d);

  const GroupDescriptor& group() const { return d_; }
  int n() const { return d_.n; }
  const std::vector<int>& window() const { return window_; }

  // Signed lookup: w(i) for 1 <= i <= n, and w(-i) = -w(i).
  int operator()(int i) const {
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
  }

  bool is_identity() const;
  std::string str() const;  // "3 -1 2"

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.d_ == b.d_ && a.window_ == b.window_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.window_ < b.window_;
  }

 private:
  GroupDescriptor d_;
  std::vector<int> window_;
};

enum class RootKind { EiMinusEj, EiPlusEj, TwoEi };

// Positive root of the ambient root system. EiMinusEj is (i,j), EiPlusEj is
// (i,jbar) printed "(i,-j)", TwoEi is (i,ibar) printed "(i,-i)".
struct PositiveRoot {
  RootKind kind = RootKind::EiMinusEj;
  int i = 1;
  int j = 2;  // equals i for TwoEi

  auto operator<=>(const PositiveRoot&) const = default;
  std::string str() const;
};

PositiveRoot minus_root(int i, int j);  // epsilon_i - epsilon_j, i < j
PositiveRoot plus_root(int i, int j);   // epsilon_i + epsilon_j, i < j
PositiveRoot two_root(int i);           // 2 epsilon_i

// Weights in epsilon coordinates (length n); coroot vectors over the simple
// coroots alpha_i^vee (length rank).
using Weight = std::vector<int>;
using CorootVector = std::vector<int>;

std::vector<PositiveRoot> positive_roots(const GroupDescriptor& d);
PositiveRoot simple_root(const GroupDescriptor& d, int i);
PositiveRoot highest_root(const GroupDescriptor& d);
bool root_valid(const GroupDescriptor& d, const PositiveRoot& beta);

int length(const WeylElement& w);
WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
WeylElement reflection_element(const GroupDescriptor& d, const PositiveRoot& beta);
WeylElement apply_reflection(const WeylElement& w, const PositiveRoot& beta);
WeylElement apply_simple(const WeylElement& w, int i);
// Right multiplication by the transposition of positions a and b (type A).
WeylElement apply_transposition(const WeylElement& w, int a, int b);

Weight canonical_weight(const GroupDescriptor& d, Weight mu);
Weight fundamental_weight(const GroupDescriptor& d, int k);
Weight rho_weight(const GroupDescriptor& d);
Weight act_on_weight(const WeylElement& w, const Weight& mu);
// <mu, beta^vee>
int pair_coroot(const GroupDescriptor& d, const Weight& mu, const PositiveRoot& beta);
CorootVector coroot_vector(const GroupDescriptor& d, const PositiveRoot& beta);

// Position of v in the total order 1 < 2 < ... < n < -n < ... < -1 on the
// signed alphabet (type C window comparisons).
int signed_order_key(int v, int n);

// Parabolic subset J of the index set, stored sorted. The supported quotient
// shapes are J = I\{k} (types A and C) and J = I\{k1,k2} (type A).
struct ParabolicSubset {
  std::vector<int> indices;

  static ParabolicSubset empty() { return {}; }
  static ParabolicSubset full_minus(const GroupDescriptor& d, std::vector<int> removed);
  std::vector<int> removed(const GroupDescriptor& d) const;
  bool operator==(const ParabolicSubset&) const = default;
  std::string str() const;
};

bool is_min_coset_rep(const WeylElement& w, const ParabolicSubset& J);
WeylElement min_coset_rep(const WeylElement& w, const ParabolicSubset& J);

// Diagram automorphism of type A_{n-1}: l -> n - l on the index set.
WeylElement omega_dual(const WeylElement& w);
PositiveRoot omega_dual_root(const GroupDescriptor& d, const PositiveRoot& beta);

bool bruhat_leq(const WeylElement& u, const WeylElement& v);

std::vector<WeylElement> enumerate_group(const GroupDescriptor& d);
std::vector<WeylElement> enumerate_min_reps(const GroupDescriptor& d,
                                            const ParabolicSubset& J);

WeylElement parse_window(const GroupDescriptor& d, const std::string& text);

}  // namespace qkchev
