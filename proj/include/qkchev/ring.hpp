#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkchev/bigint.hpp"
#include "qkchev/weyl.hpp"

namespace qkchev {

// Element of the group algebra of the weight lattice: a finite sum of
// c * e^mu with exact integer c. Keys are kept canonical per family and zero
// coefficients are never stored.
class WeightLaurent {
 public:
  WeightLaurent() = default;

  static WeightLaurent unit(const GroupDescriptor& d);
  static WeightLaurent monomial(const GroupDescriptor& d, Weight mu, BigInt c = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Weight, BigInt>& terms() const { return terms_; }

  void add_term(Weight mu, const BigInt& c);  // mu must already be canonical

  WeightLaurent operator-() const;
  friend WeightLaurent operator+(const WeightLaurent& a, const WeightLaurent& b);
  friend WeightLaurent operator*(const WeightLaurent& a, const WeightLaurent& b);
  WeightLaurent& operator+=(const WeightLaurent& o) { return *this = *this + o; }

  friend bool operator==(const WeightLaurent& a, const WeightLaurent& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // e.g. "e(1,0) - 2 e(0,1)"

 private:
  std::map<Weight, BigInt> terms_;
};

// Q^xi for xi a nonnegative coroot vector; dense exponents over the index set.
class NovikovMonomial {
 public:
  NovikovMonomial() = default;
  explicit NovikovMonomial(int rank) : exps_(rank, 0) {}
  explicit NovikovMonomial(std::vector<int> exps);

  static NovikovMonomial from_coroot(const CorootVector& xi);
  static NovikovMonomial variable(int rank, int i);  // Q_i

  const std::vector<int>& exps() const { return exps_; }
  bool trivial() const;
  NovikovMonomial times(const NovikovMonomial& o) const;
  // Keeps only the coordinates in `kept` (the projection [xi]^J).
  NovikovMonomial restricted(const std::vector<int>& kept) const;

  auto operator<=>(const NovikovMonomial&) const = default;
  std::string str() const;  // "Q1*Q3^2" or "1"

 private:
  std::vector<int> exps_;
};

// Finite Z[weight lattice]-combination of Schubert classes with Novikov
// monomials: (coset representative, Q^xi) -> WeightLaurent coefficient.
class SchubertCombo {
 public:
  SchubertCombo() = default;
  SchubertCombo(GroupDescriptor d, ParabolicSubset J) : d_(d), J_(std::move(J)) {}

  static SchubertCombo basis_class(const GroupDescriptor& d, const ParabolicSubset& J,
                                   const WeylElement& w);

  const GroupDescriptor& group() const { return d_; }
  const ParabolicSubset& parabolic() const { return J_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  struct Key {
    std::vector<int> window;
    std::vector<int> qexps;
    auto operator<=>(const Key&) const = default;
  };

  const std::map<Key, WeightLaurent>& terms() const { return terms_; }

  void add(const WeylElement& w, const NovikovMonomial& q, const WeightLaurent& c);

  friend SchubertCombo operator+(const SchubertCombo& a, const SchubertCombo& b);
  SchubertCombo& operator+=(const SchubertCombo& o) { return *this = *this + o; }
  SchubertCombo operator-() const;

  // Multiplies every coefficient by c and shifts Novikov exponents by q.
  SchubertCombo scaled(const WeightLaurent& c, const NovikovMonomial& q) const;

  friend bool operator==(const SchubertCombo& a, const SchubertCombo& b);

  std::string pretty() const;
  std::string to_json() const;
  std::string to_tsv() const;

 private:
  GroupDescriptor d_;
  ParabolicSubset J_;
  std::map<Key, WeightLaurent> terms_;
};

// The module surjection onto the parabolic quotient: coset representatives
// are minimized and Novikov exponents outside the removed indices dropped.
SchubertCombo project_phiJ(const SchubertCombo& a, const ParabolicSubset& J);

SchubertCombo combo_from_json(const GroupDescriptor& d, const std::string& text);

}  // namespace qkchev
