#include <doctest.h>

#include <stdexcept>

#include "qkchev/chevalley.hpp"
#include "qkchev/ring.hpp"

using namespace qkchev;

namespace {
const GroupDescriptor A3{Family::A, 3};
const GroupDescriptor C2{Family::C, 2};

WeylElement el(const GroupDescriptor& d, std::vector<int> win) {
  return WeylElement(d, std::move(win));
}

SchubertCombo gb_class(const GroupDescriptor& d, std::vector<int> win) {
  return SchubertCombo::basis_class(d, ParabolicSubset::empty(), el(d, std::move(win)));
}
}  // namespace

TEST_CASE("weight laurent arithmetic") {
  WeightLaurent one = WeightLaurent::unit(A3);
  WeightLaurent x = WeightLaurent::monomial(A3, {1, 0, 0});
  CHECK((x + (-x)).is_zero());
  CHECK(x * one == x);
  WeightLaurent y = WeightLaurent::monomial(A3, {0, 1, 0}, 2);
  WeightLaurent prod = x * y;
  REQUIRE(prod.term_count() == 1);
  CHECK(prod.terms().begin()->first == canonical_weight(A3, {1, 1, 0}));
  CHECK(prod.terms().begin()->second == BigInt(2));
  // Type A keys live modulo the all-ones vector.
  CHECK(WeightLaurent::monomial(A3, {1, 1, 1}) == one);
  CHECK(WeightLaurent::monomial(C2, {1, 1}).terms().begin()->first == Weight{1, 1});
}

TEST_CASE("combo addition and pruning") {
  SchubertCombo a = gb_class(A3, {1, 2, 3});
  SchubertCombo zero(A3, ParabolicSubset::empty());
  CHECK(a + zero == a);
  CHECK((a + (-a)).is_zero());

  Weight fw = fundamental_weight(A3, 1);
  SchubertCombo left = a.scaled(WeightLaurent::monomial(A3, fw), NovikovMonomial(2));
  WeightLaurent mix = WeightLaurent::monomial(A3, fw, -1) + WeightLaurent::unit(A3);
  SchubertCombo right = a.scaled(mix, NovikovMonomial(2));
  SchubertCombo sum = left + right;
  REQUIRE(sum.term_count() == 1);
  CHECK(sum.terms().begin()->second == WeightLaurent::unit(A3));
}

TEST_CASE("scaling shifts Novikov exponents") {
  SchubertCombo a = gb_class(A3, {2, 1, 3});
  NovikovMonomial q1 = NovikovMonomial::variable(2, 1);
  SchubertCombo scaled = a.scaled(WeightLaurent::monomial(A3, {0, 1, 0}), q1);
  REQUIRE(scaled.term_count() == 1);
  CHECK(scaled.terms().begin()->first.qexps == std::vector<int>{1, 0});
  SchubertCombo twice =
      scaled.scaled(WeightLaurent::monomial(A3, {0, -1, 0}), q1);
  CHECK(twice.terms().begin()->first.qexps == std::vector<int>{2, 0});
  CHECK(twice.terms().begin()->second == WeightLaurent::unit(A3));
  CHECK(a.scaled(WeightLaurent::unit(A3), NovikovMonomial(2)) == a);
}

TEST_CASE("projection onto the quotient") {
  ParabolicSubset J = ParabolicSubset::full_minus(A3, {2});
  CHECK(project_phiJ(gb_class(A3, {2, 1, 3}), J) ==
        SchubertCombo::basis_class(A3, J, el(A3, {1, 2, 3})));

  // Novikov restriction keeps only the removed coordinate.
  SchubertCombo shifted = gb_class(A3, {1, 2, 3})
                              .scaled(WeightLaurent::unit(A3),
                                      NovikovMonomial(std::vector<int>{1, 1}));
  SchubertCombo projected = project_phiJ(shifted, J);
  CHECK(projected.terms().begin()->first.qexps == std::vector<int>{0, 1});

  // Cancellation under projection.
  Weight mu = {1, 0, 0};
  SchubertCombo diff =
      gb_class(A3, {2, 1, 3}).scaled(WeightLaurent::monomial(A3, mu), NovikovMonomial(2)) +
      (-gb_class(A3, {1, 2, 3}).scaled(WeightLaurent::monomial(A3, mu), NovikovMonomial(2)));
  CHECK_FALSE(diff.is_zero());
  CHECK(project_phiJ(diff, J).is_zero());
}

TEST_CASE("projection is linear and commutes with Novikov shifts") {
  ParabolicSubset J = ParabolicSubset::full_minus(A3, {1});
  std::vector<SchubertCombo> combos;
  for (const auto& w : enumerate_group(A3)) combos.push_back(gb_class(A3, w.window()));
  WeightLaurent c = WeightLaurent::monomial(A3, {2, 0, 0}, 3) +
                    WeightLaurent::monomial(A3, {0, 1, 0}, -1);
  for (size_t i = 0; i < combos.size(); ++i) {
    const SchubertCombo& a = combos[i];
    const SchubertCombo& b = combos[(i + 1) % combos.size()];
    SchubertCombo lhs = project_phiJ(a.scaled(c, NovikovMonomial(2)) + b, J);
    SchubertCombo rhs =
        project_phiJ(a, J).scaled(c, NovikovMonomial(2)) + project_phiJ(b, J);
    CHECK(lhs == rhs);
    NovikovMonomial xi(std::vector<int>{1, 2});
    CHECK(project_phiJ(a.scaled(WeightLaurent::unit(A3), xi), J) ==
          project_phiJ(a, J).scaled(WeightLaurent::unit(A3),
                                    xi.restricted(J.removed(A3))));
  }
}

TEST_CASE("combo equality is canonical") {
  SchubertCombo a = gb_class(A3, {1, 2, 3}).scaled(
      WeightLaurent::monomial(A3, {2, 1, 1}), NovikovMonomial(2));
  SchubertCombo b = gb_class(A3, {1, 2, 3}).scaled(
      WeightLaurent::monomial(A3, {1, 0, 0}), NovikovMonomial(2));
  CHECK(a == b);
  SchubertCombo c = gb_class(A3, {1, 2, 3}).scaled(
      WeightLaurent::monomial(A3, {1, 0, 0}), NovikovMonomial::variable(2, 1));
  CHECK_FALSE(a == c);
}

TEST_CASE("coset keys are validated") {
  ParabolicSubset J = ParabolicSubset::full_minus(A3, {2});
  SchubertCombo combo(A3, J);
  CHECK_THROWS_AS(combo.add(el(A3, {2, 1, 3}), NovikovMonomial(2),
                            WeightLaurent::unit(A3)),
                  std::invalid_argument);
  CHECK_NOTHROW(combo.add(el(A3, {1, 3, 2}), NovikovMonomial(2),
                          WeightLaurent::unit(A3)));
}

TEST_CASE("serialization round trips and stays deterministic") {
  WeylElement w = el(C2, {-1, 2});
  SchubertCombo combo = chevalley_grassmannian_C(w, 1);
  std::string one = combo.to_json();
  CHECK(one == combo.to_json());
  SchubertCombo back = combo_from_json(C2, one);
  CHECK(back == combo);
  CHECK(back.to_json() == one);
  CHECK(combo.to_tsv() == combo.to_tsv());
  CHECK_FALSE(combo.pretty().empty());
}
