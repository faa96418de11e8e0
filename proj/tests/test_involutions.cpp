#include <doctest.h>

#include <stdexcept>

#include <map>

#include "qkchev/involutions.hpp"

using namespace qkchev;

namespace {
const GroupDescriptor A4{Family::A, 4};
const GroupDescriptor A5{Family::A, 5};
const GroupDescriptor C2{Family::C, 2};
const GroupDescriptor C3{Family::C, 3};

WeylElement el(const GroupDescriptor& d, std::vector<int> win) {
  return WeylElement(d, std::move(win));
}
}  // namespace

TEST_CASE("type A pairings hold across small groups") {
  for (const auto& d : {GroupDescriptor{Family::A, 3}, A4}) {
    for (int k = 1; k <= d.rank(); ++k) {
      InvolutionContext ctx;
      ctx.k = k;
      for (const auto& w : enumerate_min_reps(d, grassmannian_parabolic(d, k))) {
        InvolutionScenario s = w(k) < d.n ? InvolutionScenario::TypeA_Case1
                               : w(k + 1) > 1 ? InvolutionScenario::TypeA_Case2
                                              : InvolutionScenario::TypeA_Case3;
        InvolutionReport rep = verify_involution(s, w, ctx);
        INFO(scenario_name(s), " w=", w.str(), " k=", k, ": ", rep.failure);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("type A scenario guards are enforced") {
  InvolutionContext ctx;
  ctx.k = 1;
  CHECK_THROWS_AS(
      verify_involution(InvolutionScenario::TypeA_Case1, el(A4, {4, 1, 2, 3}), ctx),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_involution(InvolutionScenario::TypeA_Case3, el(A4, {2, 1, 3, 4}), ctx),
      std::invalid_argument);
}

TEST_CASE("theta pairing counts the Bruhat-only subsets") {
  InvolutionContext ctx;
  ctx.k = 1;
  InvolutionReport rep =
      verify_involution(InvolutionScenario::TypeA_Case3, el(A4, {4, 1, 2, 3}), ctx);
  CHECK(rep.pass);
  CHECK(rep.singles > 0);
}

TEST_CASE("type C pairing engine on both small ranks") {
  for (const auto& d : {C2, C3}) {
    for (int k = 1; k <= d.rank(); ++k) {
      InvolutionContext ctx;
      ctx.k = k;
      for (const auto& w : enumerate_min_reps(d, grassmannian_parabolic(d, k)))
        for (auto s : {InvolutionScenario::TypeC_Case1, InvolutionScenario::TypeC_Case2,
                       InvolutionScenario::TypeC_Case3, InvolutionScenario::TypeC_Case4,
                       InvolutionScenario::TypeC_Case5}) {
          InvolutionReport rep = verify_involution(s, w, ctx);
          INFO(scenario_name(s), " w=", w.str(), " k=", k, ": ", rep.failure);
          CHECK(rep.pass);
        }
    }
  }
}

TEST_CASE("type C scenarios observe nontrivial pairings somewhere") {
  std::map<InvolutionScenario, long long> totals;
  for (int k = 1; k <= C3.rank(); ++k) {
    InvolutionContext ctx;
    ctx.k = k;
    for (const auto& w : enumerate_min_reps(C3, grassmannian_parabolic(C3, k)))
      for (auto s : {InvolutionScenario::TypeC_Case1, InvolutionScenario::TypeC_Case2,
                     InvolutionScenario::TypeC_Case3, InvolutionScenario::TypeC_Case4,
                     InvolutionScenario::TypeC_Case5}) {
        InvolutionReport rep = verify_involution(s, w, ctx);
        totals[s] += rep.pairs + rep.singles;
      }
  }
  for (const auto& [s, count] : totals) {
    INFO(scenario_name(s));
    CHECK(count > 0);
  }
}

TEST_CASE("two-step toggles across the n=4 quotients") {
  std::map<InvolutionScenario, long long> seen;
  for (int k1 = 1; k1 < 3; ++k1)
    for (int k2 = k1 + 1; k2 <= 3; ++k2) {
      InvolutionContext ctx;
      ctx.k1 = k1;
      ctx.k2 = k2;
      for (const auto& w : enumerate_min_reps(A4, twostep_parabolic(A4, k1, k2)))
        for (auto s : {InvolutionScenario::TwoStep_Iota_A1_left,
                       InvolutionScenario::TwoStep_Iota_A1_right,
                       InvolutionScenario::TwoStep_Iota_A23_tail,
                       InvolutionScenario::TwoStep_Iota_A2,
                       InvolutionScenario::TwoStep_Iota_A3,
                       InvolutionScenario::TwoStep_A2primeC,
                       InvolutionScenario::TwoStep_A3primeC,
                       InvolutionScenario::TwoStep_A23prime}) {
          try {
            InvolutionReport rep = verify_involution(s, w, ctx);
            INFO(scenario_name(s), " w=", w.str(), ": ", rep.failure);
            CHECK(rep.pass);
            seen[s] += 1;
          } catch (const std::invalid_argument&) {
          }
        }
    }
  CHECK(seen[InvolutionScenario::TwoStep_Iota_A1_left] > 0);
  CHECK(seen[InvolutionScenario::TwoStep_Iota_A1_right] > 0);
  CHECK(seen[InvolutionScenario::TwoStep_Iota_A23_tail] > 0);
  CHECK(seen[InvolutionScenario::TwoStep_Iota_A3] > 0);
  CHECK(seen[InvolutionScenario::TwoStep_A23prime] > 0);
}

TEST_CASE("the auxiliary-condition toggle needs one more letter") {
  // First window size admitting the leading-block witness.
  WeylElement w = el(A5, {1, 3, 5, 4, 2});
  InvolutionContext ctx;
  ctx.k1 = 3;
  ctx.k2 = 4;
  REQUIRE(condition_Q(w, 3, 4));
  REQUIRE(condition_QA(w, 3, 4));
  InvolutionReport rep =
      verify_involution(InvolutionScenario::TwoStep_Iota_A2, w, ctx);
  CHECK(rep.pass);
}

TEST_CASE("primed-family pairing instance") {
  WeylElement w = el(A4, {1, 4, 3, 2});
  InvolutionContext ctx;
  ctx.k1 = 2;
  ctx.k2 = 3;
  REQUIRE(condition_Q(w, 2, 3));
  REQUIRE_FALSE(condition_QA(w, 2, 3));
  for (auto s : {InvolutionScenario::TwoStep_A2primeC, InvolutionScenario::TwoStep_A3primeC,
                 InvolutionScenario::TwoStep_A23prime}) {
    InvolutionReport rep = verify_involution(s, w, ctx);
    INFO(scenario_name(s), ": ", rep.failure);
    CHECK(rep.pass);
  }
}

TEST_CASE("coset shortcut degenerate cycles") {
  GroupDescriptor A3{Family::A, 3};
  WeylElement w = el(A3, {3, 1, 2});
  ShortcutReport rep = coset_shortcut_check(w, 1, 2);
  CHECK(rep.pass);
  CHECK(rep.checked > 0);
  CHECK_THROWS_AS(coset_shortcut_check(WeylElement::identity(A3), 1, 2),
                  std::invalid_argument);
}

TEST_CASE("coset shortcut across the n=4 quotients") {
  for (int k1 = 1; k1 < 3; ++k1)
    for (int k2 = k1 + 1; k2 <= 3; ++k2)
      for (const auto& w : enumerate_min_reps(A4, twostep_parabolic(A4, k1, k2))) {
        try {
          ShortcutReport rep = coset_shortcut_check(w, k1, k2);
          INFO("w=", w.str(), " k1=", k1, " k2=", k2, ": ", rep.failure);
          CHECK(rep.pass);
        } catch (const std::invalid_argument&) {
        }
      }
}

TEST_CASE("partition classes and their gates") {
  for (int k1 = 1; k1 < 3; ++k1)
    for (int k2 = k1 + 1; k2 <= 3; ++k2) {
      LabeledChain chain = chain_typeA(4, k1);
      for (const auto& w : enumerate_min_reps(A4, twostep_parabolic(A4, k1, k2))) {
        std::string err = partition_bijection_errors(w, chain, k1, k2);
        INFO("w=", w.str(), " k1=", k1, " k2=", k2, ": ", err);
        CHECK(err.empty());
      }
    }
}

TEST_CASE("partition instance sizes") {
  LabeledChain chain = chain_typeA(4, 1);
  WeylElement w = el(A4, {4, 2, 3, 1});
  REQUIRE(is_min_coset_rep(w, twostep_parabolic(A4, 1, 3)));
  AdmissiblePartition part = partition_twostep(w, chain, 1, 3);
  CHECK(part.a_less.size() == 1);
  CHECK(part.a1.size() == 1);
  CHECK(part.a2.size() == 1);
  CHECK(part.a3.size() == 1);
}
