// Probes beyond the default sweep bounds. Skipped in the normal run; enable
// with ./build/unit_tests --no-skip.

#include <doctest.h>

#include "qkchev/involutions.hpp"
#include "qkchev/verify.hpp"

using namespace qkchev;

TEST_CASE("edge oracle, one size up" * doctest::skip()) {
  for (const auto& d : {GroupDescriptor{Family::A, 7}, GroupDescriptor{Family::C, 4}}) {
    auto roots = positive_roots(d);
    for (const auto& w : enumerate_group(d))
      for (const auto& b : roots)
        CHECK(edge_kind_criterion(w, b) == edge_kind_definitional(w, b));
  }
}

TEST_CASE("type A Grassmannian differential sweep at n=6" * doctest::skip()) {
  GroupDescriptor d{Family::A, 6};
  for (int k = 1; k <= d.rank(); ++k) {
    ParabolicSubset J = grassmannian_parabolic(d, k);
    for (const auto& w : enumerate_min_reps(d, J)) {
      std::vector<RawTerm> raw;
      CHECK(chevalley_grassmannian_A(w, k, &raw) ==
            project_phiJ(chevalley_GB(w, k), J));
      CHECK_FALSE(mixed_sign_group(raw).has_value());
    }
  }
}

TEST_CASE("two-step differential sweep at n=6" * doctest::skip()) {
  GroupDescriptor d{Family::A, 6};
  for (int k1 = 1; k1 < d.rank(); ++k1)
    for (int k2 = k1 + 1; k2 <= d.rank(); ++k2) {
      ParabolicSubset J = twostep_parabolic(d, k1, k2);
      for (const auto& w : enumerate_min_reps(d, J))
        for (int target : {k1, k2})
          CHECK(chevalley_twostep(w, k1, k2, target) ==
                project_phiJ(chevalley_GB(w, target), J));
    }
}

TEST_CASE("type C pairing engine at n=4" * doctest::skip()) {
  GroupDescriptor d{Family::C, 4};
  for (int k = 1; k <= d.rank(); ++k) {
    InvolutionContext ctx;
    ctx.k = k;
    for (const auto& w : enumerate_min_reps(d, grassmannian_parabolic(d, k))) {
      InvolutionReport rep =
          verify_involution(InvolutionScenario::TypeC_Case5, w, ctx);
      INFO("w=", w.str(), " k=", k, ": ", rep.failure);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("two-step pairings and shortcuts at n=5 rerun threaded" * doctest::skip()) {
  SweepReport rep = run_suite("involutions", 5, 4);
  CHECK(rep.ok());
}

TEST_CASE("mirror identity one size up" * doctest::skip()) {
  CHECK(mirror_errors(7, 5).empty());
}

TEST_CASE("wt pinning one size up" * doctest::skip()) {
  CHECK(wt_pinning_errors(6, 4).empty());
}

TEST_CASE("operators commute at n=5" * doctest::skip()) {
  GroupDescriptor d{Family::A, 5};
  for (const auto& w : enumerate_group(d)) {
    SchubertCombo base = SchubertCombo::basis_class(d, ParabolicSubset::empty(), w);
    for (int k1 = 1; k1 <= d.rank(); ++k1)
      for (int k2 = k1 + 1; k2 <= d.rank(); ++k2)
        CHECK(apply_chevalley_operator(apply_chevalley_operator(base, k1), k2) ==
              apply_chevalley_operator(apply_chevalley_operator(base, k2), k1));
  }
}

TEST_CASE("parity one size up" * doctest::skip()) {
  SweepReport a = run_suite("parity", 5, 1);
  CHECK(a.ok());
}

TEST_CASE("full-flag chain independence at n=5" * doctest::skip()) {
  CHECK(gb_chain_independence_errors(5).empty());
}
