#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "qkchev/alcove.hpp"

using namespace qkchev;

namespace {
const GroupDescriptor A2{Family::A, 2};
const GroupDescriptor A3{Family::A, 3};
const GroupDescriptor C2{Family::C, 2};

WeylElement el(const GroupDescriptor& d, std::vector<int> win) {
  return WeylElement(d, std::move(win));
}

std::vector<PositiveRoot> roots_of(const LabeledChain& c) {
  std::vector<PositiveRoot> out;
  for (const auto& e : c.entries) out.push_back(e.root);
  return out;
}

std::set<std::vector<int>> index_sets(const std::vector<AdmissibleSubset>& v) {
  std::set<std::vector<int>> out;
  for (const auto& a : v) out.insert(a.indices);
  return out;
}
}  // namespace

TEST_CASE("row-ordered chain") {
  CHECK(roots_of(chain_typeA(4, 2)) ==
        std::vector<PositiveRoot>{minus_root(1, 4), minus_root(1, 3), minus_root(2, 4),
                                  minus_root(2, 3)});
  CHECK(roots_of(chain_typeA(2, 1)) == std::vector<PositiveRoot>{minus_root(1, 2)});
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(chain_typeA(n, k).size() == k * (n - k));
  CHECK_THROWS_AS(chain_typeA(4, 4), std::invalid_argument);
}

TEST_CASE("column-ordered chain") {
  CHECK(roots_of(chain_typeA_star(4, 2)) ==
        std::vector<PositiveRoot>{minus_root(1, 4), minus_root(2, 4), minus_root(1, 3),
                                  minus_root(2, 3)});
  CHECK(roots_of(chain_typeA_star(2, 1)) == roots_of(chain_typeA(2, 1)));
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      LabeledChain dual = omega_dual(chain_typeA(n, n - k));
      CHECK(roots_of(chain_typeA_star(n, k)) == roots_of(dual));
    }
}

TEST_CASE("type C chain instances") {
  LabeledChain c1 = chain_typeC(2, 1);
  CHECK(roots_of(c1) ==
        std::vector<PositiveRoot>{plus_root(1, 2), two_root(1), minus_root(1, 2)});
  CHECK(c1.split_index == 0);
  CHECK(c1.entries[0].level == 1);

  LabeledChain c2 = chain_typeC(2, 2);
  CHECK(roots_of(c2) == std::vector<PositiveRoot>{plus_root(1, 2), two_root(1),
                                                  plus_root(1, 2), two_root(2)});
  CHECK(c2.split_index == 1);
  std::vector<int> levels;
  for (const auto& e : c2.entries) levels.push_back(e.level);
  CHECK(levels == std::vector<int>{1, 1, 2, 1});
}

TEST_CASE("chain multiplicities match the weight pairings") {
  for (int n = 2; n <= 4; ++n) {
    GroupDescriptor d{Family::C, n};
    for (int k = 1; k <= n; ++k) {
      LabeledChain chain = chain_typeC(n, k);
      Weight fw(n, 0);
      for (int i = 0; i < k; ++i) fw[i] = 1;
      std::map<PositiveRoot, int> counts;
      std::map<PositiveRoot, int> last_level;
      for (const auto& e : chain.entries) {
        ++counts[e.root];
        CHECK(e.level == counts[e.root]);  // levels follow occurrence order
        last_level[e.root] = e.level;
      }
      for (const auto& b : positive_roots(d)) {
        int expect = pair_coroot(d, fw, b);
        CHECK(counts[b] == expect);
      }
    }
  }
  // Type A chains list each root at most once.
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (bool star : {false, true}) {
        LabeledChain chain = make_chain({Family::A, n}, k, star);
        std::set<PositiveRoot> seen;
        for (const auto& e : chain.entries) {
          CHECK(e.level == 1);
          CHECK(seen.insert(e.root).second);
        }
      }
}

TEST_CASE("admissible subsets from the identity") {
  for (const auto& d : {A3, C2}) {
    for (int k = 1; k <= d.rank(); ++k) {
      LabeledChain chain = make_chain(d, k);
      auto subs = enumerate_admissible(WeylElement::identity(d), chain);
      REQUIRE(subs.size() == 2);
      CHECK(subs[0].indices.empty());
      CHECK(subs[1].card() == 1);
      CHECK(chain.entries[subs[1].indices[0]].root == simple_root(d, k));
      CHECK(subs[1].kinds[0] == EdgeKind::Bruhat);
    }
  }
}

TEST_CASE("admissible subsets: quantum step from the descent") {
  LabeledChain chain = chain_typeA(2, 1);
  auto subs = enumerate_admissible(el(A2, {2, 1}), chain);
  REQUIRE(subs.size() == 2);
  CHECK(subs[1].quantum_indices() == std::vector<int>{0});

  LabeledChain c32 = chain_typeA(3, 2);
  auto s231 = enumerate_admissible(el(A3, {2, 3, 1}), c32);
  CHECK(index_sets(s231) ==
        std::set<std::vector<int>>{{}, {1}});  // the (1,3) step straddles
}

TEST_CASE("enumeration is lexicographic and prefix-closed") {
  for (const auto& d : {GroupDescriptor{Family::A, 4}, C2}) {
    for (int k = 1; k <= d.rank(); ++k) {
      LabeledChain chain = make_chain(d, k);
      for (const auto& w : enumerate_group(d)) {
        auto subs = enumerate_admissible(w, chain);
        auto sets = index_sets(subs);
        CHECK(sets.size() == subs.size());
        for (size_t i = 1; i < subs.size(); ++i)
          CHECK(subs[i - 1].indices < subs[i].indices);
        for (const auto& a : subs)
          for (int cut = 0; cut < a.card(); ++cut) {
            std::vector<int> prefix(a.indices.begin(), a.indices.begin() + cut);
            CHECK(sets.count(prefix));
          }
      }
    }
  }
}

TEST_CASE("bruhat-only filter matches a filtered full enumeration") {
  for (int k = 1; k <= C2.rank(); ++k) {
    LabeledChain chain = make_chain(C2, k);
    for (const auto& w : enumerate_group(C2)) {
      auto full = enumerate_admissible(w, chain);
      auto only = enumerate_admissible(w, chain, StepFilter::BruhatOnly);
      std::set<std::vector<int>> expect;
      for (const auto& a : full)
        if (a.bruhat_only()) expect.insert(a.indices);
      CHECK(index_sets(only) == expect);
    }
  }
}

TEST_CASE("down statistic") {
  LabeledChain chain = chain_typeC(2, 1);
  WeylElement w = el(C2, {-1, 2});
  auto subs = enumerate_admissible(w, chain);
  for (const auto& a : subs) {
    if (a.indices.empty()) CHECK(down_statistic(chain, a) == CorootVector{0, 0});
    if (a.indices == std::vector<int>{1})  // the sign flip at position 1
      CHECK(down_statistic(chain, a) == CorootVector{1, 1});
    if (a.indices == std::vector<int>{2})
      CHECK(down_statistic(chain, a) == CorootVector{1, 0});
  }
  // Long quantum step of a two-step chain carries the interval coroot.
  GroupDescriptor A4{Family::A, 4};
  LabeledChain g1 = chain_typeA(4, 1);
  WeylElement v = el(A4, {4, 2, 3, 1});
  for (const auto& a : enumerate_admissible(v, g1))
    if (a.indices == std::vector<int>{0})  // (1,4) from 4231-like window
      CHECK(down_statistic(g1, a) == CorootVector{1, 1, 1});
}

TEST_CASE("wt statistic") {
  // Empty subsets give the negated translated weight.
  for (const auto& d : {A3, C2})
    for (int k = 1; k <= d.rank(); ++k) {
      LabeledChain chain = make_chain(d, k);
      for (const auto& w : enumerate_group(d)) {
        AdmissibleSubset empty;
        empty.path.push_back(w);
        Weight expect = act_on_weight(w, fundamental_weight(d, k));
        for (int& c : expect) c = -c;
        CHECK(wt_statistic(w, chain, empty) == canonical_weight(d, expect));
      }
    }
  // Worked instance: the level-one plus root sends the weight to zero.
  LabeledChain c22 = chain_typeC(2, 2);
  WeylElement w = el(C2, {1, -2});
  auto a = make_admissible(w, c22, {0});
  REQUIRE(a.has_value());
  CHECK(wt_statistic(w, c22, *a) == Weight{0, 0});
}

TEST_CASE("type A wt is constant across admissible subsets") {
  for (int n = 2; n <= 4; ++n) {
    GroupDescriptor d{Family::A, n};
    for (int k = 1; k < n; ++k)
      for (bool star : {false, true}) {
        LabeledChain chain = make_chain(d, k, star);
        for (const auto& w : enumerate_group(d)) {
          Weight expect = act_on_weight(w, fundamental_weight(d, k));
          for (int& c : expect) c = -c;
          expect = canonical_weight(d, expect);
          for (const auto& a : enumerate_admissible(w, chain))
            CHECK(wt_statistic(w, chain, a) == expect);
        }
      }
  }
}

TEST_CASE("type C wt ignores the trailing segment under the pinned order") {
  for (int k = 1; k <= 2; ++k) {
    LabeledChain chain = chain_typeC(2, k);
    for (const auto& w : enumerate_group(C2))
      for (const auto& a : enumerate_admissible(w, chain)) {
        auto prefix = make_admissible(w, chain, split_typeC(chain, a).first);
        REQUIRE(prefix.has_value());
        CHECK(wt_statistic(w, chain, a) == wt_statistic(w, chain, *prefix));
      }
  }
  // The opposite composition order genuinely differs somewhere.
  bool differs = false;
  LabeledChain chain = chain_typeC(2, 2);
  for (const auto& w : enumerate_group(C2))
    for (const auto& a : enumerate_admissible(w, chain))
      if (!(wt_statistic(w, chain, a) ==
            wt_statistic(w, chain, a, WtOrder::FirstIndexInnermost)))
        differs = true;
  CHECK(differs);
}

TEST_CASE("splitting at the segment boundary") {
  LabeledChain c22 = chain_typeC(2, 2);
  WeylElement id = WeylElement::identity(C2);
  AdmissibleSubset empty;
  empty.path.push_back(id);
  auto [e1, e2] = split_typeC(c22, empty);
  CHECK(e1.empty());
  CHECK(e2.empty());

  auto a0 = make_admissible(el(C2, {1, -2}), c22, {0});
  REQUIRE(a0.has_value());
  CHECK(split_typeC(c22, *a0).first == std::vector<int>{0});
  CHECK(split_typeC(c22, *a0).second.empty());

  auto a13 = make_admissible(el(C2, {-1, 2}), c22, {1, 3});
  if (a13) {
    CHECK(split_typeC(c22, *a13).first.empty());
    CHECK(split_typeC(c22, *a13).second == std::vector<int>{1, 3});
  }
  CHECK_THROWS_AS(split_typeC(chain_typeA(3, 1), empty), std::invalid_argument);
}

TEST_CASE("one selected cover per display row and column for minimal reps") {
  for (int n = 3; n <= 5; ++n) {
    GroupDescriptor d{Family::A, n};
    for (int k = 1; k < n; ++k) {
      LabeledChain chain = chain_typeA(n, k);
      ParabolicSubset J = ParabolicSubset::full_minus(d, {k});
      for (const auto& w : enumerate_min_reps(d, J))
        for (const auto& a : enumerate_admissible(w, chain)) {
          std::set<int> rows, cols;
          for (size_t t = 0; t < a.indices.size(); ++t) {
            if (a.kinds[t] != EdgeKind::Bruhat) continue;
            const PositiveRoot& r = chain.entries[a.indices[t]].root;
            CHECK(rows.insert(r.i).second);
            CHECK(cols.insert(r.j).second);
          }
        }
    }
  }
}

TEST_CASE("chain and subset text forms") {
  LabeledChain c = chain_typeC(2, 2);
  std::string text = c.str();
  CHECK(text.find("(1,-2)\t1\tG'2") != std::string::npos);
  CHECK(text.find("(1,-2)\t2\tG2") != std::string::npos);
  WeylElement w = el(C2, {1, -2});
  auto a = make_admissible(w, c, {0});
  REQUIRE(a.has_value());
  std::string json = admissible_to_json(w, c, *a);
  CHECK(json.find("\"indices\": [1]") != std::string::npos);
  CHECK(json.find("\"wt\": [0,0]") != std::string::npos);
}
