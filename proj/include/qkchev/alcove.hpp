#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkchev/qbg.hpp"
#include "qkchev/weyl.hpp"

namespace qkchev {

struct ChainEntry {
  PositiveRoot root;
  int level = 1;  // occurrence count of this root among entries up to here
  std::string segment;
};

// A chain of positive roots with affine levels for the weight -w_k (all roots
// recorded negated, hence positive). split_index separates the leading
// segment from the rest in type C; it is 0 in type A.
struct LabeledChain {
  GroupDescriptor d;
  int k = 1;
  bool star = false;
  int split_index = 0;
  std::vector<ChainEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  // Index of the occurrence of root at the given level; -1 if absent.
  int find(const PositiveRoot& root, int level = 1) const;
  std::string str() const;  // one entry per line: "idx root level segment"
};

LabeledChain chain_typeA(int n, int k);
LabeledChain chain_typeA_star(int n, int k);
LabeledChain chain_typeC(int n, int k);
LabeledChain make_chain(const GroupDescriptor& d, int k, bool star = false);
LabeledChain omega_dual(const LabeledChain& chain);

// An index subset of a chain whose induced reflection sequence is a directed
// walk in the quantum Bruhat graph; path[t] is the element after t steps.
struct AdmissibleSubset {
  std::vector<int> indices;  // strictly increasing, 0-based into the chain
  std::vector<EdgeKind> kinds;
  std::vector<WeylElement> path;

  const WeylElement& start() const { return path.front(); }
  const WeylElement& end() const { return path.back(); }
  int card() const { return static_cast<int>(indices.size()); }
  int sign() const { return card() % 2 == 0 ? 1 : -1; }
  bool bruhat_only() const;
  bool contains(int idx) const;
  std::vector<int> quantum_indices() const;
};

enum class StepFilter { All, BruhatOnly };

// All admissible subsets in lexicographic order of index sets; includes the
// empty set. BruhatOnly restricts every step to Bruhat covers.
std::vector<AdmissibleSubset> enumerate_admissible(const WeylElement& w,
                                                   const LabeledChain& chain,
                                                   StepFilter filter = StepFilter::All);

// Replays one candidate index set; nullopt when some step is not an edge.
std::optional<AdmissibleSubset> make_admissible(const WeylElement& w,
                                                const LabeledChain& chain,
                                                const std::vector<int>& indices);

CorootVector down_statistic(const LabeledChain& chain, const AdmissibleSubset& a);

// Composition order of the affine reflections defining wt. The level rule and
// the default order below are pinned so that every type A hyperplane and
// every type C trailing-segment hyperplane contains w_k; the opposite order
// is kept selectable for audits.
enum class WtOrder { LastIndexInnermost, FirstIndexInnermost };

Weight wt_statistic(const WeylElement& w, const LabeledChain& chain,
                    const AdmissibleSubset& a,
                    WtOrder order = WtOrder::LastIndexInnermost);

// Splits the index set at the chain's split_index (type C only).
std::pair<std::vector<int>, std::vector<int>> split_typeC(const LabeledChain& chain,
                                                          const AdmissibleSubset& a);

// Replays only the indices below the chain's split_index.
WeylElement end_of_first_segment(const WeylElement& w, const LabeledChain& chain,
                                 const AdmissibleSubset& a);

std::string admissible_to_json(const WeylElement& w, const LabeledChain& chain,
                               const AdmissibleSubset& a);

}  // namespace qkchev
