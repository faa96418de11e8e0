#include "qkchev/alcove.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkchev {

int LabeledChain::find(const PositiveRoot& root, int level) const {
  for (int t = 0; t < size(); ++t)
    if (entries[t].root == root && entries[t].level == level) return t;
  return -1;
}

std::string LabeledChain::str() const {
  std::ostringstream out;
  for (int t = 0; t < size(); ++t) {
    out << (t + 1) << '\t' << entries[t].root.str() << '\t' << entries[t].level
        << '\t' << entries[t].segment << '\n';
  }
  return out.str();
}

namespace {

void push_entry(LabeledChain& chain, std::map<PositiveRoot, int>& seen,
                const PositiveRoot& root, const std::string& segment) {
  chain.entries.push_back({root, ++seen[root], segment});
}

void check_k(int n, int k, int rank) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (k < 1 || k > rank) throw std::invalid_argument("k out of range");
}

}  // namespace

LabeledChain chain_typeA(int n, int k) {
  check_k(n, k, n - 1);
  LabeledChain chain{{Family::A, n}, k, false, 0, {}};
  std::map<PositiveRoot, int> seen;
  for (int i = 1; i <= k; ++i)
    for (int j = n; j >= k + 1; --j)
      push_entry(chain, seen, minus_root(i, j), "R" + std::to_string(i));
  return chain;
}

LabeledChain chain_typeA_star(int n, int k) {
  check_k(n, k, n - 1);
  LabeledChain chain{{Family::A, n}, k, true, 0, {}};
  std::map<PositiveRoot, int> seen;
  for (int j = n; j >= k + 1; --j)
    for (int i = 1; i <= k; ++i)
      push_entry(chain, seen, minus_root(i, j), "C" + std::to_string(j));
  return chain;
}

LabeledChain chain_typeC(int n, int k) {
  check_k(n, k, n);
  LabeledChain chain{{Family::C, n}, k, false, 0, {}};
  std::map<PositiveRoot, int> seen;
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i)
      push_entry(chain, seen, plus_root(i, j), "G'" + std::to_string(j));
  chain.split_index = chain.size();
  for (int j = 1; j <= k; ++j) {
    std::string seg = "G" + std::to_string(j);
    for (int i = 1; i < j; ++i) push_entry(chain, seen, plus_root(i, j), seg);
    for (int m = k + 1; m <= n; ++m) push_entry(chain, seen, plus_root(j, m), seg);
    push_entry(chain, seen, two_root(j), seg);
    for (int m = n; m >= k + 1; --m) push_entry(chain, seen, minus_root(j, m), seg);
  }
  return chain;
}

LabeledChain make_chain(const GroupDescriptor& d, int k, bool star) {
  if (d.family == Family::C) {
    if (star) throw std::invalid_argument("star chain: type A only");
    return chain_typeC(d.n, k);
  }
  return star ? chain_typeA_star(d.n, k) : chain_typeA(d.n, k);
}

LabeledChain omega_dual(const LabeledChain& chain) {
  if (chain.d.family != Family::A)
    throw std::invalid_argument("omega_dual: type A only");
  LabeledChain out{chain.d, chain.d.n - chain.k, !chain.star, 0, {}};
  out.entries = chain.entries;
  for (auto& e : out.entries) e.root = omega_dual_root(chain.d, e.root);
  return out;
}

bool AdmissibleSubset::bruhat_only() const {
  return std::all_of(kinds.begin(), kinds.end(),
                     [](EdgeKind k) { return k == EdgeKind::Bruhat; });
}

bool AdmissibleSubset::contains(int idx) const {
  return std::binary_search(indices.begin(), indices.end(), idx);
}

std::vector<int> AdmissibleSubset::quantum_indices() const {
  std::vector<int> out;
  for (size_t t = 0; t < indices.size(); ++t)
    if (kinds[t] == EdgeKind::Quantum) out.push_back(indices[t]);
  return out;
}

namespace {

void enumerate_rec(const LabeledChain& chain, StepFilter filter,
                   AdmissibleSubset& cur, int from,
                   std::vector<AdmissibleSubset>& out) {
  out.push_back(cur);
  for (int t = from; t < chain.size(); ++t) {
    EdgeKind kind = edge_kind_definitional(cur.path.back(), chain.entries[t].root);
    if (kind == EdgeKind::None) continue;
    if (filter == StepFilter::BruhatOnly && kind != EdgeKind::Bruhat) continue;
    cur.indices.push_back(t);
    cur.kinds.push_back(kind);
    cur.path.push_back(apply_reflection(cur.path.back(), chain.entries[t].root));
    enumerate_rec(chain, filter, cur, t + 1, out);
    cur.indices.pop_back();
    cur.kinds.pop_back();
    cur.path.pop_back();
  }
}

}  // namespace

std::vector<AdmissibleSubset> enumerate_admissible(const WeylElement& w,
                                                   const LabeledChain& chain,
                                                   StepFilter filter) {
  if (!(w.group() == chain.d)) throw std::invalid_argument("group mismatch");
  std::vector<AdmissibleSubset> out;
  AdmissibleSubset cur;
  cur.path.push_back(w);
  enumerate_rec(chain, filter, cur, 0, out);
  return out;
}

std::optional<AdmissibleSubset> make_admissible(const WeylElement& w,
                                                const LabeledChain& chain,
                                                const std::vector<int>& indices) {
  AdmissibleSubset a;
  a.path.push_back(w);
  int prev = -1;
  for (int t : indices) {
    if (t <= prev || t >= chain.size()) throw std::invalid_argument("bad index set");
    prev = t;
    EdgeKind kind = edge_kind_definitional(a.path.back(), chain.entries[t].root);
    if (kind == EdgeKind::None) return std::nullopt;
    a.indices.push_back(t);
    a.kinds.push_back(kind);
    a.path.push_back(apply_reflection(a.path.back(), chain.entries[t].root));
  }
  return a;
}

CorootVector down_statistic(const LabeledChain& chain, const AdmissibleSubset& a) {
  CorootVector out(chain.d.rank(), 0);
  for (size_t t = 0; t < a.indices.size(); ++t) {
    if (a.kinds[t] != EdgeKind::Quantum) continue;
    CorootVector c = coroot_vector(chain.d, chain.entries[a.indices[t]].root);
    for (size_t l = 0; l < out.size(); ++l) out[l] += c[l];
  }
  return out;
}

Weight wt_statistic(const WeylElement& w, const LabeledChain& chain,
                    const AdmissibleSubset& a, WtOrder order) {
  Weight x(chain.d.n, 0);
  for (int i = 0; i < chain.k; ++i) x[i] = 1;
  std::vector<int> seq = a.indices;
  if (order == WtOrder::LastIndexInnermost) std::reverse(seq.begin(), seq.end());
  for (int t : seq) {
    const ChainEntry& e = chain.entries[t];
    int excess = pair_coroot(chain.d, x, e.root) - e.level;
    // Reflection in the affine hyperplane <x, root^vee> = level.
    int ci = e.root.kind == RootKind::TwoEi ? 2 : 1;
    x[e.root.i - 1] -= excess * ci;
    if (e.root.kind == RootKind::EiMinusEj) x[e.root.j - 1] += excess;
    if (e.root.kind == RootKind::EiPlusEj) x[e.root.j - 1] -= excess;
  }
  Weight out = act_on_weight(w, x);
  for (int& c : out) c = -c;
  return canonical_weight(chain.d, out);
}

std::pair<std::vector<int>, std::vector<int>> split_typeC(const LabeledChain& chain,
                                                          const AdmissibleSubset& a) {
  if (chain.d.family != Family::C)
    throw std::invalid_argument("split_typeC: type C only");
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int t : a.indices)
    (t < chain.split_index ? out.first : out.second).push_back(t);
  return out;
}

WeylElement end_of_first_segment(const WeylElement& w, const LabeledChain& chain,
                                 const AdmissibleSubset& a) {
  (void)w;
  int steps = 0;
  while (steps < a.card() && a.indices[steps] < chain.split_index) ++steps;
  return a.path[steps];
}

std::string admissible_to_json(const WeylElement& w, const LabeledChain& chain,
                               const AdmissibleSubset& a) {
  std::ostringstream out;
  auto list = [&out](const std::vector<int>& v) {
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
  };
  out << "{\"indices\": ";
  std::vector<int> one_based = a.indices;
  for (int& t : one_based) ++t;
  list(one_based);
  out << ", \"end\": \"" << a.end().str() << "\", \"quantum_indices\": ";
  std::vector<int> q = a.quantum_indices();
  for (int& t : q) ++t;
  list(q);
  out << ", \"down\": ";
  list(down_statistic(chain, a));
  out << ", \"wt\": ";
  list(wt_statistic(w, chain, a));
  out << "}";
  return out.str();
}

}  // namespace qkchev
