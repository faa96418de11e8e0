#pragma once

// Test-only oracles, independent of the library's production paths: lengths
// from explicit epsilon-vector root images, coset minima by brute force over
// the parabolic subgroup, and Bruhat comparison by subword products.

#include <algorithm>
#include <set>
#include <vector>

#include "qkchev/weyl.hpp"

namespace qkchev::testing {

inline std::vector<int> root_vec(const GroupDescriptor& d, const PositiveRoot& b) {
  std::vector<int> v(d.n, 0);
  switch (b.kind) {
    case RootKind::EiMinusEj:
      v[b.i - 1] = 1;
      v[b.j - 1] = -1;
      break;
    case RootKind::EiPlusEj:
      v[b.i - 1] = 1;
      v[b.j - 1] = 1;
      break;
    case RootKind::TwoEi:
      v[b.i - 1] = 2;
      break;
  }
  return v;
}

inline std::vector<int> act_vec(const WeylElement& w, const std::vector<int>& v) {
  std::vector<int> out(w.n(), 0);
  for (int i = 1; i <= w.n(); ++i) {
    int t = w(i);
    out[std::abs(t) - 1] = (t < 0 ? -1 : 1) * v[i - 1];
  }
  return out;
}

inline bool vec_is_negative_root(const std::vector<int>& v) {
  for (int c : v) {
    if (c > 0) return false;
    if (c < 0) return true;
  }
  return false;
}

inline int oracle_length(const WeylElement& w) {
  int len = 0;
  for (const auto& b : positive_roots(w.group()))
    if (vec_is_negative_root(act_vec(w, root_vec(w.group(), b)))) ++len;
  return len;
}

// All elements of the parabolic subgroup generated by the simple reflections
// in J, by closure.
inline std::vector<WeylElement> parabolic_subgroup(const GroupDescriptor& d,
                                                   const ParabolicSubset& J) {
  std::set<std::vector<int>> seen;
  std::vector<WeylElement> todo{WeylElement::identity(d)}, out;
  seen.insert(todo[0].window());
  while (!todo.empty()) {
    WeylElement cur = todo.back();
    todo.pop_back();
    out.push_back(cur);
    for (int i : J.indices) {
      WeylElement next = apply_simple(cur, i);
      if (seen.insert(next.window()).second) todo.push_back(next);
    }
  }
  return out;
}

inline WeylElement oracle_coset_min(const WeylElement& w, const ParabolicSubset& J) {
  WeylElement best = w;
  int best_len = length(w);
  for (const auto& u : parabolic_subgroup(w.group(), J)) {
    WeylElement cand = multiply(w, u);
    int len = length(cand);
    if (len < best_len) {
      best = cand;
      best_len = len;
    }
  }
  return best;
}

inline std::vector<int> reduced_word(WeylElement v) {
  std::vector<int> word;
  int len = length(v);
  while (len > 0) {
    for (int i = 1; i <= v.group().rank(); ++i) {
      WeylElement vs = apply_simple(v, i);
      int ls = length(vs);
      if (ls < len) {
        word.push_back(i);
        v = vs;
        len = ls;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// Subword products of one reduced word of v form the lower Bruhat interval.
inline std::set<std::vector<int>> bruhat_interval_below(const WeylElement& v) {
  std::set<std::vector<int>> cur{WeylElement::identity(v.group()).window()};
  for (int i : reduced_word(v)) {
    std::set<std::vector<int>> next = cur;
    for (const auto& win : cur)
      next.insert(apply_simple(WeylElement(v.group(), win), i).window());
    cur = std::move(next);
  }
  return cur;
}

inline bool oracle_bruhat_leq(const WeylElement& u, const WeylElement& v) {
  return bruhat_interval_below(v).count(u.window()) > 0;
}

}  // namespace qkchev::testing
