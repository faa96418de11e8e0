#include "qkchev/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qkchev {

long long GroupDescriptor::order() const {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  if (family == Family::C)
    for (int i = 0; i < n; ++i) f *= 2;
  return f;
}

std::string GroupDescriptor::str() const {
  return (family == Family::A ? "A n=" : "C n=") + std::to_string(n);
}

WeylElement::WeylElement(GroupDescriptor d, std::vector<int> window)
    : d_(d), window_(std::move(window)) {
  if (static_cast<int>(window_.size()) != d_.n)
    throw std::invalid_argument("window size mismatch");
  std::vector<char> seen(d_.n + 1, 0);
  for (int v : window_) {
    int a = v < 0 ? -v : v;
    if (v == 0 || a > d_.n || seen[a]) throw std::invalid_argument("invalid window");
    if (v < 0 && d_.family == Family::A)
      throw std::invalid_argument("negative entry in type A window");
    seen[a] = 1;
  }
}

WeylElement WeylElement::identity(const GroupDescriptor& d) {
  std::vector<int> w(d.n);
  std::iota(w.begin(), w.end(), 1);
  return WeylElement(d, std::move(w));
}

bool WeylElement::is_identity() const {
  for (int i = 1; i <= d_.n; ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

std::string WeylElement::str() const {
  std::string s;
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(window_[i]);
  }
  return s;
}

std::string PositiveRoot::str() const {
  switch (kind) {
    case RootKind::EiMinusEj:
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case RootKind::EiPlusEj:
      return "(" + std::to_string(i) + ",-" + std::to_string(j) + ")";
    case RootKind::TwoEi:
      return "(" + std::to_string(i) + ",-" + std::to_string(i) + ")";
  }
  return "?";
}

PositiveRoot minus_root(int i, int j) { return {RootKind::EiMinusEj, i, j}; }
PositiveRoot plus_root(int i, int j) { return {RootKind::EiPlusEj, i, j}; }
PositiveRoot two_root(int i) { return {RootKind::TwoEi, i, i}; }

bool root_valid(const GroupDescriptor& d, const PositiveRoot& beta) {
  switch (beta.kind) {
    case RootKind::EiMinusEj:
      return 1 <= beta.i && beta.i < beta.j && beta.j <= d.n;
    case RootKind::EiPlusEj:
      return d.family == Family::C && 1 <= beta.i && beta.i < beta.j && beta.j <= d.n;
    case RootKind::TwoEi:
      return d.family == Family::C && 1 <= beta.i && beta.i <= d.n && beta.j == beta.i;
  }
  return false;
}

std::vector<PositiveRoot> positive_roots(const GroupDescriptor& d) {
  std::vector<PositiveRoot> r;
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j) r.push_back(minus_root(i, j));
  if (d.family == Family::C) {
    for (int i = 1; i <= d.n; ++i)
      for (int j = i + 1; j <= d.n; ++j) r.push_back(plus_root(i, j));
    for (int i = 1; i <= d.n; ++i) r.push_back(two_root(i));
  }
  return r;
}

PositiveRoot simple_root(const GroupDescriptor& d, int i) {
  if (i < 1 || i > d.rank()) throw std::invalid_argument("simple root index");
  if (d.family == Family::C && i == d.n) return two_root(d.n);
  return minus_root(i, i + 1);
}

PositiveRoot highest_root(const GroupDescriptor& d) {
  return d.family == Family::A ? minus_root(1, d.n) : two_root(1);
}

namespace {

int sgn(int v) { return v < 0 ? -1 : 1; }

// Leading-coordinate sign of w applied to a positive root; positive roots are
// exactly those whose first nonzero epsilon coordinate is positive.
bool image_is_negative(const WeylElement& w, const PositiveRoot& beta) {
  int pi = std::abs(w(beta.i));
  int ci = sgn(w(beta.i));
  if (beta.kind == RootKind::TwoEi) return ci < 0;
  int pj = std::abs(w(beta.j));
  int cj = beta.kind == RootKind::EiMinusEj ? -sgn(w(beta.j)) : sgn(w(beta.j));
  return pi < pj ? ci < 0 : cj < 0;
}

}  // namespace

int length(const WeylElement& w) {
  const auto& win = w.window();
  int n = w.n();
  if (w.group().family == Family::A) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (win[i] > win[j]) ++inv;
    return inv;
  }
  int len = 0;
  for (const auto& beta : positive_roots(w.group()))
    if (image_is_negative(w, beta)) ++len;
  return len;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("group mismatch");
  std::vector<int> win(a.n());
  for (int i = 1; i <= a.n(); ++i) win[i - 1] = a(b(i));
  return WeylElement(a.group(), std::move(win));
}

WeylElement inverse(const WeylElement& w) {
  std::vector<int> win(w.n());
  for (int i = 1; i <= w.n(); ++i) {
    int v = w(i);
    win[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return WeylElement(w.group(), std::move(win));
}

WeylElement reflection_element(const GroupDescriptor& d, const PositiveRoot& beta) {
  if (!root_valid(d, beta)) throw std::invalid_argument("invalid root " + beta.str());
  auto s = WeylElement::identity(d).window();
  switch (beta.kind) {
    case RootKind::EiMinusEj:
      std::swap(s[beta.i - 1], s[beta.j - 1]);
      break;
    case RootKind::EiPlusEj:
      s[beta.i - 1] = -beta.j;
      s[beta.j - 1] = -beta.i;
      break;
    case RootKind::TwoEi:
      s[beta.i - 1] = -beta.i;
      break;
  }
  return WeylElement(d, std::move(s));
}

WeylElement apply_reflection(const WeylElement& w, const PositiveRoot& beta) {
  return multiply(w, reflection_element(w.group(), beta));
}

WeylElement apply_simple(const WeylElement& w, int i) {
  return apply_reflection(w, simple_root(w.group(), i));
}

WeylElement apply_transposition(const WeylElement& w, int a, int b) {
  if (a == b) return w;
  auto win = w.window();
  std::swap(win[a - 1], win[b - 1]);
  return WeylElement(w.group(), std::move(win));
}

Weight canonical_weight(const GroupDescriptor& d, Weight mu) {
  if (d.family == Family::A && !mu.empty()) {
    int last = mu.back();
    for (int& c : mu) c -= last;
  }
  return mu;
}

Weight fundamental_weight(const GroupDescriptor& d, int k) {
  if (k < 1 || k > d.rank()) throw std::invalid_argument("fundamental weight index");
  Weight mu(d.n, 0);
  for (int i = 0; i < k; ++i) mu[i] = 1;
  return canonical_weight(d, mu);
}

Weight rho_weight(const GroupDescriptor& d) {
  Weight mu(d.n);
  for (int i = 0; i < d.n; ++i)
    mu[i] = d.family == Family::A ? d.n - 1 - i : d.n - i;
  return mu;
}

Weight act_on_weight(const WeylElement& w, const Weight& mu) {
  Weight out(w.n(), 0);
  for (int i = 1; i <= w.n(); ++i) {
    int v = w(i);
    out[std::abs(v) - 1] = sgn(v) * mu[i - 1];
  }
  return canonical_weight(w.group(), out);
}

int pair_coroot(const GroupDescriptor& d, const Weight& mu, const PositiveRoot& beta) {
  if (!root_valid(d, beta)) throw std::invalid_argument("invalid root " + beta.str());
  switch (beta.kind) {
    case RootKind::EiMinusEj:
      return mu[beta.i - 1] - mu[beta.j - 1];
    case RootKind::EiPlusEj:
      return mu[beta.i - 1] + mu[beta.j - 1];
    case RootKind::TwoEi:
      return mu[beta.i - 1];
  }
  return 0;
}

CorootVector coroot_vector(const GroupDescriptor& d, const PositiveRoot& beta) {
  if (!root_valid(d, beta)) throw std::invalid_argument("invalid root " + beta.str());
  CorootVector c(d.rank(), 0);
  switch (beta.kind) {
    case RootKind::EiMinusEj:
      for (int l = beta.i; l < beta.j; ++l) c[l - 1] = 1;
      break;
    case RootKind::TwoEi:
      for (int l = beta.i; l <= d.n; ++l) c[l - 1] = 1;
      break;
    case RootKind::EiPlusEj:
      // (e_i + e_j)^vee = e_i + e_j = sum_{i<=l<j} a_l + 2 sum_{j<=l<=n} a_l
      // with a_n^vee = e_n, so the last coefficient is 2.
      for (int l = beta.i; l < beta.j; ++l) c[l - 1] = 1;
      for (int l = beta.j; l < d.n; ++l) c[l - 1] = 2;
      c[d.n - 1] = 2;
      break;
  }
  return c;
}

int signed_order_key(int v, int n) { return v > 0 ? v : 2 * n + 1 + v; }

ParabolicSubset ParabolicSubset::full_minus(const GroupDescriptor& d,
                                            std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  ParabolicSubset J;
  for (int i = 1; i <= d.rank(); ++i)
    if (!std::binary_search(removed.begin(), removed.end(), i))
      J.indices.push_back(i);
  return J;
}

std::vector<int> ParabolicSubset::removed(const GroupDescriptor& d) const {
  std::vector<int> out;
  for (int i = 1; i <= d.rank(); ++i)
    if (!std::binary_search(indices.begin(), indices.end(), i)) out.push_back(i);
  return out;
}

std::string ParabolicSubset::str() const {
  std::string s = "{";
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "}";
}

namespace {

// Block boundaries of the supported quotients: cuts k (and k2) split the
// window into sort blocks.
std::vector<int> quotient_cuts(const GroupDescriptor& d, const ParabolicSubset& J) {
  std::vector<int> k = J.removed(d);
  if (k.size() == 1) return k;
  if (k.size() == 2 && d.family == Family::A) return k;
  throw std::invalid_argument("unsupported parabolic " + J.str());
}

}  // namespace

bool is_min_coset_rep(const WeylElement& w, const ParabolicSubset& J) {
  const GroupDescriptor& d = w.group();
  std::vector<int> cuts = quotient_cuts(d, J);
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(d.n);
  for (size_t b = 0; b + 1 < cuts.size(); ++b) {
    bool last_block = b + 2 == cuts.size();
    int prev = 0;
    for (int p = cuts[b] + 1; p <= cuts[b + 1]; ++p) {
      int v = w(p);
      if (d.family == Family::C && last_block && cuts[b] < d.n && v < 0) return false;
      int key = d.family == Family::C ? signed_order_key(v, d.n) : v;
      if (p > cuts[b] + 1 && key < prev) return false;
      prev = key;
    }
  }
  return true;
}

WeylElement min_coset_rep(const WeylElement& w, const ParabolicSubset& J) {
  const GroupDescriptor& d = w.group();
  std::vector<int> cuts = quotient_cuts(d, J);
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(d.n);
  std::vector<int> win = w.window();
  for (size_t b = 0; b + 1 < cuts.size(); ++b) {
    bool last_block = b + 2 == cuts.size();
    auto first = win.begin() + cuts[b];
    auto last = win.begin() + cuts[b + 1];
    if (d.family == Family::C && last_block) {
      // W_J contains the sign changes of the trailing block.
      for (auto it = first; it != last; ++it) *it = std::abs(*it);
    }
    if (d.family == Family::C)
      std::sort(first, last, [&](int a, int bb) {
        return signed_order_key(a, d.n) < signed_order_key(bb, d.n);
      });
    else
      std::sort(first, last);
  }
  return WeylElement(d, std::move(win));
}

WeylElement omega_dual(const WeylElement& w) {
  if (w.group().family != Family::A)
    throw std::invalid_argument("omega_dual: type A only");
  int n = w.n();
  std::vector<int> win(n);
  for (int i = 1; i <= n; ++i) win[i - 1] = n + 1 - w(n + 1 - i);
  return WeylElement(w.group(), std::move(win));
}

PositiveRoot omega_dual_root(const GroupDescriptor& d, const PositiveRoot& beta) {
  if (d.family != Family::A || beta.kind != RootKind::EiMinusEj)
    throw std::invalid_argument("omega_dual_root: type A only");
  return minus_root(d.n + 1 - beta.j, d.n + 1 - beta.i);
}

namespace {

bool bruhat_leq_typeA(const WeylElement& u, const WeylElement& v) {
  // Prefix-dominance criterion on sorted prefixes.
  int n = u.n();
  std::vector<int> pu, pv;
  pu.reserve(n);
  pv.reserve(n);
  for (int i = 1; i <= n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(i)), v(i));
    for (int t = 0; t < i; ++t)
      if (pu[t] > pv[t]) return false;
  }
  return true;
}

// Lifting-property recursion; doubles as a subword test at desk scale.
bool bruhat_leq_lifting(const WeylElement& u, const WeylElement& v) {
  if (u == v) return true;
  int lu = length(u), lv = length(v);
  if (lu >= lv) return false;
  for (int i = 1; i <= v.group().rank(); ++i) {
    WeylElement vs = apply_simple(v, i);
    if (length(vs) < lv) {
      WeylElement us = apply_simple(u, i);
      if (length(us) < lu) return bruhat_leq_lifting(us, vs);
      return bruhat_leq_lifting(u, vs);
    }
  }
  return false;  // unreachable: v != e has a descent
}

}  // namespace

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  if (!(u.group() == v.group())) throw std::invalid_argument("group mismatch");
  if (u.group().family == Family::A) return bruhat_leq_typeA(u, v);
  return bruhat_leq_lifting(u, v);
}

std::vector<WeylElement> enumerate_group(const GroupDescriptor& d) {
  std::vector<WeylElement> out;
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (d.family == Family::A) {
      out.emplace_back(d, perm);
    } else {
      for (unsigned mask = 0; mask < (1u << d.n); ++mask) {
        std::vector<int> win = perm;
        for (int i = 0; i < d.n; ++i)
          if (mask & (1u << i)) win[i] = -win[i];
        out.emplace_back(d, std::move(win));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> enumerate_min_reps(const GroupDescriptor& d,
                                            const ParabolicSubset& J) {
  std::vector<WeylElement> out;
  for (auto& w : enumerate_group(d))
    if (is_min_coset_rep(w, J)) out.push_back(w);
  return out;
}

WeylElement parse_window(const GroupDescriptor& d, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> win;
  int v;
  while (in >> v) win.push_back(v);
  if (!in.eof()) throw std::invalid_argument("cannot parse window '" + text + "'");
  return WeylElement(d, std::move(win));
}

}  // namespace qkchev
