#include "qkchev/qbg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkchev {

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::None: return "none";
    case EdgeKind::Bruhat: return "bruhat";
    case EdgeKind::Quantum: return "quantum";
  }
  return "?";
}

int rho_pairing(const GroupDescriptor& d, const PositiveRoot& beta) {
  return pair_coroot(d, rho_weight(d), beta);
}

EdgeKind edge_kind_definitional(const WeylElement& w, const PositiveRoot& beta) {
  int lw = length(w);
  int lv = length(apply_reflection(w, beta));
  if (lv == lw + 1) return EdgeKind::Bruhat;
  if (lv == lw + 1 - 2 * rho_pairing(w.group(), beta)) return EdgeKind::Quantum;
  return EdgeKind::None;
}

namespace {

// Rank of x in the circular order starting at a. Type A uses the n-cycle on
// {1..n}; type C uses the 2n-cycle on 1,...,n,-n,...,-1.
int circ_rank(const GroupDescriptor& d, int a, int x) {
  if (d.family == Family::A) return (x - a + d.n) % d.n;
  auto pos = [&](int v) { return v > 0 ? v - 1 : 2 * d.n + v; };
  return (pos(x) - pos(a) + 2 * d.n) % (2 * d.n);
}

}  // namespace

EdgeKind edge_kind_criterion(const WeylElement& w, const PositiveRoot& beta) {
  const GroupDescriptor& d = w.group();
  if (!root_valid(d, beta)) throw std::invalid_argument("invalid root " + beta.str());
  bool exists = true;
  auto between_circ = [&](int a, int x, int b) {
    int rx = circ_rank(d, a, x), rb = circ_rank(d, a, b);
    return 0 < rx && rx < rb;
  };
  switch (beta.kind) {
    case RootKind::EiMinusEj: {
      for (int k = beta.i + 1; k < beta.j && exists; ++k)
        if (between_circ(w(beta.i), w(k), w(beta.j))) exists = false;
      break;
    }
    case RootKind::TwoEi: {
      for (int k = beta.i + 1; k <= d.n && exists; ++k)
        if (between_circ(w(beta.i), w(k), -w(beta.i))) exists = false;
      break;
    }
    case RootKind::EiPlusEj: {
      // Linear-order clause on the alphabet 1 < ... < n < -n < ... < -1.
      int n = d.n;
      int a = w(beta.i), b = -w(beta.j);  // w(i) and w(jbar)
      if ((a < 0) != (b < 0) || signed_order_key(a, n) >= signed_order_key(b, n)) {
        exists = false;
        break;
      }
      // Window positions strictly between i and jbar in the full one-line
      // notation: i+1..n followed by nbar..(j+1)bar.
      for (int k = beta.i + 1; k <= n && exists; ++k) {
        int v = w(k);
        if (signed_order_key(a, n) < signed_order_key(v, n) &&
            signed_order_key(v, n) < signed_order_key(b, n))
          exists = false;
      }
      for (int m = n; m > beta.j && exists; --m) {
        int v = -w(m);
        if (signed_order_key(a, n) < signed_order_key(v, n) &&
            signed_order_key(v, n) < signed_order_key(b, n))
          exists = false;
      }
      break;
    }
  }
  if (!exists) return EdgeKind::None;
  int lw = length(w);
  int lv = length(apply_reflection(w, beta));
  return lv == lw + 1 ? EdgeKind::Bruhat : EdgeKind::Quantum;
}

QbgGraph build_qbg(const GroupDescriptor& d, long long cap) {
  if (d.order() > cap)
    throw std::invalid_argument("group order " + std::to_string(d.order()) +
                                " exceeds cap " + std::to_string(cap));
  QbgGraph g;
  g.d = d;
  g.vertices = enumerate_group(d);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].window()] = i;
  auto roots = positive_roots(d);
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    for (const auto& beta : roots) {
      EdgeKind kind = edge_kind_definitional(g.vertices[i], beta);
      if (kind == EdgeKind::None) continue;
      WeylElement v = apply_reflection(g.vertices[i], beta);
      g.edges.push_back({static_cast<int>(i), index.at(v.window()), beta, kind});
    }
  }
  return g;
}

std::string export_dot(const QbgGraph& g) {
  std::ostringstream out;
  out << "digraph qbg {\n";
  for (const auto& w : g.vertices) out << "  \"" << w.str() << "\";\n";
  for (const auto& e : g.edges) {
    out << "  \"" << g.vertices[e.src].str() << "\" -> \""
        << g.vertices[e.dst].str() << "\" [label=\"" << e.root.str() << "\"";
    if (e.kind == EdgeKind::Quantum) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const QbgGraph& g) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (i) out << ",";
    out << "\n  {\"src\": \"" << g.vertices[e.src].str() << "\", \"root\": \""
        << e.root.str() << "\", \"dst\": \"" << g.vertices[e.dst].str()
        << "\", \"kind\": \"" << edge_kind_name(e.kind) << "\"}";
  }
  out << "\n]\n";
  return out.str();
}

}  // namespace qkchev
