#pragma once

#include <string>
#include <vector>

#include "qkchev/weyl.hpp"

namespace qkchev {

enum class EdgeKind { None, Bruhat, Quantum };

std::string edge_kind_name(EdgeKind k);

// <rho, beta^vee>
int rho_pairing(const GroupDescriptor& d, const PositiveRoot& beta);

// Classifies w -> w s_beta by comparing lengths against the defining
// equalities: Bruhat raises length by 1, quantum lowers it by
// 2<rho,beta^vee> - 1.
EdgeKind edge_kind_definitional(const WeylElement& w, const PositiveRoot& beta);

// Decides existence combinatorially (circular-order straddling, plus the
// linear-order clause for the type C plus roots); an existing edge is then
// Bruhat or quantum according to a single length comparison.
EdgeKind edge_kind_criterion(const WeylElement& w, const PositiveRoot& beta);

struct QbgEdge {
  int src = 0;  // indices into QbgGraph::vertices
  int dst = 0;
  PositiveRoot root;
  EdgeKind kind = EdgeKind::None;
};

struct QbgGraph {
  GroupDescriptor d;
  std::vector<WeylElement> vertices;
  std::vector<QbgEdge> edges;
};

QbgGraph build_qbg(const GroupDescriptor& d, long long cap = 10000);

std::string export_dot(const QbgGraph& g);
std::string export_json(const QbgGraph& g);

}  // namespace qkchev
