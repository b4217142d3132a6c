#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewlr/schur.hpp"

namespace skewlr {

// Strict partial order under Schur domination; Schur-equal diagrams share a
// node. edges is the transitive reduction of dominance, each edge directed
// dominating -> dominated.
struct HasseGraph {
  struct Node {
    std::vector<std::string> labels;  // sorted; several when merged
    SkewShape shape;                  // representative
  };
  std::vector<Node> nodes;                   // sorted by first label
  std::vector<std::vector<bool>> dominance;  // reflexive; strict off-diagonal
  std::vector<std::pair<int, int>> edges;    // sorted (from, to) pairs
};

// Pairwise-compares the diagrams, merges Schur-equal ones, verifies the
// partial-order axioms (throws std::logic_error with a diagnostic on
// violation) and fills in the transitive reduction.
HasseGraph build_order(
    const std::vector<std::pair<std::string, SkewShape>>& diagrams,
    const ComputeOptions& opt = {});

// Recomputes edges as the minimal set whose transitive closure equals
// dominance.
HasseGraph transitive_reduction(const HasseGraph& g);

// Deterministic Graphviz output.
std::string emit_dot(const HasseGraph& g);
std::string hasse_json(const HasseGraph& g);

}  // namespace skewlr
