#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gc {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertex-coloured multigraph with loops. Colours are compared by value, so a
// canonical form never identifies vertices of different colours.
struct ColoredMultigraph {
  int num_vertices = 0;
  std::vector<int> colors;
  std::vector<Edge> edges;
};

using EdgeList = std::vector<std::pair<int, int>>;

struct CanonicalForm {
  // labelling[v] is the canonical index of input vertex v.
  std::vector<int> labelling;
  std::vector<int> colors;
  // Relabelled edges with u <= v, sorted lexicographically.
  EdgeList edges;
  // Every vertex permutation p (input index -> input index) preserving colours
  // and edge multiplicities. Identity included. Empty unless requested.
  std::vector<std::vector<int>> automorphisms;
};

// Individualisation-refinement search over vertex orderings, keeping the
// ordering whose (colours, sorted edge list) is lexicographically smallest.
CanonicalForm canonical_form(const ColoredMultigraph& g, bool collect_automorphisms);

// Sorted edge list of g relabelled by `labelling`.
EdgeList relabelled_edges(const std::vector<Edge>& edges, const std::vector<int>& labelling);

}  // namespace gc
