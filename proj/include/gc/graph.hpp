#pragma once

#include "gc/canonical.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gc {

// One end of an edge: end 0 is edge.u, end 1 is edge.v.
struct HalfEdge {
  int edge = 0;
  int end = 0;

  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Connected trivalent multigraph on 2k vertices. The position of an edge in
// edges() is its label. Construct through validate().
class LabelledTrivalentGraph {
 public:
  static LabelledTrivalentGraph validate(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  int k() const noexcept { return num_vertices_ / 2; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int label) const { return edges_.at(static_cast<std::size_t>(label)); }
  bool is_loop(int label) const { return edge(label).u == edge(label).v; }
  bool has_loop() const;
  bool has_multi_edge() const;

  // The three half-edges at v, ordered by (edge label, end).
  std::array<HalfEdge, 3> half_edges_at(int v) const;
  int endpoint(HalfEdge h) const { return h.end == 0 ? edge(h.edge).u : edge(h.edge).v; }

  // Vertex v becomes vertex_map[v]; edge e becomes label edge_map[e].
  LabelledTrivalentGraph relabelled(std::span<const int> vertex_map, std::span<const int> edge_map) const;

  ColoredMultigraph as_multigraph() const;

  friend bool operator==(const LabelledTrivalentGraph&, const LabelledTrivalentGraph&) = default;

 private:
  LabelledTrivalentGraph(int n, std::vector<Edge> edges) : num_vertices_(n), edges_(std::move(edges)) {}

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Isomorphism class of the unlabelled multigraph together with the orientation
// sign of the given edge labelling. sign == 0 means the class is Zero: some
// automorphism permutes the edges oddly.
struct GraphClass {
  std::string key;
  int sign = 0;

  bool zero() const noexcept { return sign == 0; }
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

std::string render_key(int num_vertices, const EdgeList& canonical_edges);

// Graph whose edge labelling is the canonical sorted edge list of `key`.
LabelledTrivalentGraph graph_from_key(const std::string& key);

GraphClass reduce(const LabelledTrivalentGraph& g);

struct Automorphism {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
};

struct AutomorphismGroup {
  // All distinct vertex permutations realised by automorphisms (|Aut_v| of them).
  std::vector<std::vector<int>> vertex_perms;
  // Order of the subgroup fixing every vertex: product of m! over parallel classes.
  std::uint64_t aut_e = 1;
  bool has_odd_edge_permutation = false;

  std::uint64_t aut_v() const noexcept { return vertex_perms.size(); }
  std::uint64_t order() const noexcept { return aut_e * aut_v(); }
};

AutomorphismGroup automorphism_group(const LabelledTrivalentGraph& g);

// Every (vertex_perm, edge_perm) pair; |Aut| entries.
std::vector<Automorphism> list_automorphisms(const LabelledTrivalentGraph& g);

bool is_automorphism(const LabelledTrivalentGraph& g, const Automorphism& a);

struct IsoSign {
  enum class Kind { NotIsomorphic, Zero, Signed };
  Kind kind = Kind::NotIsomorphic;
  int sign = 0;

  friend bool operator==(const IsoSign&, const IsoSign&) = default;
};

IsoSign iso_sign(const LabelledTrivalentGraph& g, const LabelledTrivalentGraph& h);

// Graph with one vertex of degree 4 (`center`) and all others of degree 3.
// `tags` lists the four half-edges at the centre.
struct FourValentGraph {
  int num_vertices = 0;
  int center = 0;
  std::vector<Edge> edges;
  std::array<HalfEdge, 4> tags{};

  ColoredMultigraph as_multigraph() const;
};

FourValentGraph contract_edge(const LabelledTrivalentGraph& g, int edge_label);

struct IhxTerm {
  int coefficient = 0;
  LabelledTrivalentGraph graph;
};

// Coefficients attached to the pairings {h1h2|h3h4}, {h1h3|h2h4}, {h1h4|h2h3}.
using IhxCoefficients = std::array<int, 3>;
inline constexpr IhxCoefficients kIhxCoefficients = {1, 1, 1};

// Splits the centre back into two trivalent vertices joined by an edge that is
// inserted at position new_edge_label of the edge list.
std::array<IhxTerm, 3> ihx_expansions(const FourValentGraph& c, int new_edge_label,
                                      const IhxCoefficients& coefficients = kIhxCoefficients);

// Each edge directed (tail, head). directions[e] is a permutation of the
// endpoints of edge e.
struct ArrowGraph {
  LabelledTrivalentGraph graph;
  std::vector<std::pair<int, int>> directions;

  static ArrowGraph validate(LabelledTrivalentGraph graph, std::vector<std::pair<int, int>> directions);
};

// First orientation without sources or sinks in a fixed backtracking order
// (edges by label, the stored direction u->v tried before v->u).
ArrowGraph find_arrow_orientation(const LabelledTrivalentGraph& g);

// All orientations without sources or sinks, in the same order.
std::vector<ArrowGraph> all_arrow_orientations(const LabelledTrivalentGraph& g);

}  // namespace gc
