#include "gc/error.hpp"
#include "gc/graph.hpp"

#include <algorithm>
#include <cstddef>

namespace gc {

ColoredMultigraph FourValentGraph::as_multigraph() const {
  std::vector<int> colors(static_cast<std::size_t>(num_vertices), 0);
  colors[static_cast<std::size_t>(center)] = 1;
  return ColoredMultigraph{num_vertices, std::move(colors), edges};
}

FourValentGraph contract_edge(const LabelledTrivalentGraph& g, int edge_label) {
  if (edge_label < 0 || edge_label >= g.num_edges())
    throw Error(ErrorKind::Parse, "edge label out of range: " + std::to_string(edge_label));
  if (g.is_loop(edge_label))
    throw Error(ErrorKind::LoopContraction, "edge " + std::to_string(edge_label) + " is a loop");

  const int lo = std::min(g.edge(edge_label).u, g.edge(edge_label).v);
  const int hi = std::max(g.edge(edge_label).u, g.edge(edge_label).v);
  auto vertex_map = [&](int w) { return w == hi ? lo : (w > hi ? w - 1 : w); };
  auto edge_map = [&](int f) { return f < edge_label ? f : f - 1; };

  FourValentGraph out;
  out.num_vertices = g.num_vertices() - 1;
  out.center = lo;
  for (int f = 0; f < g.num_edges(); ++f) {
    if (f == edge_label) continue;
    out.edges.push_back({vertex_map(g.edge(f).u), vertex_map(g.edge(f).v)});
  }
  std::size_t n = 0;
  for (int endpoint : {lo, hi}) {
    for (HalfEdge h : g.half_edges_at(endpoint)) {
      if (h.edge == edge_label) continue;
      out.tags[n++] = {edge_map(h.edge), h.end};
    }
  }
  return out;
}

std::array<IhxTerm, 3> ihx_expansions(const FourValentGraph& c, int new_edge_label,
                                      const IhxCoefficients& coefficients) {
  const int num_edges = static_cast<int>(c.edges.size()) + 1;
  if (new_edge_label < 0 || new_edge_label >= num_edges)
    throw Error(ErrorKind::Parse, "new edge label out of range: " + std::to_string(new_edge_label));
  // Tags moved to the new vertex for each pairing.
  static constexpr std::array<std::array<int, 2>, 3> kMoved = {{{2, 3}, {1, 3}, {1, 2}}};
  const int fresh = c.num_vertices;

  auto expand = [&](std::size_t pairing) {
    std::vector<Edge> edges = c.edges;
    for (int t : kMoved[pairing]) {
      HalfEdge h = c.tags[static_cast<std::size_t>(t)];
      Edge& e = edges[static_cast<std::size_t>(h.edge)];
      (h.end == 0 ? e.u : e.v) = fresh;
    }
    edges.insert(edges.begin() + new_edge_label, Edge{c.center, fresh});
    return IhxTerm{coefficients[pairing], LabelledTrivalentGraph::validate(c.num_vertices + 1, std::move(edges))};
  };
  return {expand(0), expand(1), expand(2)};
}

}  // namespace gc
