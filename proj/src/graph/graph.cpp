#include "gc/graph.hpp"

#include "gc/error.hpp"
#include "gc/permutation.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(idx(n));
  for (const Edge& e : edges) {
    adj[idx(e.u)].push_back(e.v);
    adj[idx(e.v)].push_back(e.u);
  }
  std::vector<bool> seen(idx(n), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[idx(v)]) {
      if (!seen[idx(w)]) {
        seen[idx(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Edge labels grouped by unordered endpoint pair.
std::map<std::pair<int, int>, std::vector<int>> parallel_classes(const std::vector<Edge>& edges) {
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    classes[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(e));
  }
  return classes;
}

std::uint64_t factorial(std::uint64_t m) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

LabelledTrivalentGraph LabelledTrivalentGraph::validate(int num_vertices, std::vector<Edge> edges) {
  if (num_vertices <= 0 || num_vertices % 2 != 0)
    throw Error(ErrorKind::WrongEdgeCount, "vertex count must be a positive even integer, got " + std::to_string(num_vertices));
  if (static_cast<long>(edges.size()) != 3L * (num_vertices / 2))
    throw Error(ErrorKind::WrongEdgeCount, "expected " + std::to_string(3 * (num_vertices / 2)) + " edges, got " +
                                               std::to_string(edges.size()));
  std::vector<int> degree(idx(num_vertices), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices)
      throw Error(ErrorKind::NonTrivalent, "edge endpoint out of range");
    ++degree[idx(e.u)];
    ++degree[idx(e.v)];
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (degree[idx(v)] != 3)
      throw Error(ErrorKind::NonTrivalent, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[idx(v)]));
  }
  if (!connected(num_vertices, edges)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  return LabelledTrivalentGraph(num_vertices, std::move(edges));
}

bool LabelledTrivalentGraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool LabelledTrivalentGraph::has_multi_edge() const {
  for (const auto& [pair, labels] : parallel_classes(edges_))
    if (labels.size() > 1) return true;
  return false;
}

std::array<HalfEdge, 3> LabelledTrivalentGraph::half_edges_at(int v) const {
  std::array<HalfEdge, 3> out{};
  std::size_t n = 0;
  for (int e = 0; e < num_edges(); ++e) {
    if (edges_[idx(e)].u == v) out[n++] = {e, 0};
    if (edges_[idx(e)].v == v) out[n++] = {e, 1};
  }
  return out;
}

LabelledTrivalentGraph LabelledTrivalentGraph::relabelled(std::span<const int> vertex_map,
                                                          std::span<const int> edge_map) const {
  std::vector<Edge> out(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    out[idx(edge_map[e])] = {vertex_map[idx(edges_[e].u)], vertex_map[idx(edges_[e].v)]};
  return LabelledTrivalentGraph(num_vertices_, std::move(out));
}

ColoredMultigraph LabelledTrivalentGraph::as_multigraph() const {
  return ColoredMultigraph{num_vertices_, std::vector<int>(idx(num_vertices_), 0), edges_};
}

std::string render_key(int num_vertices, const EdgeList& canonical_edges) {
  std::string out = "cub:" + std::to_string(num_vertices) + ":";
  for (std::size_t i = 0; i < canonical_edges.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(canonical_edges[i].first);
    out += '-';
    out += std::to_string(canonical_edges[i].second);
  }
  return out;
}

LabelledTrivalentGraph graph_from_key(const std::string& key) {
  if (key.rfind("cub:", 0) != 0) throw Error(ErrorKind::Parse, "not a graph key: " + key);
  auto colon = key.find(':', 4);
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "not a graph key: " + key);
  int n = std::stoi(key.substr(4, colon - 4));
  std::vector<Edge> edges;
  std::stringstream body(key.substr(colon + 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::Parse, "bad edge in key: " + item);
    edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
  }
  return LabelledTrivalentGraph::validate(n, std::move(edges));
}

namespace {

// Edge permutation induced by a vertex automorphism of a graph without
// parallel edges.
std::vector<int> induced_edge_perm(const LabelledTrivalentGraph& g, const std::vector<int>& vertex_perm) {
  int n = g.num_vertices();
  std::vector<int> label_of(idx(n * n), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    label_of[idx(u * n + v)] = e;
    label_of[idx(v * n + u)] = e;
  }
  std::vector<int> perm(idx(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    perm[idx(e)] = label_of[idx(vertex_perm[idx(u)] * n + vertex_perm[idx(v)])];
  }
  return perm;
}

}  // namespace

GraphClass reduce(const LabelledTrivalentGraph& g) {
  CanonicalForm cf = canonical_form(g.as_multigraph(), true);
  GraphClass out{render_key(g.num_vertices(), cf.edges), 0};
  if (g.has_multi_edge()) return out;
  for (const auto& aut : cf.automorphisms) {
    if (permutation_sign(induced_edge_perm(g, aut)) < 0) return out;
  }
  std::vector<int> edge_perm(idx(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = cf.labelling[idx(g.edge(e).u)];
    int b = cf.labelling[idx(g.edge(e).v)];
    std::pair<int, int> p{std::min(a, b), std::max(a, b)};
    edge_perm[idx(e)] = static_cast<int>(std::lower_bound(cf.edges.begin(), cf.edges.end(), p) - cf.edges.begin());
  }
  out.sign = permutation_sign(edge_perm);
  return out;
}

AutomorphismGroup automorphism_group(const LabelledTrivalentGraph& g) {
  CanonicalForm cf = canonical_form(g.as_multigraph(), true);
  AutomorphismGroup group;
  group.vertex_perms = std::move(cf.automorphisms);
  for (const auto& [pair, labels] : parallel_classes(g.edges())) {
    group.aut_e *= factorial(labels.size());
    if (labels.size() > 1) group.has_odd_edge_permutation = true;
  }
  if (!group.has_odd_edge_permutation) {
    for (const auto& p : group.vertex_perms) {
      if (permutation_sign(induced_edge_perm(g, p)) < 0) {
        group.has_odd_edge_permutation = true;
        break;
      }
    }
  }
  return group;
}

std::vector<Automorphism> list_automorphisms(const LabelledTrivalentGraph& g) {
  AutomorphismGroup group = automorphism_group(g);
  auto classes = parallel_classes(g.edges());
  std::vector<Automorphism> out;
  for (const auto& vp : group.vertex_perms) {
    // For each source class, the target class and the running bijection.
    struct Slot {
      std::vector<int> source;
      std::vector<int> target;
    };
    std::vector<Slot> slots;
    for (const auto& [pair, labels] : classes) {
      int a = vp[idx(pair.first)];
      int b = vp[idx(pair.second)];
      slots.push_back({labels, classes.at({std::min(a, b), std::max(a, b)})});
    }
    while (true) {
      std::vector<int> edge_perm(idx(g.num_edges()));
      for (const auto& s : slots)
        for (std::size_t i = 0; i < s.source.size(); ++i) edge_perm[idx(s.source[i])] = s.target[i];
      out.push_back({vp, std::move(edge_perm)});
      std::size_t i = 0;
      while (i < slots.size() && !std::next_permutation(slots[i].target.begin(), slots[i].target.end())) ++i;
      if (i == slots.size()) break;
    }
  }
  return out;
}

bool is_automorphism(const LabelledTrivalentGraph& g, const Automorphism& a) {
  if (static_cast<int>(a.vertex_perm.size()) != g.num_vertices() || static_cast<int>(a.edge_perm.size()) != g.num_edges())
    return false;
  if (!is_permutation_of_range(a.vertex_perm) || !is_permutation_of_range(a.edge_perm)) return false;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    int pu = a.vertex_perm[idx(u)];
    int pv = a.vertex_perm[idx(v)];
    const Edge& image = g.edge(a.edge_perm[idx(e)]);
    bool match = (image.u == pu && image.v == pv) || (image.u == pv && image.v == pu);
    if (!match) return false;
  }
  return true;
}

IsoSign iso_sign(const LabelledTrivalentGraph& g, const LabelledTrivalentGraph& h) {
  GraphClass a = reduce(g);
  GraphClass b = reduce(h);
  if (a.key != b.key) return {IsoSign::Kind::NotIsomorphic, 0};
  if (a.zero() || b.zero()) return {IsoSign::Kind::Zero, 0};
  return {IsoSign::Kind::Signed, a.sign * b.sign};
}

}  // namespace gc
