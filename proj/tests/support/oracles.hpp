#pragma once

// Brute-force reference implementations used only by tests.

#include "gc/graph.hpp"
#include "gc/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gc::oracle {

inline std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Smallest sorted edge list over all n! vertex orderings.
inline std::string brute_key(const LabelledTrivalentGraph& g) {
  std::vector<int> p = iota(g.num_vertices());
  EdgeList best;
  bool first = true;
  do {
    EdgeList e = relabelled_edges(g.edges(), p);
    if (first || e < best) best = std::move(e);
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return render_key(g.num_vertices(), best);
}

struct BruteAut {
  std::uint64_t order = 0;   // incidence-compatible (vertex_perm, edge_perm) pairs
  std::uint64_t aut_v = 0;   // vertex perms admitting at least one edge perm
  bool odd = false;          // some pair has an odd edge_perm
};

// Every vertex permutation, then every edge bijection by backtracking.
inline BruteAut brute_automorphisms(const LabelledTrivalentGraph& g) {
  BruteAut out;
  const int m = g.num_edges();
  std::vector<int> vp = iota(g.num_vertices());
  do {
    std::vector<int> ep(static_cast<std::size_t>(m), -1);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::uint64_t found = 0;
    std::function<void(int)> step = [&](int e) {
      if (e == m) {
        ++found;
        if (permutation_sign(ep) < 0) out.odd = true;
        return;
      }
      int a = vp[static_cast<std::size_t>(g.edge(e).u)];
      int b = vp[static_cast<std::size_t>(g.edge(e).v)];
      for (int f = 0; f < m; ++f) {
        if (used[static_cast<std::size_t>(f)]) continue;
        const Edge& t = g.edge(f);
        if (!((t.u == a && t.v == b) || (t.u == b && t.v == a))) continue;
        used[static_cast<std::size_t>(f)] = true;
        ep[static_cast<std::size_t>(e)] = f;
        step(e + 1);
        used[static_cast<std::size_t>(f)] = false;
      }
    };
    step(0);
    out.order += found;
    if (found > 0) ++out.aut_v;
  } while (std::next_permutation(vp.begin(), vp.end()));
  return out;
}

// All perfect matchings of the 6k half-edges (three per vertex) that give a
// connected graph, as labelled graphs.
inline std::vector<LabelledTrivalentGraph> matching_graphs(int k, std::uint64_t* matchings_seen = nullptr) {
  const int n = 2 * k;
  const int stubs = 3 * n;
  std::vector<LabelledTrivalentGraph> out;
  std::vector<bool> used(static_cast<std::size_t>(stubs), false);
  std::vector<Edge> edges;
  std::uint64_t count = 0;
  std::function<void()> step = [&] {
    int first = 0;
    while (first < stubs && used[static_cast<std::size_t>(first)]) ++first;
    if (first == stubs) {
      ++count;
      try {
        out.push_back(LabelledTrivalentGraph::validate(n, edges));
      } catch (const std::exception&) {
      }
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int other = first + 1; other < stubs; ++other) {
      if (used[static_cast<std::size_t>(other)]) continue;
      used[static_cast<std::size_t>(other)] = true;
      edges.push_back({first / 3, other / 3});
      step();
      edges.pop_back();
      used[static_cast<std::size_t>(other)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  step();
  if (matchings_seen) *matchings_seen = count;
  return out;
}

struct Relabelling {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<bool> flip;  // swap the stored endpoints of edge e
};

inline Relabelling random_relabelling(const LabelledTrivalentGraph& g, std::mt19937_64& rng) {
  Relabelling r{iota(g.num_vertices()), iota(g.num_edges()), {}};
  std::shuffle(r.vertex_map.begin(), r.vertex_map.end(), rng);
  std::shuffle(r.edge_map.begin(), r.edge_map.end(), rng);
  for (int e = 0; e < g.num_edges(); ++e) r.flip.push_back(rng() & 1);
  return r;
}

inline LabelledTrivalentGraph apply(const LabelledTrivalentGraph& g, const Relabelling& r) {
  std::vector<Edge> edges(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    Edge x{r.vertex_map[static_cast<std::size_t>(g.edge(e).u)], r.vertex_map[static_cast<std::size_t>(g.edge(e).v)]};
    if (r.flip[static_cast<std::size_t>(e)]) std::swap(x.u, x.v);
    edges[static_cast<std::size_t>(r.edge_map[static_cast<std::size_t>(e)])] = x;
  }
  return LabelledTrivalentGraph::validate(g.num_vertices(), std::move(edges));
}

inline LabelledTrivalentGraph k4() {
  return LabelledTrivalentGraph::validate(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline LabelledTrivalentGraph theta() { return LabelledTrivalentGraph::validate(2, {{0, 1}, {0, 1}, {0, 1}}); }
inline LabelledTrivalentGraph dumbbell() { return LabelledTrivalentGraph::validate(2, {{0, 0}, {0, 1}, {1, 1}}); }

}  // namespace gc::oracle
