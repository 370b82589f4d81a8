#include "engine.hpp"
#include "gc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int symbol(HalfEdge x) { return 2 * x.edge + x.end; }

// A Y-component is coded by its three (side, index) pairs, sorted: inputs
// 1..3 map to 0..2, outputs 0..2 map to 3..5.
int code_of(std::array<int, 3> c) {
  std::sort(c.begin(), c.end());
  return (c[0] * 6 + c[1]) * 6 + c[2];
}

const std::array<std::array<bool, 216>, 2>& surviving_table() {
  static const auto table = [] {
    std::array<std::array<bool, 216>, 2> out{};
    for (int t = 0; t < 2; ++t) {
      for (const IndexTuple& tuple : surviving_indices(t == 0 ? VertexType::I : VertexType::II)) {
        std::array<int, 3> c{};
        std::size_t n = 0;
        for (int a : tuple.inputs) c[n++] = a - 1;
        for (int b : tuple.outputs) c[n++] = 3 + b;
        out[idx(t)][idx(code_of(c))] = true;
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

namespace detail {

Incidence incidence(const LabelledTrivalentGraph& g) {
  Incidence out(idx(g.num_vertices()));
  std::vector<int> fill(idx(g.num_vertices()), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    out[idx(g.edge(e).u)][idx(fill[idx(g.edge(e).u)]++)] = {e, 0};
    out[idx(g.edge(e).v)][idx(fill[idx(g.edge(e).v)]++)] = {e, 1};
  }
  return out;
}

GammaTables::GammaTables(const YLink& y) : link(y), n(y.arrows.graph.num_vertices()), at(incidence(y.arrows.graph)) {
  pair_edges.resize(idx(n * n));
  const YLinkData& d = y.data;
  for (const HopfPair& pair : d.hopf_pairs) {
    if (y.linking[idx(pair.tail_slot)][idx(pair.head_slot)] == 0) continue;
    int a = d.slots[idx(pair.tail_slot)].vertex, b = d.slots[idx(pair.head_slot)].vertex;
    pair_edges[idx(n * a + b)].push_back(pair.edge);
    if (a != b) pair_edges[idx(n * b + a)].push_back(pair.edge);
  }
}

std::optional<std::vector<int>> GammaTables::gate(const std::string& key, const OrientedGraph& sorted,
                                                  std::span<const VertexType> required) const {
  {
    std::lock_guard lock(gate_mutex_);
    auto it = gate_cache_.find(key);
    if (it != gate_cache_.end()) return it->second;
  }
  auto result = surviving_assignment(sorted, required);
  std::lock_guard lock(gate_mutex_);
  return gate_cache_.emplace(key, std::move(result)).first->second;
}

TermContext::TermContext(const OrientedGraph& h, const GammaTables& gamma)
    : h_(h), g_(gamma), at_(incidence(h.graph)), blocks_(block_degrees(h)) {
  const int m = h.graph.num_edges();
  odd_.resize(idx(2 * m));
  for (int e = 0; e < m; ++e)
    for (int end = 0; end < 2; ++end) odd_[idx(2 * e + end)] = h.is_tail({e, end});
  tau_.assign(idx(m), -1);
  used_.assign(idx(m), 0);
  image_.resize(idx(2 * m));
  preimage_.resize(idx(2 * m));

  // Edge form of H to its block form; independent of sigma and tau.
  std::vector<int> block_pos(idx(2 * m));
  for (int v = 0; v < h.graph.num_vertices(); ++v)
    for (int a = 0; a < 3; ++a) block_pos[idx(symbol(at_[idx(v)][idx(a)]))] = 3 * v + a;
  items_.clear();
  target_.clear();
  for (int e = 0; e < m; ++e) {
    int t = h.tail_end[idx(e)];
    items_.push_back(2 * e + t);
    items_.push_back(2 * e + 1 - t);
  }
  for (int s : items_) target_.push_back(block_pos[idx(s)]);
  edge_to_block_ = koszul(items_);

  std::vector<std::array<int, 3>> directed;
  for (int e = 0; e < m; ++e) {
    const Edge& x = h.graph.edge(e);
    int t = h.tail_end[idx(e)];
    if (x.u == x.v)
      directed.push_back({x.u, x.v, t});
    else
      directed.push_back({t == 0 ? x.u : x.v, t == 0 ? x.v : x.u, 0});
  }
  order_.resize(idx(m));
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return directed[idx(a)] < directed[idx(b)]; });
  for (int e : order_)
    for (int c : directed[idx(e)]) structure_ += std::to_string(c) + ",";
}

// Items listed in source order; target_ holds where each one lands.
int TermContext::koszul(const std::vector<int>& items) {
  int sign = 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!odd_[idx(items[i])]) continue;
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (odd_[idx(items[j])] && target_[i] > target_[j]) sign = -sign;
  }
  return sign;
}

int TermContext::sign(std::span<const int> sigma, std::span<const int> tau) {
  const LabelledTrivalentGraph& g = h_.graph;
  const LabelledTrivalentGraph& gamma = g_.link.arrows.graph;
  const int m = g.num_edges();
  const auto& h_edges = g.edges();
  const auto& g_edges = gamma.edges();
  for (int e = 0; e < m; ++e) {
    const int f = tau[idx(e)];
    const Edge& ge = g_edges[idx(f)];
    for (int end = 0; end < 2; ++end) {
      int x = sigma[idx(end == 0 ? h_edges[idx(e)].u : h_edges[idx(e)].v)];
      int end2 = ge.u == ge.v ? end : (ge.u == x ? 0 : 1);
      if ((end2 == 0 ? ge.u : ge.v) != x) throw std::logic_error("tau does not cover sigma");
      image_[idx(2 * e + end)] = {f, end2};
    }
  }
  int sign = edge_to_block_;

  // Inside each block, sort to Gamma's slot order at sigma(v).
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& gs = g_.at[idx(sigma[idx(v)])];
    std::array<int, 3> pos{};
    std::array<bool, 3> odd{};
    for (std::size_t a = 0; a < 3; ++a) {
      const int s = symbol(at_[idx(v)][a]);
      pos[a] = static_cast<int>(std::find(gs.begin(), gs.end(), image_[idx(s)]) - gs.begin());
      odd[a] = odd_[idx(s)];
    }
    sign *= koszul_sign(pos, odd);
  }

  sign *= block_sign(blocks_, sigma);

  // Block form of Gamma to its edge form; the H tail leads each pair.
  for (int s = 0; s < 2 * m; ++s) preimage_[idx(symbol(image_[idx(s)]))] = s;
  items_.clear();
  target_.clear();
  for (const auto& block : g_.at) {
    for (HalfEdge y : block) {
      int s = preimage_[idx(symbol(y))];
      items_.push_back(s);
      target_.push_back(2 * y.edge + (odd_[idx(s)] ? 0 : 1));
    }
  }
  return sign * koszul(items_);
}

const std::optional<std::vector<int>>& TermContext::gate(std::span<const int> sigma) {
  unsigned long bits = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (g_.link.data.vertex_types[idx(sigma[j])] == VertexType::II) bits |= 1ul << j;
  auto it = gates_.find(bits);
  if (it != gates_.end()) return it->second;
  if (!sorted_) {
    std::vector<Edge> edges;
    std::vector<int> tails;
    for (int e : order_) {
      const Edge& x = h_.graph.edge(e);
      int t = h_.tail_end[idx(e)];
      if (x.u == x.v) {
        edges.push_back(x);
        tails.push_back(t);
      } else {
        edges.push_back(t == 0 ? x : Edge{x.v, x.u});
        tails.push_back(0);
      }
    }
    sorted_ = OrientedGraph{LabelledTrivalentGraph::validate(h_.graph.num_vertices(), std::move(edges)), std::move(tails)};
  }
  std::vector<VertexType> required;
  for (int s : sigma) required.push_back(g_.link.data.vertex_types[idx(s)]);
  auto shared = g_.gate(structure_ + std::to_string(bits), *sorted_, required);
  // Back to H's edge labels.
  if (shared) {
    std::vector<int> p(shared->size());
    for (std::size_t i = 0; i < order_.size(); ++i) p[idx(order_[i])] = (*shared)[i];
    shared = std::move(p);
  }
  return gates_.emplace(bits, std::move(shared)).first->second;
}

const std::optional<std::vector<int>>* TermContext::accumulate(std::span<const int> sigma, long& matches,
                                                                long& sign_sum) {
  const std::optional<std::vector<int>>* witness = nullptr;
  for_each_match(sigma, [&](std::span<const int> tau) {
    if (!witness) witness = &gate(sigma);
    if (!witness->has_value()) return;
    ++matches;
    sign_sum += sign(sigma, tau);
  });
  return witness;
}

TermResult TermContext::term(std::span<const int> sigma) {
  TermResult r;
  long matches = 0, sign_sum = 0;
  if (const auto* witness = accumulate(sigma, matches, sign_sum)) r.indices = *witness;
  r.matches = static_cast<int>(matches);
  r.sign_sum = static_cast<int>(sign_sum);
  return r;
}

}  // namespace detail

int transport_sign(const OrientedGraph& h, const LabelledTrivalentGraph& gamma, std::span<const int> sigma,
                   std::span<const int> tau) {
  // Any orientation of gamma serves: only its incidence is read.
  std::vector<std::pair<int, int>> directions;
  for (const Edge& e : gamma.edges()) directions.emplace_back(e.u, e.v);
  YLink y{ArrowGraph{gamma, std::move(directions)}, {}, {}};
  detail::GammaTables tables(y);
  return detail::TermContext(h, tables).sign(sigma, tau);
}

std::optional<std::vector<int>> surviving_assignment(const OrientedGraph& h, std::span<const VertexType> required) {
  const auto& table = surviving_table();
  const LabelledTrivalentGraph& g = h.graph;
  const int m = g.num_edges();
  const auto at = detail::incidence(g);
  // Vertices whose last incident edge is e are checked once e is set.
  std::vector<std::vector<int>> closes(idx(m));
  for (int v = 0; v < g.num_vertices(); ++v) {
    int last = 0;
    for (HalfEdge x : at[idx(v)]) last = std::max(last, x.edge);
    closes[idx(last)].push_back(v);
  }
  std::vector<int> p(idx(m), 0);
  auto vertex_ok = [&](int v) {
    std::array<int, 3> c{};
    for (std::size_t a = 0; a < 3; ++a) {
      HalfEdge x = at[idx(v)][a];
      c[a] = h.is_tail(x) ? p[idx(x.edge)] - 1 : 3 + p[idx(x.edge)] - 1;
    }
    return table[required[idx(v)] == VertexType::I ? 0 : 1][idx(code_of(c))];
  };
  auto step = [&](auto&& self, int e) -> bool {
    if (e == m) return true;
    for (int value = 1; value <= 3; ++value) {
      p[idx(e)] = value;
      bool ok = true;
      for (int v : closes[idx(e)]) ok = ok && vertex_ok(v);
      if (ok && self(self, e + 1)) return true;
    }
    return false;
  };
  if (step(step, 0)) return p;
  return std::nullopt;
}

std::vector<std::vector<int>> linking_matches(const OrientedGraph& h, const YLink& gamma, std::span<const int> sigma) {
  detail::GammaTables tables(gamma);
  detail::TermContext ctx(h, tables);
  std::vector<std::vector<int>> out;
  ctx.for_each_match(sigma, [&](std::span<const int> tau) { out.emplace_back(tau.begin(), tau.end()); });
  return out;
}

TermResult evaluate_term(const OrientedGraph& h, const YLink& gamma, std::span<const int> sigma) {
  detail::GammaTables tables(gamma);
  return detail::TermContext(h, tables).term(sigma);
}

}  // namespace gc
