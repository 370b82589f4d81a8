#include "gc/error.hpp"
#include "gc/permutation.hpp"
#include "gc/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

VertexType vertex_type(int outgoing, TypeConvention convention) {
  bool type_one = outgoing == 2;
  if (convention == TypeConvention::Flipped) type_one = !type_one;
  return type_one ? VertexType::I : VertexType::II;
}

OrientedGraph OrientedGraph::from_arrows(const ArrowGraph& a) {
  std::vector<int> tails;
  for (int e = 0; e < a.graph.num_edges(); ++e) tails.push_back(a.directions[idx(e)].first == a.graph.edge(e).u ? 0 : 1);
  return {a.graph, std::move(tails)};
}

int YLinkData::slot_of(HalfEdge h) const {
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].half_edge == h) return static_cast<int>(s);
  throw std::out_of_range("half-edge has no slot");
}

YLink ylink(const ArrowGraph& a, TypeConvention convention) {
  const LabelledTrivalentGraph& g = a.graph;
  OrientedGraph o = OrientedGraph::from_arrows(a);
  YLinkData d;
  d.k = g.k();
  for (int v = 0; v < g.num_vertices(); ++v) {
    int out = 0;
    for (HalfEdge h : g.half_edges_at(v)) {
      d.slots.push_back({v, h, o.is_tail(h)});
      out += o.is_tail(h) ? 1 : 0;
    }
    d.vertex_types.push_back(vertex_type(out, convention));
  }
  const int n = static_cast<int>(d.slots.size());
  LinkingMatrix lk(idx(n), std::vector<int>(idx(n), 0));
  for (int e = 0; e < g.num_edges(); ++e) {
    int t = o.tail_end[idx(e)];
    HopfPair p{e, d.slot_of({e, t}), d.slot_of({e, 1 - t})};
    lk[idx(p.tail_slot)][idx(p.head_slot)] = 1;
    lk[idx(p.head_slot)][idx(p.tail_slot)] = 1;
    d.hopf_pairs.push_back(p);
  }
  return {a, std::move(d), std::move(lk)};
}

BlockDegrees block_degrees(const OrientedGraph& h) {
  BlockDegrees d;
  for (int v = 0; v < h.graph.num_vertices(); ++v) {
    std::array<int, 3> deg{};
    int sum = 0;
    auto hs = h.graph.half_edges_at(v);
    for (std::size_t a = 0; a < 3; ++a) {
      deg[a] = h.is_tail(hs[a]) ? 1 : 2;
      sum += deg[a];
    }
    d.degrees.push_back(deg);
    d.odd.push_back(sum % 2 == 1);
  }
  return d;
}

int block_sign(const BlockDegrees& d, std::span<const int> sigma) {
  bool valid = sigma.size() == d.odd.size();
  if (valid && sigma.size() <= 64) {
    std::uint64_t seen = 0;
    for (int s : sigma) {
      if (s < 0 || s >= static_cast<int>(sigma.size()) || (seen >> s) & 1u) valid = false;
      else seen |= std::uint64_t{1} << s;
    }
  } else if (valid) {
    valid = is_permutation_of_range(sigma);
  }
  if (!valid) throw std::invalid_argument("sigma is not a permutation of the blocks");
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!d.odd[i]) continue;
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (d.odd[j] && sigma[i] > sigma[j]) sign = -sign;
  }
  return sign;
}

}  // namespace gc
