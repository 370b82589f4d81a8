#include "gc/error.hpp"
#include "gc/morse.hpp"

#include <algorithm>
#include <numeric>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool valid_ref(const BasisRef& b) { return b.degree >= 0 && b.degree <= kTopDegree && b.index >= 0; }

}  // namespace

CGraph CGraph::split_edges(const LabelledTrivalentGraph& g, std::map<int, Decoration> decorations) {
  for (const auto& [edge, d] : decorations) {
    if (edge < 0 || edge >= g.num_edges())
      throw Error(ErrorKind::InvalidDecoration, "no edge with label " + std::to_string(edge));
    if (!valid_ref(d.p) || !valid_ref(d.q))
      throw Error(ErrorKind::InvalidDecoration, "decoration of edge " + std::to_string(edge) + " is out of range");
  }
  return CGraph(g, std::move(decorations));
}

int CGraph::degree(int edge) const {
  auto it = decorations_.find(edge);
  if (it == decorations_.end()) return 1;
  return it->second.p.degree - it->second.q.degree;
}

std::vector<int> CGraph::degrees() const {
  std::vector<int> out;
  for (int e = 0; e < underlying_.num_edges(); ++e) out.push_back(degree(e));
  return out;
}

std::vector<std::vector<int>> CGraph::components() const {
  const int n = underlying_.num_vertices();
  std::vector<int> parent(idx(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[idx(v)] != v) v = parent[idx(v)] = parent[idx(parent[idx(v)])];
    return v;
  };
  for (int e = 0; e < underlying_.num_edges(); ++e) {
    if (is_separated(e)) continue;
    int a = find(underlying_.edge(e).u), b = find(underlying_.edge(e).v);
    if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CGraph::WhiteVertex> CGraph::white_vertices() const {
  std::vector<WhiteVertex> out;
  for (const auto& [edge, d] : decorations_) {
    out.push_back({edge, 0, underlying_.edge(edge).u, d.p});
    out.push_back({edge, 1, underlying_.edge(edge).v, d.q});
  }
  return out;
}

LabelledTrivalentGraph close(const CGraph& c) {
  // Compact edges as they are; each separated edge rejoins its two white vertices.
  std::vector<Edge> edges = c.underlying().edges();
  std::vector<CGraph::WhiteVertex> whites = c.white_vertices();
  for (std::size_t i = 0; i + 1 < whites.size(); i += 2) edges[idx(whites[i].edge)] = {whites[i].black, whites[i + 1].black};
  return LabelledTrivalentGraph::validate(c.underlying().num_vertices(), std::move(edges));
}

TraceTerm trace_tr_g(const std::vector<Propagator>& gs, const CGraph& c) {
  if (static_cast<int>(gs.size()) != c.underlying().num_edges())
    throw Error(ErrorKind::Parse, "need one propagator per edge label");
  Rational coefficient = 1;
  for (const auto& [edge, d] : c.separated()) {
    if (d.p.degree != d.q.degree + 1)
      throw Error(ErrorKind::DegreeMismatch, "separated edge " + std::to_string(edge) + " has degree " +
                                                 std::to_string(d.p.degree - d.q.degree));
    const Propagator& g = gs[idx(edge)];
    if (d.q.index >= g.ranks[idx(d.q.degree)] || d.p.index >= g.ranks[idx(d.p.degree)])
      throw Error(ErrorKind::InvalidDecoration, "decoration of edge " + std::to_string(edge) + " is out of range");
    coefficient *= -g.coefficient(d.q.degree, d.p.index, d.q.index);
  }
  return {coefficient, close(c)};
}

std::string IndexTuple::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < inputs.size(); ++i) out += (i ? "," : "") + std::to_string(inputs[i]);
  out += "|";
  for (std::size_t i = 0; i < outputs.size(); ++i) out += (i ? "," : "") + std::to_string(outputs[i]);
  return out + ")";
}

std::vector<IndexTuple> surviving_indices(VertexType type) {
  const int target = type == VertexType::I ? 4 : 5;
  std::vector<IndexTuple> out;
  for (int r = 0; r <= 3; ++r) {
    // Nondecreasing inputs in {1,2,3} and outputs in {0,1,2}.
    std::vector<int> in(idx(r), 1), outv(idx(3 - r), 0);
    auto next = [](std::vector<int>& v, int lo, int hi) {
      for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < hi) {
          ++v[i];
          for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = v[i];
          return true;
        }
      }
      std::fill(v.begin(), v.end(), lo);
      return false;
    };
    do {
      do {
        int total = 0;
        for (int a : in) total += 4 - a;
        for (int b : outv) total += b;
        if (total == target) out.push_back({in, outv});
      } while (next(outv, 0, 2));
    } while (next(in, 1, 3));
  }
  auto group = [](const IndexTuple& t) {
    static constexpr int kRank[] = {1, 3, 2, 0};  // input counts 3, 0, 2, 1 in that order
    return kRank[t.inputs.size()];
  };
  std::sort(out.begin(), out.end(), [&](const IndexTuple& a, const IndexTuple& b) {
    if (group(a) != group(b)) return group(a) < group(b);
    return a < b;
  });
  return out;
}

}  // namespace gc
