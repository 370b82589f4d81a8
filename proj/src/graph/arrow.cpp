#include "gc/error.hpp"
#include "gc/graph.hpp"

#include <cstddef>

namespace gc {

ArrowGraph ArrowGraph::validate(LabelledTrivalentGraph graph, std::vector<std::pair<int, int>> directions) {
  if (static_cast<int>(directions.size()) != graph.num_edges())
    throw Error(ErrorKind::Parse, "directions must have one entry per edge");
  std::vector<int> out(static_cast<std::size_t>(graph.num_vertices()), 0);
  std::vector<int> in(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (int e = 0; e < graph.num_edges(); ++e) {
    auto [tail, head] = directions[static_cast<std::size_t>(e)];
    const Edge& edge = graph.edge(e);
    bool same = (tail == edge.u && head == edge.v) || (tail == edge.v && head == edge.u);
    if (!same) throw Error(ErrorKind::Parse, "direction of edge " + std::to_string(e) + " does not match its endpoints");
    ++out[static_cast<std::size_t>(tail)];
    ++in[static_cast<std::size_t>(head)];
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (out[static_cast<std::size_t>(v)] == 0 || in[static_cast<std::size_t>(v)] == 0)
      throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " is a source or a sink");
  }
  return ArrowGraph{std::move(graph), std::move(directions)};
}

namespace {

class OrientationSearch {
 public:
  OrientationSearch(const LabelledTrivalentGraph& g, bool first_only) : g_(g), first_only_(first_only) {
    std::size_t n = static_cast<std::size_t>(g.num_vertices());
    out_.assign(n, 0);
    in_.assign(n, 0);
    undecided_.assign(n, 3);
    directions_.resize(static_cast<std::size_t>(g.num_edges()));
  }

  std::vector<ArrowGraph> run() {
    step(0);
    return std::move(found_);
  }

 private:
  bool feasible(int v) const {
    std::size_t i = static_cast<std::size_t>(v);
    if (undecided_[i] > 0) return true;
    return out_[i] > 0 && in_[i] > 0;
  }

  void step(int e) {
    if (first_only_ && !found_.empty()) return;
    if (e == g_.num_edges()) {
      found_.push_back(ArrowGraph{g_, directions_});
      return;
    }
    const Edge edge = g_.edge(e);
    const int tries = edge.u == edge.v ? 1 : 2;
    for (int t = 0; t < tries; ++t) {
      int tail = t == 0 ? edge.u : edge.v;
      int head = t == 0 ? edge.v : edge.u;
      apply(tail, head, +1);
      directions_[static_cast<std::size_t>(e)] = {tail, head};
      if (feasible(tail) && feasible(head)) step(e + 1);
      apply(tail, head, -1);
    }
  }

  void apply(int tail, int head, int delta) {
    out_[static_cast<std::size_t>(tail)] += delta;
    in_[static_cast<std::size_t>(head)] += delta;
    undecided_[static_cast<std::size_t>(tail)] -= delta;
    undecided_[static_cast<std::size_t>(head)] -= delta;
  }

  const LabelledTrivalentGraph& g_;
  bool first_only_;
  std::vector<int> out_, in_, undecided_;
  std::vector<std::pair<int, int>> directions_;
  std::vector<ArrowGraph> found_;
};

}  // namespace

ArrowGraph find_arrow_orientation(const LabelledTrivalentGraph& g) {
  auto found = OrientationSearch(g, true).run();
  // Every connected trivalent graph admits one; an empty result is a bug.
  if (found.empty()) throw Error(ErrorKind::Parse, "no arrow orientation found");
  return std::move(found.front());
}

std::vector<ArrowGraph> all_arrow_orientations(const LabelledTrivalentGraph& g) {
  return OrientationSearch(g, false).run();
}

}  // namespace gc
