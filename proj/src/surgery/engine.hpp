#pragma once

// Per-graph precomputation shared by the term functions and evaluate_full.

#include "gc/surgery.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace gc::detail {

using Incidence = std::vector<std::array<HalfEdge, 3>>;

Incidence incidence(const LabelledTrivalentGraph& g);

struct GammaTables {
  explicit GammaTables(const YLink& y);

  const YLink& link;
  int n = 0;
  Incidence at;
  std::vector<std::vector<int>> pair_edges;  // n*a+b: linked edges joining a and b

  // Type gate results keyed by the label-free directed edge list and the
  // required types; witnesses are indexed by position in that sorted list.
  std::optional<std::vector<int>> gate(const std::string& key, const OrientedGraph& sorted,
                                       std::span<const VertexType> required) const;

 private:
  mutable std::mutex gate_mutex_;
  mutable std::unordered_map<std::string, std::optional<std::vector<int>>> gate_cache_;
};

class TermContext {
 public:
  TermContext(const OrientedGraph& h, const GammaTables& gamma);

  template <typename F>
  void for_each_match(std::span<const int> sigma, F&& visit) {
    const int m = h_.graph.num_edges();
    auto step = [&](auto&& self, int e) -> void {
      if (e == m) {
        visit(std::span<const int>(tau_));
        return;
      }
      const Edge& edge = h_.graph.edge(e);
      int a = sigma[static_cast<std::size_t>(edge.u)], b = sigma[static_cast<std::size_t>(edge.v)];
      for (int f : g_.pair_edges[static_cast<std::size_t>(g_.n * a + b)]) {
        if (used_[static_cast<std::size_t>(f)]) continue;
        used_[static_cast<std::size_t>(f)] = 1;
        tau_[static_cast<std::size_t>(e)] = f;
        self(self, e + 1);
        used_[static_cast<std::size_t>(f)] = 0;
      }
    };
    step(step, 0);
  }

  int sign(std::span<const int> sigma, std::span<const int> tau);
  const std::optional<std::vector<int>>& gate(std::span<const int> sigma);
  TermResult term(std::span<const int> sigma);
  // Adds the gated terms of sigma; returns the gate result if any linking term exists.
  const std::optional<std::vector<int>>* accumulate(std::span<const int> sigma, long& matches, long& sign_sum);

 private:
  int koszul(const std::vector<int>& items);

  const OrientedGraph& h_;
  const GammaTables& g_;
  Incidence at_;
  std::vector<char> odd_;
  BlockDegrees blocks_;
  int edge_to_block_ = 1;
  std::vector<int> order_;  // edge labels sorted by (tail, head, loop direction)
  std::string structure_;
  std::optional<OrientedGraph> sorted_;
  std::unordered_map<unsigned long, std::optional<std::vector<int>>> gates_;
  std::vector<int> tau_;
  std::vector<char> used_;
  std::vector<HalfEdge> image_;
  std::vector<int> preimage_, items_, target_;
};

}  // namespace gc::detail
