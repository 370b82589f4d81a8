#include "gc/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>

namespace gc {

EdgeList relabelled_edges(const std::vector<Edge>& edges, const std::vector<int>& labelling) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    int a = labelling[static_cast<std::size_t>(e.u)];
    int b = labelling[static_cast<std::size_t>(e.v)];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Partition = std::vector<std::vector<int>>;

class Canonizer {
 public:
  Canonizer(const ColoredMultigraph& g, bool collect) : g_(g), n_(g.num_vertices), collect_(collect) {
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    std::vector<int> mult(static_cast<std::size_t>(n_ * n_), 0);
    for (const Edge& e : g.edges) {
      ++mult[static_cast<std::size_t>(e.u * n_ + e.v)];
      if (e.u != e.v) ++mult[static_cast<std::size_t>(e.v * n_ + e.u)];
    }
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < n_; ++w) {
        int m = mult[static_cast<std::size_t>(v * n_ + w)];
        if (m > 0) adjacency_[static_cast<std::size_t>(v)].emplace_back(w, m);
      }
    }
  }

  CanonicalForm run() {
    Partition initial;
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color(a) < color(b); });
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || color(order[i]) != color(order[i - 1])) initial.emplace_back();
      initial.back().push_back(order[i]);
    }
    search(std::move(initial));

    CanonicalForm out;
    out.labelling = best_labelling_;
    out.edges = best_edges_;
    out.colors.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.colors[static_cast<std::size_t>(best_labelling_[static_cast<std::size_t>(v)])] = color(v);
    if (collect_) {
      std::vector<int> inverse_best(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) inverse_best[static_cast<std::size_t>(best_labelling_[static_cast<std::size_t>(v)])] = v;
      for (const auto& leaf : optimal_leaves_) {
        std::vector<int> aut(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) aut[static_cast<std::size_t>(v)] = inverse_best[static_cast<std::size_t>(leaf[static_cast<std::size_t>(v)])];
        out.automorphisms.push_back(std::move(aut));
      }
      std::sort(out.automorphisms.begin(), out.automorphisms.end());
    }
    return out;
  }

 private:
  int color(int v) const { return g_.colors.empty() ? 0 : g_.colors[static_cast<std::size_t>(v)]; }

  // Split cells by the multiset of (neighbour cell, multiplicity) until stable.
  void refine(Partition& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    using Signature = std::vector<std::pair<int, int>>;
    std::vector<Signature> signature(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      for (int v = 0; v < n_; ++v) {
        auto& sig = signature[static_cast<std::size_t>(v)];
        sig.clear();
        for (auto [w, m] : adjacency_[static_cast<std::size_t>(v)]) {
          // Loops are tagged with a negative multiplicity so they differ from
          // an edge into the same cell.
          sig.emplace_back(cell_of[static_cast<std::size_t>(w)], w == v ? -m : m);
        }
        std::sort(sig.begin(), sig.end());
      }
      Partition next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
          return signature[static_cast<std::size_t>(a)] < signature[static_cast<std::size_t>(b)];
        });
        for (std::size_t i = 0; i < cell.size(); ++i) {
          if (i == 0 || signature[static_cast<std::size_t>(cell[i])] != signature[static_cast<std::size_t>(cell[i - 1])])
            next.emplace_back();
          next.back().push_back(cell[i]);
        }
      }
      bool changed = next.size() != cells.size();
      cells = std::move(next);
      if (!changed) return;
    }
  }

  void search(Partition cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    std::size_t index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> members = cells[index];
    std::sort(members.begin(), members.end());
    for (int v : members) {
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != index) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> labelling(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < cells.size(); ++c) labelling[static_cast<std::size_t>(cells[c][0])] = static_cast<int>(c);
    EdgeList edges = relabelled_edges(g_.edges, labelling);
    if (!have_best_ || edges < best_edges_) {
      have_best_ = true;
      best_edges_ = std::move(edges);
      best_labelling_ = labelling;
      optimal_leaves_.clear();
      if (collect_) optimal_leaves_.push_back(std::move(labelling));
    } else if (collect_ && edges == best_edges_) {
      optimal_leaves_.push_back(std::move(labelling));
    }
  }

  const ColoredMultigraph& g_;
  int n_;
  bool collect_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  bool have_best_ = false;
  EdgeList best_edges_;
  std::vector<int> best_labelling_;
  std::vector<std::vector<int>> optimal_leaves_;
};

}  // namespace

CanonicalForm canonical_form(const ColoredMultigraph& g, bool collect_automorphisms) {
  assert(g.colors.empty() || static_cast<int>(g.colors.size()) == g.num_vertices);
  if (g.num_vertices == 0) return {};
  return Canonizer(g, collect_automorphisms).run();
}

}  // namespace gc
