#include "gc/error.hpp"
#include "gc/parallel.hpp"
#include "gc/space.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Connected partial graph on the touched vertices. residual[v] counts the
// stubs of v not yet attached. Untouched vertices are implicit.
struct State {
  int touched = 0;
  std::vector<int> residual;
  std::vector<Edge> edges;
};

struct Keyed {
  std::string key;
  State state;
};

// Canonical relabelling of the state plus a byte key for deduplication.
Keyed canonicalize(const State& s) {
  CanonicalForm cf = canonical_form(ColoredMultigraph{s.touched, s.residual, s.edges}, false);
  Keyed out;
  out.state.touched = s.touched;
  out.state.residual = cf.colors;
  out.key.reserve(1 + cf.colors.size() + 2 * cf.edges.size());
  out.key.push_back(static_cast<char>(s.touched));
  for (int c : cf.colors) out.key.push_back(static_cast<char>('0' + c));
  for (auto [u, v] : cf.edges) {
    out.state.edges.push_back({u, v});
    out.key.push_back(static_cast<char>(u));
    out.key.push_back(static_cast<char>(v));
  }
  return out;
}

class Expander {
 public:
  Expander(const State& s, int n) : s_(s), n_(n) {
    for (int w = 0; w < s.touched; ++w) {
      if (s.residual[idx(w)] > 0) {
        if (v_ < 0) {
          v_ = w;
        } else {
          open_.push_back(w);
        }
      }
    }
  }

  // Children of closing the first open vertex. Children that closed every
  // open vertex are returned only when they cover all n vertices.
  std::vector<State> run() {
    if (v_ < 0) return {};
    const int r = s_.residual[idx(v_)];
    for (int loops = 0; 2 * loops <= r; ++loops) {
      State base = s_;
      for (int i = 0; i < loops; ++i) base.edges.push_back({v_, v_});
      base.residual[idx(v_)] = 0;
      distribute(base, 0, r - 2 * loops);
    }
    return std::move(out_);
  }

 private:
  void distribute(State& cur, std::size_t i, int left) {
    if (i == open_.size()) {
      std::vector<int> parts;
      partitions(cur, left, 3, parts);
      return;
    }
    const int w = open_[i];
    const int cap = std::min(left, cur.residual[idx(w)]);
    for (int x = 0; x <= cap; ++x) {
      for (int j = 0; j < x; ++j) cur.edges.push_back({v_, w});
      cur.residual[idx(w)] -= x;
      distribute(cur, i + 1, left - x);
      cur.residual[idx(w)] += x;
      cur.edges.resize(cur.edges.size() - idx(x));
    }
  }

  // Stubs going to fresh vertices, as a partition with parts <= max_part.
  void partitions(const State& cur, int left, int max_part, std::vector<int>& parts) {
    if (left == 0) {
      emit(cur, parts);
      return;
    }
    if (cur.touched + static_cast<int>(parts.size()) >= n_) return;
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      partitions(cur, left - p, p, parts);
      parts.pop_back();
    }
  }

  void emit(const State& cur, const std::vector<int>& parts) {
    State child = cur;
    for (int p : parts) {
      int fresh = child.touched++;
      child.residual.push_back(3 - p);
      for (int j = 0; j < p; ++j) child.edges.push_back({v_, fresh});
    }
    bool open = std::any_of(child.residual.begin(), child.residual.end(), [](int x) { return x > 0; });
    if (!open && child.touched < n_) return;  // closed off a proper component
    out_.push_back(std::move(child));
  }

  const State& s_;
  int n_;
  int v_ = -1;
  std::vector<int> open_;
  std::vector<State> out_;
};

}  // namespace

std::vector<std::string> Enumeration::all_keys() const {
  std::vector<std::string> out = basis.keys();
  out.insert(out.end(), zero_keys.begin(), zero_keys.end());
  std::sort(out.begin(), out.end());
  return out;
}

Enumeration enumerate(int k, const SpaceConfig& config) {
  if (k < 1) throw Error(ErrorKind::WrongK, "k must be positive");
  if (k > config.max_k)
    throw Error(ErrorKind::ResourceLimit,
                "k=" + std::to_string(k) + " exceeds the configured cap of " + std::to_string(config.max_k));
  const int n = 2 * k;

  std::unordered_set<std::string> visited;
  std::set<std::string> complete;
  std::vector<State> frontier = {State{1, {3}, {}}};
  while (!frontier.empty()) {
    std::vector<std::vector<Keyed>> children(frontier.size());
    parallel_for(frontier.size(), config.jobs, [&](std::size_t i) {
      for (State& c : Expander(frontier[i], n).run()) children[i].push_back(canonicalize(c));
    });
    std::vector<State> next;
    for (auto& batch : children) {
      for (Keyed& c : batch) {
        if (!visited.insert(c.key).second) continue;
        bool done = c.state.touched == n &&
                    std::all_of(c.state.residual.begin(), c.state.residual.end(), [](int x) { return x == 0; });
        if (done) {
          EdgeList edges;
          for (const Edge& e : c.state.edges) edges.emplace_back(e.u, e.v);
          complete.insert(render_key(n, edges));
        } else {
          next.push_back(std::move(c.state));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::string> keys(complete.begin(), complete.end());
  std::vector<char> zero(keys.size(), 0);
  parallel_for(keys.size(), config.jobs, [&](std::size_t i) { zero[i] = reduce(graph_from_key(keys[i])).zero(); });
  Enumeration e;
  e.k = k;
  std::vector<std::string> signed_keys;
  for (std::size_t i = 0; i < keys.size(); ++i) (zero[i] ? e.zero_keys : signed_keys).push_back(keys[i]);
  e.basis = Basis(k, std::move(signed_keys));
  return e;
}

}  // namespace gc
