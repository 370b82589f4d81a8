#include "gc/error.hpp"
#include "gc/parallel.hpp"
#include "gc/space.hpp"

#include <unordered_set>

namespace gc {

Basis::Basis(int k, std::vector<std::string> keys) : k_(k), keys_(std::move(keys)) {
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::optional<std::size_t> Basis::index(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string contraction_key(const FourValentGraph& c) {
  CanonicalForm cf = canonical_form(c.as_multigraph(), false);
  std::string out = "fv:" + std::to_string(c.num_vertices) + ":";
  for (int color : cf.colors) out += static_cast<char>('0' + color);
  for (auto [u, v] : cf.edges) out += "," + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

IntRow relation_row(const Basis& basis, const FourValentGraph& c, int new_edge_label,
                    const IhxCoefficients& coefficients) {
  std::map<int, std::int64_t> acc;
  for (const IhxTerm& term : ihx_expansions(c, new_edge_label, coefficients)) {
    GraphClass cls = reduce(term.graph);
    if (cls.zero() || term.coefficient == 0) continue;
    auto pos = basis.index(cls.key);
    if (!pos) throw Error(ErrorKind::Parse, "expansion class missing from basis: " + cls.key);
    acc[static_cast<int>(*pos)] += static_cast<std::int64_t>(term.coefficient) * cls.sign;
  }
  IntRow row;
  for (auto [col, v] : acc)
    if (v != 0) row.emplace_back(col, v);
  return row;
}

RelationSet relations(const Enumeration& e, const SpaceConfig& config) {
  struct Candidate {
    std::string key;
    IntRow row;
  };
  const std::vector<std::string> keys = e.all_keys();
  std::vector<std::vector<Candidate>> per_class(keys.size());
  parallel_for(keys.size(), config.jobs, [&](std::size_t i) {
    LabelledTrivalentGraph g = graph_from_key(keys[i]);
    std::unordered_set<std::string> local;
    for (int edge = 0; edge < g.num_edges(); ++edge) {
      if (g.is_loop(edge)) continue;
      FourValentGraph c = contract_edge(g, edge);
      std::string ck = contraction_key(c);
      if (!local.insert(ck).second) continue;
      per_class[i].push_back({std::move(ck), relation_row(e.basis, c, edge, config.ihx)});
    }
  });

  RelationSet out;
  out.k = e.k;
  out.num_cols = static_cast<int>(e.basis.size());
  std::unordered_set<std::string> seen;
  for (auto& batch : per_class) {
    for (Candidate& c : batch) {
      if (!seen.insert(c.key).second) continue;
      if (!c.row.empty()) out.rows.push_back(std::move(c.row));
    }
  }
  return out;
}

}  // namespace gc
