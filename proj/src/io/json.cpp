#include "gc/io.hpp"

#include "gc/error.hpp"

#include <fstream>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// nlohmann's accessors throw their own types; surface them as Parse errors.
template <typename F>
auto parsing(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorKind::Parse, std::string(what) + " needs a \"" + name + "\" field");
  return j.at(name);
}

std::vector<std::pair<int, int>> pairs(const Json& j, const char* what) {
  std::vector<std::pair<int, int>> out;
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be a list of pairs");
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::Parse, std::string(what) + " entries must be pairs");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

Json pairs_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string integer(std::uint64_t n) { return std::to_string(n); }
std::string integer(const mpz_class& n) { return n.get_str(); }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + " is not JSON: " + e.what());
  }
}

LabelledTrivalentGraph graph_from_json(const Json& j) {
  return parsing("graph", [&] {
    int n = field(j, "vertices", "graph").get<int>();
    std::vector<Edge> edges;
    for (auto [u, v] : pairs(field(j, "edges", "graph"), "edges")) edges.push_back({u, v});
    return LabelledTrivalentGraph::validate(n, std::move(edges));
  });
}

Json graph_to_json(const LabelledTrivalentGraph& g) {
  Json j;
  j["vertices"] = g.num_vertices();
  j["edges"] = pairs_json(g.edges());
  return j;
}

ArrowGraph arrow_from_json(const Json& j) {
  LabelledTrivalentGraph g = graph_from_json(j);
  return parsing("arrow graph", [&] {
    return ArrowGraph::validate(std::move(g), pairs(field(j, "directions", "arrow graph"), "directions"));
  });
}

Json arrow_to_json(const ArrowGraph& a) {
  Json j = graph_to_json(a.graph);
  Json dirs = Json::array();
  for (auto [t, h] : a.directions) dirs.push_back({t, h});
  j["directions"] = std::move(dirs);
  return j;
}

GradedComplex complex_from_json(const Json& j) {
  return parsing("complex", [&] {
    const Json& r = field(j, "ranks", "complex");
    if (!r.is_array() || r.size() != static_cast<std::size_t>(kNumDegrees))
      throw Error(ErrorKind::Parse, "ranks must list degrees 0.." + std::to_string(kTopDegree));
    Ranks ranks{};
    for (int d = 0; d < kNumDegrees; ++d) ranks[idx(d)] = r[idx(d)].get<int>();
    std::array<IntMatrix, kNumDegrees> boundary;
    if (j.contains("boundaries")) {
      const Json& b = j.at("boundaries");
      if (!b.is_object()) throw Error(ErrorKind::Parse, "boundaries must be an object keyed by degree");
      for (const auto& [key, m] : b.items()) {
        int d = -1;
        for (int c = 1; c < kNumDegrees; ++c)
          if (key == std::to_string(c)) d = c;
        if (d < 0) throw Error(ErrorKind::Parse, "boundary degree must be 1.." + std::to_string(kTopDegree) + ": " + key);
        boundary[idx(d)] = m.get<IntMatrix>();
        // A zero-column map may be written as [] even with rows present.
        if (boundary[idx(d)].empty()) boundary[idx(d)].assign(idx(ranks[idx(d - 1)]), {});
      }
    }
    return GradedComplex::make(ranks, std::move(boundary));
  });
}

Json complex_to_json(const GradedComplex& c) {
  Json j;
  j["ranks"] = c.ranks;
  Json b = Json::object();
  for (int d = 1; d < kNumDegrees; ++d) b[std::to_string(d)] = c.boundary[idx(d)];
  j["boundaries"] = std::move(b);
  return j;
}

Json propagator_to_json(const Propagator& g) {
  Json j;
  j["ranks"] = g.ranks;
  Json maps = Json::object();
  for (int d = 0; d < kTopDegree; ++d) {
    Json m = Json::array();
    for (const auto& row : g.g[idx(d)]) {
      Json r = Json::array();
      for (const Rational& x : row) r.push_back(to_string(x));
      m.push_back(std::move(r));
    }
    maps[std::to_string(d)] = std::move(m);
  }
  j["propagators"] = std::move(maps);
  return j;
}

Json class_to_json(const GraphClass& c) {
  Json j;
  if (c.zero()) {
    j["class"] = "zero";
  } else {
    j["class"] = "signed";
    j["key"] = c.key;
    j["sign"] = c.sign;
  }
  return j;
}

Json report_to_json(const EvaluationReport& r) {
  Json j;
  j["input"] = arrow_to_json(r.input);
  j["mode"] = to_string(r.mode);
  j["type_convention"] = to_string(r.convention);
  Json diag;
  diag["k"] = std::to_string(r.input.graph.k());
  diag["aut"] = integer(r.aut);
  diag["aut_e"] = integer(r.aut_e);
  diag["aut_v"] = integer(r.aut_v);
  diag["representatives"] = integer(r.representatives);
  diag["terms"] = integer(r.terms);
  diag["labellings"] = integer(labelling_count(r.input.graph.k()));
  j["diagnostics"] = std::move(diag);
  j["identities"] = r.identities;
  Json result = Json::object();
  for (const auto& [key, value] : r.rendered) result[key] = value;
  j["result"] = std::move(result);
  return j;
}

}  // namespace gc
