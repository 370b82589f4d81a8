#include "gc/cli.hpp"

#include "gc/cache.hpp"
#include "gc/error.hpp"
#include "gc/io.hpp"
#include "gc/morse.hpp"
#include "gc/space.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

namespace gc {

namespace fs = std::filesystem;

namespace {

SpaceConfig space_config(const RunConfig& cfg) {
  SpaceConfig s;
  s.jobs = cfg.jobs;
  s.primes = cfg.primes;
  s.max_k = cfg.max_k;
  s.cache = cfg.cache;
  return s;
}

// Graph files may omit directions; surgery then picks the first orientation found.
ArrowGraph arrows_from_file(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("directions")) return arrow_from_json(j);
  return find_arrow_orientation(graph_from_json(j));
}

Json dim_json(int k, const RunConfig& cfg) {
  GraphSpace space(k, space_config(cfg));
  Json j;
  j["k"] = k;
  j["dimension"] = space.dimension();
  return j;
}

Json enum_json(int k, const RunConfig& cfg) {
  Enumeration e = enumerate(k, space_config(cfg));
  Json j;
  j["k"] = k;
  j["classes"] = e.basis.size() + e.zero_keys.size();
  j["basis"] = e.basis.keys();
  j["zero"] = e.zero_keys;
  return j;
}

Json aut_json(const LabelledTrivalentGraph& g) {
  AutomorphismGroup group = automorphism_group(g);
  Json j;
  j["order"] = std::to_string(group.order());
  j["aut_e"] = std::to_string(group.aut_e);
  j["aut_v"] = std::to_string(group.aut_v());
  j["has_odd_edge_permutation"] = group.has_odd_edge_permutation;
  Json list = Json::array();
  for (const Automorphism& a : list_automorphisms(g)) {
    Json item;
    item["vertices"] = a.vertex_perm;
    item["edges"] = a.edge_perm;
    list.push_back(std::move(item));
  }
  j["automorphisms"] = std::move(list);
  return j;
}

Json surviving_json() {
  Json j;
  for (VertexType t : {VertexType::I, VertexType::II}) {
    Json list = Json::array();
    for (const IndexTuple& tuple : surviving_indices(t)) list.push_back(tuple.str());
    j[t == VertexType::I ? "I" : "II"] = std::move(list);
  }
  return j;
}

Json propagator_json(const GradedComplex& c) {
  Propagator g = compute_propagator(c);
  Json j = propagator_to_json(g);
  j["contraction"] = is_contraction(c, g);
  return j;
}

Json surgery_json(const std::string& path, EvaluationMode mode, const RunConfig& cfg) {
  ArrowGraph a = arrows_from_file(path);
  GraphSpace space(a.graph.k(), space_config(cfg));
  SurgeryConfig sc{cfg.convention, cfg.jobs};
  EvaluationReport r = mode == EvaluationMode::Orbit ? evaluate_orbit(a, space, sc) : evaluate_full(a, space, sc);
  return report_to_json(r);
}

LabelledTrivalentGraph k4() { return LabelledTrivalentGraph::validate(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
LabelledTrivalentGraph theta() { return LabelledTrivalentGraph::validate(2, {{0, 1}, {0, 1}, {0, 1}}); }

// A handful of fast end-to-end checks with known answers.
Json selftest_json(const RunConfig& cfg, bool& ok) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"dimensions k=1..4 are 0,1,0,0",
       [&] {
         const std::size_t expected[] = {0, 1, 0, 0};
         for (int k = 1; k <= 4; ++k)
           if (GraphSpace(k, space_config(cfg)).dimension() != expected[k - 1]) return false;
         return true;
       }},
      {"K4 has 24 automorphisms, all edge permutations even",
       [] {
         AutomorphismGroup g = automorphism_group(k4());
         return g.order() == 24 && !g.has_odd_edge_permutation;
       }},
      {"11 surviving tuples per vertex type",
       [] { return surviving_indices(VertexType::I).size() == 11 && surviving_indices(VertexType::II).size() == 11; }},
      {"orbit surgery on K4 gives its nonzero class",
       [&] {
         GraphSpace space(2, space_config(cfg));
         AVector z = evaluate_orbit(find_arrow_orientation(k4()), space, {cfg.convention, cfg.jobs}).result;
         return !z.is_zero() && z == space.normal_form(space.class_of(k4()));
       }},
      {"orbit surgery on theta vanishes",
       [&] {
         GraphSpace space(1, space_config(cfg));
         return evaluate_orbit(find_arrow_orientation(theta()), space, {cfg.convention, cfg.jobs}).result.is_zero();
       }},
      {"propagator of an acyclic complex is a contraction",
       [] {
         GradedComplex c = GradedComplex::make({1, 2, 1, 0, 0}, {IntMatrix{}, IntMatrix{{1, 1}}, IntMatrix{{1}, {-1}}});
         return is_contraction(c, compute_propagator(c));
       }},
  };
  Json list = Json::array();
  ok = true;
  for (auto& [name, check] : checks) {
    bool passed = check();
    ok = ok && passed;
    Json item;
    item["name"] = name;
    item["ok"] = passed;
    list.push_back(std::move(item));
  }
  Json j;
  j["checks"] = std::move(list);
  j["ok"] = ok;
  return j;
}

Json cache_json(const std::string& action, std::optional<int> k, const RunConfig& cfg) {
  if (action == "status") {
    Json list = Json::array();
    for (const CacheEntry& e : cache_status(cfg.cache)) {
      Json item;
      item["k"] = e.k;
      item["kind"] = e.kind;
      item["size"] = e.size;
      item["format_version"] = e.format_version;
      list.push_back(std::move(item));
    }
    return list;
  }
  if (action == "clear") {
    Json j;
    j["removed"] = cache_clear(cfg.cache);
    return j;
  }
  GraphSpace space(*k, space_config(cfg));
  space.rref();
  Json j;
  j["k"] = *k;
  j["warmed"] = Json::array({"basis", "zeros", "relations", "rref"});
  return j;
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  auto join = [&](const std::string& key) { return path.empty() ? key : path + "." + key; };
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(path, "{}");
    for (const auto& [key, value] : j.items()) flatten(value, join(key), rows);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) {
      return x.is_primitive() && !(x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
    });
    if (scalars) {
      std::string line;
      for (const Json& x : j) line += (line.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
      rows.emplace_back(path, line.empty() ? "-" : line);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], join(std::to_string(i)), rows);
    }
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GC_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "gc";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "gc";
  return ".gc-cache";
}

std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    if (key.empty()) {
      out << value << '\n';
    } else {
      out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
  }
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trivalent graph spaces, Morse propagators and clasper surgery evaluation", "gc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> k;
  std::optional<std::string> cache_flag;
  std::string mode = "orbit", format = "json", convention = "default";
  RunConfig cfg;
  app.add_option("-k", k, "Graph degree (half the vertex count)")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "Surgery evaluation mode")->check(CLI::IsMember({"orbit", "full"}));
  app.add_option("--primes", cfg.primes, "Primes per modular rank attempt")->check(CLI::Range(3, 64));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--cache", cache_flag, "Cache directory (overrides GC_CACHE)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--type-convention", convention, "Vertex type convention")
      ->check(CLI::IsMember({"default", "flipped"}));
  app.add_option("--max-k", cfg.max_k, "Refuse space computations above this k")->check(CLI::PositiveNumber);

  std::string file, action;
  auto* enum_cmd = app.add_subcommand("enum", "List the classes of connected trivalent graphs");
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the graph space");
  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical class and sign of a graph");
  auto* aut_cmd = app.add_subcommand("aut", "Automorphisms of a graph");
  auto* orient_cmd = app.add_subcommand("orient", "Find an arrow orientation without sources or sinks");
  auto* surgery_cmd = app.add_subcommand("surgery", "Evaluate the surgery formula on an arrow graph");
  auto* morse_cmd = app.add_subcommand("morse-propagator", "Propagator of an acyclic complex");
  auto* surviving_cmd = app.add_subcommand("surviving", "Surviving index tuples per vertex type");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run quick end-to-end checks");
  auto* cache_cmd = app.add_subcommand("cache", "Inspect or manage the disk cache");
  for (auto* cmd : {reduce_cmd, aut_cmd, orient_cmd, surgery_cmd, morse_cmd})
    cmd->add_option("file", file, "Input JSON file")->required();
  cache_cmd->add_option("action", action, "status, clear or warm")
      ->required()
      ->check(CLI::IsMember({"status", "clear", "warm"}));

  try {
    app.parse(argc, argv);
    if ((app.got_subcommand(enum_cmd) || app.got_subcommand(dim_cmd) ||
         (app.got_subcommand(cache_cmd) && action == "warm")) &&
        !k)
      throw CLI::RequiredError("-k");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.cache = resolve_cache_dir(cache_flag);
  cfg.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
  cfg.convention = convention == "flipped" ? TypeConvention::Flipped : TypeConvention::Default;

  int status = 0;
  try {
    Json result;
    if (app.got_subcommand(enum_cmd)) {
      result = enum_json(*k, cfg);
    } else if (app.got_subcommand(dim_cmd)) {
      result = dim_json(*k, cfg);
    } else if (app.got_subcommand(reduce_cmd)) {
      result = class_to_json(reduce(graph_from_json(read_json_file(file))));
    } else if (app.got_subcommand(aut_cmd)) {
      result = aut_json(graph_from_json(read_json_file(file)));
    } else if (app.got_subcommand(orient_cmd)) {
      result = arrow_to_json(find_arrow_orientation(graph_from_json(read_json_file(file))));
    } else if (app.got_subcommand(surgery_cmd)) {
      result = surgery_json(file, mode == "full" ? EvaluationMode::Full : EvaluationMode::Orbit, cfg);
    } else if (app.got_subcommand(morse_cmd)) {
      result = propagator_json(complex_from_json(read_json_file(file)));
    } else if (app.got_subcommand(surviving_cmd)) {
      result = surviving_json();
    } else if (app.got_subcommand(selftest_cmd)) {
      bool ok = true;
      result = selftest_json(cfg, ok);
      status = ok ? 0 : 1;
    } else {
      result = cache_json(action, k, cfg);
    }
    if (cfg.format == OutputFormat::Table) {
      out << render_table(result);
    } else {
      out << result.dump() << '\n';
    }
  } catch (const std::exception& e) {
    err << "gc: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace gc
