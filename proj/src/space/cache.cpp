#include "gc/cache.hpp"

#include "gc/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <system_error>
#include <unistd.h>

namespace gc {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

Json header(int k, const std::string& kind) {
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["k"] = k;
  j["kind"] = kind;
  return j;
}

std::optional<Json> read(const fs::path& dir, int k, const std::string& kind) {
  std::ifstream in(cache_file(dir, k, kind));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.value("format_version", "") != kCacheFormatVersion || j.value("k", -1) != k || j.value("kind", "") != kind)
      return std::nullopt;
    return j;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void write(const fs::path& dir, int k, const std::string& kind, const Json& j) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoFailure, "cannot create cache directory " + dir.string() + ": " + ec.message());
  const fs::path target = cache_file(dir, k, kind);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
    if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::IoFailure, "cannot rename into " + target.string() + ": " + ec.message());
}

Json ihx_json(const IhxCoefficients& ihx) { return Json::array({ihx[0], ihx[1], ihx[2]}); }

}  // namespace

fs::path cache_file(const fs::path& dir, int k, const std::string& kind) {
  return dir / ("k" + std::to_string(k) + "-" + kind + ".json");
}

std::optional<Enumeration> load_enumeration(const fs::path& dir, int k) {
  auto basis = read(dir, k, "basis");
  auto zeros = read(dir, k, "zeros");
  if (!basis || !zeros) return std::nullopt;
  try {
    Enumeration e;
    e.k = k;
    e.basis = Basis(k, (*basis)["classes"].get<std::vector<std::string>>());
    e.zero_keys = (*zeros)["classes"].get<std::vector<std::string>>();
    return e;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

std::optional<RelationSet> load_relations(const fs::path& dir, int k, const IhxCoefficients& ihx) {
  auto j = read(dir, k, "relations");
  if (!j || (*j)["ihx"] != ihx_json(ihx)) return std::nullopt;
  try {
    RelationSet r;
    r.k = k;
    r.num_cols = (*j)["num_cols"].get<int>();
    for (const auto& row : (*j)["rows"]) r.rows.push_back(row.get<IntRow>());
    return r;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

std::optional<RationalRref> load_rref(const fs::path& dir, int k, const IhxCoefficients& ihx) {
  auto j = read(dir, k, "rref");
  if (!j || (*j)["ihx"] != ihx_json(ihx)) return std::nullopt;
  try {
    std::map<int, RationalRow> rows;
    for (const auto& item : (*j)["rows"]) {
      RationalRow row;
      for (const auto& entry : item["entries"])
        row.emplace(entry[0].get<int>(), rational_from_string(entry[1].get<std::string>()));
      rows.emplace(item["pivot"].get<int>(), std::move(row));
    }
    return RationalRref::from_rows((*j)["num_cols"].get<int>(), std::move(rows));
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void save_enumeration(const fs::path& dir, const Enumeration& e) {
  Json basis = header(e.k, "basis");
  basis["classes"] = e.basis.keys();
  Json zeros = header(e.k, "zeros");
  zeros["classes"] = e.zero_keys;
  write(dir, e.k, "basis", basis);
  write(dir, e.k, "zeros", zeros);
}

void save_relations(const fs::path& dir, const RelationSet& r, const IhxCoefficients& ihx) {
  Json j = header(r.k, "relations");
  j["ihx"] = ihx_json(ihx);
  j["num_cols"] = r.num_cols;
  j["rows"] = r.rows;
  write(dir, r.k, "relations", j);
}

void save_rref(const fs::path& dir, int k, const RationalRref& rref, const IhxCoefficients& ihx) {
  Json j = header(k, "rref");
  j["ihx"] = ihx_json(ihx);
  j["num_cols"] = rref.num_cols();
  Json rows = Json::array();
  for (const auto& [pivot, row] : rref.rows()) {
    Json entries = Json::array();
    for (const auto& [col, q] : row) entries.push_back(Json::array({col, to_string(q)}));
    rows.push_back(Json{{"pivot", pivot}, {"entries", std::move(entries)}});
  }
  j["rows"] = std::move(rows);
  write(dir, k, "rref", j);
}

std::vector<CacheEntry> cache_status(const fs::path& dir) {
  std::vector<CacheEntry> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  static const std::regex pattern(R"(k(\d+)-(basis|zeros|relations|rref)\.json)");
  for (const auto& item : fs::directory_iterator(dir, ec)) {
    std::smatch m;
    const std::string name = item.path().filename().string();
    if (!std::regex_match(name, m, pattern)) continue;
    CacheEntry entry;
    entry.k = std::stoi(m[1]);
    entry.kind = m[2];
    entry.size = item.file_size(ec);
    std::ifstream in(item.path());
    try {
      entry.format_version = Json::parse(in).value("format_version", "");
    } catch (const Json::exception&) {
      entry.format_version = "unreadable";
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) {
    return std::tie(a.k, a.kind) < std::tie(b.k, b.kind);
  });
  return out;
}

std::size_t cache_clear(const fs::path& dir) {
  std::size_t removed = 0;
  for (const CacheEntry& e : cache_status(dir)) {
    std::error_code ec;
    if (!fs::remove(cache_file(dir, e.k, e.kind), ec) || ec)
      throw Error(ErrorKind::IoFailure, "cannot remove " + cache_file(dir, e.k, e.kind).string());
    ++removed;
  }
  return removed;
}

}  // namespace gc
