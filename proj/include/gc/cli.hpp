#pragma once

#include "gc/io.hpp"
#include "gc/surgery.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gc {

enum class OutputFormat { Json, Table };

struct RunConfig {
  std::filesystem::path cache;
  int jobs = 1;
  int primes = 3;
  int max_k = 7;
  TypeConvention convention = TypeConvention::Default;
  OutputFormat format = OutputFormat::Json;
};

// Flag, then GC_CACHE, then $XDG_CACHE_HOME/gc, then $HOME/.cache/gc, then ./.gc-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

// Aligned "path  value" lines; nested objects become dotted paths.
std::string render_table(const Json& j);

// Exit status: 0 success, 1 domain error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gc
