#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gc {

using Rational = mpq_class;

// Sparse integer row: (column, value) pairs sorted by column, no zero values.
using IntRow = std::vector<std::pair<int, std::int64_t>>;

// Sparse rational vector keyed by column.
using RationalRow = std::map<int, Rational>;

std::string to_string(const Rational& q);         // "n/d", always with a denominator
Rational rational_from_string(const std::string& s);  // accepts "n/d" or "n"

// Rank of the rows over Z/pZ.
std::size_t modular_rank(const std::vector<IntRow>& rows, int num_cols, std::uint32_t prime);

bool is_prime(std::uint64_t n);

// `count` distinct primes in (2^30, 2^31) drawn from a generator seeded with `seed`.
std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed);

struct RankReport {
  std::size_t rank = 0;
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> ranks;
  int attempts = 0;
};

// Rank over Q from eliminations modulo several primes. All primes of one
// attempt must agree; on disagreement fresh primes are drawn, up to
// `max_attempts` times, after which PrimeDisagreement is thrown.
RankReport multimodular_rank(const std::vector<IntRow>& rows, int num_cols, std::size_t prime_count, int jobs,
                             std::uint64_t seed = 0x9e3779b97f4a7c15ULL, int max_attempts = 4);

// Reduced row echelon form over Q, built incrementally. The result is the
// unique RREF of the row space, independent of insertion order.
class RationalRref {
 public:
  explicit RationalRref(int num_cols) : num_cols_(num_cols) {}

  // Returns true when the row enlarged the row space.
  bool insert(RationalRow row);
  bool insert(const IntRow& row);

  // Subtracts the row-space component supported on pivot columns. Linear and
  // idempotent; zero exactly on the row space.
  RationalRow reduce(RationalRow v) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  int num_cols() const noexcept { return num_cols_; }
  // Pivot column -> normalised row (pivot entry 1).
  const std::map<int, RationalRow>& rows() const noexcept { return pivots_; }

  static RationalRref from_rows(int num_cols, std::map<int, RationalRow> rows);

 private:
  int num_cols_;
  std::map<int, RationalRow> pivots_;
};

}  // namespace gc
