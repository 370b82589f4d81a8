#include "gc/linalg.hpp"

#include "gc/error.hpp"
#include "gc/parallel.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace gc {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "not a rational: " + s);
  q.canonicalize();
  return q;
}

namespace {

using ModRow = std::vector<std::pair<int, std::uint32_t>>;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

// r - factor * pivot, both sorted.
ModRow subtract_multiple(const ModRow& r, const ModRow& pivot, std::uint64_t factor, std::uint32_t p) {
  ModRow out;
  out.reserve(r.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || pivot[j].first < r[i].first) {
      std::uint64_t v = (p - factor * pivot[j].second % p) % p;
      if (v != 0) out.emplace_back(pivot[j].first, static_cast<std::uint32_t>(v));
      ++j;
    } else {
      std::uint64_t v = (r[i].second + p - factor * pivot[j].second % p) % p;
      if (v != 0) out.emplace_back(r[i].first, static_cast<std::uint32_t>(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t modular_rank(const std::vector<IntRow>& rows, int num_cols, std::uint32_t prime) {
  std::vector<const ModRow*> pivot_at(static_cast<std::size_t>(num_cols), nullptr);
  std::deque<ModRow> storage;
  const std::int64_t p = prime;
  for (const IntRow& source : rows) {
    ModRow r;
    r.reserve(source.size());
    for (auto [c, v] : source) {
      std::int64_t m = ((v % p) + p) % p;
      if (m != 0) r.emplace_back(c, static_cast<std::uint32_t>(m));
    }
    while (!r.empty()) {
      const ModRow* pivot = pivot_at[static_cast<std::size_t>(r.front().first)];
      if (pivot == nullptr) break;
      r = subtract_multiple(r, *pivot, r.front().second, prime);
    }
    if (r.empty()) continue;
    std::uint64_t inv = mod_inverse(r.front().second, prime);
    for (auto& [c, v] : r) v = static_cast<std::uint32_t>(v * inv % prime);
    storage.push_back(std::move(r));
    pivot_at[static_cast<std::size_t>(storage.back().front().first)] = &storage.back();
    if (storage.size() == static_cast<std::size_t>(num_cols)) break;
  }
  return storage.size();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist((1U << 30) + 1, (1U << 31) - 1);
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t candidate = dist(rng) | 1U;
    if (is_prime(candidate) && seen.insert(candidate).second) out.push_back(candidate);
  }
  return out;
}

RankReport multimodular_rank(const std::vector<IntRow>& rows, int num_cols, std::size_t prime_count, int jobs,
                             std::uint64_t seed, int max_attempts) {
  if (prime_count < 3) throw Error(ErrorKind::Parse, "at least 3 primes are required");
  std::mt19937_64 seeder(seed);
  RankReport report;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    report.attempts = attempt;
    report.primes = random_primes(prime_count, seeder());
    report.ranks.assign(prime_count, 0);
    parallel_for(prime_count, jobs,
                 [&](std::size_t i) { report.ranks[i] = modular_rank(rows, num_cols, report.primes[i]); });
    if (std::all_of(report.ranks.begin(), report.ranks.end(), [&](std::size_t r) { return r == report.ranks[0]; })) {
      report.rank = report.ranks[0];
      return report;
    }
  }
  throw Error(ErrorKind::PrimeDisagreement,
              "modular ranks disagreed in " + std::to_string(max_attempts) + " attempts");
}

bool RationalRref::insert(const IntRow& row) {
  RationalRow r;
  for (auto [c, v] : row) r.emplace(c, Rational(static_cast<long>(v)));
  return insert(std::move(r));
}

RationalRow RationalRref::reduce(RationalRow v) const {
  // Pivot rows are fully reduced, so one pass over the pivot columns present
  // in v suffices: subtracting a pivot row only touches free columns.
  std::vector<std::pair<int, Rational>> hits;
  for (const auto& [c, x] : v) {
    if (pivots_.count(c)) hits.emplace_back(c, x);
  }
  for (const auto& [c, factor] : hits) {
    for (const auto& [col, x] : pivots_.at(c)) {
      Rational& slot = v[col];
      slot -= factor * x;
      if (slot == 0) v.erase(col);
    }
  }
  return v;
}

bool RationalRref::insert(RationalRow row) {
  for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  RationalRow r = reduce(std::move(row));
  if (r.empty()) return false;
  const int c = r.begin()->first;
  const Rational lead = r.begin()->second;
  for (auto& [col, x] : r) x /= lead;
  for (auto& [pc, prow] : pivots_) {
    auto hit = prow.find(c);
    if (hit == prow.end()) continue;
    const Rational factor = hit->second;
    for (const auto& [col, x] : r) {
      Rational& slot = prow[col];
      slot -= factor * x;
      if (slot == 0) prow.erase(col);
    }
  }
  pivots_.emplace(c, std::move(r));
  return true;
}

RationalRref RationalRref::from_rows(int num_cols, std::map<int, RationalRow> rows) {
  RationalRref out(num_cols);
  out.pivots_ = std::move(rows);
  return out;
}

}  // namespace gc
