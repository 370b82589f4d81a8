#pragma once

#include "gc/graph.hpp"
#include "gc/linalg.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gc {

class Basis {
 public:
  Basis() = default;
  Basis(int k, std::vector<std::string> keys);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return keys_.size(); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  std::optional<std::size_t> index(const std::string& key) const;

 private:
  int k_ = 0;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Enumeration {
  int k = 0;
  Basis basis;                         // Signed classes, sorted by key
  std::vector<std::string> zero_keys;  // Zero classes, sorted by key

  // All class keys, sorted.
  std::vector<std::string> all_keys() const;
};

struct RelationSet {
  int k = 0;
  int num_cols = 0;
  std::vector<IntRow> rows;
};

// Sparse rational vector over a Basis. No stored zeros.
class AVector {
 public:
  AVector() = default;
  explicit AVector(int k) : k_(k) {}

  int k() const noexcept { return k_; }
  const std::map<int, Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational at(int position) const;

  void add(int position, const Rational& value);
  AVector& operator+=(const AVector& other);
  AVector& operator*=(const Rational& factor);

  static AVector from_row(int k, RationalRow row);

  friend AVector operator+(AVector a, const AVector& b) { return a += b; }
  friend AVector operator*(const Rational& f, AVector a) { return a *= f; }
  friend bool operator==(const AVector&, const AVector&) = default;

 private:
  int k_ = 0;
  std::map<int, Rational> coeffs_;
};

struct SpaceConfig {
  int jobs = 1;
  int primes = 3;
  int max_k = 7;                               // ResourceLimit above this
  std::optional<std::filesystem::path> cache;  // disk cache directory, if any
  IhxCoefficients ihx = kIhxCoefficients;
};

// Isomorphism classes of connected trivalent multigraphs on 2k vertices.
// Grows partial graphs one vertex closure at a time and rejects isomorphic
// partial states through a colour-aware canonical form.
Enumeration enumerate(int k, const SpaceConfig& config = {});

// One row per contracted class, generated from every class (Zero ones too).
RelationSet relations(const Enumeration& e, const SpaceConfig& config = {});

// Row of a single IHX relation expressed in the basis; empty if it reduces to 0.
IntRow relation_row(const Basis& basis, const FourValentGraph& c, int new_edge_label,
                    const IhxCoefficients& coefficients = kIhxCoefficients);

// Canonical key of a 4-valent graph, used to dedupe contractions.
std::string contraction_key(const FourValentGraph& c);

// Lazily computed, thread-safe view of one k. Uses the disk cache when the
// configuration names one.
class GraphSpace {
 public:
  GraphSpace(int k, SpaceConfig config);

  int k() const noexcept { return k_; }
  const SpaceConfig& config() const noexcept { return config_; }

  const Enumeration& enumeration();
  const Basis& basis() { return enumeration().basis; }
  const RelationSet& relation_set();
  const RationalRref& rref();
  RankReport rank_report();
  std::size_t dimension();
  std::size_t exact_dimension();

  AVector class_of(const LabelledTrivalentGraph& g);
  AVector normal_form(const AVector& v);
  bool is_zero(const AVector& v) { return normal_form(v).is_zero(); }

  // Sparse {key: "n/d"} view of a vector.
  std::map<std::string, std::string> render(const AVector& v);

 private:
  int k_;
  SpaceConfig config_;
  std::once_flag enum_once_, rel_once_, rref_once_;
  std::optional<Enumeration> enumeration_;
  std::optional<RelationSet> relations_;
  std::optional<RationalRref> rref_;
};

}  // namespace gc
