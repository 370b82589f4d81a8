#include "gc/cache.hpp"
#include "gc/error.hpp"
#include "gc/space.hpp"

namespace gc {

Rational AVector::at(int position) const {
  auto it = coeffs_.find(position);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void AVector::add(int position, const Rational& value) {
  Rational& slot = coeffs_[position];
  slot += value;
  if (slot == 0) coeffs_.erase(position);
}

AVector& AVector::operator+=(const AVector& other) {
  if (k_ != other.k_ && !other.is_zero() && !is_zero())
    throw Error(ErrorKind::WrongK, "adding vectors of different k");
  if (is_zero()) k_ = other.k_;
  for (const auto& [pos, x] : other.coeffs_) add(pos, x);
  return *this;
}

AVector& AVector::operator*=(const Rational& factor) {
  if (factor == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [pos, x] : coeffs_) x *= factor;
  return *this;
}

AVector AVector::from_row(int k, RationalRow row) {
  AVector v(k);
  for (auto& [pos, x] : row)
    if (x != 0) v.coeffs_.emplace(pos, std::move(x));
  return v;
}

GraphSpace::GraphSpace(int k, SpaceConfig config) : k_(k), config_(std::move(config)) {
  if (k < 1) throw Error(ErrorKind::WrongK, "k must be positive");
  if (config_.jobs < 1) throw Error(ErrorKind::Parse, "worker count must be at least 1");
  if (config_.primes < 3) throw Error(ErrorKind::Parse, "prime count must be at least 3");
}

const Enumeration& GraphSpace::enumeration() {
  std::call_once(enum_once_, [&] {
    if (k_ > config_.max_k)
      throw Error(ErrorKind::ResourceLimit,
                  "k=" + std::to_string(k_) + " exceeds the configured cap of " + std::to_string(config_.max_k));
    if (config_.cache) enumeration_ = load_enumeration(*config_.cache, k_);
    if (!enumeration_) {
      enumeration_ = enumerate(k_, config_);
      if (config_.cache) save_enumeration(*config_.cache, *enumeration_);
    }
  });
  return *enumeration_;
}

const RelationSet& GraphSpace::relation_set() {
  const Enumeration& e = enumeration();
  std::call_once(rel_once_, [&] {
    if (config_.cache) relations_ = load_relations(*config_.cache, k_, config_.ihx);
    if (!relations_) {
      relations_ = relations(e, config_);
      if (config_.cache) save_relations(*config_.cache, *relations_, config_.ihx);
    }
  });
  return *relations_;
}

const RationalRref& GraphSpace::rref() {
  const RelationSet& r = relation_set();
  std::call_once(rref_once_, [&] {
    if (config_.cache) rref_ = load_rref(*config_.cache, k_, config_.ihx);
    if (!rref_) {
      RationalRref m(r.num_cols);
      for (const IntRow& row : r.rows) {
        m.insert(row);
        if (m.rank() == static_cast<std::size_t>(r.num_cols)) break;
      }
      rref_ = std::move(m);
      if (config_.cache) save_rref(*config_.cache, k_, *rref_, config_.ihx);
    }
  });
  return *rref_;
}

RankReport GraphSpace::rank_report() {
  const RelationSet& r = relation_set();
  return multimodular_rank(r.rows, r.num_cols, static_cast<std::size_t>(config_.primes), config_.jobs);
}

std::size_t GraphSpace::dimension() { return basis().size() - rank_report().rank; }

std::size_t GraphSpace::exact_dimension() { return basis().size() - rref().rank(); }

AVector GraphSpace::class_of(const LabelledTrivalentGraph& g) {
  if (g.k() != k_)
    throw Error(ErrorKind::WrongK, "graph has k=" + std::to_string(g.k()) + ", space has k=" + std::to_string(k_));
  GraphClass cls = reduce(g);
  AVector v(k_);
  if (cls.zero()) return v;
  auto pos = basis().index(cls.key);
  if (!pos) throw Error(ErrorKind::Parse, "class missing from basis: " + cls.key);
  v.add(static_cast<int>(*pos), Rational(cls.sign));
  return v;
}

AVector GraphSpace::normal_form(const AVector& v) {
  if (!v.is_zero() && v.k() != k_) throw Error(ErrorKind::WrongK, "vector belongs to a different k");
  RationalRow row(v.coefficients().begin(), v.coefficients().end());
  return AVector::from_row(k_, rref().reduce(std::move(row)));
}

std::map<std::string, std::string> GraphSpace::render(const AVector& v) {
  std::map<std::string, std::string> out;
  for (const auto& [pos, x] : v.coefficients()) out.emplace(basis().key(static_cast<std::size_t>(pos)), to_string(x));
  return out;
}

}  // namespace gc
