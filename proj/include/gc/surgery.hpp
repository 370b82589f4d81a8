#pragma once

#include "gc/graph.hpp"
#include "gc/morse.hpp"
#include "gc/space.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gc {

// Default: two outgoing half-edges make type I. Flipped swaps the two types.
enum class TypeConvention { Default, Flipped };

VertexType vertex_type(int outgoing, TypeConvention convention);

// A trivalent graph with every edge directed. tail_end[e] is the end (0 for
// edge.u, 1 for edge.v) where edge e starts; for a loop it is pure data.
struct OrientedGraph {
  LabelledTrivalentGraph graph;
  std::vector<int> tail_end;

  static OrientedGraph from_arrows(const ArrowGraph& a);
  bool is_tail(HalfEdge h) const { return tail_end[static_cast<std::size_t>(h.edge)] == h.end; }
  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;
};

struct Slot {
  int vertex = 0;
  HalfEdge half_edge;
  bool outgoing = false;
};

struct HopfPair {
  int edge = 0;
  int tail_slot = 0;
  int head_slot = 0;
};

// Slot 3v+a is the a-th half-edge at v in (edge, end) order.
struct YLinkData {
  int k = 0;
  std::vector<VertexType> vertex_types;
  std::vector<Slot> slots;
  std::vector<HopfPair> hopf_pairs;  // indexed by edge label

  int slot_of(HalfEdge h) const;
};

using LinkingMatrix = std::vector<std::vector<int>>;

struct YLink {
  ArrowGraph arrows;
  YLinkData data;
  LinkingMatrix linking;
};

YLink ylink(const ArrowGraph& a, TypeConvention convention = TypeConvention::Default);

// Outgoing half-edge degree 1, incoming degree 2. Block parity is the parity of
// the sum, so two outgoing ends give an even block.
struct BlockDegrees {
  std::vector<std::array<int, 3>> degrees;
  std::vector<bool> odd;
};

BlockDegrees block_degrees(const OrientedGraph& h);

// Sign of moving block j to position sigma[j].
int block_sign(const BlockDegrees& d, std::span<const int> sigma);

// Sign that carries the edge-ordered wedge of H onto that of Gamma through
// the vertex map sigma and edge map tau, computed through the vertex-block
// form of both sides. H's half-edge degrees travel with the symbols.
int transport_sign(const OrientedGraph& h, const LabelledTrivalentGraph& gamma, std::span<const int> sigma,
                   std::span<const int> tau);

// Tail-side index per edge (head side gets one less) such that the Y-component
// of vertex j is a surviving tuple of type required[j]. First solution in
// lexicographic order over edges.
std::optional<std::vector<int>> surviving_assignment(const OrientedGraph& h, std::span<const VertexType> required);

// Edge bijections tau (H label -> Gamma label) whose Hopf pairs join the images
// of the endpoints under sigma, each Hopf pair used once.
std::vector<std::vector<int>> linking_matches(const OrientedGraph& h, const YLink& gamma, std::span<const int> sigma);

struct TermResult {
  int matches = 0;    // linking terms passing the type gate
  int sign_sum = 0;   // sum of transport signs over those terms
  std::optional<std::vector<int>> indices;  // gate witness
};

TermResult evaluate_term(const OrientedGraph& h, const YLink& gamma, std::span<const int> sigma);

// Distinct labelled edge-oriented copies of g, sorted. Loop direction counts.
std::vector<OrientedGraph> labelled_representatives(const LabelledTrivalentGraph& g);

// The copies together with their classes. Depends only on the isomorphism
// class of g, so one set serves every arrow choice and convention.
struct RepresentativeSet {
  std::string key;
  std::vector<OrientedGraph> graphs;
  std::vector<GraphClass> classes;
};

RepresentativeSet representative_set(const LabelledTrivalentGraph& g, int jobs = 1);

enum class EvaluationMode { Orbit, Full };

struct SurgeryConfig {
  TypeConvention convention = TypeConvention::Default;
  int jobs = 1;
};

struct EvaluationReport {
  ArrowGraph input;
  EvaluationMode mode = EvaluationMode::Orbit;
  TypeConvention convention = TypeConvention::Default;
  AVector result{};
  std::map<std::string, std::string> rendered{};  // {key: "n/d"}
  std::uint64_t aut = 0;
  std::uint64_t aut_e = 0;
  std::uint64_t aut_v = 0;
  mpz_class representatives{};  // L(Gamma); a literal count in full mode
  mpz_class terms{};          // (H, sigma, tau) triples counted; full mode only
  std::vector<std::string> identities{};
};

// 2^{3k} (2k)! (3k)!
mpz_class labelling_count(int k);

EvaluationReport evaluate_orbit(const ArrowGraph& a, GraphSpace& space, const SurgeryConfig& config = {});

// ResourceLimit for k > 2. A precomputed set for the same class may be passed.
EvaluationReport evaluate_full(const ArrowGraph& a, GraphSpace& space, const SurgeryConfig& config = {},
                               const RepresentativeSet* representatives = nullptr);

const char* to_string(EvaluationMode mode) noexcept;
const char* to_string(TypeConvention convention) noexcept;

}  // namespace gc
