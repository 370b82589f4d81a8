#pragma once

#include "gc/graph.hpp"
#include "gc/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gc {

inline constexpr int kTopDegree = 4;
inline constexpr int kNumDegrees = kTopDegree + 1;

// Dense matrices, entry [row][col]; rows index the target basis.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

using Ranks = std::array<int, kNumDegrees>;

// Free graded complex in degrees 0..4. boundary[d] maps degree d to degree
// d-1 and has shape ranks[d-1] x ranks[d]; boundary[0] is empty.
struct GradedComplex {
  Ranks ranks{};
  std::array<IntMatrix, kNumDegrees> boundary;
  // Basis element names, by degree. Defaults to "d<degree>_<index>".
  std::array<std::vector<std::string>, kNumDegrees> names;

  // Checks shapes and fills default names. Parse on malformed input.
  static GradedComplex make(Ranks ranks, std::array<IntMatrix, kNumDegrees> boundary,
                            std::array<std::vector<std::string>, kNumDegrees> names = {});
  int total_rank() const;
};

// g[d] maps degree d to degree d+1, shape ranks[d+1] x ranks[d]; g[4] has no rows.
struct Propagator {
  Ranks ranks{};
  std::array<RatMatrix, kNumDegrees> g;

  // Coefficient of target basis element `to` (degree d+1) in g(from), from in degree d.
  const Rational& coefficient(int degree, int to, int from) const;
};

// Throws NotAComplex naming the first nonzero entry of a composite boundary.
void check_complex(const GradedComplex& c);

// Homology ranks over Q.
Ranks rational_homology(const GradedComplex& c);

// Degree by degree: g_d solves boundary_{d+1} g_d = id - g_{d-1} boundary_d
// with free variables set to zero. NotAcyclic if the rational homology is not zero.
Propagator compute_propagator(const GradedComplex& c);

// boundary g + g boundary == id in every degree, exactly.
bool is_contraction(const GradedComplex& c, const Propagator& g);

struct DualPair {
  GradedComplex complex;
  Propagator propagator;
};

// Degree d of the dual is degree 4-d of the input, with boundary
// -(boundary_{5-d})^T and g* = -g^T.
DualPair dual_propagator(const GradedComplex& c, const Propagator& g);

struct BasisRef {
  int degree = 0;
  int index = 0;

  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

struct HandleSlideEvent {
  BasisRef p;
  BasisRef q;
  int sign = 1;
};

using Transport = std::array<IntMatrix, kNumDegrees>;

// Product E_1 E_2 ... E_n with E = 1 + sign * unit(q, p) in the degree of p.
Transport transport(const std::vector<HandleSlideEvent>& events, const Ranks& ranks);

// Integer inverse of transport(events, ranks).
Transport transport_inverse(const std::vector<HandleSlideEvent>& events, const Ranks& ranks);

// Complex with boundary Phi_{d-1} boundary_d Phi_d^{-1}; Phi is a chain map onto it.
GradedComplex transported_complex(const GradedComplex& c, const std::vector<HandleSlideEvent>& events);

// p is attached at the tail-side white vertex of the edge, q at the head side.
struct Decoration {
  BasisRef p;
  BasisRef q;
};

// Trivalent graph with some edges split into two decorated arcs.
class CGraph {
 public:
  static CGraph split_edges(const LabelledTrivalentGraph& g, std::map<int, Decoration> decorations);

  const LabelledTrivalentGraph& underlying() const noexcept { return underlying_; }
  const std::map<int, Decoration>& separated() const noexcept { return decorations_; }
  bool is_separated(int edge) const { return decorations_.count(edge) > 0; }
  int num_white_vertices() const noexcept { return 2 * static_cast<int>(decorations_.size()); }

  // |p| - |q| on separated edges, 1 on compact ones.
  int degree(int edge) const;
  std::vector<int> degrees() const;

  struct WhiteVertex {
    int edge = 0;
    int end = 0;    // 0: arc from the tail endpoint, carries p; 1: head side, carries q
    int black = 0;  // black vertex the arc hangs from
    BasisRef label;
  };
  // Two per separated edge, ordered by (edge, end).
  std::vector<WhiteVertex> white_vertices() const;

  // Black vertices grouped by compact-edge connectivity, each sorted; the
  // groups are ordered by smallest member.
  std::vector<std::vector<int>> components() const;

 private:
  CGraph(LabelledTrivalentGraph g, std::map<int, Decoration> d) : underlying_(std::move(g)), decorations_(std::move(d)) {}

  LabelledTrivalentGraph underlying_;
  std::map<int, Decoration> decorations_;
};

LabelledTrivalentGraph close(const CGraph& c);

struct TraceTerm {
  Rational coefficient;
  LabelledTrivalentGraph graph;
};

// Product over separated edges i of -(coefficient of p_i in g^(i)(q_i)).
// DegreeMismatch unless |p_i| = |q_i| + 1 for every separated edge.
TraceTerm trace_tr_g(const std::vector<Propagator>& gs, const CGraph& c);

enum class VertexType { I, II };

struct IndexTuple {
  std::vector<int> inputs;   // indices in {1,2,3}, ascending
  std::vector<int> outputs;  // indices in {0,1,2}, ascending

  std::string str() const;   // "(2,3,3|)"
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

// Three-slot tuples with sum(4 - a over inputs) + sum(b over outputs) equal to
// 4 (type I) or 5 (type II). Ordered by input count 3, 0, 2, 1, then
// lexicographically.
std::vector<IndexTuple> surviving_indices(VertexType type);

}  // namespace gc
