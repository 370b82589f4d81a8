#include "gc/error.hpp"
#include "gc/morse.hpp"
#include "support/complexes.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace gc {
namespace {

std::array<IntMatrix, kNumDegrees> no_boundaries() { return {}; }

GradedComplex single_pair() {
  std::array<IntMatrix, kNumDegrees> b;
  b[1] = {{1}};
  return GradedComplex::make({1, 1, 0, 0, 0}, b, {{{"q"}, {"p"}, {}, {}, {}}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RatMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

RatMatrix rational(const IntMatrix& m) {
  RatMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (auto v : row) out.back().emplace_back(static_cast<long>(v));
  }
  return out;
}

TEST(CheckComplex, Examples) {
  EXPECT_NO_THROW(check_complex(GradedComplex::make({0, 0, 0, 0, 0}, no_boundaries())));
  EXPECT_NO_THROW(check_complex(single_pair()));
  std::array<IntMatrix, kNumDegrees> b;
  b[1] = {{1}};
  b[2] = {{1}};
  EXPECT_EQ(kind_of([&] { check_complex(GradedComplex::make({1, 1, 1, 0, 0}, b)); }), ErrorKind::NotAComplex);
}

TEST(CheckComplex, ShapesAreValidated) {
  std::array<IntMatrix, kNumDegrees> b;
  b[1] = {{1, 2}};
  EXPECT_EQ(kind_of([&] { GradedComplex::make({1, 1, 0, 0, 0}, b); }), ErrorKind::Parse);
}

TEST(Propagator, SinglePair) {
  Propagator g = compute_propagator(single_pair());
  EXPECT_EQ(g.coefficient(0, 0, 0), 1);  // g(q) = p
  EXPECT_TRUE(g.g[1].empty());           // g(p) lands in a zero group
  EXPECT_TRUE(is_contraction(single_pair(), g));
}

TEST(Propagator, InvertibleBlockGivesInverse) {
  // boundary_2 = M with det 1; g_1 must be M^{-1}.
  IntMatrix m = {{2, 1}, {1, 1}};
  std::array<IntMatrix, kNumDegrees> b;
  b[2] = m;
  GradedComplex c = GradedComplex::make({0, 2, 2, 0, 0}, b);
  Propagator g = compute_propagator(c);
  RatMatrix inverse = {{Rational(1), Rational(-1)}, {Rational(-1), Rational(2)}};
  EXPECT_EQ(g.g[1], inverse);
  EXPECT_EQ(product(rational(m), inverse), (RatMatrix{{1, 0}, {0, 1}}));
  for (int d : {0, 2, 3})
    for (const auto& row : g.g[static_cast<std::size_t>(d)])
      for (const auto& x : row) EXPECT_EQ(x, 0);
}

TEST(Propagator, RationalInverse) {
  std::array<IntMatrix, kNumDegrees> b;
  b[4] = {{3}};
  Propagator g = compute_propagator(GradedComplex::make({0, 0, 0, 1, 1}, b));
  EXPECT_EQ(g.coefficient(3, 0, 0), Rational(1, 3));
}

TEST(Propagator, NotAcyclic) {
  std::array<IntMatrix, kNumDegrees> b;
  try {
    compute_propagator(GradedComplex::make({0, 0, 1, 0, 0}, b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAcyclic);
    EXPECT_NE(std::string(e.what()).find("degree 2"), std::string::npos);
  }
}

void expect_idempotents(const GradedComplex& c, const Propagator& g) {
  for (int d = 0; d < kNumDegrees; ++d) {
    if (d + 1 < kNumDegrees && c.ranks[static_cast<std::size_t>(d)] > 0) {
      RatMatrix dg = product(rational(c.boundary[static_cast<std::size_t>(d + 1)]), g.g[static_cast<std::size_t>(d)]);
      if (!dg.empty() && !dg[0].empty()) EXPECT_EQ(product(dg, dg), dg);
    }
    if (d > 0 && c.ranks[static_cast<std::size_t>(d)] > 0 && c.ranks[static_cast<std::size_t>(d - 1)] > 0) {
      RatMatrix gd = product(g.g[static_cast<std::size_t>(d - 1)], rational(c.boundary[static_cast<std::size_t>(d)]));
      EXPECT_EQ(product(gd, gd), gd);
    }
  }
}

TEST(Propagator, RandomAcyclicComplexes) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 250; ++trial) {
    GradedComplex c = oracle::random_complex(rng, 40, 0);
    ASSERT_LE(c.total_rank(), 40);
    ASSERT_EQ(oracle::smith_homology(c), (Ranks{}));
    Propagator g = compute_propagator(c);
    ASSERT_TRUE(is_contraction(c, g)) << "trial " << trial;
    expect_idempotents(c, g);
    DualPair dual = dual_propagator(c, g);
    EXPECT_NO_THROW(check_complex(dual.complex));
    EXPECT_TRUE(is_contraction(dual.complex, dual.propagator)) << "trial " << trial;
  }
}

TEST(Propagator, NotAcyclicExactlyWhenSmithHomologyNonzero) {
  std::mt19937_64 rng(99);
  int raised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GradedComplex c = oracle::random_complex(rng, 40, static_cast<int>(rng() % 3));
    Ranks h = oracle::smith_homology(c);
    EXPECT_EQ(rational_homology(c), h);
    bool acyclic = h == Ranks{};
    try {
      Propagator g = compute_propagator(c);
      EXPECT_TRUE(acyclic);
      EXPECT_TRUE(is_contraction(c, g));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotAcyclic);
      EXPECT_FALSE(acyclic);
      ++raised;
    }
  }
  EXPECT_GT(raised, 50);
}

TEST(Dual, SinglePair) {
  GradedComplex c = single_pair();
  DualPair dual = dual_propagator(c, compute_propagator(c));
  // q* in degree 4, p* in degree 3.
  EXPECT_EQ(dual.complex.ranks, (Ranks{0, 0, 0, 1, 1}));
  EXPECT_EQ(dual.complex.boundary[4], (IntMatrix{{-1}}));
  EXPECT_EQ(dual.propagator.coefficient(3, 0, 0), -1);
  EXPECT_EQ(dual.complex.names[4][0], "q*");
  EXPECT_TRUE(is_contraction(dual.complex, dual.propagator));
}

TEST(Dual, IsAnInvolution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    GradedComplex c = oracle::random_complex(rng, 20, 0);
    Propagator g = compute_propagator(c);
    DualPair once = dual_propagator(c, g);
    DualPair twice = dual_propagator(once.complex, once.propagator);
    EXPECT_EQ(twice.complex.ranks, c.ranks);
    EXPECT_EQ(twice.complex.boundary, c.boundary);
    EXPECT_EQ(twice.propagator.g, g.g);
  }
}

std::int64_t determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < b.size(); ++l)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

TEST(Transport, Examples) {
  const Ranks ranks = {0, 3, 0, 0, 0};
  Transport id = transport({}, ranks);
  EXPECT_EQ(id[1], (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  Transport one = transport({{{1, 0}, {1, 2}, 1}}, ranks);
  EXPECT_EQ(one[1], (IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(determinant(one[1]), 1);
  Transport back = transport({{{1, 0}, {1, 2}, 1}, {{1, 0}, {1, 2}, -1}}, ranks);
  EXPECT_EQ(back[1], id[1]);
}

TEST(Transport, RejectsBadEvents) {
  EXPECT_EQ(kind_of([] { transport({{{1, 0}, {2, 0}, 1}}, {0, 1, 1, 0, 0}); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { transport({{{1, 0}, {1, 0}, 1}}, {0, 1, 0, 0, 0}); }), ErrorKind::Parse);
}

TEST(Transport, UnimodularAndChainMap) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    GradedComplex c = oracle::random_complex(rng, 24, static_cast<int>(rng() % 2));
    std::vector<HandleSlideEvent> events;
    for (int s = 0; s < 8; ++s) {
      int d = static_cast<int>(rng() % kNumDegrees);
      int r = c.ranks[static_cast<std::size_t>(d)];
      if (r < 2) continue;
      int p = static_cast<int>(rng() % static_cast<unsigned>(r)), q = static_cast<int>(rng() % static_cast<unsigned>(r - 1));
      if (q >= p) ++q;
      events.push_back({{d, p}, {d, q}, rng() % 2 ? 1 : -1});
    }
    Transport phi = transport(events, c.ranks);
    Transport inv = transport_inverse(events, c.ranks);
    GradedComplex moved = transported_complex(c, events);
    EXPECT_NO_THROW(check_complex(moved));
    for (int d = 0; d < kNumDegrees; ++d) {
      const auto& m = phi[static_cast<std::size_t>(d)];
      EXPECT_EQ(std::abs(determinant(m)), 1);
      IntMatrix id(m.size(), std::vector<std::int64_t>(m.size(), 0));
      for (std::size_t i = 0; i < m.size(); ++i) id[i][i] = 1;
      EXPECT_EQ(int_product(m, inv[static_cast<std::size_t>(d)]), id);
      if (d > 0)
        EXPECT_EQ(int_product(phi[static_cast<std::size_t>(d - 1)], c.boundary[static_cast<std::size_t>(d)]),
                  int_product(moved.boundary[static_cast<std::size_t>(d)], m));
    }
    EXPECT_EQ(rational_homology(moved), rational_homology(c));
  }
}

TEST(CGraph, SplitNone) {
  CGraph c = CGraph::split_edges(oracle::k4(), {});
  EXPECT_EQ(c.num_white_vertices(), 0);
  EXPECT_EQ(c.degrees(), std::vector<int>(6, 1));
  EXPECT_EQ(c.components().size(), 1u);
  EXPECT_EQ(close(c), oracle::k4());
}

TEST(CGraph, SplitAllGivesYComponents) {
  std::map<int, Decoration> all;
  for (int e = 0; e < 6; ++e) all[e] = {{2, 0}, {1, 0}};
  CGraph c = CGraph::split_edges(oracle::k4(), all);
  EXPECT_EQ(c.num_white_vertices(), 12);
  auto comps = c.components();
  ASSERT_EQ(comps.size(), 4u);
  for (const auto& comp : comps) EXPECT_EQ(comp.size(), 1u);
  std::map<int, int> arcs_at;
  for (const auto& w : c.white_vertices()) ++arcs_at[w.black];
  for (const auto& [v, n] : arcs_at) EXPECT_EQ(n, 3);
  EXPECT_EQ(close(c), oracle::k4());
}

TEST(CGraph, RoundTripArbitrarySubsets) {
  std::mt19937_64 rng(3);
  for (int mask = 0; mask < 64; ++mask) {
    std::map<int, Decoration> d;
    for (int e = 0; e < 6; ++e)
      if ((mask >> e) & 1) d[e] = {{static_cast<int>(rng() % 5), 0}, {static_cast<int>(rng() % 5), 1}};
    CGraph c = CGraph::split_edges(oracle::k4(), d);
    EXPECT_EQ(close(c), oracle::k4());
    for (int e = 0; e < 6; ++e)
      EXPECT_EQ(c.degree(e), (mask >> e) & 1 ? d[e].p.degree - d[e].q.degree : 1);
  }
}

TEST(CGraph, InvalidDecoration) {
  EXPECT_EQ(kind_of([] { CGraph::split_edges(oracle::k4(), {{7, {}}}); }), ErrorKind::InvalidDecoration);
  EXPECT_EQ(kind_of([] { CGraph::split_edges(oracle::k4(), {{0, {{5, 0}, {1, 0}}}}); }), ErrorKind::InvalidDecoration);
}

TEST(Trace, Examples) {
  const GradedComplex pair = single_pair();
  const Propagator g = compute_propagator(pair);
  std::vector<Propagator> gs(3, g);
  TraceTerm none = trace_tr_g(gs, CGraph::split_edges(oracle::theta(), {}));
  EXPECT_EQ(none.coefficient, 1);
  EXPECT_EQ(none.graph, oracle::theta());

  TraceTerm one = trace_tr_g(gs, CGraph::split_edges(oracle::theta(), {{1, {{1, 0}, {0, 0}}}}));
  EXPECT_EQ(one.coefficient, -1);

  // Two separated edges with coefficients a and b: (-a)(-b).
  std::array<IntMatrix, kNumDegrees> b2, b3;
  b2[1] = {{2}};
  b3[1] = {{-5}};
  Propagator ga = compute_propagator(GradedComplex::make({1, 1, 0, 0, 0}, b2));
  Propagator gb = compute_propagator(GradedComplex::make({1, 1, 0, 0, 0}, b3));
  std::vector<Propagator> mixed = {ga, g, gb};
  TraceTerm two = trace_tr_g(mixed, CGraph::split_edges(oracle::theta(), {{0, {{1, 0}, {0, 0}}}, {2, {{1, 0}, {0, 0}}}}));
  EXPECT_EQ(two.coefficient, Rational(1, 2) * Rational(-1, 5));
}

TEST(Trace, DegreeMismatch) {
  std::vector<Propagator> gs(3, compute_propagator(single_pair()));
  EXPECT_EQ(kind_of([&] { trace_tr_g(gs, CGraph::split_edges(oracle::theta(), {{0, {{2, 0}, {0, 0}}}})); }),
            ErrorKind::DegreeMismatch);
}

std::multiset<std::string> as_multiset(const std::vector<IndexTuple>& ts) {
  std::multiset<std::string> out;
  for (const auto& t : ts) out.insert(t.str());
  return out;
}

TEST(Surviving, MatchesReferenceLists) {
  const std::vector<std::string> type_one = {"(2,3,3|)", "(|0,2,2)", "(|1,1,2)", "(1,3|0)", "(2,2|0)", "(2,3|1)",
                                             "(3,3|2)",  "(1|0,1)",  "(2|0,2)",  "(2|1,1)", "(3|1,2)"};
  const std::vector<std::string> type_two = {"(1,3,3|)", "(2,2,3|)", "(|1,2,2)", "(1,2|0)", "(1,3|1)", "(2,2|1)",
                                             "(2,3|2)",  "(1|0,2)",  "(1|1,1)",  "(2|1,2)", "(3|2,2)"};
  std::vector<std::string> got_one, got_two;
  for (const auto& t : surviving_indices(VertexType::I)) got_one.push_back(t.str());
  for (const auto& t : surviving_indices(VertexType::II)) got_two.push_back(t.str());
  EXPECT_EQ(got_one, type_one);
  EXPECT_EQ(got_two, type_two);
}

TEST(Surviving, BruteForceScan) {
  // Every way to fill three slots, each an input in {1,2,3} or an output in {0,1,2}.
  for (VertexType type : {VertexType::I, VertexType::II}) {
    const int target = type == VertexType::I ? 4 : 5;
    std::set<std::string> brute;
    for (int code = 0; code < 6 * 6 * 6; ++code) {
      IndexTuple t;
      int total = 0;
      for (int s = 0, c = code; s < 3; ++s, c /= 6) {
        int v = c % 6;
        if (v < 3) {
          t.inputs.push_back(v + 1);
          total += 3 - v;
        } else {
          t.outputs.push_back(v - 3);
          total += v - 3;
        }
      }
      std::sort(t.inputs.begin(), t.inputs.end());
      std::sort(t.outputs.begin(), t.outputs.end());
      if (total == target) brute.insert(t.str());
    }
    auto got = as_multiset(surviving_indices(type));
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), brute);
    EXPECT_EQ(got.size(), 11u);
  }
}

}  // namespace
}  // namespace gc
