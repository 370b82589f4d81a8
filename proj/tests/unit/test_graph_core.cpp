#include "gc/error.hpp"
#include "gc/graph.hpp"
#include "gc/space.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace gc {
namespace {

using oracle::dumbbell;
using oracle::k4;
using oracle::theta;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

std::vector<LabelledTrivalentGraph> classes_up_to(int max_k) {
  std::vector<LabelledTrivalentGraph> out;
  for (int k = 1; k <= max_k; ++k)
    for (const auto& key : enumerate(k).all_keys()) out.push_back(graph_from_key(key));
  return out;
}

TEST(Validate, AcceptsK4AndTheta) {
  EXPECT_EQ(k4().num_edges(), 6);
  EXPECT_EQ(theta().k(), 1);
}

TEST(Validate, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { LabelledTrivalentGraph::validate(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}}); }),
            ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { LabelledTrivalentGraph::validate(2, {{0, 1}, {0, 1}}); }), ErrorKind::WrongEdgeCount);
  EXPECT_EQ(kind_of([] { LabelledTrivalentGraph::validate(3, {{0, 1}, {0, 1}, {0, 1}}); }), ErrorKind::WrongEdgeCount);
  EXPECT_EQ(kind_of([] { LabelledTrivalentGraph::validate(2, {{0, 0}, {0, 0}, {1, 1}}); }), ErrorKind::NonTrivalent);
  EXPECT_EQ(kind_of([] { LabelledTrivalentGraph::validate(2, {{0, 1}, {0, 1}, {0, 2}}); }), ErrorKind::NonTrivalent);
}

TEST(Reduce, ThetaAndDumbbellAreZero) {
  EXPECT_TRUE(reduce(theta()).zero());
  EXPECT_TRUE(reduce(dumbbell()).zero());
  EXPECT_EQ(reduce(theta()).key, "cub:2:0-1,0-1,0-1");
  EXPECT_EQ(reduce(dumbbell()).key, "cub:2:0-0,0-1,1-1");
}

TEST(Reduce, K4IsNeverZero) {
  std::mt19937_64 rng(1);
  const GraphClass base = reduce(k4());
  ASSERT_FALSE(base.zero());
  for (int trial = 0; trial < 200; ++trial) {
    auto r = oracle::random_relabelling(k4(), rng);
    GraphClass c = reduce(oracle::apply(k4(), r));
    EXPECT_EQ(c.key, base.key);
    EXPECT_EQ(c.sign, base.sign * permutation_sign(r.edge_map));
  }
}

TEST(Reduce, CanonicalRepresentativeHasSignPlusOne) {
  for (const auto& g : classes_up_to(4)) {
    GraphClass c = reduce(g);
    EXPECT_EQ(c.key, render_key(g.num_vertices(), relabelled_edges(g.edges(), oracle::iota(g.num_vertices()))));
    if (!c.zero()) EXPECT_EQ(c.sign, 1) << c.key;
  }
}

TEST(Reduce, SignTracksEdgeRelabellingParity) {
  std::mt19937_64 rng(7);
  for (const auto& g : classes_up_to(4)) {
    GraphClass base = reduce(g);
    for (int trial = 0; trial < 10; ++trial) {
      auto r = oracle::random_relabelling(g, rng);
      GraphClass c = reduce(oracle::apply(g, r));
      ASSERT_EQ(c.key, base.key);
      if (base.zero()) {
        EXPECT_TRUE(c.zero());
      } else {
        EXPECT_EQ(c.sign, base.sign * permutation_sign(r.edge_map)) << base.key;
      }
    }
  }
}

TEST(Reduce, KeysSeparateClassesLikeBruteForce) {
  // Keys agree exactly when the brute-force minimal encodings agree.
  std::mt19937_64 rng(11);
  std::map<std::string, std::string> brute_to_key;
  for (const auto& g : classes_up_to(3)) {
    for (int trial = 0; trial < 5; ++trial) {
      auto h = oracle::apply(g, oracle::random_relabelling(g, rng));
      std::string brute = oracle::brute_key(h);
      std::string key = reduce(h).key;
      auto [it, fresh] = brute_to_key.emplace(brute, key);
      EXPECT_EQ(it->second, key);
    }
  }
  std::set<std::string> keys;
  for (const auto& [b, k] : brute_to_key) keys.insert(k);
  EXPECT_EQ(keys.size(), brute_to_key.size());
  EXPECT_EQ(keys.size(), 2u + 5u + 17u);
}

TEST(Automorphisms, K4HasOrder24AllEven) {
  AutomorphismGroup group = automorphism_group(k4());
  EXPECT_EQ(group.order(), 24u);
  EXPECT_EQ(group.aut_e, 1u);
  EXPECT_FALSE(group.has_odd_edge_permutation);
  auto all = list_automorphisms(k4());
  ASSERT_EQ(all.size(), 24u);
  for (const auto& a : all) {
    EXPECT_TRUE(is_automorphism(k4(), a));
    EXPECT_EQ(permutation_sign(a.edge_perm), 1);
  }
}

TEST(Automorphisms, Theta) {
  AutomorphismGroup group = automorphism_group(theta());
  EXPECT_EQ(group.aut_e, 6u);
  EXPECT_EQ(group.aut_v(), 2u);
  EXPECT_EQ(group.order(), 12u);
  EXPECT_TRUE(group.has_odd_edge_permutation);
}

TEST(Automorphisms, MatchBruteForce) {
  for (const auto& g : classes_up_to(3)) {
    AutomorphismGroup group = automorphism_group(g);
    oracle::BruteAut brute = oracle::brute_automorphisms(g);
    EXPECT_EQ(group.order(), brute.order) << reduce(g).key;
    EXPECT_EQ(group.aut_v(), brute.aut_v) << reduce(g).key;
    EXPECT_EQ(group.order(), group.aut_e * group.aut_v());
    EXPECT_EQ(group.has_odd_edge_permutation, brute.odd);
    EXPECT_EQ(reduce(g).zero(), brute.odd) << reduce(g).key;
    auto all = list_automorphisms(g);
    EXPECT_EQ(all.size(), group.order());
    for (const auto& a : all) EXPECT_TRUE(is_automorphism(g, a));
  }
}

TEST(IsoSign, Examples) {
  auto swapped = LabelledTrivalentGraph::validate(4, {{0, 2}, {0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(iso_sign(k4(), swapped), (IsoSign{IsoSign::Kind::Signed, -1}));
  EXPECT_EQ(iso_sign(k4(), k4()), (IsoSign{IsoSign::Kind::Signed, 1}));
  EXPECT_EQ(iso_sign(theta(), dumbbell()).kind, IsoSign::Kind::NotIsomorphic);
  EXPECT_EQ(iso_sign(theta(), theta()).kind, IsoSign::Kind::Zero);
}

TEST(Contract, K4) {
  FourValentGraph c = contract_edge(k4(), 0);
  EXPECT_EQ(c.num_vertices, 3);
  EXPECT_EQ(c.edges.size(), 5u);
  EXPECT_EQ(c.center, 0);
  int degree = 0;
  for (const Edge& e : c.edges) degree += (e.u == c.center) + (e.v == c.center);
  EXPECT_EQ(degree, 4);
  // Stubs of vertex 0 (edges 02, 03), then of vertex 1 (edges 12, 13), renumbered after removing edge 0.
  std::array<HalfEdge, 4> expected = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}};
  EXPECT_EQ(c.tags, expected);
}

TEST(Contract, ThetaGivesTwoLoops) {
  FourValentGraph c = contract_edge(theta(), 1);
  EXPECT_EQ(c.num_vertices, 1);
  ASSERT_EQ(c.edges.size(), 2u);
  for (const Edge& e : c.edges) EXPECT_EQ(e, (Edge{0, 0}));
}

TEST(Contract, LoopIsRejected) {
  EXPECT_EQ(kind_of([] { contract_edge(dumbbell(), 0); }), ErrorKind::LoopContraction);
}

TEST(Ihx, FirstPairingUndoesContraction) {
  for (const auto& g : classes_up_to(3)) {
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.is_loop(e)) continue;
      auto terms = ihx_expansions(contract_edge(g, e), e);
      EXPECT_EQ(reduce(terms[0].graph), reduce(g));
      for (const auto& t : terms) EXPECT_EQ(t.graph.num_vertices(), g.num_vertices());
    }
  }
  auto terms = ihx_expansions(contract_edge(k4(), 0), 0);
  EXPECT_EQ(iso_sign(terms[0].graph, k4()), (IsoSign{IsoSign::Kind::Signed, 1}));
}

TEST(Ihx, CoefficientsAreParameters) {
  auto c = contract_edge(k4(), 2);
  auto def = ihx_expansions(c, 2);
  auto alt = ihx_expansions(c, 2, {1, -1, 1});
  EXPECT_EQ(def[1].coefficient, 1);
  EXPECT_EQ(alt[1].coefficient, -1);
  EXPECT_EQ(def[1].graph, alt[1].graph);
}

TEST(Arrow, ThetaOrientation) {
  ArrowGraph a = find_arrow_orientation(theta());
  std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 1}, {1, 0}};
  EXPECT_EQ(a.directions, expected);
}

TEST(Arrow, NoSourceOrSink) {
  for (const auto& g : classes_up_to(4)) {
    ArrowGraph a = find_arrow_orientation(g);
    EXPECT_NO_THROW(ArrowGraph::validate(a.graph, a.directions));
  }
}

TEST(Arrow, AllOrientationsMatchBruteForce) {
  for (const auto& g : classes_up_to(2)) {
    std::size_t brute = 0;
    std::vector<int> loops;
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.is_loop(e)) loops.push_back(e);
    for (std::uint32_t mask = 0; mask < (1U << g.num_edges()); ++mask) {
      bool redundant = false;
      for (int e : loops) redundant |= (mask >> e) & 1U;
      if (redundant) continue;
      std::vector<std::pair<int, int>> dirs;
      for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        dirs.push_back((mask >> e) & 1U ? std::pair{v, u} : std::pair{u, v});
      }
      try {
        ArrowGraph::validate(g, dirs);
        ++brute;
      } catch (const Error&) {
      }
    }
    EXPECT_EQ(all_arrow_orientations(g).size(), brute);
  }
}

TEST(Arrow, RejectsSink) {
  EXPECT_EQ(kind_of([] { ArrowGraph::validate(theta(), {{0, 1}, {0, 1}, {0, 1}}); }), ErrorKind::Parse);
}

TEST(Keys, RoundTrip) {
  for (const auto& key : enumerate(3).all_keys()) EXPECT_EQ(reduce(graph_from_key(key)).key, key);
  EXPECT_EQ(kind_of([] { graph_from_key("nope"); }), ErrorKind::Parse);
}

}  // namespace
}  // namespace gc
