#include "gc/error.hpp"
#include "gc/parallel.hpp"
#include "gc/permutation.hpp"
#include "gc/surgery.hpp"
#include "engine.hpp"

#include <algorithm>
#include <numeric>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

mpz_class factorial(int n) {
  mpz_class out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

const char* kSignAverage = "sign average over all 2^{3k} gradient flips folded into (-1)^{3k}";
const char* kTripleProducts = "triple intersection factors normalised to +1";

struct Automorphisms {
  std::uint64_t aut, aut_e, aut_v;
};

Automorphisms checked_automorphisms(const LabelledTrivalentGraph& g) {
  AutomorphismGroup group = automorphism_group(g);
  std::uint64_t listed = list_automorphisms(g).size();
  if (listed != group.order())
    throw Error(ErrorKind::NonIntegerOrbit, "|Aut| = " + std::to_string(listed) + " but |Aut_e||Aut_v| = " +
                                                std::to_string(group.order()));
  return {listed, group.aut_e, group.aut_v()};
}

EvaluationReport base_report(const ArrowGraph& a, EvaluationMode mode, const SurgeryConfig& config,
                             const Automorphisms& aut) {
  EvaluationReport r{a};
  r.mode = mode;
  r.convention = config.convention;
  r.aut = aut.aut;
  r.aut_e = aut.aut_e;
  r.aut_v = aut.aut_v;
  r.identities = {kSignAverage, kTripleProducts};
  return r;
}

int sign_of_power(int k) { return (3 * k) % 2 == 0 ? 1 : -1; }

// Z = norm * raw * (-1)^{3k}, then normal form.
void finish(EvaluationReport& r, GraphSpace& space, const AVector& raw) {
  const int k = r.input.graph.k();
  Rational factor(mpz_class(sign_of_power(k)), labelling_count(k));
  factor.canonicalize();
  r.result = space.normal_form(factor * raw);
  r.rendered = space.render(r.result);
}

}  // namespace

const char* to_string(EvaluationMode mode) noexcept { return mode == EvaluationMode::Orbit ? "orbit" : "full"; }

const char* to_string(TypeConvention convention) noexcept {
  return convention == TypeConvention::Default ? "default" : "flipped";
}

mpz_class labelling_count(int k) {
  mpz_class out = 1;
  out <<= static_cast<unsigned>(3 * k);
  return out * factorial(2 * k) * factorial(3 * k);
}

EvaluationReport evaluate_orbit(const ArrowGraph& a, GraphSpace& space, const SurgeryConfig& config) {
  const LabelledTrivalentGraph& g = a.graph;
  const int k = g.k();
  Automorphisms aut = checked_automorphisms(g);
  EvaluationReport r = base_report(a, EvaluationMode::Orbit, config, aut);
  const mpz_class total = labelling_count(k);
  if (total % aut.aut != 0)
    throw Error(ErrorKind::NonIntegerOrbit, "2^{3k}(2k)!(3k)! is not divisible by |Aut| = " + std::to_string(aut.aut));
  r.representatives = total / aut.aut;

  // The identity vertex map must pass the linking gate on Gamma itself.
  YLink link = ylink(a, config.convention);
  std::vector<int> identity(idx(g.num_vertices()));
  std::iota(identity.begin(), identity.end(), 0);
  if (linking_matches(OrientedGraph::from_arrows(a), link, identity).empty())
    throw Error(ErrorKind::NonIntegerOrbit, "linking gate rejects the graph itself");

  // Each matching H gives |Aut_e| (-1)^{3k} [Gamma] for each of |Aut_v| vertex maps.
  mpz_class weight = r.representatives * aut.aut_v * aut.aut_e * sign_of_power(k);
  r.terms = r.representatives * aut.aut_v * aut.aut_e;
  finish(r, space, Rational(weight) * space.class_of(g));
  return r;
}

std::vector<OrientedGraph> labelled_representatives(const LabelledTrivalentGraph& g) {
  const int n = g.num_vertices(), m = g.num_edges();
  if (n > 64) throw Error(ErrorKind::ResourceLimit, "too many vertices to enumerate labellings");
  std::vector<int> vp(idx(n)), ep(idx(m));
  std::iota(vp.begin(), vp.end(), 0);
  // Two bytes per label: tail (high bit set for a reversed loop), head.
  std::vector<std::string> keys;
  do {
    std::iota(ep.begin(), ep.end(), 0);
    do {
      for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
        std::string key(idx(2 * m), '\0');
        for (int e = 0; e < m; ++e) {
          int u = vp[idx(g.edge(e).u)], v = vp[idx(g.edge(e).v)];
          bool flip = (bits >> e) & 1u;
          std::size_t at = idx(2 * ep[idx(e)]);
          if (u == v) {
            key[at] = static_cast<char>(u | (flip ? 0x40 : 0));
            key[at + 1] = static_cast<char>(v);
          } else {
            key[at] = static_cast<char>(flip ? v : u);
            key[at + 1] = static_cast<char>(flip ? u : v);
          }
        }
        keys.push_back(std::move(key));
      }
    } while (std::next_permutation(ep.begin(), ep.end()));
    // Dedupe as we go to bound memory.
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  } while (std::next_permutation(vp.begin(), vp.end()));
  std::vector<OrientedGraph> out;
  out.reserve(keys.size());
  for (const std::string& key : keys) {
    std::vector<Edge> edges;
    std::vector<int> tails;
    for (int e = 0; e < m; ++e) {
      int t = key[idx(2 * e)];
      edges.push_back({t & 0x3f, key[idx(2 * e + 1)]});
      tails.push_back((t & 0x40) ? 1 : 0);
    }
    out.push_back({LabelledTrivalentGraph::validate(n, std::move(edges)), std::move(tails)});
  }
  return out;
}

RepresentativeSet representative_set(const LabelledTrivalentGraph& g, int jobs) {
  RepresentativeSet set{reduce(g).key, labelled_representatives(g), {}};
  set.classes.resize(set.graphs.size());
  parallel_for(set.graphs.size(), jobs, [&](std::size_t i) { set.classes[i] = reduce(set.graphs[i].graph); });
  return set;
}

EvaluationReport evaluate_full(const ArrowGraph& a, GraphSpace& space, const SurgeryConfig& config,
                               const RepresentativeSet* representatives) {
  const LabelledTrivalentGraph& g = a.graph;
  const int k = g.k();
  if (k > 2) throw Error(ErrorKind::ResourceLimit, "full evaluation is limited to k <= 2");
  Automorphisms aut = checked_automorphisms(g);
  EvaluationReport r = base_report(a, EvaluationMode::Full, config, aut);
  std::optional<RepresentativeSet> own;
  if (!representatives) representatives = &own.emplace(representative_set(g, config.jobs));
  if (representatives->key != reduce(g).key)
    throw Error(ErrorKind::Parse, "representative set belongs to another graph");
  const RepresentativeSet& reps = *representatives;
  r.representatives = static_cast<unsigned long>(reps.graphs.size());

  YLink link = ylink(a, config.convention);
  detail::GammaTables tables(link);
  std::vector<std::vector<int>> sigmas;
  std::vector<int> sigma(idx(g.num_vertices()));
  std::iota(sigma.begin(), sigma.end(), 0);
  do sigmas.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));

  struct Tally {
    long matches = 0;
    long sign_sum = 0;
  };
  std::vector<Tally> tallies(reps.graphs.size());
  parallel_for(reps.graphs.size(), config.jobs, [&](std::size_t i) {
    const OrientedGraph& h = reps.graphs[i];
    detail::TermContext ctx(h, tables);
    const std::vector<int>* witness = nullptr;
    Tally& t = tallies[i];
    for (const auto& sg : sigmas) {
      const auto* gate = ctx.accumulate(sg, t.matches, t.sign_sum);
      if (!witness && gate && gate->has_value()) witness = &**gate;
    }
    if (!witness) return;
    // Close the fully separated graph carrying the gate's indices; the class
    // of the result is the precomputed one.
    std::map<int, Decoration> decorations;
    for (int e = 0; e < h.graph.num_edges(); ++e) {
      int p = (*witness)[idx(e)];
      BasisRef tail{p, 0}, head{p - 1, 0};
      decorations[e] = h.tail_end[idx(e)] == 0 ? Decoration{tail, head} : Decoration{head, tail};
    }
    if (!(close(CGraph::split_edges(h.graph, std::move(decorations))) == h.graph))
      throw Error(ErrorKind::Parse, "closing the separated graph changed it");
  });

  AVector raw(k);
  mpz_class terms = 0;
  const int power = sign_of_power(k);
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    const Tally& t = tallies[i];
    const GraphClass& cls = reps.classes[i];
    terms += t.matches;
    if (t.matches == 0 || cls.zero() || t.sign_sum == 0) continue;
    auto pos = space.basis().index(cls.key);
    if (!pos) throw Error(ErrorKind::Parse, "class missing from basis: " + cls.key);
    raw.add(static_cast<int>(*pos), Rational(power * t.sign_sum * cls.sign));
  }
  r.terms = terms;
  finish(r, space, raw);
  return r;
}

}  // namespace gc
