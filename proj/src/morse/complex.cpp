#include "gc/error.hpp"
#include "gc/morse.hpp"

#include <algorithm>

namespace gc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::int64_t v : m[i]) out[i].emplace_back(static_cast<long>(v));
  return out;
}

RatMatrix zeros(int rows, int cols) { return RatMatrix(idx(rows), std::vector<Rational>(idx(cols))); }

RatMatrix identity(int n) {
  RatMatrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m[idx(i)][idx(i)] = 1;
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b, int a_cols, int b_cols) {
  RatMatrix out = zeros(static_cast<int>(a.size()), b_cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int l = 0; l < a_cols; ++l) {
      if (a[i][idx(l)] == 0) continue;
      for (int j = 0; j < b_cols; ++j) out[i][idx(j)] += a[i][idx(l)] * b[idx(l)][idx(j)];
    }
  return out;
}

// Row echelon data of a dense rational matrix: the reduced matrix and pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<int> pivot_cols;
};

Echelon rref(RatMatrix m, int cols) {
  Echelon e;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][idx(c)] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational lead = m[row][idx(c)];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][idx(c)] == 0) continue;
      Rational f = m[r][idx(c)];
      for (int j = 0; j < cols; ++j) m[r][idx(j)] -= f * m[row][idx(j)];
    }
    e.pivot_cols.push_back(c);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank_of(const IntMatrix& m, int cols) {
  if (m.empty() || cols == 0) return 0;
  return rref(to_rational(m), cols).pivot_cols.size();
}

}  // namespace

GradedComplex GradedComplex::make(Ranks ranks, std::array<IntMatrix, kNumDegrees> boundary,
                                  std::array<std::vector<std::string>, kNumDegrees> names) {
  for (int d = 0; d < kNumDegrees; ++d) {
    if (ranks[idx(d)] < 0) throw Error(ErrorKind::Parse, "negative rank in degree " + std::to_string(d));
  }
  if (!boundary[0].empty()) throw Error(ErrorKind::Parse, "degree 0 has no boundary");
  for (int d = 1; d < kNumDegrees; ++d) {
    IntMatrix& m = boundary[idx(d)];
    const int rows = ranks[idx(d - 1)], cols = ranks[idx(d)];
    if (m.empty()) m.assign(idx(rows), std::vector<std::int64_t>(idx(cols), 0));
    bool ok = static_cast<int>(m.size()) == rows &&
              std::all_of(m.begin(), m.end(), [&](const auto& r) { return static_cast<int>(r.size()) == cols; });
    if (!ok)
      throw Error(ErrorKind::Parse, "boundary " + std::to_string(d) + " must be " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
  }
  for (int d = 0; d < kNumDegrees; ++d) {
    auto& n = names[idx(d)];
    if (n.empty()) {
      for (int i = 0; i < ranks[idx(d)]; ++i) n.push_back("d" + std::to_string(d) + "_" + std::to_string(i));
    } else if (static_cast<int>(n.size()) != ranks[idx(d)]) {
      throw Error(ErrorKind::Parse, "wrong number of names in degree " + std::to_string(d));
    }
  }
  return GradedComplex{ranks, std::move(boundary), std::move(names)};
}

int GradedComplex::total_rank() const {
  int t = 0;
  for (int r : ranks) t += r;
  return t;
}

const Rational& Propagator::coefficient(int degree, int to, int from) const {
  return g.at(idx(degree)).at(idx(to)).at(idx(from));
}

void check_complex(const GradedComplex& c) {
  for (int d = 2; d < kNumDegrees; ++d) {
    const IntMatrix& outer = c.boundary[idx(d - 1)];
    const IntMatrix& inner = c.boundary[idx(d)];
    for (int i = 0; i < c.ranks[idx(d - 2)]; ++i)
      for (int j = 0; j < c.ranks[idx(d)]; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < c.ranks[idx(d - 1)]; ++l) s += outer[idx(i)][idx(l)] * inner[idx(l)][idx(j)];
        if (s != 0)
          throw Error(ErrorKind::NotAComplex, "boundary_" + std::to_string(d - 1) + " * boundary_" + std::to_string(d) +
                                                  " has entry " + std::to_string(s) + " at (" + std::to_string(i) +
                                                  "," + std::to_string(j) + ")");
      }
  }
}

Ranks rational_homology(const GradedComplex& c) {
  Ranks h{};
  for (int d = 0; d < kNumDegrees; ++d) {
    std::size_t out = d > 0 ? rank_of(c.boundary[idx(d)], c.ranks[idx(d)]) : 0;
    std::size_t in = d + 1 < kNumDegrees ? rank_of(c.boundary[idx(d + 1)], c.ranks[idx(d + 1)]) : 0;
    h[idx(d)] = c.ranks[idx(d)] - static_cast<int>(out + in);
  }
  return h;
}

Propagator compute_propagator(const GradedComplex& c) {
  check_complex(c);
  Ranks h = rational_homology(c);
  for (int d = 0; d < kNumDegrees; ++d) {
    if (h[idx(d)] != 0)
      throw Error(ErrorKind::NotAcyclic, "homology in degree " + std::to_string(d) + " has rank " +
                                             std::to_string(h[idx(d)]));
  }
  Propagator p;
  p.ranks = c.ranks;
  p.g[idx(kTopDegree)] = {};
  RatMatrix previous;  // g_{d-1}
  for (int d = 0; d < kNumDegrees; ++d) {
    const int r = c.ranks[idx(d)];
    // Target of boundary_{d+1} g_d.
    RatMatrix rhs = identity(r);
    if (d > 0) {
      RatMatrix correction = multiply(previous, to_rational(c.boundary[idx(d)]), c.ranks[idx(d - 1)], r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) rhs[idx(i)][idx(j)] -= correction[idx(i)][idx(j)];
    }
    if (d == kTopDegree) break;  // rhs is zero by acyclicity
    const int above = c.ranks[idx(d + 1)];
    // Augmented system [boundary_{d+1} | rhs].
    RatMatrix aug = to_rational(c.boundary[idx(d + 1)]);
    for (int i = 0; i < r; ++i) aug[idx(i)].insert(aug[idx(i)].end(), rhs[idx(i)].begin(), rhs[idx(i)].end());
    Echelon e = rref(std::move(aug), above + r);
    RatMatrix g = zeros(above, r);
    for (std::size_t row = 0; row < e.pivot_cols.size(); ++row) {
      int pc = e.pivot_cols[row];
      if (pc >= above) throw Error(ErrorKind::NotAcyclic, "no contraction in degree " + std::to_string(d));
      for (int j = 0; j < r; ++j) g[idx(pc)][idx(j)] = e.reduced[row][idx(above + j)];
    }
    p.g[idx(d)] = g;
    previous = std::move(g);
  }
  return p;
}

bool is_contraction(const GradedComplex& c, const Propagator& p) {
  for (int d = 0; d < kNumDegrees; ++d) {
    const int r = c.ranks[idx(d)];
    RatMatrix sum = zeros(r, r);
    if (d + 1 < kNumDegrees) {
      RatMatrix a = multiply(to_rational(c.boundary[idx(d + 1)]), p.g[idx(d)], c.ranks[idx(d + 1)], r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sum[idx(i)][idx(j)] += a[idx(i)][idx(j)];
    }
    if (d > 0) {
      RatMatrix b = multiply(p.g[idx(d - 1)], to_rational(c.boundary[idx(d)]), c.ranks[idx(d - 1)], r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sum[idx(i)][idx(j)] += b[idx(i)][idx(j)];
    }
    if (sum != identity(r)) return false;
  }
  return true;
}

DualPair dual_propagator(const GradedComplex& c, const Propagator& p) {
  Ranks ranks{};
  std::array<IntMatrix, kNumDegrees> boundary;
  std::array<std::vector<std::string>, kNumDegrees> names;
  for (int d = 0; d < kNumDegrees; ++d) {
    ranks[idx(d)] = c.ranks[idx(kTopDegree - d)];
    for (const auto& n : c.names[idx(kTopDegree - d)]) names[idx(d)].push_back(n + "*");
  }
  for (int d = 1; d < kNumDegrees; ++d) {
    const IntMatrix& src = c.boundary[idx(kTopDegree + 1 - d)];  // shape r_{4-d} x r_{5-d}
    IntMatrix& dst = boundary[idx(d)];                            // shape r*_{d-1} x r*_d
    dst.assign(idx(ranks[idx(d - 1)]), std::vector<std::int64_t>(idx(ranks[idx(d)]), 0));
    for (int i = 0; i < ranks[idx(d - 1)]; ++i)
      for (int j = 0; j < ranks[idx(d)]; ++j) dst[idx(i)][idx(j)] = -src[idx(j)][idx(i)];
  }
  Propagator dual;
  dual.ranks = ranks;
  for (int d = 0; d < kTopDegree; ++d) {
    const RatMatrix& src = p.g[idx(kTopDegree - 1 - d)];  // shape r_{4-d} x r_{3-d}
    RatMatrix dst = zeros(ranks[idx(d + 1)], ranks[idx(d)]);
    for (int i = 0; i < ranks[idx(d + 1)]; ++i)
      for (int j = 0; j < ranks[idx(d)]; ++j) dst[idx(i)][idx(j)] = -src[idx(j)][idx(i)];
    dual.g[idx(d)] = std::move(dst);
  }
  return {GradedComplex::make(ranks, std::move(boundary), std::move(names)), std::move(dual)};
}

namespace {

void check_event(const HandleSlideEvent& ev, const Ranks& ranks) {
  auto valid = [&](const BasisRef& b) {
    return b.degree >= 0 && b.degree < kNumDegrees && b.index >= 0 && b.index < ranks[idx(b.degree)];
  };
  if (!valid(ev.p) || !valid(ev.q) || ev.p.degree != ev.q.degree || ev.p.index == ev.q.index ||
      (ev.sign != 1 && ev.sign != -1))
    throw Error(ErrorKind::Parse, "handle slide needs two distinct basis elements of one degree and a sign of +-1");
}

Transport identity_transport(const Ranks& ranks) {
  Transport t;
  for (int d = 0; d < kNumDegrees; ++d) {
    t[idx(d)].assign(idx(ranks[idx(d)]), std::vector<std::int64_t>(idx(ranks[idx(d)]), 0));
    for (int i = 0; i < ranks[idx(d)]; ++i) t[idx(d)][idx(i)][idx(i)] = 1;
  }
  return t;
}

// m <- m (1 + s * unit(q, p)): column p gains s times column q.
void right_multiply(IntMatrix& m, int q, int p, int s) {
  for (auto& row : m) row[idx(p)] += s * row[idx(q)];
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int inner, int cols) {
  IntMatrix out(a.size(), std::vector<std::int64_t>(idx(cols), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int l = 0; l < inner; ++l) {
      if (a[i][idx(l)] == 0) continue;
      for (int j = 0; j < cols; ++j) out[i][idx(j)] += a[i][idx(l)] * b[idx(l)][idx(j)];
    }
  return out;
}

}  // namespace

Transport transport(const std::vector<HandleSlideEvent>& events, const Ranks& ranks) {
  Transport t = identity_transport(ranks);
  for (const auto& ev : events) {
    check_event(ev, ranks);
    right_multiply(t[idx(ev.p.degree)], ev.q.index, ev.p.index, ev.sign);
  }
  return t;
}

Transport transport_inverse(const std::vector<HandleSlideEvent>& events, const Ranks& ranks) {
  Transport t = identity_transport(ranks);
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    check_event(*it, ranks);
    right_multiply(t[idx(it->p.degree)], it->q.index, it->p.index, -it->sign);
  }
  return t;
}

GradedComplex transported_complex(const GradedComplex& c, const std::vector<HandleSlideEvent>& events) {
  Transport phi = transport(events, c.ranks);
  Transport inv = transport_inverse(events, c.ranks);
  std::array<IntMatrix, kNumDegrees> boundary;
  for (int d = 1; d < kNumDegrees; ++d) {
    const int below = c.ranks[idx(d - 1)], here = c.ranks[idx(d)];
    IntMatrix left = multiply(phi[idx(d - 1)], c.boundary[idx(d)], below, here);
    boundary[idx(d)] = multiply(left, inv[idx(d)], here, here);
  }
  return GradedComplex::make(c.ranks, std::move(boundary), c.names);
}

}  // namespace gc
