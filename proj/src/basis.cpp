#include "tribasis/basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace tribasis {

std::vector<CurveSegment> refine(const FuzzyFamily& P) {
  std::vector<Rat> xs = breakpoint_union(P.members());
  std::vector<CurveSegment> segs;
  segs.reserve(xs.size() - 1);
  std::vector<Rat> prev = P.at(xs[0]);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    std::vector<Rat> next = P.at(xs[i + 1]);
    segs.push_back({xs[i], xs[i + 1], prev, next});
    prev = std::move(next);
  }
  return segs;
}

namespace {

std::vector<Rat> direction(const CurveSegment& s) {
  std::vector<Rat> d(s.from.size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = s.to[i] - s.from[i];
  return d;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Rat param_at(const CurveSegment& s, const Rat& alpha) {
  return Rat(s.a + alpha * (s.b - s.a));
}

// Exact intersection of two non-degenerate curve segments.  Returns a pair of
// distinct parameters mapped to one point, if the segments provide one.
std::optional<std::pair<Rat, Rat>> pair_collision(const CurveSegment& A, const CurveSegment& B) {
  std::vector<Rat> dA = direction(A), dB = direction(B);
  const size_t n = dA.size();
  std::vector<Rat> q(n);
  for (size_t i = 0; i < n; ++i) q[i] = B.from[i] - A.from[i];

  size_t i0 = n;
  for (size_t i = 0; i < n; ++i)
    if (dA[i] != 0 || dB[i] != 0) {
      i0 = i;
      break;
    }
  // Both directions are nonzero, so i0 exists.
  size_t k0 = n;
  for (size_t k = 0; k < n; ++k) {
    if (k == i0) continue;
    if (dA[i0] * dB[k] != dB[i0] * dA[k]) {
      k0 = k;
      break;
    }
  }

  if (k0 < n) {
    // Independent directions: solve alpha*dA - beta*dB = q on rows i0, k0,
    // then insist the remaining rows agree.
    Rat D = dB[i0] * dA[k0] - dA[i0] * dB[k0];
    Rat alpha = (dB[i0] * q[k0] - q[i0] * dB[k0]) / D;
    Rat beta = (dA[i0] * q[k0] - q[i0] * dA[k0]) / D;
    if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1) return std::nullopt;
    for (size_t r = 0; r < n; ++r)
      if (A.from[r] + alpha * dA[r] != B.from[r] + beta * dB[r]) return std::nullopt;
    Rat x = param_at(A, alpha), y = param_at(B, beta);
    if (x == y) return std::nullopt;
    return std::make_pair(std::move(x), std::move(y));
  }

  // Parallel directions.  Cross-ratios against row i0 vanish for every row,
  // and dA[i0] == 0 would force dA == 0, so dA[i0] != 0.
  Rat c = dB[i0] / dA[i0];
  Rat g0 = q[i0] / dA[i0];
  for (size_t r = 0; r < n; ++r)
    if (q[r] != g0 * dA[r]) return std::nullopt; // parallel but distinct lines
  // In A's alpha coordinate B spans [g0, g0+c] (possibly reversed); a shared
  // point with differing global parameters is found at an end of the overlap
  // if anywhere, since parameter difference is affine in alpha.
  Rat lo = g0, hi = Rat(g0 + c);
  if (lo > hi) std::swap(lo, hi);
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  if (lo > hi) return std::nullopt;
  Rat mid = Rat((lo + hi) / 2);
  for (const Rat& alpha : {lo, mid, hi}) {
    Rat beta = Rat((alpha - g0) / c);
    Rat x = param_at(A, alpha), y = param_at(B, beta);
    if (x != y) return std::make_pair(std::move(x), std::move(y));
  }
  return std::nullopt;
}

std::optional<InjectivityVerdict> degenerate_segment(const std::vector<CurveSegment>& segs) {
  for (const auto& s : segs)
    if (all_zero(direction(s))) return InjectivityVerdict{false, s.a, s.b};
  return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> segment_pairs(size_t K) {
  std::vector<std::pair<size_t, size_t>> ps;
  ps.reserve(K * (K - 1) / 2);
  for (size_t s = 0; s < K; ++s)
    for (size_t t = s + 1; t < K; ++t) ps.push_back({s, t});
  return ps;
}

InjectivityVerdict pairs_serial(const std::vector<CurveSegment>& segs) {
  for (auto [s, t] : segment_pairs(segs.size()))
    if (auto hit = pair_collision(segs[s], segs[t])) return {false, hit->first, hit->second};
  return {};
}

InjectivityVerdict pairs_parallel(const std::vector<CurveSegment>& segs) {
  auto ps = segment_pairs(segs.size());
  const long total = static_cast<long>(ps.size());
  long best = total;
  InjectivityVerdict verdict;
#if defined(_OPENMP)
#pragma omp parallel
  {
    long local_best = total;
    InjectivityVerdict local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long p = 0; p < total; ++p) {
      if (p >= local_best) continue;
      if (auto hit = pair_collision(segs[ps[p].first], segs[ps[p].second])) {
        local_best = p;
        local = {false, hit->first, hit->second};
      }
    }
#pragma omp critical
    if (local_best < best) {
      best = local_best;
      verdict = local;
    }
  }
#else
  for (long p = 0; p < total; ++p)
    if (auto hit = pair_collision(segs[ps[p].first], segs[ps[p].second])) {
      best = p;
      verdict = {false, hit->first, hit->second};
      break;
    }
#endif
  (void)best;
  return verdict;
}

} // namespace

InjectivityVerdict injectivity_check_serial(const FuzzyFamily& P) {
  auto segs = refine(P);
  if (auto d = degenerate_segment(segs)) return *d;
  return pairs_serial(segs);
}

InjectivityVerdict injectivity_check_parallel(const FuzzyFamily& P) {
  auto segs = refine(P);
  if (auto d = degenerate_segment(segs)) return *d;
  return pairs_parallel(segs);
}

InjectivityVerdict injectivity_check(const FuzzyFamily& P) {
  auto segs = refine(P);
  if (auto d = degenerate_segment(segs)) return *d;
#if defined(_OPENMP)
  if (segs.size() >= 64) return pairs_parallel(segs);
#endif
  return pairs_serial(segs);
}

PathCoverage path_coverage(const FuzzyFamily& P) {
  const int n = P.size();
  auto segs = refine(P);
  PathCoverage pc;
  std::map<std::pair<int, int>, std::vector<Interval>> edge_ivals;
  std::set<int> vhits;

  for (size_t s = 0; s < segs.size(); ++s) {
    const auto& seg = segs[s];
    Rat sum_from = 0, sum_to = 0;
    for (const auto& c : seg.from) sum_from += c;
    for (const auto& c : seg.to) sum_to += c;
    if (sum_from != 1 || sum_to != 1) {
      pc.leftovers.push_back(s);
      continue;
    }
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (seg.from[i] != 0 || seg.to[i] != 0) support.push_back(i + 1);
    if (support.size() > 2) {
      pc.leftovers.push_back(s);
      continue;
    }
    if (support.size() == 1) {
      // Coordinates sum to 1 and only one is ever nonzero: the segment sits
      // at the vertex e_m for its whole parameter interval.
      vhits.insert(support[0]);
      continue;
    }
    const int i = support[0], j = support[1];
    Rat la = seg.from[j - 1], lb = seg.to[j - 1];
    if (la > lb) std::swap(la, lb);
    edge_ivals[{i, j}].push_back({la, lb});
  }

  pc.vertex_hits.assign(vhits.begin(), vhits.end());

  for (auto& [e, ivals] : edge_ivals) {
    // A vertex hit lies on every incident edge; count it as point coverage.
    if (vhits.count(e.first)) ivals.push_back({Rat(0), Rat(0)});
    if (vhits.count(e.second)) ivals.push_back({Rat(1), Rat(1)});
    std::sort(ivals.begin(), ivals.end(),
              [](const Interval& u, const Interval& v) { return u.lo < v.lo || (u.lo == v.lo && u.hi < v.hi); });
    std::vector<Interval> merged;
    for (const auto& iv : ivals) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
      } else {
        merged.push_back(iv);
      }
    }
    bool full = merged.size() == 1 && merged[0].lo == 0 && merged[0].hi == 1;
    pc.edges.push_back({e.first, e.second, std::move(merged), full});
  }

  if (n < 2 || !pc.leftovers.empty() || pc.edges.size() != static_cast<size_t>(n - 1))
    return pc;
  for (const auto& ec : pc.edges)
    if (!ec.full) return pc;

  // n-1 fully covered edges: Hamiltonian iff they form one path through all
  // n vertices.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (const auto& ec : pc.edges) {
    adj[ec.i].push_back(ec.j);
    adj[ec.j].push_back(ec.i);
  }
  std::vector<int> ends;
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() > 2) return pc;
    if (adj[v].size() == 1) ends.push_back(v);
    if (adj[v].empty()) return pc;
  }
  if (ends.size() != 2) return pc;

  // Prefer to start the walk where the curve starts.
  int start = std::min(ends[0], ends[1]);
  const auto& origin = segs.front().from;
  for (int v : ends) {
    bool at_vertex = true;
    for (int i = 1; i <= n; ++i)
      if (origin[i - 1] != Rat(i == v ? 1 : 0)) {
        at_vertex = false;
        break;
      }
    if (at_vertex) {
      start = v;
      break;
    }
  }

  std::vector<int> walk{start};
  int prev = 0, cur = start;
  while (true) {
    int next = 0;
    for (int w : adj[cur])
      if (w != prev) {
        next = w;
        break;
      }
    if (next == 0) break;
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(walk.size()) != n) return pc; // a cycle component hides somewhere
  pc.hamiltonian = true;
  pc.perm = std::move(walk);
  return pc;
}

namespace {

// (x, f(x)) at a, at b, and at every breakpoint strictly between.
std::vector<std::pair<Rat, Rat>> restriction(const PLFunc& f, const Rat& a, const Rat& b) {
  std::vector<std::pair<Rat, Rat>> r;
  r.push_back({a, f(a)});
  for (const auto& p : f.points())
    if (p.x > a && p.x < b) r.push_back({p.x, p.y});
  r.push_back({b, f(b)});
  return r;
}

} // namespace

DefVerdict check_definition(const FuzzyFamily& P) {
  DefVerdict v;
  const int n = P.size();
  if (n < 2) {
    v.failure = DefFailure::TooFewMembers;
    return v;
  }

  std::vector<Rat> peak(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    auto sn = is_strongly_normal(P.member(m));
    if (!sn.holds) {
      v.failure = DefFailure::NotStronglyNormal;
      v.member = m;
      return v;
    }
    peak[static_cast<size_t>(m) - 1] = sn.peak;
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int u, int w) {
    const Rat &pu = peak[static_cast<size_t>(u) - 1], &pw = peak[static_cast<size_t>(w) - 1];
    return pu < pw || (pu == pw && u < w);
  });
  for (int i = 0; i + 1 < n; ++i)
    if (peak[static_cast<size_t>(order[i]) - 1] == peak[static_cast<size_t>(order[i + 1]) - 1]) {
      v.failure = DefFailure::PeaksNotDistinct;
      v.member = order[i + 1];
      v.where = peak[static_cast<size_t>(order[i]) - 1];
      return v;
    }

  std::vector<Rat> nodes;
  nodes.reserve(static_cast<size_t>(n));
  for (int m : order) nodes.push_back(peak[static_cast<size_t>(m) - 1]);
  v.nodes = nodes;
  v.perm = order;

  if (nodes.front() != 0 || nodes.back() != 1) {
    v.failure = DefFailure::PeaksNotAnchored;
    v.member = nodes.front() != 0 ? order.front() : order.back();
    v.where = nodes.front() != 0 ? nodes.front() : nodes.back();
    return v;
  }

  v.linear = true;
  for (int i = 1; i < n; ++i) {
    const Rat &a = nodes[static_cast<size_t>(i) - 1], &b = nodes[static_cast<size_t>(i)];
    const PLFunc& fall = P.member(order[static_cast<size_t>(i) - 1]);
    const PLFunc& rise = P.member(order[static_cast<size_t>(i)]);

    if (Rat fb = fall(b); fb != 0) {
      v.failure = DefFailure::NotZeroAtNextPeak;
      v.member = order[static_cast<size_t>(i) - 1];
      v.interval = i;
      v.where = b;
      v.value = fb;
      return v;
    }

    for (int j = 0; j < n; ++j) {
      if (j == i - 1 || j == i) continue;
      const PLFunc& w = P.member(order[static_cast<size_t>(j)]);
      for (const auto& [x, y] : restriction(w, a, b))
        if (y != 0) {
          v.failure = DefFailure::NotZeroOffInterval;
          v.member = order[static_cast<size_t>(j)];
          v.interval = i;
          v.where = x;
          v.value = y;
          return v;
        }
    }

    {
      std::vector<Rat> grid;
      for (const auto& [x, y] : restriction(fall, a, b)) grid.push_back(x);
      for (const auto& [x, y] : restriction(rise, a, b)) grid.push_back(x);
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      for (const Rat& x : grid) {
        Rat sum = fall(x) + rise(x);
        if (sum != 1) {
          v.failure = DefFailure::NotComplementary;
          v.interval = i;
          v.where = x;
          v.value = sum;
          return v;
        }
      }
    }

    auto strictly = [&](const PLFunc& f, bool decreasing) -> std::optional<Rat> {
      auto pts = restriction(f, a, b);
      for (size_t k = 0; k + 1 < pts.size(); ++k) {
        bool ok = decreasing ? pts[k + 1].second < pts[k].second : pts[k + 1].second > pts[k].second;
        if (!ok) return pts[k + 1].first;
      }
      if (pts.size() > 2) v.linear = false;
      return std::nullopt;
    };
    if (auto bad = strictly(fall, true)) {
      v.failure = DefFailure::NotStrictlyMonotone;
      v.member = order[static_cast<size_t>(i) - 1];
      v.interval = i;
      v.where = *bad;
      v.value = fall(*bad);
      return v;
    }
    if (auto bad = strictly(rise, false)) {
      v.failure = DefFailure::NotStrictlyMonotone;
      v.member = order[static_cast<size_t>(i)];
      v.interval = i;
      v.where = *bad;
      v.value = rise(*bad);
      return v;
    }
  }

  v.holds = true;
  return v;
}

const char* def_failure_str(DefFailure f) {
  switch (f) {
    case DefFailure::None: return "none";
    case DefFailure::TooFewMembers: return "fewer than two members";
    case DefFailure::NotStronglyNormal: return "member not strongly normal";
    case DefFailure::PeaksNotDistinct: return "peak locations not distinct";
    case DefFailure::PeaksNotAnchored: return "peaks not anchored at 0 and 1";
    case DefFailure::NotZeroAtNextPeak: return "falling member nonzero at the next peak";
    case DefFailure::NotZeroOffInterval: return "uninvolved member nonzero inside an interval";
    case DefFailure::NotComplementary: return "incident pair does not sum to 1";
    case DefFailure::NotStrictlyMonotone: return "incident member not strictly monotone";
  }
  return "unknown";
}

Classification classify(const FuzzyFamily& P) {
  Classification c;
  c.def = check_definition(P);
  c.report = property_report(P);
  c.injectivity = injectivity_check(P);
  c.path = path_coverage(P);
  const bool by_def = c.def.holds;
  const bool by_props = c.report.bundle_holds();
  const bool by_curve = c.injectivity.holds && c.path.hamiltonian;
  if (by_def != by_props || by_props != by_curve)
    throw std::logic_error("classification routes disagree; this is a bug");
  c.pseudo_triangular = by_def;
  c.triangular = by_def && c.def.linear;
  return c;
}

FuzzyFamily canonical_basis(int n) {
  if (n < 2) throw std::invalid_argument("canonical basis needs n >= 2");
  std::vector<PLFunc> fs;
  fs.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<Breakpoint> pts;
    for (int j = 1; j <= n; ++j) pts.push_back({Rat(j - 1, n - 1), Rat(i == j ? 1 : 0)});
    fs.push_back(PLFunc::from_points(std::move(pts)));
  }
  return FuzzyFamily(std::move(fs));
}

} // namespace tribasis
