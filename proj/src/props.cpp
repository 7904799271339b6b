#include "tribasis/props.hpp"

#include "tribasis/basis.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace tribasis {

FuzzyFamily::FuzzyFamily(std::vector<PLFunc> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("family must have at least one member");
}

std::vector<Rat> FuzzyFamily::at(const Rat& x) const {
  std::vector<Rat> p;
  p.reserve(members_.size());
  for (const auto& f : members_) p.push_back(f(x));
  return p;
}

RuspiniVerdict is_ruspini(const FuzzyFamily& P) {
  // The sum of the members is piecewise linear on the merged grid, so it
  // equals 1 everywhere iff it equals 1 at every grid point.
  std::vector<Rat> xs = breakpoint_union(P.members());
  for (const Rat& x : xs) {
    Rat sum = 0;
    for (const auto& f : P.members()) sum += f(x);
    if (sum != 1) return {false, x, sum};
  }
  return {};
}

namespace {

// min(f_i, f_j, f_k) as a PL function; positive anywhere iff the triple
// overlaps.
std::optional<OverlapVerdict> check_triple(const FuzzyFamily& P, int i, int j, int k) {
  PLFunc m = combine(combine(P.member(i), P.member(j), PointOp::Min), P.member(k), PointOp::Min);
  auto top = m.global_max();
  if (top.value > 0) return OverlapVerdict{false, i, j, k, top.at, top.value};
  return std::nullopt;
}

std::vector<std::array<int, 3>> triples(int n) {
  std::vector<std::array<int, 3>> ts;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) ts.push_back({i, j, k});
  return ts;
}

} // namespace

OverlapVerdict is_2_overlapping_serial(const FuzzyFamily& P) {
  for (auto [i, j, k] : triples(P.size()))
    if (auto v = check_triple(P, i, j, k)) return *v;
  return {};
}

OverlapVerdict is_2_overlapping_parallel(const FuzzyFamily& P) {
  auto ts = triples(P.size());
  long best = static_cast<long>(ts.size());
  OverlapVerdict verdict;
#if defined(_OPENMP)
#pragma omp parallel
  {
    long local_best = static_cast<long>(ts.size());
    OverlapVerdict local;
#pragma omp for schedule(dynamic) nowait
    for (long t = 0; t < static_cast<long>(ts.size()); ++t) {
      if (t >= local_best) continue;
      if (auto v = check_triple(P, ts[t][0], ts[t][1], ts[t][2])) {
        local_best = t;
        local = *v;
      }
    }
#pragma omp critical
    if (local_best < best) {
      best = local_best;
      verdict = local;
    }
  }
#else
  for (long t = 0; t < static_cast<long>(ts.size()); ++t)
    if (auto v = check_triple(P, ts[t][0], ts[t][1], ts[t][2])) {
      best = t;
      verdict = *v;
      break;
    }
#endif
  (void)best;
  return verdict;
}

OverlapVerdict is_2_overlapping(const FuzzyFamily& P) {
#if defined(_OPENMP)
  if (P.size() >= 16) return is_2_overlapping_parallel(P);
#endif
  return is_2_overlapping_serial(P);
}

NormalVerdict is_normal(const PLFunc& f) {
  auto top = f.global_max();
  return {top.value == 1, top.value};
}

StrongNormalVerdict is_strongly_normal(const PLFunc& f) {
  StrongNormalVerdict v;
  std::optional<Rat> first;
  for (const auto& p : f.points()) {
    if (p.y != 1) continue;
    v.normal = true;
    if (!first) {
      first = p.x;
    } else {
      // Two breakpoints at height 1.  In canonical form consecutive ones
      // bound a plateau; non-consecutive ones still give two distinct
      // attaining points.
      return {false, true, {}, *first, p.x};
    }
  }
  if (!v.normal) return {false, false, {}, {}, {}};
  v.peak = *first;
  return v;
}

MinConvexVerdict is_min_convex(const PLFunc& f) {
  const auto& bp = f.points();
  std::optional<size_t> desc; // start of the first strict descent
  size_t zmin = 0;            // argmin of the values seen after it
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    if (desc) {
      if (bp[k].y < bp[zmin].y) zmin = k;
      if (bp[k].y < bp[k + 1].y)
        return {false, {bp[*desc].x, bp[zmin].x, bp[k + 1].x}};
    } else if (bp[k].y > bp[k + 1].y) {
      desc = k;
      zmin = k + 1;
    }
  }
  return {};
}

namespace {

// Strict unimodality of the value sequence vals[s..e] over abscissae
// xs[s..e]; any flat step inside the support is already a violation.
std::optional<ConvexityTriple> strict_violation(const std::vector<Breakpoint>& bp, size_t s, size_t e) {
  for (size_t k = s; k < e; ++k)
    if (bp[k].y == bp[k + 1].y)
      return ConvexityTriple{bp[k].x, Rat((bp[k].x + bp[k + 1].x) / 2), bp[k + 1].x};
  std::optional<size_t> desc;
  size_t zmin = 0;
  for (size_t k = s; k < e; ++k) {
    if (desc) {
      if (bp[k].y < bp[zmin].y) zmin = k;
      if (bp[k].y < bp[k + 1].y)
        return ConvexityTriple{bp[*desc].x, bp[zmin].x, bp[k + 1].x};
    } else if (bp[k].y > bp[k + 1].y) {
      desc = k;
      zmin = k + 1;
    }
  }
  return std::nullopt;
}

} // namespace

SupportConvexVerdict is_strictly_min_convex_on_support(const PLFunc& f) {
  const auto& bp = f.points();
  const size_t nseg = bp.size() - 1;
  // A maximal support interval spans consecutive segments that are not
  // identically zero and meet in positive breakpoints; an isolated zero
  // splits two components even without a flat zero stretch between them.
  size_t k = 0;
  while (k < nseg) {
    if (bp[k].y == 0 && bp[k + 1].y == 0) {
      ++k;
      continue;
    }
    const size_t s = k;
    while (k + 1 < nseg && bp[k + 1].y > 0) ++k;
    if (auto t = strict_violation(bp, s, k + 1)) return {false, *t};
    ++k;
  }
  return {};
}

SeparatingVerdict is_separating(const FuzzyFamily& P) {
  auto inj = injectivity_check(P);
  return {inj.holds, inj.x, inj.y};
}

bool PropertyReport::bundle_holds() const {
  if (!ruspini.holds || !overlap.holds) return false;
  for (const auto& v : strong_normal)
    if (!v.holds) return false;
  for (const auto& v : min_convex)
    if (!v.holds) return false;
  for (const auto& v : support_convex)
    if (!v.holds) return false;
  return true;
}

PropertyReport property_report(const FuzzyFamily& P) {
  PropertyReport r;
  r.ruspini = is_ruspini(P);
  r.overlap = is_2_overlapping(P);
  for (const auto& f : P.members()) {
    r.normal.push_back(is_normal(f));
    r.strong_normal.push_back(is_strongly_normal(f));
    r.min_convex.push_back(is_min_convex(f));
    r.support_convex.push_back(is_strictly_min_convex_on_support(f));
  }
  r.separating = is_separating(P);
  return r;
}

} // namespace tribasis
