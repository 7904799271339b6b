#include "tribasis/plfunc.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tribasis {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

// Appends p, removing the previous point first whenever it has become
// collinear with its neighbours.
void push_canonical(std::vector<Breakpoint>& out, Breakpoint p) {
  while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p))
    out.pop_back();
  out.push_back(std::move(p));
}

} // namespace

PLFunc PLFunc::from_points(std::vector<Breakpoint> pts) {
  if (pts.size() < 2)
    throw std::invalid_argument("breakpoint list needs at least two points");
  if (pts.front().x != 0)
    throw std::invalid_argument("first breakpoint must be at x = 0");
  if (pts.back().x != 1)
    throw std::invalid_argument("last breakpoint must be at x = 1");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y < 0 || pts[i].y > 1)
      throw std::invalid_argument("breakpoint value outside [0,1] at x = " + rat_str(pts[i].x));
    if (i > 0 && pts[i - 1].x >= pts[i].x)
      throw std::invalid_argument("breakpoint abscissae must be strictly increasing");
  }
  std::vector<Breakpoint> canon;
  canon.reserve(pts.size());
  for (auto& p : pts) push_canonical(canon, std::move(p));
  return PLFunc(std::move(canon));
}

PLFunc PLFunc::constant(const Rat& c) {
  return from_points({{Rat(0), c}, {Rat(1), c}});
}

PLFunc PLFunc::identity() {
  return from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
}

Rat PLFunc::operator()(const Rat& x) const {
  if (x < 0 || x > 1) throw std::domain_error("argument outside [0,1]: " + rat_str(x));
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](const Rat& v, const Breakpoint& p) { return v < p.x; });
  if (it == pts_.end()) return pts_.back().y; // x == 1
  assert(it != pts_.begin());
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  if (x == lo.x) return lo.y;
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

PLFunc PLFunc::negate() const {
  std::vector<Breakpoint> out;
  out.reserve(pts_.size());
  for (const auto& p : pts_) out.push_back({p.x, Rat(1 - p.y)});
  return PLFunc(std::move(out)); // the affine map y -> 1-y preserves canonicity
}

PLFunc::Extremum PLFunc::global_min() const {
  const Breakpoint* best = &pts_.front();
  for (const auto& p : pts_)
    if (p.y < best->y) best = &p;
  return {best->y, best->x};
}

PLFunc::Extremum PLFunc::global_max() const {
  const Breakpoint* best = &pts_.front();
  for (const auto& p : pts_)
    if (p.y > best->y) best = &p;
  return {best->y, best->x};
}

Rat apply_op(PointOp op, const Rat& a, const Rat& b) {
  switch (op) {
    case PointOp::Min: return std::min(a, b);
    case PointOp::Max: return std::max(a, b);
    case PointOp::BoundedSum: {
      Rat s = a + b;
      return s > 1 ? Rat(1) : s;
    }
    case PointOp::BoundedProd: {
      Rat s = a + b - 1;
      return s < 0 ? Rat(0) : s;
    }
    case PointOp::BoundedDiff: {
      Rat s = a - b;
      return s < 0 ? Rat(0) : s;
    }
    case PointOp::Implication: {
      Rat s = 1 - (a - b);
      return s > 1 ? Rat(1) : s;
    }
    case PointOp::Biconditional: {
      Rat s = a - b;
      if (s < 0) s = -s;
      return Rat(1 - s);
    }
  }
  throw std::logic_error("unknown PointOp");
}

PLFunc combine(const PLFunc& f, const PLFunc& g, PointOp op) {
  std::vector<Rat> xs;
  xs.reserve(f.points().size() + g.points().size());
  for (const auto& p : f.points()) xs.push_back(p.x);
  for (const auto& p : g.points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Which clamp boundary the op can cross inside a cell: the result is affine
  // wherever the governing functional keeps one sign.
  auto governing = [op](const Rat& fa, const Rat& ga) -> Rat {
    switch (op) {
      case PointOp::BoundedSum:
      case PointOp::BoundedProd: return fa + ga - 1;
      default: return fa - ga; // Min, Max, BoundedDiff, Implication, Biconditional
    }
  };

  std::vector<Breakpoint> out;
  out.reserve(2 * xs.size());
  Rat fa = f(xs[0]), ga = g(xs[0]);
  push_canonical(out, {xs[0], apply_op(op, fa, ga)});
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat& a = xs[i];
    const Rat& b = xs[i + 1];
    Rat fb = f(b), gb = g(b);
    Rat sa = governing(fa, ga), sb = governing(fb, gb);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      Rat c = a + sa * (b - a) / (sa - sb);
      push_canonical(out, {c, apply_op(op, f(c), g(c))});
    }
    push_canonical(out, {b, apply_op(op, fb, gb)});
    fa = std::move(fb);
    ga = std::move(gb);
  }
  return PLFunc::from_points(std::move(out));
}

std::vector<Rat> breakpoint_union(std::span<const PLFunc> fs) {
  std::vector<Rat> xs;
  for (const auto& f : fs)
    for (const auto& p : f.points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

} // namespace tribasis
