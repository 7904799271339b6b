#include "doctest.h"

#include "generators.hpp"
#include "tribasis/props.hpp"

using namespace tribasis;
using testgen::rat;

namespace {

PLFunc pl(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Breakpoint> bp;
  for (auto& [x, y] : pts) bp.push_back({rat(x), rat(y)});
  return PLFunc::from_points(std::move(bp));
}

FuzzyFamily tstar3() {
  return FuzzyFamily({pl({{"0", "1"}, {"1/2", "0"}, {"1", "0"}}),
                      pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}}),
                      pl({{"0", "0"}, {"1/2", "0"}, {"1", "1"}})});
}

// Breakpoints plus segment midpoints: enough sample points to decide both
// convexity variants for a PL function.
std::vector<Rat> candidates(const PLFunc& f) {
  std::vector<Rat> cs;
  const auto& bp = f.points();
  for (size_t i = 0; i < bp.size(); ++i) {
    cs.push_back(bp[i].x);
    if (i + 1 < bp.size()) cs.push_back(Rat((bp[i].x + bp[i + 1].x) / 2));
  }
  return cs;
}

bool brute_valley(const PLFunc& f) {
  auto cs = candidates(f);
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = a + 1; b < cs.size(); ++b)
      for (size_t c = b + 1; c < cs.size(); ++c) {
        Rat fz = f(cs[b]);
        if (fz < f(cs[a]) && fz < f(cs[c])) return true;
      }
  return false;
}

// Whether [x,y] stays inside one support-closure component, i.e. f is
// positive on the open interval: no zero breakpoint strictly inside and no
// identically zero segment crossing it.
bool same_component(const PLFunc& f, const Rat& x, const Rat& y) {
  const auto& bp = f.points();
  for (const auto& p : bp)
    if (p.y == 0 && p.x > x && p.x < y) return false;
  for (size_t i = 0; i + 1 < bp.size(); ++i)
    if (bp[i].y == 0 && bp[i + 1].y == 0 && bp[i].x < y && bp[i + 1].x > x) return false;
  return true;
}

bool brute_strict_violation(const PLFunc& f) {
  auto cs = candidates(f);
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = a + 1; b < cs.size(); ++b)
      for (size_t c = b + 1; c < cs.size(); ++c) {
        if (!same_component(f, cs[a], cs[c])) continue;
        Rat fz = f(cs[b]);
        if (fz <= f(cs[a]) && fz <= f(cs[c])) return true;
      }
  return false;
}

} // namespace

TEST_CASE("ruspini partition detection") {
  CHECK(is_ruspini(tstar3()).holds);

  FuzzyFamily broken({pl({{"0", "1"}, {"1/2", "0"}, {"1", "0"}}),
                      pl({{"0", "0"}, {"1/2", "1/2"}, {"1", "0"}}),
                      pl({{"0", "0"}, {"1/2", "0"}, {"1", "1"}})});
  auto v = is_ruspini(broken);
  CHECK_FALSE(v.holds);
  CHECK(v.x == rat("1/2"));
  CHECK(v.sum == rat("1/2"));
  // the witness refutes by direct evaluation
  Rat direct = 0;
  for (const auto& f : broken.members()) direct += f(v.x);
  CHECK(direct == v.sum);
}

TEST_CASE("two-overlap detection") {
  CHECK(is_2_overlapping(tstar3()).holds);

  FuzzyFamily fat({pl({{"0", "1"}, {"3/4", "0"}, {"1", "0"}}),
                   pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}}),
                   pl({{"0", "0"}, {"1/4", "0"}, {"1", "1"}})});
  auto v = is_2_overlapping_serial(fat);
  CHECK_FALSE(v.holds);
  CHECK(v.i == 1);
  CHECK(v.j == 2);
  CHECK(v.k == 3);
  CHECK(v.value > 0);
  CHECK(fat.member(1)(v.x) >= v.value);
  CHECK(fat.member(2)(v.x) >= v.value);
  CHECK(fat.member(3)(v.x) >= v.value);

  auto p = is_2_overlapping_parallel(fat);
  CHECK(p.holds == v.holds);
  CHECK(p.i == v.i);
  CHECK(p.j == v.j);
  CHECK(p.k == v.k);
  CHECK(p.x == v.x);
  CHECK(p.value == v.value);
}

TEST_CASE("normality and strong normality") {
  auto f2 = pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}});
  CHECK(is_normal(f2).holds);
  auto sn = is_strongly_normal(f2);
  CHECK(sn.holds);
  CHECK(sn.peak == rat("1/2"));

  auto low = pl({{"0", "0"}, {"1/2", "9/10"}, {"1", "0"}});
  CHECK_FALSE(is_normal(low).holds);
  CHECK(is_normal(low).max_value == rat("9/10"));
  auto snl = is_strongly_normal(low);
  CHECK_FALSE(snl.holds);
  CHECK_FALSE(snl.normal);

  auto plateau = pl({{"0", "0"}, {"1/4", "1"}, {"3/4", "1"}, {"1", "0"}});
  auto snp = is_strongly_normal(plateau);
  CHECK_FALSE(snp.holds);
  CHECK(snp.normal);
  CHECK(snp.plateau_lo == rat("1/4"));
  CHECK(snp.plateau_hi == rat("3/4"));
  CHECK(plateau(snp.plateau_lo) == 1);
  CHECK(plateau(snp.plateau_hi) == 1);
}

TEST_CASE("min-convexity scan with valley witness") {
  auto w = pl({{"0", "1/2"}, {"1/2", "0"}, {"1", "1/2"}});
  auto v = is_min_convex(w);
  CHECK_FALSE(v.holds);
  CHECK(v.triple.x == 0);
  CHECK(v.triple.z == rat("1/2"));
  CHECK(v.triple.y == 1);
  CHECK(w(v.triple.z) < w(v.triple.x));
  CHECK(w(v.triple.z) < w(v.triple.y));

  CHECK(is_min_convex(pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}})).holds);
  CHECK(is_min_convex(pl({{"0", "0"}, {"1/4", "1"}, {"3/4", "1"}, {"1", "0"}})).holds);
  CHECK(is_min_convex(PLFunc::constant(rat("1/3"))).holds);
}

TEST_CASE("strict min-convexity on the support") {
  auto plateau = pl({{"0", "0"}, {"1/4", "1"}, {"3/4", "1"}, {"1", "0"}});
  auto v = is_strictly_min_convex_on_support(plateau);
  CHECK_FALSE(v.holds);
  CHECK(v.triple.x == rat("1/4"));
  CHECK(v.triple.z == rat("1/2"));
  CHECK(v.triple.y == rat("3/4"));

  // zero stretches outside the support are fine
  CHECK(is_strictly_min_convex_on_support(pl({{"0", "0"}, {"1/4", "0"}, {"1/2", "1"}, {"1", "0"}})).holds);
  // two separate strict humps are fine for this check alone
  CHECK(is_strictly_min_convex_on_support(
            pl({{"0", "0"}, {"1/8", "1/2"}, {"1/4", "0"}, {"5/8", "1"}, {"1", "0"}}))
            .holds);
  // a flat piece inside the support is not
  CHECK_FALSE(
      is_strictly_min_convex_on_support(pl({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "1/2"}, {"1", "1"}}))
          .holds);
}

TEST_CASE("convexity scans agree with the brute-force criterion") {
  testgen::Rng rng(777001);
  for (int round = 0; round < 200; ++round) {
    PLFunc f = testgen::random_plfunc(rng);
    CAPTURE(round);
    CHECK(is_min_convex(f).holds == !brute_valley(f));
    CHECK(is_strictly_min_convex_on_support(f).holds == !brute_strict_violation(f));

    auto mv = is_min_convex(f);
    if (!mv.holds) {
      CHECK(mv.triple.x < mv.triple.z);
      CHECK(mv.triple.z < mv.triple.y);
      CHECK(f(mv.triple.z) < f(mv.triple.x));
      CHECK(f(mv.triple.z) < f(mv.triple.y));
    }
    auto sv = is_strictly_min_convex_on_support(f);
    if (!sv.holds) {
      CHECK(sv.triple.x < sv.triple.z);
      CHECK(sv.triple.z < sv.triple.y);
      CHECK(same_component(f, sv.triple.x, sv.triple.y));
      CHECK(f(sv.triple.z) <= f(sv.triple.x));
      CHECK(f(sv.triple.z) <= f(sv.triple.y));
    }
  }
}

TEST_CASE("separation by the evaluation curve") {
  CHECK(is_separating(tstar3()).holds);

  FuzzyFamily consts({PLFunc::constant(rat("1/2")), PLFunc::constant(rat("1/2"))});
  auto v = is_separating(consts);
  CHECK_FALSE(v.holds);
  CHECK(v.x != v.y);
  CHECK(consts.at(v.x) == consts.at(v.y));

  FuzzyFamily flat({pl({{"0", "1"}, {"1/3", "1/2"}, {"2/3", "1/2"}, {"1", "0"}}),
                    pl({{"0", "0"}, {"1/3", "1/2"}, {"2/3", "1/2"}, {"1", "1"}})});
  auto w = is_separating(flat);
  CHECK_FALSE(w.holds);
  CHECK(w.x == rat("1/3"));
  CHECK(w.y == rat("2/3"));
  CHECK(flat.at(w.x) == flat.at(w.y));
}

TEST_CASE("property report bundles the characterisation") {
  auto rep = property_report(tstar3());
  CHECK(rep.bundle_holds());
  CHECK(rep.separating.holds);
  CHECK(rep.normal.size() == 3);

  testgen::Rng rng(424242);
  for (int round = 0; round < 20; ++round) {
    auto B = testgen::random_basis(rng, 2 + round % 7);
    CAPTURE(round);
    CHECK(property_report(B).bundle_holds());
  }
}
