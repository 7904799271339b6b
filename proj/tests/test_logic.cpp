#include "doctest.h"

#include "generators.hpp"
#include "tribasis/logic.hpp"

#include <stdexcept>

using namespace tribasis;
using testgen::rat;

namespace {

PLFunc pl(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Breakpoint> bp;
  for (auto& [x, y] : pts) bp.push_back({rat(x), rat(y)});
  return PLFunc::from_points(std::move(bp));
}

std::vector<Rat> pt(std::initializer_list<const char*> cs) {
  std::vector<Rat> p;
  for (const char* c : cs) p.push_back(rat(c));
  return p;
}

FuzzyFamily half_path() {
  return FuzzyFamily({pl({{"0", "1"}, {"1", "1/2"}}), pl({{"0", "0"}, {"1", "1/2"}})});
}

} // namespace

TEST_CASE("evaluation against the connective tables") {
  auto p = pt({"3/10", "7/10"});
  CHECK(eval_at(parse_formula("!X1"), p) == rat("7/10"));
  CHECK(eval_at(parse_formula("X1 -> X2"), p) == 1);
  CHECK(eval_at(parse_formula("X2 -> X1"), p) == rat("3/5"));
  CHECK(eval_at(parse_formula("X1 + X2"), p) == 1);
  CHECK(eval_at(parse_formula("X1 * X2"), p) == 0);
  CHECK(eval_at(parse_formula("X1 - X2"), p) == 0);
  CHECK(eval_at(parse_formula("X2 - X1"), p) == rat("2/5"));
  CHECK(eval_at(parse_formula("X1 <-> X2"), p) == rat("3/5"));
  CHECK(eval_at(parse_formula("X1 | X2"), p) == rat("7/10"));
  CHECK(eval_at(parse_formula("X1 & X2"), p) == rat("3/10"));
  CHECK(eval_at(parse_formula("0"), p) == 0);
  CHECK(eval_at(parse_formula("1"), p) == 1);

  CHECK_THROWS_AS(eval_at(parse_formula("X3"), p), std::invalid_argument);
  CHECK_THROWS_AS(eval_at(parse_formula("X1"), pt({"3/2"})), std::domain_error);
}

TEST_CASE("derived connectives coincide with their definitions on a grid") {
  for (long i = 0; i <= 10; ++i)
    for (long j = 0; j <= 10; ++j) {
      std::vector<Rat> p{Rat(i, 10), Rat(j, 10)};
      const Rat a = p[0], b = p[1];
      // primitive clauses
      CHECK(eval_at(parse_formula("!X1"), p) == 1 - a);
      CHECK(eval_at(parse_formula("X1 -> X2"), p) == (a <= b ? Rat(1) : Rat(1 - a + b)));
      // derived clauses, spelled through negation and implication only
      auto lhs = [&](const char* s) { return eval_at(parse_formula(s), p); };
      CHECK(lhs("X1 | X2") == lhs("(X1 -> X2) -> X2"));
      CHECK(lhs("X1 & X2") == lhs("!(!X1 | !X2)"));
      CHECK(lhs("X1 <-> X2") == lhs("(X1 -> X2) & (X2 -> X1)"));
      CHECK(lhs("X1 + X2") == lhs("!X1 -> X2"));
      CHECK(lhs("X1 * X2") == lhs("!(X1 -> !X2)"));
      CHECK(lhs("X1 - X2") == lhs("!(X1 -> X2)"));
      CHECK(lhs("1") == lhs("!0"));
    }
}

TEST_CASE("composition with a family matches pointwise evaluation") {
  testgen::Rng rng(8899);
  auto B = canonical_basis(4);
  for (int round = 0; round < 50; ++round) {
    Formula f = testgen::random_formula(rng, 4, 5);
    PLFunc h = compose(f, B);
    for (int t = 0; t < 12; ++t) {
      Rat x(testgen::pick(rng, 0, 360), 360);
      CHECK(h(x) == eval_at(f, B.at(x)));
    }
  }
  CHECK_THROWS_AS(compose(parse_formula("X5"), B), std::invalid_argument);
}

TEST_CASE("axioms for arity three") {
  auto A = axioms(3);
  REQUIRE(A.size() == 4);
  CHECK(A[0].str() == "X1 + X2 + X3");
  CHECK(A[1].str() == "!(X1 * X2)");
  CHECK(A[2].str() == "!(X2 * X3)");
  CHECK(A[3].str() == "!(X1 & X3)");
  CHECK(axioms(2).size() == 2);
  CHECK(axioms(8).size() == 29);

  auto B = canonical_basis(3);
  for (const auto& phi : A) CHECK(theta_member(phi, B).holds);
}

TEST_CASE("membership verdicts carry refuting witnesses") {
  auto B = canonical_basis(3);
  auto v = theta_member(parse_formula("X1"), B);
  CHECK_FALSE(v.holds);
  CHECK(v.value == 0);
  CHECK(eval_at(parse_formula("X1"), B.at(v.x)) == v.value);

  CHECK(theta_member(parse_formula("X1 + X2 + X3"), B).holds);
  CHECK(theta_member(parse_formula("X1 + !X1"), B).holds); // a tautology survives any family
  CHECK_FALSE(theta_member(parse_formula("X1 | !X1"), B).holds); // weak excluded middle is not one
  auto bot = theta_member(Formula::bot(), B);
  CHECK_FALSE(bot.holds);
  CHECK(bot.value == 0);
}

TEST_CASE("the path membership predicate") {
  CHECK(on_path(pt({"1", "0", "0"})));
  CHECK(on_path(pt({"0", "1", "0"})));
  CHECK(on_path(pt({"1/2", "1/2", "0"})));
  CHECK(on_path(pt({"0", "1/4", "3/4"})));
  CHECK_FALSE(on_path(pt({"1/2", "0", "1/2"})));
  CHECK_FALSE(on_path(pt({"1/3", "1/3", "1/3"})));
  CHECK_FALSE(on_path(pt({"1/2", "1/4", "0"})));
  CHECK_FALSE(on_path(pt({"0", "0", "0"})));
  CHECK(on_path(pt({"1"})));
  CHECK_FALSE(on_path(pt({"1/2"})));
}

TEST_CASE("the grid comparison of axioms and path") {
  CHECK(oneset_grid_check(2, 24).holds);
  CHECK(oneset_grid_check(3, 12).holds);
  CHECK(oneset_grid_check(4, 6).holds);
  CHECK(oneset_grid_check(1, 10).holds);

  auto s = oneset_grid_check_serial(3, 7);
  auto p = oneset_grid_check_parallel(3, 7);
  CHECK(s.holds);
  CHECK(p.holds);
  CHECK_THROWS_AS(oneset_grid_check(12, 60), std::invalid_argument);
}

TEST_CASE("semantic consequence from the axioms") {
  CHECK(a_consequence(parse_formula("X1 + X2 + X3"), 3).holds);
  CHECK(a_consequence(parse_formula("!(X1 & X3)"), 3).holds);
  CHECK(a_consequence(parse_formula("X1 + !X1"), 3).holds);

  auto v = a_consequence(parse_formula("X2"), 3);
  CHECK_FALSE(v.holds);
  CHECK(eval_at(parse_formula("X2"), v.point) == v.value);
  CHECK(v.value < 1);
  for (const auto& phi : axioms(3)) CHECK(eval_at(phi, v.point) == 1);

  CHECK_THROWS_AS(a_consequence(parse_formula("X4"), 3), std::invalid_argument);
}

TEST_CASE("theory comparison on the worked example") {
  auto cert = theory_equal(canonical_basis(3));
  CHECK(cert.equal());
  CHECK(cert.verified);
}

TEST_CASE("theory comparison detects a violated axiom") {
  auto B = canonical_basis(3);
  FuzzyFamily reordered({B.member(2), B.member(1), B.member(3)});
  auto cert = theory_equal(reordered);
  CHECK(cert.verdict == TheoryCertificate::Verdict::AxiomViolated);
  REQUIRE(cert.axiom.has_value());
  CHECK(cert.axiom->str() == "!(X1 & X3)");
  CHECK(cert.axiom_value < 1);
  CHECK(cert.verified);
  CHECK(eval_at(*cert.axiom, reordered.at(cert.witness_x)) == cert.axiom_value);

  // after relabelling by leftmost maximiser the theories agree
  auto order = detect_order(reordered);
  CHECK(order == std::vector<int>{2, 1, 3});
  auto fixed = theory_equal(relabel(reordered, order));
  CHECK(fixed.equal());
}

TEST_CASE("theory comparison produces a separator on a path gap") {
  auto cert = theory_equal(half_path());
  CHECK(cert.verdict == TheoryCertificate::Verdict::PathGap);
  CHECK(cert.endpoint == 2);
  CHECK(cert.coord_max == rat("1/2"));
  CHECK(cert.k == 2);
  REQUIRE(cert.separator.has_value());
  CHECK(cert.separator->str() == "!X2 + !X2");
  CHECK(cert.verified);

  // the separator is constantly 1 along the family yet 0 at e_2
  CHECK(compose(*cert.separator, half_path()) == PLFunc::constant(rat("1")));
  CHECK(eval_at(*cert.separator, pt({"0", "1"})) == 0);
}

TEST_CASE("phi_k thresholds") {
  CHECK(phi_k(2, 2).str() == "!X2 + !X2");
  CHECK(phi_k(1, 1).str() == "!X1");
  // 1-set of phi_k is {x_m <= (k-1)/k}
  for (long k = 1; k <= 5; ++k) {
    Formula f = phi_k(1, k);
    for (long t = 0; t <= 20; ++t) {
      Rat x(t, 20);
      Rat v = eval_at(f, std::vector<Rat>{x});
      CHECK((v == 1) == (x <= Rat(k - 1, k)));
    }
  }
  CHECK_THROWS_AS(phi_k(1, 0), std::invalid_argument);
}

TEST_CASE("theory equality across random bases and mutants") {
  testgen::Rng rng(5150);
  const testgen::Mutation mus[] = {testgen::Mutation::Plateau, testgen::Mutation::Scale,
                                   testgen::Mutation::Duplicate, testgen::Mutation::Cap};
  for (int round = 0; round < 25; ++round) {
    const int n = 2 + static_cast<int>(testgen::pick(rng, 0, 6));
    auto B = testgen::random_basis(rng, n);
    CAPTURE(round);

    auto relab = relabel(B, detect_order(B));
    auto cert = theory_equal(relab);
    CHECK(cert.equal());
    CHECK(is_separating(relab).holds);

    auto M = testgen::mutate(rng, B, mus[round % 4]);
    auto Mr = relabel(M, detect_order(M));
    auto mc = theory_equal(Mr);
    bool conj = is_separating(Mr).holds && mc.equal();
    CHECK_FALSE(conj);
    if (!mc.equal()) CHECK(mc.verified);
  }
}

TEST_CASE("modus ponens closure probes") {
  testgen::Rng rng(606060);
  auto B = canonical_basis(3);
  for (int round = 0; round < 120; ++round) {
    Formula phi = testgen::random_formula(rng, 3, 4);
    Formula psi = testgen::random_formula(rng, 3, 4);
    auto probe = deductive_closure_probe(B, phi, psi);
    CHECK(probe.consistent);
  }
  // and the theory never contains falsum
  CHECK_FALSE(theta_member(Formula::bot(), B).holds);
  CHECK_FALSE(theta_member(Formula::bot(), half_path()).holds);
}

TEST_CASE("relabelling validates its permutation") {
  auto B = canonical_basis(3);
  CHECK_THROWS_AS(relabel(B, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(B, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(B, {0, 1, 2}), std::invalid_argument);
  CHECK(relabel(B, {1, 2, 3}) == B);
  CHECK_THROWS_AS(theory_equal(FuzzyFamily({PLFunc::constant(rat("1"))})), std::invalid_argument);
}
