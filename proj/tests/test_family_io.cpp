#include "doctest.h"

#include "generators.hpp"
#include "tribasis/family_io.hpp"

#include <sstream>

using namespace tribasis;
using testgen::rat;

namespace {
FuzzyFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return tribasis::parse_family(in);
}
} // namespace

TEST_CASE("parsing a well formed family") {
  const std::string text = "# triangular basis on three members\n"
                           "n = 3\n"
                           "\n"
                           "f 1: 0 1, 1/4 1/2, 1/2 0, 1 0\n"
                           "f 2: 0 0, 1/2 1, 1 0\n"
                           "f 3: 0 0, 1/2 0, 1 1\n";
  auto F = parse_family(text);
  REQUIRE(F.size() == 3);
  CHECK(F.member(2)(rat("1/2")) == 1);
  CHECK(F.member(1)(rat("1/4")) == rat("1/2"));
  // the collinear interior point at 1/4 is pruned on ingestion
  CHECK(F.member(1).points().size() == 3);
}

TEST_CASE("serialisation round trips") {
  testgen::Rng rng(13579);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + static_cast<int>(testgen::pick(rng, 0, 5));
    auto F = testgen::random_basis(rng, n);
    auto back = parse_family(serialize_family(F));
    CHECK(back == F);
  }
  auto C = canonical_basis(3);
  CHECK(serialize_family(C) ==
        "n = 3\nf 1: 0 1, 1/2 0, 1 0\nf 2: 0 0, 1/2 1, 1 0\nf 3: 0 0, 1/2 0, 1 1\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_family(text);
    } catch (const FamilyParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("") == 0);                                        // no header at all
  CHECK(line_of("n = zebra\n") == 1);                             // malformed count
  CHECK(line_of("n = 0\n") == 1);                                 // out of range
  CHECK(line_of("n = 2\nf 2: 0 0, 1 1\n") == 2);                 // wrong member index
  CHECK(line_of("n = 2\nf 1: 0 0, 1 1\n") == 2);                 // missing second member
  CHECK(line_of("n = 1\nf 1: 0 0, 1 1\nf 2: 0 0, 1 1\n") == 3);  // trailing content
  CHECK(line_of("n = 1\nf 1: 0 0, 1 2\n") == 2);                 // value escapes the unit interval
  CHECK(line_of("n = 1\nf 1: 1/4 0, 1 1\n") == 2);               // domain must start at zero
  CHECK(line_of("n = 1\nf 1: 0 0, 1/0 1\n") == 2);               // malformed rational
  CHECK(line_of("n = 1\nf 1: 0 0\n") == 2);                      // a single point is no function
  CHECK(line_of("n = 1\nf 1: 0 0, 1 1 extra\n") == 2);           // junk after the points
}

TEST_CASE("sampling produces a parsable table") {
  auto F = canonical_basis(3);
  std::string csv = sample_csv(F, 4);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,f1,f2,f3,x_exact,f1_exact,f2_exact,f3_exact");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
  CHECK(csv.find("1/4,1/2,1/2,0") != std::string::npos);
  CHECK(csv.find("1/2,0,1,0") != std::string::npos);
}
