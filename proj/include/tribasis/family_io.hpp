#pragma once

#include "tribasis/props.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tribasis {

struct FamilyParseError : std::runtime_error {
  int line; // 1-based line number in the input
  FamilyParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

// Family file format; '#' starts a comment, blank lines are skipped:
//
//   n = 3
//   f 1: 0 1, 1/2 0, 1 0
//   f 2: 0 0, 1/2 1, 1 0
//   f 3: 0 0, 1/2 0, 1 1
//
// Member lines must appear in order 1..n; each lists the breakpoints as
// "x y" pairs separated by commas, with rational coordinates.
FuzzyFamily parse_family(std::istream& in);
FuzzyFamily parse_family_file(const std::string& path);

// Inverse of parse_family, written from canonical breakpoints.
std::string serialize_family(const FuzzyFamily& P);

// CSV with k+1 equally spaced abscissae: decimal columns x,f1,...,fn
// followed by exact columns x_exact,f1_exact,...,fn_exact.
std::string sample_csv(const FuzzyFamily& P, long k);

} // namespace tribasis
