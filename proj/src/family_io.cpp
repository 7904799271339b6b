#include "tribasis/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tribasis {

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Rat parse_coord(const std::string& tok, int lineno) {
  auto r = parse_rat(tok);
  if (!r) throw FamilyParseError("malformed rational '" + tok + "'", lineno);
  return *r;
}

} // namespace

FuzzyFamily parse_family(std::istream& in) {
  std::string raw;
  int lineno = 0, n = -1, expect = 1;
  std::vector<PLFunc> members;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;

    if (n < 0) {
      std::istringstream ls(s);
      std::string head, eq;
      long value = 0;
      if (!(ls >> head >> eq >> value) || head != "n" || eq != "=" || !(ls >> std::ws).eof())
        throw FamilyParseError("expected 'n = <count>'", lineno);
      if (value < 1 || value > 1000) throw FamilyParseError("member count out of range", lineno);
      n = static_cast<int>(value);
      continue;
    }

    if (expect > n) throw FamilyParseError("unexpected content after the last member", lineno);

    auto colon = s.find(':');
    if (colon == std::string::npos) throw FamilyParseError("expected 'f <i>: ...'", lineno);
    {
      std::istringstream hs(s.substr(0, colon));
      std::string f;
      int idx = 0;
      if (!(hs >> f >> idx) || f != "f" || !(hs >> std::ws).eof())
        throw FamilyParseError("expected 'f <i>: ...'", lineno);
      if (idx != expect)
        throw FamilyParseError("expected member " + std::to_string(expect) + ", found " +
                                   std::to_string(idx),
                               lineno);
    }

    std::vector<Breakpoint> pts;
    std::string body = s.substr(colon + 1);
    std::istringstream bs(body);
    std::string pair;
    while (std::getline(bs, pair, ',')) {
      std::istringstream ps(pair);
      std::string xs, ys;
      if (!(ps >> xs >> ys) || !(ps >> std::ws).eof())
        throw FamilyParseError("expected 'x y' breakpoint pair, found '" + strip(pair) + "'", lineno);
      pts.push_back({parse_coord(xs, lineno), parse_coord(ys, lineno)});
    }
    try {
      members.push_back(PLFunc::from_points(std::move(pts)));
    } catch (const std::invalid_argument& e) {
      throw FamilyParseError(e.what(), lineno);
    }
    ++expect;
  }
  if (n < 0) throw FamilyParseError("missing 'n = <count>' line", lineno);
  if (expect != n + 1)
    throw FamilyParseError("expected " + std::to_string(n) + " members, found " +
                               std::to_string(expect - 1),
                           lineno);
  return FuzzyFamily(std::move(members));
}

FuzzyFamily parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in);
}

std::string serialize_family(const FuzzyFamily& P) {
  std::ostringstream out;
  out << "n = " << P.size() << "\n";
  for (int i = 1; i <= P.size(); ++i) {
    out << "f " << i << ":";
    const auto& pts = P.member(i).points();
    for (size_t k = 0; k < pts.size(); ++k)
      out << (k ? "," : "") << " " << rat_str(pts[k].x) << " " << rat_str(pts[k].y);
    out << "\n";
  }
  return out.str();
}

std::string sample_csv(const FuzzyFamily& P, long k) {
  if (k < 1) throw std::invalid_argument("need at least one sampling step");
  std::ostringstream out;
  out << "x";
  for (int i = 1; i <= P.size(); ++i) out << ",f" << i;
  out << ",x_exact";
  for (int i = 1; i <= P.size(); ++i) out << ",f" << i << "_exact";
  out << "\n";
  char buf[32];
  auto dec = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (long t = 0; t <= k; ++t) {
    Rat x(t, k);
    auto vals = P.at(x);
    out << dec(rat_double(x));
    for (const auto& v : vals) out << "," << dec(rat_double(v));
    out << "," << rat_str(x);
    for (const auto& v : vals) out << "," << rat_str(v);
    out << "\n";
  }
  return out.str();
}

} // namespace tribasis
