// Command line front end: property checks, classification, and the
// theory-level decisions, with exact rational output and optional JSON.

#include "CLI11.hpp"
#include "json.hpp"

#include "tribasis/family_io.hpp"
#include "tribasis/logic.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tribasis;
using nlohmann::json;

namespace {

constexpr int kYes = 0;      // the queried property holds
constexpr int kNo = 1;       // it does not; a certificate was printed
constexpr int kUsage = 2;    // bad invocation or malformed input
constexpr int kInternal = 70;

bool json_mode = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json rat_json(const Rat& r) { return rat_str(r); }

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_str(r));
  return a;
}

std::vector<Rat> parse_point(const std::string& list) {
  std::vector<Rat> p;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    auto r = parse_rat(item);
    if (!r) throw std::invalid_argument("bad rational '" + item + "' in point");
    p.push_back(*r);
  }
  if (p.empty()) throw std::invalid_argument("empty point");
  return p;
}

json family_json(const FuzzyFamily& P) {
  json members = json::array();
  for (const auto& f : P.members()) {
    json pts = json::array();
    for (const auto& b : f.points()) pts.push_back({rat_str(b.x), rat_str(b.y)});
    members.push_back(pts);
  }
  return members;
}

int cmd_axioms(int n) {
  auto A = axioms(n);
  if (json_mode) {
    json a = json::array();
    for (const auto& phi : A) a.push_back(phi.str());
    emit({{"n", n}, {"count", A.size()}, {"axioms", a}});
  } else {
    for (const auto& phi : A) std::cout << phi.str() << "\n";
  }
  return kYes;
}

int cmd_canon(int n) {
  auto B = canonical_basis(n);
  if (json_mode)
    emit({{"n", n}, {"members", family_json(B)}, {"text", serialize_family(B)}});
  else
    std::cout << serialize_family(B);
  return kYes;
}

int cmd_eval(const std::string& ftext, const std::string& at) {
  Formula phi = parse_formula(ftext);
  auto p = parse_point(at);
  Rat v = eval_at(phi, p);
  if (json_mode)
    emit({{"formula", phi.str()},
          {"point", rats_json(p)},
          {"value", rat_json(v)},
          {"value_decimal", rat_double(v)}});
  else
    std::cout << rat_str(v) << "\n";
  return kYes;
}

int cmd_check(const std::string& path) {
  auto P = parse_family_file(path);
  auto rep = property_report(P);
  const bool bundle = rep.bundle_holds();

  if (json_mode) {
    json members = json::array();
    for (int i = 1; i <= P.size(); ++i) {
      const auto& sn = rep.strong_normal[static_cast<size_t>(i) - 1];
      const auto& mc = rep.min_convex[static_cast<size_t>(i) - 1];
      const auto& sc = rep.support_convex[static_cast<size_t>(i) - 1];
      json m = {{"index", i},
                {"normal", rep.normal[static_cast<size_t>(i) - 1].holds},
                {"strongly_normal", sn.holds},
                {"min_convex", mc.holds},
                {"strictly_min_convex_on_support", sc.holds}};
      if (sn.holds) m["peak"] = rat_json(sn.peak);
      else if (sn.normal) m["plateau"] = {rat_json(sn.plateau_lo), rat_json(sn.plateau_hi)};
      if (!mc.holds)
        m["valley"] = {rat_json(mc.triple.x), rat_json(mc.triple.z), rat_json(mc.triple.y)};
      if (!sc.holds)
        m["strict_violation"] = {rat_json(sc.triple.x), rat_json(sc.triple.z),
                                 rat_json(sc.triple.y)};
      members.push_back(m);
    }
    json j = {{"n", P.size()},
              {"ruspini", {{"holds", rep.ruspini.holds}}},
              {"two_overlapping", {{"holds", rep.overlap.holds}}},
              {"members", members},
              {"separating", {{"holds", rep.separating.holds}}},
              {"bundle", bundle}};
    if (!rep.ruspini.holds) {
      j["ruspini"]["x"] = rat_json(rep.ruspini.x);
      j["ruspini"]["sum"] = rat_json(rep.ruspini.sum);
    }
    if (!rep.overlap.holds) {
      j["two_overlapping"]["members"] = {rep.overlap.i, rep.overlap.j, rep.overlap.k};
      j["two_overlapping"]["x"] = rat_json(rep.overlap.x);
      j["two_overlapping"]["value"] = rat_json(rep.overlap.value);
    }
    if (!rep.separating.holds) {
      j["separating"]["x"] = rat_json(rep.separating.x);
      j["separating"]["y"] = rat_json(rep.separating.y);
    }
    emit(j);
    return bundle ? kYes : kNo;
  }

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "ruspini:        " << yn(rep.ruspini.holds);
  if (!rep.ruspini.holds)
    std::cout << "  (sum " << rat_str(rep.ruspini.sum) << " at x = " << rat_str(rep.ruspini.x)
              << ")";
  std::cout << "\n2-overlapping:  " << yn(rep.overlap.holds);
  if (!rep.overlap.holds)
    std::cout << "  (members " << rep.overlap.i << "," << rep.overlap.j << "," << rep.overlap.k
              << " all at least " << rat_str(rep.overlap.value) << " at x = "
              << rat_str(rep.overlap.x) << ")";
  std::cout << "\n";
  for (int i = 1; i <= P.size(); ++i) {
    const auto& sn = rep.strong_normal[static_cast<size_t>(i) - 1];
    const auto& mc = rep.min_convex[static_cast<size_t>(i) - 1];
    const auto& sc = rep.support_convex[static_cast<size_t>(i) - 1];
    std::cout << "member " << i << ":       ";
    if (sn.holds && mc.holds && sc.holds) {
      std::cout << "ok  (peak at " << rat_str(sn.peak) << ")\n";
      continue;
    }
    if (!sn.holds) {
      if (sn.normal)
        std::cout << "plateau of 1 on [" << rat_str(sn.plateau_lo) << ", "
                  << rat_str(sn.plateau_hi) << "]";
      else
        std::cout << "never reaches 1";
    } else if (!mc.holds) {
      std::cout << "valley at x = " << rat_str(mc.triple.z);
    } else {
      std::cout << "not strictly unimodal near x = " << rat_str(sc.triple.z);
    }
    std::cout << "\n";
  }
  std::cout << "separating:     " << yn(rep.separating.holds);
  if (!rep.separating.holds)
    std::cout << "  (x = " << rat_str(rep.separating.x) << " and y = "
              << rat_str(rep.separating.y) << " collide)";
  std::cout << "\nbundle:         " << yn(bundle) << "\n";
  return bundle ? kYes : kNo;
}

const char* failure_tag(DefFailure f) {
  switch (f) {
    case DefFailure::None: return "none";
    case DefFailure::TooFewMembers: return "too-few-members";
    case DefFailure::NotStronglyNormal: return "not-strongly-normal";
    case DefFailure::PeaksNotDistinct: return "peaks-not-distinct";
    case DefFailure::PeaksNotAnchored: return "peaks-not-anchored";
    case DefFailure::NotZeroAtNextPeak: return "not-zero-at-next-peak";
    case DefFailure::NotZeroOffInterval: return "not-zero-off-interval";
    case DefFailure::NotComplementary: return "not-complementary";
    case DefFailure::NotStrictlyMonotone: return "not-strictly-monotone";
  }
  return "unknown";
}

json perm_json(const std::vector<int>& perm) {
  json a = json::array();
  for (int i : perm) a.push_back(i);
  return a;
}

int cmd_classify(const std::string& path) {
  auto P = parse_family_file(path);
  auto c = classify(P);

  if (json_mode) {
    json def = {{"holds", c.def.holds}, {"failure", failure_tag(c.def.failure)}};
    if (!c.def.holds) {
      if (c.def.member) def["member"] = c.def.member;
      if (c.def.interval) def["interval"] = c.def.interval;
      def["where"] = rat_json(c.def.where);
      def["value"] = rat_json(c.def.value);
    }
    if (!c.def.nodes.empty()) def["nodes"] = rats_json(c.def.nodes);
    if (!c.def.perm.empty()) def["order"] = perm_json(c.def.perm);

    json inj = {{"holds", c.injectivity.holds}};
    if (!c.injectivity.holds) {
      inj["x"] = rat_json(c.injectivity.x);
      inj["y"] = rat_json(c.injectivity.y);
    }

    json edges = json::array();
    for (const auto& e : c.path.edges) {
      json cov = json::array();
      for (const auto& iv : e.covered) cov.push_back({rat_json(iv.lo), rat_json(iv.hi)});
      edges.push_back({{"i", e.i}, {"j", e.j}, {"full", e.full}, {"covered", cov}});
    }
    json path = {{"hamiltonian", c.path.hamiltonian},
                 {"leftover_segments", c.path.leftovers.size()},
                 {"edges", edges}};
    if (c.path.hamiltonian) path["order"] = perm_json(c.path.perm);

    emit({{"n", P.size()},
          {"pseudo_triangular", c.pseudo_triangular},
          {"triangular", c.triangular},
          {"definition", def},
          {"bundle", c.report.bundle_holds()},
          {"injectivity", inj},
          {"path", path}});
    return c.pseudo_triangular ? kYes : kNo;
  }

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "pseudo-triangular: " << yn(c.pseudo_triangular) << "\n";
  std::cout << "triangular:        " << yn(c.triangular) << "\n";
  if (c.pseudo_triangular) {
    std::cout << "order:            ";
    for (int i : c.def.perm) std::cout << " " << i;
    std::cout << "\nnodes:            ";
    for (const auto& t : c.def.nodes) std::cout << " " << rat_str(t);
    std::cout << "\n";
  } else {
    std::cout << "reason:            " << def_failure_str(c.def.failure);
    if (c.def.member) std::cout << " (member " << c.def.member << ")";
    std::cout << "\n";
  }
  return c.pseudo_triangular ? kYes : kNo;
}

int cmd_member(const std::string& path, const std::string& ftext) {
  auto P = parse_family_file(path);
  Formula phi = parse_formula(ftext);
  auto v = theta_member(phi, P);
  if (json_mode) {
    json j = {{"formula", phi.str()}, {"member", v.holds}};
    if (!v.holds) {
      j["witness_x"] = rat_json(v.x);
      j["value"] = rat_json(v.value);
    }
    emit(j);
  } else if (v.holds) {
    std::cout << "yes\n";
  } else {
    std::cout << "no  (value " << rat_str(v.value) << " at x = " << rat_str(v.x) << ")\n";
  }
  return v.holds ? kYes : kNo;
}

int cmd_theory_eq(const std::string& path, bool do_relabel) {
  auto P = parse_family_file(path);
  std::vector<int> order;
  if (do_relabel) {
    order = detect_order(P);
    P = relabel(P, order);
  }
  auto cert = theory_equal(P);

  if (json_mode) {
    json j;
    switch (cert.verdict) {
      case TheoryCertificate::Verdict::Equal: j["verdict"] = "equal"; break;
      case TheoryCertificate::Verdict::AxiomViolated: j["verdict"] = "axiom-violated"; break;
      case TheoryCertificate::Verdict::PathGap: j["verdict"] = "path-gap"; break;
    }
    j["equal"] = cert.equal();
    j["verified"] = cert.verified;
    if (do_relabel) j["order"] = perm_json(order);
    if (cert.axiom) {
      j["axiom"] = cert.axiom->str();
      j["axiom_index"] = cert.axiom_index;
      j["witness_x"] = rat_json(cert.witness_x);
      j["axiom_value"] = rat_json(cert.axiom_value);
    }
    if (cert.separator) {
      j["endpoint"] = cert.endpoint;
      j["coord_max"] = rat_json(cert.coord_max);
      j["k"] = cert.k;
      j["separator"] = cert.separator->str();
    }
    emit(j);
    return cert.equal() ? kYes : kNo;
  }

  if (do_relabel) {
    std::cout << "order:    ";
    for (int i : order) std::cout << " " << i;
    std::cout << "\n";
  }
  switch (cert.verdict) {
    case TheoryCertificate::Verdict::Equal:
      std::cout << "equal: yes\n";
      return kYes;
    case TheoryCertificate::Verdict::AxiomViolated:
      std::cout << "equal: no  (axiom violated)\n"
                << "axiom[" << cert.axiom_index << "]: " << cert.axiom->str() << "\n"
                << "value " << rat_str(cert.axiom_value) << " at x = " << rat_str(cert.witness_x)
                << "\n"
                << "verified: " << (cert.verified ? "yes" : "no") << "\n";
      return kNo;
    case TheoryCertificate::Verdict::PathGap:
      std::cout << "equal: no  (path gap, theory strictly larger)\n"
                << "missed vertex: e_" << cert.endpoint << "\n"
                << "coordinate maximum: " << rat_str(cert.coord_max) << "\n"
                << "separator (k = " << cert.k << "): " << cert.separator->str() << "\n"
                << "verified: " << (cert.verified ? "yes" : "no") << "\n";
      return kNo;
  }
  return kInternal;
}

int cmd_oneset(int n, long d, const std::string& lane) {
  GridVerdict v;
  if (lane == "serial")
    v = oneset_grid_check_serial(n, d);
  else if (lane == "parallel")
    v = oneset_grid_check_parallel(n, d);
  else
    v = oneset_grid_check(n, d);

  if (json_mode) {
    json j = {{"n", n}, {"d", d}, {"lane", lane}, {"holds", v.holds}};
    if (!v.holds) j["point"] = rats_json(v.point);
    emit(j);
  } else if (v.holds) {
    std::cout << "agree on the full grid\n";
  } else {
    std::cout << "mismatch at (";
    for (size_t i = 0; i < v.point.size(); ++i)
      std::cout << (i ? ", " : "") << rat_str(v.point[i]);
    std::cout << ")\n";
  }
  return v.holds ? kYes : kNo;
}

int cmd_sample(const std::string& path, long count, const std::string& out) {
  auto P = parse_family_file(path);
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  std::string csv = sample_csv(P, count);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
    f << csv;
  }
  return kYes;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for piecewise-linear fuzzy partitions and their logic"};
  app.require_subcommand(1);
  app.add_flag("--json", json_mode, "machine readable output with exact rationals");

  int n = 0;
  long d = 0, count = 100;
  std::string family, formula, at, out, lane = "auto";
  bool do_relabel = false;

  auto* ax = app.add_subcommand("axioms", "print the axiom list for arity n");
  ax->fallthrough();
  ax->add_option("n", n, "number of members")->required()->check(CLI::Range(1, 1000));

  auto* cn = app.add_subcommand("canon", "print the evenly spaced triangular basis");
  cn->fallthrough();
  cn->add_option("n", n, "number of members")->required()->check(CLI::Range(2, 1000));

  auto* ev = app.add_subcommand("eval", "evaluate a formula at a point of [0,1]^n");
  ev->fallthrough();
  ev->add_option("formula", formula, "formula text")->required();
  ev->add_option("--at", at, "comma separated rational coordinates")->required();

  auto* ck = app.add_subcommand("check", "report the properties of a family");
  ck->fallthrough();
  ck->add_option("family", family, "family file")->required();

  auto* cl = app.add_subcommand("classify", "classify a family against the hierarchy");
  cl->fallthrough();
  cl->add_option("family", family, "family file")->required();

  auto* me = app.add_subcommand("member", "decide membership in the family's theory");
  me->fallthrough();
  me->add_option("family", family, "family file")->required();
  me->add_option("formula", formula, "formula text")->required();

  auto* te = app.add_subcommand("theory-eq",
                                "decide whether the theory equals the axioms' consequences");
  te->fallthrough();
  te->add_option("family", family, "family file")->required();
  te->add_flag("--relabel", do_relabel, "sort members by leftmost maximiser first");

  auto* on = app.add_subcommand("oneset", "compare axiom 1-sets with the index path on a grid");
  on->fallthrough();
  on->add_option("n", n, "arity")->required()->check(CLI::Range(1, 16));
  on->add_option("d", d, "grid denominator")->required()->check(CLI::Range(1L, 1000000L));
  on->add_option("--lane", lane, "auto, serial or parallel")
      ->check(CLI::IsMember({"auto", "serial", "parallel"}));

  auto* sa = app.add_subcommand("sample", "tabulate a family as CSV");
  sa->fallthrough();
  sa->add_option("family", family, "family file")->required();
  sa->add_option("--count", count, "number of steps (count+1 rows)");
  sa->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*ax) return cmd_axioms(n);
    if (*cn) return cmd_canon(n);
    if (*ev) return cmd_eval(formula, at);
    if (*ck) return cmd_check(family);
    if (*cl) return cmd_classify(family);
    if (*me) return cmd_member(family, formula);
    if (*te) return cmd_theory_eq(family, do_relabel);
    if (*on) return cmd_oneset(n, d, lane);
    if (*sa) return cmd_sample(family, count, out);
  } catch (const FamilyParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormulaParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
