#pragma once

/**
 * @file run.hpp
 * @brief Command dispatch and reports for the ghz tool.
 */

#include <chrono>
#include <fstream>

#include "ghz/classifier/toricity.hpp"
#include "ghz/cli/builtins.hpp"
#include "ghz/cli/scenario.hpp"
#include "ghz/lfihd/verify.hpp"
#include "ghz/tvariety/generators.hpp"

namespace ghz::cli {

enum Exit { kPositive = 0, kNegative = 1, kUsage = 2 };

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "eval",     "piece",  "generators", "colorings",   "roots",
                                                 "coherent", "apply",    "verify", "classify",   "toric-check", "example"};
  return names;
}

struct Options {
  std::optional<std::string> m;
  std::optional<long> order;
  bool json = false;
  bool trust = false;
};

struct Report {
  std::string command;
  int exit_code = kPositive;
  std::string verdict;
  std::vector<std::string> details;
  std::vector<std::string> witnesses;
  std::vector<std::string> trust;
  double elapsed_ms = 0;

  std::string text() const {
    std::ostringstream os;
    os << command << ": " << verdict << "\n";
    for (const auto& d : details) os << "  " << d << "\n";
    for (const auto& w : witnesses) os << "witness: " << w << "\n";
    for (const auto& t : trust) os << "trust: " << t << "\n";
    return os.str();
  }

  json to_json() const {
    return {{"command", command}, {"exit_code", exit_code}, {"verdict", verdict},       {"details", details},
            {"witnesses", witnesses}, {"trust", trust},     {"elapsed_ms", elapsed_ms}};
  }
};

namespace detail {

inline IntVec parse_weight(const std::string& s, std::size_t n) {
  IntVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" ()[]"), e = item.find_last_not_of(" ()[]");
    if (b == std::string::npos) throw ParseError("empty entry in weight '" + s + "'");
    Rational q = parse_rational(item.substr(b, e - b + 1));
    if (q.get_den() != 1) throw ParseError("weight entries must be integers: '" + s + "'");
    v.push_back(q.get_num());
  }
  if (v.size() != n) throw ParseError("weight '" + s + "' has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(n));
  return v;
}

inline IntVec need_weight(const Options& o, std::size_t n) {
  if (!o.m) throw ParseError("this command needs --m");
  return parse_weight(*o.m, n);
}

inline std::string coloring_str(const Coloring& c) {
  std::string s = "y0=" + c.y0.str();
  if (c.y_inf) s += ", y_inf=" + c.y_inf->str();
  for (const auto& [y, v] : c.vertices) s += ", v_" + y.str() + "=" + vec_str(v);
  return s;
}

inline std::string family_line(const CoherentFamily& th) {
  std::string s = coloring_str(th.coloring) + "; e=" + vec_str(th.e) + ", s=(";
  for (std::size_t i = 0; i < th.s.size(); ++i) s += (i ? "," : "") + std::to_string(th.s[i]);
  s += "), lambda=(";
  for (std::size_t i = 0; i < th.lambda.size(); ++i) s += (i ? "," : "") + th.lambda[i].str();
  return s + ")";
}

inline void add_trust(Report& r, const PolyhedralDivisor& D) {
  for (const auto& s : D.support())
    if (s.point.trusted()) r.trust.push_back("irreducibility of " + s.point.str() + " is trusted, not proved");
}

inline std::optional<ClosedPoint> default_y_inf(const Scenario& sc, const PolyhedralDivisor& D, bool trust) {
  if (sc.coloring && sc.coloring->y_infinity) return build_point(*sc.coloring->y_infinity, sc, policy_of(sc, trust));
  if (D.curve() == Curve::P1) return ClosedPoint::infinity();
  return std::nullopt;
}

inline long verify_order(const Options& o, const Scenario& sc) {
  if (o.order) return *o.order;
  return sc.bounds.max_order.value_or(-1);
}

inline void run_toric(const Scenario& sc, const Options& o, const std::string& cmd, Report& r) {
  Cone sigma0 = Cone::from_generators(sc.rank, sc.tail_rays);
  ToricRootOperator op(sigma0, sc.toric->root, sc.field);
  if (op.distinguished_ray() != sc.toric->ray)
    throw std::invalid_argument("root pairs to -1 with " + vec_str(op.distinguished_ray()) + ", not with the declared ray " + vec_str(sc.toric->ray));
  std::vector<GradedElement> mons = build_elements(sc);
  if (mons.empty()) {
    Cone dual = sigma0.dual();
    for_each_box_point(sc.rank, std::min<long>(sc.bounds.weight_box, 3), [&](const IntVec& m) {
      if (dual.contains(m) && mons.size() < 8) mons.push_back(GradedElement::monomial(m, RatFunc::one(sc.field)));
    });
  }
  if (cmd == "apply") {
    if (o.m) mons = {GradedElement::monomial(need_weight(o, sc.rank), RatFunc::one(sc.field))};
    for (const auto& x : mons) {
      auto res = op.apply(x, o.order ? o.order : std::nullopt);
      for (std::size_t i = 1; i < res.orders.size(); ++i)
        if (!res.orders[i].is_zero()) r.details.push_back("d^(" + std::to_string(i) + ")(" + x.str() + ") = " + res.orders[i].str());
    }
    r.verdict = "applied toric operator of root " + vec_str(sc.toric->root);
    return;
  }
  long I = verify_order(o, sc);
  AxiomReport ax = verify_axioms(op, mons, I < 0 ? std::nullopt : std::optional<long>(I));
  r.details.push_back("toric operator of root " + vec_str(sc.toric->root) + " on " + std::to_string(mons.size()) + " monomials, " +
                      std::to_string(ax.checks) + " identities checked");
  r.witnesses = ax.failures;
  r.verdict = ax.ok() ? "pass" : "fail";
  r.exit_code = ax.ok() ? kPositive : kNegative;
}

}  // namespace detail

/// Runs one command on a scenario; throws ParseError/invalid_argument for usage problems.
inline Report run_command(const Scenario& sc, const std::string& cmd, const Options& o) {
  using namespace detail;
  Report r;
  r.command = cmd;
  if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end() || cmd == "example")
    throw ParseError("unknown command '" + cmd + "'");
  if (sc.toric && !sc.family && (cmd == "verify" || cmd == "apply")) {
    run_toric(sc, o, cmd, r);
    return r;
  }
  PolyhedralDivisor D = build_divisor(sc, o.trust);
  add_trust(r, D);
  if (cmd == "validate") {
    ValidationReport v = pdiv_validate(D);
    r.witnesses = v.violations;
    r.details = v.notes;
    if (v.ok() && sc.coloring) {
      ValidationReport c = coloring_validate(build_coloring(sc, D, o.trust));
      for (const auto& x : c.violations) r.witnesses.push_back("coloring: " + x);
      if (c.ok()) r.details.push_back("coloring is valid");
    }
    r.verdict = r.witnesses.empty() ? "valid" : "invalid";
    r.exit_code = r.witnesses.empty() ? kPositive : kNegative;
  } else if (cmd == "eval") {
    IntVec m = need_weight(o, sc.rank);
    r.verdict = pdiv_eval(D, m).str();
    if (r.verdict.empty()) r.verdict = "0";
  } else if (cmd == "piece") {
    IntVec m = need_weight(o, sc.rank);
    GradedPiece p = graded_piece(D, m);
    if (p.module.is_zero()) {
      r.verdict = "A_" + vec_str(m) + " = 0";
    } else if (D.curve() == Curve::A1) {
      r.verdict = "A_" + vec_str(m) + " = (" + p.module.generator.str() + ")*k[t]";
    } else {
      r.verdict = "A_" + vec_str(m) + " has dimension " + std::to_string(p.module.basis.size());
      for (const auto& b : p.module.basis) r.details.push_back(b.str());
    }
  } else if (cmd == "generators") {
    GeneratorResult g = algebra_generators(D, {sc.bounds.weight_box, std::nullopt});
    for (const auto& x : g.generators) r.details.push_back(vec_str(x.m) + ": " + x.f.str());
    r.details.push_back(g.certificate);
    r.verdict = std::to_string(g.generators.size()) + " generators" + (g.stabilized ? "" : " (not stabilized)");
    r.exit_code = g.stabilized ? kPositive : kNegative;
  } else if (cmd == "colorings") {
    auto cs = enumerate_colorings(D, build_bounds(sc, default_y_inf(sc, D, o.trust)));
    for (const auto& c : cs) r.details.push_back(coloring_str(c));
    r.verdict = std::to_string(cs.size()) + " colorings";
    r.exit_code = cs.empty() ? kNegative : kPositive;
  } else if (cmd == "roots") {
    std::vector<RatVec> roots;
    if (sc.coloring) {
      AssociatedCones a = associated_cones(build_coloring(sc, D, o.trust));
      r.details.push_back("tau~ = " + a.tau_tilde.str() + ", distinguished ray " + vec_str(a.distinguished_ray) + ", d = " + a.d.get_str());
      roots = demazure_roots_enumerate(a.tau_tilde, a.distinguished_ray, sc.bounds.e_box, to_long(a.d));
    } else if (sc.toric) {
      roots = demazure_roots_enumerate(D.tail(), sc.toric->ray, sc.bounds.e_box);
    } else {
      throw std::invalid_argument("roots needs a coloring or a toric section");
    }
    for (const auto& e : roots) r.details.push_back(vec_str(e));
    r.verdict = std::to_string(roots.size()) + " roots in the box";
    r.exit_code = roots.empty() ? kNegative : kPositive;
  } else if (cmd == "coherent") {
    CoherenceReport c = coherent_validate(build_family(sc, build_coloring(sc, D, o.trust)));
    for (const auto& v : c.violations) r.witnesses.push_back(v.str());
    for (const auto& n : c.notes)
      if (n.find("trusted") == std::string::npos) r.details.push_back(n);
    r.verdict = c.coherent() ? "coherent" : "not coherent";
    r.exit_code = c.coherent() ? kPositive : kNegative;
  } else if (cmd == "apply" || cmd == "verify") {
    CoherentFamily th = build_family(sc, build_coloring(sc, D, o.trust));
    CoherenceReport c = coherent_validate(th);
    if (!c.coherent()) {
      r.details.push_back("family is not coherent; operator built under override");
      for (const auto& v : c.violations) r.witnesses.push_back(v.str());
    }
    DthetaOperator op = DthetaOperator::build(th, true);
    r.details.push_back("substitution z -> " + op.substitution_str() + ", d = " + std::to_string(op.d()));
    std::vector<GradedElement> xs = build_elements(sc);
    if (cmd == "apply") {
      if (o.m) xs = {GradedElement::monomial(need_weight(o, sc.rank), RatFunc::one(sc.field))};
      long I = verify_order(o, sc);
      bool ok = true;
      for (const auto& x : xs) {
        try {
          auto res = op.apply(x, I < 0 ? std::nullopt : std::optional<long>(I));
          for (std::size_t i = 1; i < res.orders.size(); ++i)
            if (!res.orders[i].is_zero()) r.details.push_back("d^(" + std::to_string(i) + ")(" + x.str() + ") = " + res.orders[i].str());
          if (!res.exact) r.details.push_back("orders of " + x.str() + " truncated at " + std::to_string(res.orders.size() - 1));
        } catch (const DescentError& e) {
          ok = false;
          r.witnesses.push_back(std::string("descent fails: ") + e.what());
        }
      }
      r.verdict = ok ? "applied" : "descent failure";
      r.exit_code = ok && c.coherent() ? kPositive : kNegative;
    } else {
      long I = verify_order(o, sc);
      std::optional<long> order = I < 0 ? std::nullopt : std::optional<long>(I);
      std::vector<GradedElement> gens = xs;
      if (gens.empty()) {
        GeneratorResult g = algebra_generators(D, {sc.bounds.weight_box, std::nullopt});
        for (const auto& x : g.generators) gens.push_back(GradedElement::monomial(x.m, x.f.to_ratfunc()));
        r.details.push_back("generators from the certified search (" + std::to_string(gens.size()) + ")");
      }
      bool ok = c.coherent();
      StabilityReport st = verify_stability(op, D, gens, order);
      for (const auto& w : st.witnesses) r.witnesses.push_back("stability: " + w.reason);
      r.details.push_back(std::string("stability: ") + (st.stable() ? "pass" : "fail"));
      ok = ok && st.stable();
      try {
        AxiomReport ax = verify_axioms(op, gens, order);
        for (const auto& f : ax.failures) r.witnesses.push_back("axiom: " + f);
        r.details.push_back(std::string("axioms: ") + (ax.ok() ? "pass" : "fail") + " (" + std::to_string(ax.checks) + " identities)");
        ok = ok && ax.ok();
      } catch (const DescentError& e) {
        r.witnesses.push_back(std::string("axiom: descent fails: ") + e.what());
        ok = false;
      } catch (const std::invalid_argument& e) {
        r.details.push_back(std::string("axioms: skipped, ") + e.what());
      }
      try {
        HorizontalReport h = verify_horizontal(op);
        r.details.push_back(h.horizontal ? "horizontal: d^(" + std::to_string(*h.order) + ")(t) = " + h.value : "horizontal: no");
        ok = ok && h.horizontal;
      } catch (const DescentError& e) {
        r.witnesses.push_back(std::string("horizontal: descent fails: ") + e.what());
        ok = false;
      }
      r.verdict = ok ? "pass" : "fail";
      r.exit_code = ok ? kPositive : kNegative;
    }
  } else if (cmd == "classify") {
    auto fams = enumerate_coherent(D, build_bounds(sc, default_y_inf(sc, D, o.trust)));
    for (const auto& th : fams) r.details.push_back(family_line(th));
    r.verdict = std::to_string(fams.size()) + " coherent families in the bounds";
    r.exit_code = fams.empty() ? kNegative : kPositive;
  } else if (cmd == "toric-check") {
    ToricityReport t = toricity_check(D);
    r.verdict = std::string("criterion ") + verdict_name(t.verdict);
    r.details.push_back(t.reason);
    if (!t.fractional.is_zero()) r.details.push_back("fractional part: " + t.fractional.str());
    r.exit_code = t.verdict == ToricityVerdict::Violated ? kNegative : kPositive;
  }
  return r;
}

struct Request {
  std::string command;
  std::optional<std::string> scenario_file;
  std::optional<std::string> example;
  std::optional<std::string> field;
  std::optional<std::string> run;
  Options options;
};

inline Scenario load_scenario(const Request& q) {
  std::string text;
  if (q.scenario_file && q.example) throw ParseError("use either --scenario or --example, not both");
  if (q.scenario_file) {
    std::ifstream in(*q.scenario_file);
    if (!in) throw ParseError("cannot read scenario file " + *q.scenario_file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::string name = q.example.value_or("");
    auto it = builtin_scenarios().find(name);
    if (it == builtin_scenarios().end()) {
      std::string all;
      for (const auto& [k, v] : builtin_scenarios()) all += " " + k;
      throw ParseError(name.empty() ? "no scenario given (use --scenario FILE or --example NAME)" : "unknown example '" + name + "'; known:" + all);
    }
    text = it->second;
  }
  Scenario sc = parse_scenario(text);
  if (q.field) sc = with_field(sc, parse_field_name(*q.field));
  return sc;
}

/// Full request handling: never throws; usage problems come back with exit code 2.
inline Report execute(Request q) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    std::string cmd = q.command;
    if (cmd == "example") {
      if (!q.example && !q.scenario_file) throw ParseError("example needs a name");
      Scenario sc = load_scenario(q);
      cmd = q.run.value_or(sc.default_command.value_or("validate"));
      r = run_command(sc, cmd, q.options);
      r.command = "example " + sc.name + " --run " + cmd;
    } else {
      r = run_command(load_scenario(q), cmd, q.options);
    }
  } catch (const ReducibleError& e) {
    r.verdict = "invalid";
    r.witnesses.push_back(e.what());
    r.exit_code = kNegative;
  } catch (const std::exception& e) {
    r.verdict = "error";
    r.witnesses.push_back(e.what());
    r.exit_code = kUsage;
  }
  if (r.command.empty()) r.command = q.command;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace ghz::cli
