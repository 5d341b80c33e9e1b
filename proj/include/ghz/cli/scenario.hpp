#pragma once

/**
 * @file scenario.hpp
 * @brief JSON scenarios: parsing into domain objects and serialization.
 */

#include <json.hpp>

#include "ghz/classifier/enumerate.hpp"
#include "ghz/lfihd/element.hpp"

namespace ghz::cli {

using json = nlohmann::json;

struct SupportSpec {
  std::string point;
  std::vector<RatVec> vertices;
  std::optional<std::vector<IntVec>> rays;  ///< defaults to the tail
  bool operator==(const SupportSpec&) const = default;
};

struct ColoringSpec {
  std::string y0;
  std::optional<std::string> y_infinity;
  std::vector<std::pair<std::string, RatVec>> vertices;
  bool operator==(const ColoringSpec&) const = default;
};

struct FamilySpec {
  IntVec e;
  std::vector<long> s;
  std::vector<std::string> lambda;
  bool operator==(const FamilySpec&) const = default;
};

struct BoundsSpec {
  long weight_box = 6;
  std::optional<long> max_order;
  long e_box = 1;
  long s_max = 2;
  std::vector<std::string> lambda_sample;
  bool operator==(const BoundsSpec&) const = default;
};

struct ElementSpec {
  IntVec weight;
  std::string coeff;
  bool operator==(const ElementSpec&) const = default;
};

struct ToricSpec {
  IntVec root;
  IntVec ray;
  bool operator==(const ToricSpec&) const = default;
};

struct Scenario {
  std::string name;
  BaseField field = BaseField::rationals();
  std::size_t rank = 1;
  std::vector<IntVec> tail_rays;
  Curve curve = Curve::A1;
  std::vector<SupportSpec> support;
  std::optional<ColoringSpec> coloring;
  std::optional<FamilySpec> family;
  BoundsSpec bounds;
  bool trust = false;
  std::vector<ElementSpec> elements;
  std::optional<ToricSpec> toric;
  std::optional<std::string> default_command;
  bool operator==(const Scenario&) const = default;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline Rational rational_of(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational as a string \"a/b\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

inline Integer integer_of(const json& j, const std::string& where) {
  Rational q = rational_of(j, where);
  if (q.get_den() != 1) fail(where, "expected an integer, got " + to_string(q));
  return q.get_num();
}

inline RatVec ratvec_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_of(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline IntVec intvec_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_of(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

inline long long_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

inline json rat_json(const Rational& q) { return to_string(q); }
inline json vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}
inline json vec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_long(x));
  return a;
}

}  // namespace detail

inline BaseField parse_field_name(const std::string& s) {
  if (s == "Q") return BaseField::rationals();
  auto prime = [&](const std::string& digits) -> std::uint32_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad field name '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  std::string t = s;
  if (t.rfind("F_", 0) == 0) t = "F" + t.substr(2);
  if (t.size() > 1 && t[0] == 'F') {
    std::string rest = t.substr(1);
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "(l)") return BaseField::rational_functions(prime(rest.substr(0, rest.size() - 3)));
    return BaseField::prime_field(prime(rest));
  }
  throw ParseError("bad field name '" + s + "' (use Q, F<p> or F<p>(l))");
}

inline json field_json(const BaseField& k) {
  switch (k.kind) {
    case FieldKind::Rationals: return {{"kind", "Q"}};
    case FieldKind::PrimeField: return {{"kind", "Fp"}, {"p", k.p}};
    default: return {{"kind", "Fp(l)"}, {"p", k.p}};
  }
}

/// Checks the point parses; the text is kept so that a field change reinterprets it.
inline std::string canonical_point(const std::string& s, const BaseField& k, const std::string& where) {
  if (s == "infinity" || s == "inf") return "infinity";
  try {
    parse_poly(s, k);
    return s;
  } catch (const std::exception& e) {
    detail::fail(where, e.what());
  }
}

/// Parses and structurally checks a scenario; domain validation happens when it is built.
inline Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  using namespace detail;
  if (!j.is_object()) fail("scenario", "expected a JSON object");
  Scenario s;
  if (j.contains("name")) s.name = string_of(j["name"], "name");
  const json& f = need(j, "field", "scenario");
  std::string kind = string_of(need(f, "kind", "field"), "field.kind");
  try {
    if (kind == "Q")
      s.field = BaseField::rationals();
    else if (kind == "Fp")
      s.field = BaseField::prime_field(static_cast<std::uint32_t>(long_of(need(f, "p", "field"), "field.p")));
    else if (kind == "Fp(l)")
      s.field = BaseField::rational_functions(static_cast<std::uint32_t>(long_of(need(f, "p", "field"), "field.p")));
    else
      fail("field.kind", "unknown kind '" + kind + "' (use Q, Fp or Fp(l))");
  } catch (const std::invalid_argument& e) {
    fail("field.p", e.what());
  }
  long rank = long_of(need(j, "rank", "scenario"), "rank");
  if (rank < 1 || rank > 3) fail("rank", "rank must be 1, 2 or 3");
  s.rank = static_cast<std::size_t>(rank);
  if (j.contains("tail_rays")) {
    const json& tr = j["tail_rays"];
    if (!tr.is_array()) fail("tail_rays", "expected an array");
    for (std::size_t i = 0; i < tr.size(); ++i) s.tail_rays.push_back(intvec_of(tr[i], s.rank, "tail_rays[" + std::to_string(i) + "]"));
  }
  std::string curve = j.contains("curve") ? string_of(j["curve"], "curve") : "A1";
  if (curve == "A1")
    s.curve = Curve::A1;
  else if (curve == "P1")
    s.curve = Curve::P1;
  else
    fail("curve", "unknown curve '" + curve + "' (use A1 or P1)");
  if (j.contains("support")) {
    const json& sp = j["support"];
    if (!sp.is_array()) fail("support", "expected an array");
    for (std::size_t i = 0; i < sp.size(); ++i) {
      std::string w = "support[" + std::to_string(i) + "]";
      SupportSpec e;
      e.point = canonical_point(string_of(need(sp[i], "point", w), w + ".point"), s.field, w + ".point");
      const json& vs = need(sp[i], "vertices", w);
      if (!vs.is_array() || vs.empty()) fail(w + ".vertices", "expected a nonempty array");
      for (std::size_t k = 0; k < vs.size(); ++k) e.vertices.push_back(ratvec_of(vs[k], s.rank, w + ".vertices[" + std::to_string(k) + "]"));
      if (sp[i].contains("rays")) {
        std::vector<IntVec> rays;
        for (std::size_t k = 0; k < sp[i]["rays"].size(); ++k) rays.push_back(intvec_of(sp[i]["rays"][k], s.rank, w + ".rays[" + std::to_string(k) + "]"));
        e.rays = rays;
      }
      s.support.push_back(e);
    }
  }
  if (j.contains("coloring")) {
    const json& c = j["coloring"];
    ColoringSpec cs;
    cs.y0 = canonical_point(string_of(need(c, "y0", "coloring"), "coloring.y0"), s.field, "coloring.y0");
    if (c.contains("y_infinity") && !c["y_infinity"].is_null())
      cs.y_infinity = canonical_point(string_of(c["y_infinity"], "coloring.y_infinity"), s.field, "coloring.y_infinity");
    const json& vs = need(c, "vertices", "coloring");
    if (!vs.is_object()) fail("coloring.vertices", "expected an object mapping points to vectors");
    for (auto it = vs.begin(); it != vs.end(); ++it) {
      std::string w = "coloring.vertices[" + it.key() + "]";
      cs.vertices.emplace_back(canonical_point(it.key(), s.field, w), ratvec_of(it.value(), s.rank, w));
    }
    std::sort(cs.vertices.begin(), cs.vertices.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    s.coloring = cs;
  }
  if (j.contains("family")) {
    const json& fa = j["family"];
    FamilySpec fs;
    fs.e = intvec_of(need(fa, "e", "family"), s.rank, "family.e");
    const json& sv = need(fa, "s", "family");
    if (!sv.is_array()) fail("family.s", "expected an array");
    for (std::size_t i = 0; i < sv.size(); ++i) fs.s.push_back(long_of(sv[i], "family.s[" + std::to_string(i) + "]"));
    const json& lv = need(fa, "lambda", "family");
    if (!lv.is_array()) fail("family.lambda", "expected an array");
    for (std::size_t i = 0; i < lv.size(); ++i) {
      std::string w = "family.lambda[" + std::to_string(i) + "]";
      std::string x = lv[i].is_number_integer() ? std::to_string(lv[i].get<long>()) : string_of(lv[i], w);
      try {
        fs.lambda.push_back(parse_scalar(x, s.field).str());
      } catch (const std::exception& e) {
        fail(w, e.what());
      }
    }
    s.family = fs;
  }
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    if (b.contains("weight_box")) s.bounds.weight_box = long_of(b["weight_box"], "bounds.weight_box");
    if (b.contains("max_order") && !b["max_order"].is_null()) s.bounds.max_order = long_of(b["max_order"], "bounds.max_order");
    if (b.contains("e_box")) s.bounds.e_box = long_of(b["e_box"], "bounds.e_box");
    if (b.contains("s_max")) s.bounds.s_max = long_of(b["s_max"], "bounds.s_max");
    if (b.contains("lambda_sample"))
      for (std::size_t i = 0; i < b["lambda_sample"].size(); ++i) {
        std::string w = "bounds.lambda_sample[" + std::to_string(i) + "]";
        try {
          s.bounds.lambda_sample.push_back(parse_scalar(string_of(b["lambda_sample"][i], w), s.field).str());
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          fail(w, e.what());
        }
      }
  }
  if (j.contains("trust")) {
    if (!j["trust"].is_boolean()) fail("trust", "expected true or false");
    s.trust = j["trust"].get<bool>();
  }
  if (j.contains("elements")) {
    const json& el = j["elements"];
    if (!el.is_array()) fail("elements", "expected an array");
    for (std::size_t i = 0; i < el.size(); ++i) {
      std::string w = "elements[" + std::to_string(i) + "]";
      ElementSpec e;
      e.weight = intvec_of(need(el[i], "weight", w), s.rank, w + ".weight");
      e.coeff = string_of(need(el[i], "coeff", w), w + ".coeff");
      try {
        parse_ratfunc(e.coeff, s.field);
      } catch (const std::exception& ex) {
        fail(w + ".coeff", ex.what());
      }
      s.elements.push_back(e);
    }
  }
  if (j.contains("toric")) {
    const json& t = j["toric"];
    s.toric = ToricSpec{intvec_of(need(t, "root", "toric"), s.rank, "toric.root"), intvec_of(need(t, "ray", "toric"), s.rank, "toric.ray")};
  }
  if (j.contains("default_command")) s.default_command = string_of(j["default_command"], "default_command");
  return s;
}

inline json scenario_json(const Scenario& s) {
  using namespace detail;
  json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["field"] = field_json(s.field);
  j["rank"] = s.rank;
  j["tail_rays"] = json::array();
  for (const auto& r : s.tail_rays) j["tail_rays"].push_back(vec_json(r));
  j["curve"] = curve_name(s.curve);
  j["support"] = json::array();
  for (const auto& e : s.support) {
    json x{{"point", e.point}, {"vertices", json::array()}};
    for (const auto& v : e.vertices) x["vertices"].push_back(vec_json(v));
    if (e.rays) {
      x["rays"] = json::array();
      for (const auto& r : *e.rays) x["rays"].push_back(vec_json(r));
    }
    j["support"].push_back(x);
  }
  if (s.coloring) {
    json c{{"y0", s.coloring->y0}, {"vertices", json::object()}};
    if (s.coloring->y_infinity) c["y_infinity"] = *s.coloring->y_infinity;
    for (const auto& [p, v] : s.coloring->vertices) c["vertices"][p] = vec_json(v);
    j["coloring"] = c;
  }
  if (s.family) j["family"] = {{"e", vec_json(s.family->e)}, {"s", s.family->s}, {"lambda", s.family->lambda}};
  json b{{"weight_box", s.bounds.weight_box}, {"e_box", s.bounds.e_box}, {"s_max", s.bounds.s_max}, {"lambda_sample", s.bounds.lambda_sample}};
  if (s.bounds.max_order) b["max_order"] = *s.bounds.max_order;
  j["bounds"] = b;
  j["trust"] = s.trust;
  if (!s.elements.empty()) {
    j["elements"] = json::array();
    for (const auto& e : s.elements) j["elements"].push_back({{"weight", vec_json(e.weight)}, {"coeff", e.coeff}});
  }
  if (s.toric) j["toric"] = {{"root", vec_json(s.toric->root)}, {"ray", vec_json(s.toric->ray)}};
  if (s.default_command) j["default_command"] = *s.default_command;
  return j;
}

inline std::string serialize_scenario(const Scenario& s) { return scenario_json(s).dump(2); }

/// Same scenario over another field; point and scalar strings are reinterpreted.
inline Scenario with_field(Scenario s, const BaseField& k) {
  json j = scenario_json(s);
  j["field"] = field_json(k);
  return parse_scenario(j.dump());
}

// Building domain objects ------------------------------------------------------

inline ClosedPoint build_point(const std::string& s, const Scenario& sc, TrustPolicy policy) {
  if (s == "infinity") return ClosedPoint::infinity();
  return point_validate(parse_poly(s, sc.field), policy);
}

inline TrustPolicy policy_of(const Scenario& sc, bool trust_flag) { return sc.trust || trust_flag ? TrustPolicy::Trusted : TrustPolicy::Strict; }

inline PolyhedralDivisor build_divisor(const Scenario& sc, bool trust_flag = false) {
  Cone tail = Cone::from_generators(sc.rank, sc.tail_rays);
  std::vector<SupportEntry> sup;
  for (const auto& e : sc.support) {
    Cone t = e.rays ? Cone::from_generators(sc.rank, *e.rays) : tail;
    sup.push_back({build_point(e.point, sc, policy_of(sc, trust_flag)), Polyhedron(e.vertices, t)});
  }
  return PolyhedralDivisor(sc.field, sc.curve, tail, sup);
}

inline Coloring build_coloring(const Scenario& sc, const PolyhedralDivisor& D, bool trust_flag = false) {
  if (!sc.coloring) throw std::invalid_argument("scenario has no coloring");
  TrustPolicy pol = policy_of(sc, trust_flag);
  Coloring c{D, {}, build_point(sc.coloring->y0, sc, pol), std::nullopt};
  if (sc.coloring->y_infinity) c.y_inf = build_point(*sc.coloring->y_infinity, sc, pol);
  for (const auto& [p, v] : sc.coloring->vertices) c.vertices.emplace_back(build_point(p, sc, pol), v);
  return c;
}

inline CoherentFamily build_family(const Scenario& sc, const Coloring& c) {
  if (!sc.family) throw std::invalid_argument("scenario has no family");
  std::vector<Scalar> lam;
  for (const auto& l : sc.family->lambda) lam.push_back(parse_scalar(l, sc.field));
  return CoherentFamily::make(c, sc.family->e, sc.family->s, lam);
}

inline std::vector<GradedElement> build_elements(const Scenario& sc) {
  std::vector<GradedElement> out;
  for (const auto& e : sc.elements) out.push_back(GradedElement::monomial(e.weight, parse_ratfunc(e.coeff, sc.field)));
  return out;
}

inline EnumerationBounds build_bounds(const Scenario& sc, const std::optional<ClosedPoint>& y_inf) {
  EnumerationBounds b;
  b.e_box = sc.bounds.e_box;
  b.s_max = sc.bounds.s_max;
  for (const auto& l : sc.bounds.lambda_sample) b.lambda_sample.push_back(parse_scalar(l, sc.field));
  b.y_inf = y_inf;
  return b;
}

}  // namespace ghz::cli
