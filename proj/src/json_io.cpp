#include "slcopula/json_io.hpp"

#include <variant>

#include "slcopula/errors.hpp"

namespace slc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw SpecError(std::string("expected numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json witness_json(const Witness& w) {
  Json j{{"condition", w.condition}, {"x1", w.x1}};
  if (w.x2) j["x2"] = *w.x2;
  j["magnitude"] = w.magnitude;
  return j;
}

std::vector<double> number_array(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw SpecError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const Json& x : a) {
    if (!x.is_number()) throw SpecError(std::string("field '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
}

DiscreteMeasure measure_from_json(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw SpecError("'atoms' must be an array");
  std::vector<Atom> out;
  for (const Json& a : atoms) out.push_back({number(a, "m"), number(a, "w")});
  return DiscreteMeasure(std::move(out));
}

Json to_json(const DiscreteMeasure& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back(Json{{"m", a.m}, {"w", a.w}});
  return Json{{"atoms", atoms}};
}

Diagonal diagonal_from_json(const Json& j) {
  const Json& v = field(j, "variant");
  if (!v.is_string()) throw SpecError("'variant' must be a string");
  const auto variant = v.get<std::string>();
  if (variant == "m") return Diagonal::family_m(number(j, "m"));
  if (variant == "p") return Diagonal::family_p(number(j, "p"));
  if (variant == "beta") return Diagonal::family_beta(number(j, "beta"));
  if (variant == "step") {
    const Json& side = field(j, "side");
    const double a = number(j, "a");
    if (side == "right") return Diagonal::step_right(a);
    if (side == "left") return Diagonal::step_left(a);
    throw SpecError("step 'side' must be \"right\" or \"left\"");
  }
  if (variant == "mixture") return Diagonal::mixture(measure_from_json(j));
  if (variant == "tabulated") {
    const Json& knots = field(j, "knots");
    if (!knots.is_array()) throw SpecError("'knots' must be an array");
    std::vector<Knot> out;
    for (const Json& k : knots) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
        throw SpecError("each knot must be a pair [x, y]");
      }
      out.push_back({k[0].get<double>(), k[1].get<double>()});
    }
    return Diagonal::tabulated(std::move(out));
  }
  if (variant == "reflected") return Diagonal::reflected(diagonal_from_json(field(j, "inner")));
  if (variant == "combination") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) throw SpecError("'parts' must be an array");
    std::vector<std::pair<double, Diagonal>> out;
    for (const Json& p : parts) out.emplace_back(number(p, "w"), diagonal_from_json(field(p, "spec")));
    return Diagonal::combination(std::move(out));
  }
  throw SpecError("unknown diagonal variant '" + variant + "'");
}

Json to_json(const Diagonal& d) {
  return std::visit(overloaded{
                        [](const diag::FamilyM& f) { return Json{{"variant", "m"}, {"m", f.m}}; },
                        [](const diag::FamilyP& f) { return Json{{"variant", "p"}, {"p", f.p}}; },
                        [](const diag::FamilyBeta& f) { return Json{{"variant", "beta"}, {"beta", f.beta}}; },
                        [](const diag::Step& s) {
                          return Json{{"variant", "step"},
                                      {"side", s.side == StepSide::right ? "right" : "left"},
                                      {"a", s.a}};
                        },
                        [](const diag::Mixture& m) {
                          Json j{{"variant", "mixture"}};
                          j["atoms"] = to_json(m.measure)["atoms"];
                          return j;
                        },
                        [](const diag::Tabulated& t) {
                          Json knots = Json::array();
                          for (const Knot& k : t.knots) knots.push_back(Json::array({k.x, k.y}));
                          return Json{{"variant", "tabulated"}, {"knots", knots}};
                        },
                        [](const diag::Reflected& r) { return Json{{"variant", "reflected"}, {"inner", to_json(*r.inner)}}; },
                        [](const diag::Combination& c) {
                          Json parts = Json::array();
                          for (const auto& [w, d] : c.parts) parts.push_back(Json{{"w", w}, {"spec", to_json(*d)}});
                          return Json{{"variant", "combination"}, {"parts", parts}};
                        },
                    },
                    d.variant());
}

PiecewiseQuadratic piecewise_from_json(const Json& j) {
  PiecewiseQuadratic pw;
  pw.breakpoints = number_array(j, "breakpoints");
  pw.alpha = number_array(j, "alpha");
  pw.beta = number_array(j, "beta");
  return pw;
}

Json to_json(const PiecewiseQuadratic& pw) {
  return Json{{"breakpoints", pw.breakpoints}, {"alpha", pw.alpha}, {"beta", pw.beta}};
}

Json to_json(const Tolerance& tol) {
  return Json{{"eps_mono", tol.eps_mono},   {"eps_measure", tol.eps_measure}, {"h_diff", tol.h_diff},
              {"quad_n", tol.quad_n},       {"quad_n_2d", tol.quad_n_2d},     {"eps_pred", tol.eps_pred},
              {"origin_cut", tol.origin_cut}, {"grid_n", tol.grid_n},         {"measure_n", tol.measure_n}};
}

Json to_json(const ClassReport& r) {
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(witness_json(w));
  return Json{
      {"is_diagonal", r.is_diagonal},
      {"diagonal_conditions", {{"D1", r.d1}, {"D2", r.d2}, {"D3", r.d3}, {"D4", r.d4}}},
      {"in_copula_class", r.in_copula_class},
      {"copula_conditions", {{"phi_nondecreasing", r.phi_nondecreasing}, {"eta_nonincreasing", r.eta_nonincreasing}}},
      {"in_semicopula_class", r.in_semicopula_class},
      {"in_quasicopula_class", r.in_quasicopula_class},
      {"quasicopula_conditions",
       {{"two_lipschitz", r.two_lipschitz},
        {"phi_nondecreasing", r.phi_nondecreasing},
        {"slope_cap", r.slope_cap},
        {"envelope_ok", r.envelope_ok}}},
      {"witnesses", witnesses},
  };
}

Json to_json(const ExtremityReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.worst_witnesses) witnesses.push_back(Json{{"x", w.x}, {"value", w.value}});
  return Json{{"class_tested", to_string(r.class_tested)},
              {"verdict", r.verdict},
              {"violating_measure", r.violating_measure},
              {"excluded_measure", r.excluded_measure},
              {"eps_measure", r.eps_measure},
              {"eps_pred", r.eps_pred},
              {"samples", r.samples},
              {"worst_witnesses", witnesses}};
}

Json to_json(const MeasureTriple& t) {
  return Json{{"rho", t.rho}, {"gamma", t.gamma}, {"footrule", t.footrule}};
}

Json to_json(const PositivityReport& r) {
  return Json{{"n", r.n},
              {"min_volume", r.min_volume},
              {"argmin_cell", {{"i", r.argmin_i}, {"j", r.argmin_j}, {"u", double(r.argmin_i) / r.n},
                               {"v", double(r.argmin_j) / r.n}}},
              {"negative_mass_total", r.negative_mass_total}};
}

Json to_json(const AsymmetryBounds& b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}, {"radial_upper", b.radial_upper}};
}

Json to_json(const Attainment& a) {
  auto opt = [](const Optimum& o) {
    return Json{{"value", o.value}, {"family", to_string(o.family)}, {"param", o.param}};
  };
  return Json{{"sup_chi", opt(a.sup_chi)}, {"inf_chi", opt(a.inf_chi)}, {"sup_xi", opt(a.sup_xi)}};
}

}  // namespace slc
