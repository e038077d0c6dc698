#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "slcopula/association.hpp"
#include "slcopula/asymmetry.hpp"
#include "slcopula/choquet.hpp"
#include "slcopula/errors.hpp"
#include "slcopula/extremity.hpp"
#include "slcopula/json_io.hpp"
#include "slcopula/semilinear.hpp"

namespace slc::cli {

namespace {

// Input that could not be read; maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A report was produced but the spec failed; maps to exit code 2.
struct Rejected {
  Json report;
};

struct Options {
  std::string spec;
  std::string measure;
  std::string piecewise;
  std::string out;
  int n = 200;
  double tol_measure = 1e-3;
  int panels = 2048;
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  std::optional<double> u;
  std::optional<double> v;
  std::optional<double> t;
  std::string method = "both";
  std::string functional = "chi";
  bool bounds_only = false;
  bool attain = false;
  int param_grid = 200;
  std::string cells;
};

std::string read_arg(const std::string& arg, const char* flag) {
  if (arg.empty()) throw InputError(std::string("missing required ") + flag);
  if (arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot read " + arg.substr(1));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Tolerance tolerance(const Options& o) {
  Tolerance tol;
  tol.eps_measure = o.tol_measure;
  tol.quad_n = o.panels;
  tol.check();
  return tol;
}

// Writes either to --out or to the given stream.
template <class Writer>
void emit(const Options& o, std::ostream& out, Writer&& write) {
  if (o.out.empty()) {
    write(out);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  write(f);
}

void emit_json(const Options& o, std::ostream& out, const Json& j) {
  emit(o, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

// CSV goes to --out when given, with a JSON provenance report on stdout;
// otherwise the CSV itself is written to stdout.
template <class Writer>
void emit_csv(const Options& o, std::ostream& out, Json report, Writer&& write) {
  if (o.out.empty()) {
    write(out);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  write(f);
  report["output"] = o.out;
  out << report.dump(2) << '\n';
}

Json header(const std::string& command, const Json& input) { return Json{{"command", command}, {"input", input}}; }

struct Loaded {
  Json input;
  Diagonal diag;
};

Loaded load_spec(const Options& o) {
  Json input = parse_json(read_arg(o.spec, "--spec"));
  Diagonal d = diagonal_from_json(input);
  return {std::move(input), std::move(d)};
}

// Validates and wraps; a spec outside every class is rejected with its report.
Semilinear object(const std::string& command, const Loaded& s, const Tolerance& tol) {
  const ClassReport r = validate(s.diag, tol);
  const auto tag = strongest_class(r);
  if (!tag) {
    Json j = header(command, s.input);
    j["error"] = "diagonal does not generate a semilinear semi-copula";
    j["validation"] = to_json(r);
    throw Rejected{j};
  }
  return Semilinear(s.diag, *tag);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance(o);
  const Loaded s = load_spec(o);
  const ClassReport r = validate(s.diag, tol);
  Json j = header("validate", s.input);
  j["tolerance"] = to_json(tol);
  const auto tag = strongest_class(r);
  j["strongest_class"] = tag ? Json(to_string(*tag)) : Json(nullptr);
  j["report"] = to_json(r);
  emit_json(o, out, j);
  return (r.is_diagonal || r.in_semicopula_class) ? 0 : 2;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance(o);
  const Loaded s = load_spec(o);
  const ClassReport r = validate(s.diag, tol);
  Json j = header("classify", s.input);
  j["tolerance"] = to_json(tol);
  j["copula"] = r.in_copula_class ? to_json(classify_copula(s.diag, tol)) : Json(nullptr);
  j["quasicopula"] = r.in_quasicopula_class ? to_json(classify_quasicopula(s.diag, tol)) : Json(nullptr);
  j["semicopula"] = r.in_semicopula_class ? to_json(classify_semicopula(s.diag, tol)) : Json(nullptr);
  if (!strongest_class(r)) {
    j["validation"] = to_json(r);
    throw Rejected{j};
  }
  emit_json(o, out, j);
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (!o.t && !(o.u && o.v)) throw CLI::ValidationError("eval", "give --t, or both --u and --v");
  const Loaded s = load_spec(o);
  Json j = header("eval", s.input);
  if (o.t) {
    j["t"] = *o.t;
    j["delta"] = s.diag(*o.t);
  }
  if (o.u && o.v) {
    const Semilinear c = object("eval", s, tolerance(o));
    j["u"] = *o.u;
    j["v"] = *o.v;
    j["class"] = to_string(c.declared_class());
    j["value"] = c(*o.u, *o.v);
    j["survival"] = c.survival(*o.u, *o.v);
  }
  emit_json(o, out, j);
  return 0;
}

int cmd_grid(const Options& o, std::ostream& out) {
  const Loaded s = load_spec(o);
  const Semilinear c = object("grid", s, tolerance(o));
  const GridMap g = surface_grid(c, o.n);
  Json report = header("grid", s.input);
  report["n"] = o.n;
  report["kind"] = to_string(g.kind());
  emit_csv(o, out, report, [&](std::ostream& os) { g.write_csv(os); });
  return 0;
}

int cmd_volume_check(const Options& o, std::ostream& out) {
  const Loaded s = load_spec(o);
  const Semilinear c = object("volume-check", s, tolerance(o));
  const PositivityReport r = positivity_oracle(c, o.n);
  Json j = header("volume-check", s.input);
  j["class"] = to_string(c.declared_class());
  j["report"] = to_json(r);
  j["two_increasing"] = r.min_volume >= -1e-12;
  if (!o.cells.empty()) {
    std::ofstream f(o.cells);
    if (!f) throw InputError("cannot write " + o.cells);
    cell_volumes(c, o.n).write_csv(f);
    j["cells"] = o.cells;
  }
  emit_json(o, out, j);
  return 0;
}

int cmd_measures(const Options& o, std::ostream& out) {
  if (o.method != "closed" && o.method != "numeric" && o.method != "both") {
    throw CLI::ValidationError("--method", "must be closed, numeric or both");
  }
  Tolerance tol = tolerance(o);
  const Loaded s = load_spec(o);
  Json j = header("measures", s.input);
  Json results = Json::array();
  if (o.method != "numeric") {
    const auto cf = closed_form(s.diag);
    if (cf) {
      Json r = to_json(*cf);
      r["method"] = "closed_form";
      results.push_back(r);
    } else {
      j["closed_form_unavailable"] = "closed forms exist for the m family and its mixtures only";
    }
  }
  if (o.method != "closed") {
    const Semilinear c = object("measures", s, tol);
    if (c.declared_class() != ClassTag::copula) {
      j["error"] = "numeric measures require a copula-class diagonal";
      j["results"] = results;
      throw Rejected{j};
    }
    Json r = to_json(numeric_measures(c, tol));
    r["method"] = "numeric";
    results.push_back(r);
  }
  j["results"] = results;
  if (results.size() == 2) {
    double diff = 0.0;
    for (const char* k : {"rho", "gamma", "footrule"}) {
      diff = std::max(diff, std::abs(results[0][k].get<double>() - results[1][k].get<double>()));
    }
    j["max_abs_difference"] = diff;
  }
  emit_json(o, out, j);
  return 0;
}

int cmd_asymmetry(const Options& o, std::ostream& out) {
  if (o.bounds_only) {
    Json report = Json{{"command", "asymmetry"}, {"bounds_only", true}, {"n", o.n}};
    emit_csv(o, out, report, [&](std::ostream& os) { write_bounds_csv(os, o.n); });
    return 0;
  }
  const Functional f = functional_from_string(o.functional);
  const Loaded s = load_spec(o);
  const Semilinear c = object("asymmetry", s, tolerance(o));
  if (o.u && o.v) {
    Json j = header("asymmetry", s.input);
    j["u"] = *o.u;
    j["v"] = *o.v;
    j["chi"] = chi(c, *o.u, *o.v);
    j["varrho"] = varrho(c, *o.u, *o.v);
    j["xi"] = xi(c, *o.u, *o.v);
    j["bounds"] = to_json(bounds(*o.u, *o.v));
    j["varrho_bounds"] = to_json(varrho_bounds(*o.u, *o.v));
    if (o.attain) j["attainment"] = to_json(attain_bounds(*o.u, *o.v, o.param_grid));
    emit_json(o, out, j);
    return 0;
  }
  const GridMap g = map_grid(c, f, o.n);
  Json report = header("asymmetry", s.input);
  report["functional"] = to_string(f);
  report["n"] = o.n;
  emit_csv(o, out, report, [&](std::ostream& os) { g.write_csv(os); });
  return 0;
}

int cmd_mix(const Options& o, std::ostream& out) {
  Json input;
  DiscreteMeasure mu = DiscreteMeasure::point_mass(0.0);
  if (!o.measure.empty()) {
    input = parse_json(read_arg(o.measure, "--measure"));
    mu = measure_from_json(input);
  } else {
    input = parse_json(read_arg(o.spec, "--measure or --spec"));
    const Diagonal d = diagonal_from_json(input);
    const auto* mx = std::get_if<diag::Mixture>(&d.variant());
    if (!mx) throw SpecError("mix: --spec must be a mixture diagonal");
    mu = mx->measure;
  }
  Json j = header("mix", input);
  j["measure"] = to_json(mu);
  j["piecewise"] = to_json(to_piecewise(mu));
  j["closed_form"] = to_json(closed_form_mixture(mu));
  emit_json(o, out, j);
  return 0;
}

int cmd_recover(const Options& o, std::ostream& out) {
  const Json input = parse_json(read_arg(o.piecewise, "--piecewise"));
  Json j = header("recover", input);
  try {
    j["measure"] = to_json(recover_measure(piecewise_from_json(input)));
  } catch (const NotAMixtureError& e) {
    j["error"] = e.what();
    throw Rejected{j};
  }
  emit_json(o, out, j);
  return 0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const Loaded s = load_spec(o);
  const Semilinear c = object("sample", s, tolerance(o));
  if (c.declared_class() != ClassTag::copula) {
    Json j = header("sample", s.input);
    j["error"] = "sampling requires a copula-class diagonal";
    throw Rejected{j};
  }
  const auto pts = sample(c, o.count, o.seed);
  Json report = header("sample", s.input);
  report["count"] = o.count;
  report["seed"] = o.seed;
  emit_csv(o, out, report, [&](std::ostream& os) {
    os << "u,v\n";
    for (const auto& [u, v] : pts) os << format_g17(u) << ',' << format_g17(v) << '\n';
  });
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semilinear copulas from diagonal sections"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-s,--spec", o.spec, "Diagonal spec: inline JSON or @file");
    sub->add_option("-o,--out", o.out, "Output path (default: stdout)");
    sub->add_option("--n", o.n, "Grid resolution")->check(CLI::Range(2, 100000));
    sub->add_option("--tol-measure", o.tol_measure, "Measure-zero threshold")->check(CLI::PositiveNumber);
    sub->add_option("--panels", o.panels, "Simpson panels on [0,1]");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--count", o.count, "Sample size");
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Entry entries[] = {
      {"validate", "Class membership report for a diagonal", cmd_validate},
      {"classify", "Extreme-point classification in every applicable class", cmd_classify},
      {"eval", "Evaluate delta(t) and/or C(u,v)", cmd_eval},
      {"grid", "Surface C on the (n+1)^2 node grid (CSV)", cmd_grid},
      {"volume-check", "Brute-force 2-increasingness scan", cmd_volume_check},
      {"measures", "Spearman's rho, Gini's gamma, Spearman's footrule", cmd_measures},
      {"asymmetry", "Asymmetry functionals, bounds and attainment", cmd_asymmetry},
      {"mix", "Mixture diagonal in piecewise-quadratic form", cmd_mix},
      {"recover", "Recover the mixing measure from a piecewise form", cmd_recover},
      {"sample", "Draw pairs from a semilinear copula (CSV)", cmd_sample},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
  }
  app.get_subcommand("eval")->add_option("--u", o.u);
  app.get_subcommand("eval")->add_option("--v", o.v);
  app.get_subcommand("eval")->add_option("--t", o.t);
  app.get_subcommand("measures")->add_option("--method", o.method, "closed | numeric | both");
  auto* asym = app.get_subcommand("asymmetry");
  asym->add_option("--functional", o.functional, "chi | varrho | xi");
  asym->add_option("--u", o.u);
  asym->add_option("--v", o.v);
  asym->add_flag("--bounds-only", o.bounds_only, "Emit the bound maps as CSV (no spec needed)");
  asym->add_flag("--attain", o.attain, "Search the extreme families for the attaining copulas");
  asym->add_option("--param-grid", o.param_grid, "Parameter grid cells per family");
  app.get_subcommand("mix")->add_option("--measure", o.measure, "Discrete measure: inline JSON or @file");
  app.get_subcommand("recover")->add_option("--piecewise", o.piecewise, "Piecewise form: inline JSON or @file");
  app.get_subcommand("volume-check")->add_option("--cells", o.cells, "Also write cell volumes as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  for (const Entry& e : entries) {
    if (!app.got_subcommand(e.name)) continue;
    try {
      return e.fn(o, out);
    } catch (const Rejected& r) {
      out << r.report.dump(2) << '\n';
      return 2;
    } catch (const InputError& ex) {
      err << "error: " << ex.what() << '\n';
      return 1;
    } catch (const CLI::ValidationError& ex) {
      err << "error: " << ex.what() << '\n';
      return 1;
    } catch (const DomainError& ex) {
      err << "error: " << ex.what() << '\n';
      return 1;
    } catch (const Error& ex) {
      Json j{{"command", e.name}, {"error", ex.what()}};
      out << j.dump(2) << '\n';
      return 2;
    }
  }
  return 1;
}

}  // namespace slc::cli
