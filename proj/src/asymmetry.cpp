#include "slcopula/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "slcopula/errors.hpp"

namespace slc {

namespace {

template <class Cop>
double chi_of(const Cop& c, double u, double v) {
  return c(std::max(u, 1.0 - v), std::max(v, 1.0 - u)) - c(std::min(u, 1.0 - v), std::min(v, 1.0 - u));
}

template <class Cop>
double varrho_of(const Cop& c, double u, double v) {
  return c(std::max(u, 1.0 - u), std::max(v, 1.0 - v)) - c(std::min(u, 1.0 - u), std::min(v, 1.0 - v));
}

template <class Cop>
double xi_of(const Cop& c, double u, double v) {
  return std::abs(c(u, v) - c(1.0 - u, 1.0 - v) - u - v + 1.0);
}

void require_unit_square(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) throw DomainError("asymmetry: (u,v) must lie in [0,1]^2");
}

Diagonal family_member(Family f, double param) {
  return f == Family::m ? Diagonal::family_m(param) : Diagonal::family_p(param);
}

// Maximises g on [lo, hi] (g assumed unimodal there).
template <class G>
double golden_max(G&& g, double lo, double hi) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + r * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - r * (b - a);
      g1 = g(x1);
    }
  }
  return g1 >= g2 ? x1 : x2;
}

// Best value of sign * objective over one family; sign = -1 minimises.
template <class Obj>
Optimum optimise(Family fam, Obj&& objective, double sign, int grid_n) {
  const double lo = fam == Family::m ? 0.0 : 1.0 / (4.0 * grid_n);
  const double hi = 1.0;
  auto score = [&](double param) { return sign * objective(family_member(fam, param)); };
  auto at = [&](int k) { return lo + (hi - lo) * k / grid_n; };
  int best = 0;
  double best_score = score(at(0));
  for (int k = 1; k <= grid_n; ++k) {
    const double s = score(at(k));
    if (s > best_score) {
      best_score = s;
      best = k;
    }
  }
  const double a = at(std::max(best - 1, 0));
  const double b = at(std::min(best + 1, grid_n));
  double param = golden_max(score, a, b);
  double s = score(param);
  if (best_score > s) {
    param = at(best);
    s = best_score;
  }
  return Optimum{sign * s, fam, param};
}

template <class Obj>
Optimum best_of(Obj&& objective, double sign, int grid_n) {
  const Optimum om = optimise(Family::m, objective, sign, grid_n);
  const Optimum op = optimise(Family::p, objective, sign, grid_n);
  return sign * op.value > sign * om.value ? op : om;
}

}  // namespace

std::string to_string(Functional f) {
  switch (f) {
    case Functional::chi:
      return "chi";
    case Functional::varrho:
      return "varrho";
    case Functional::xi:
      return "xi";
  }
  return "unknown";
}

Functional functional_from_string(const std::string& name) {
  if (name == "chi") return Functional::chi;
  if (name == "varrho") return Functional::varrho;
  if (name == "xi") return Functional::xi;
  throw SpecError("unknown asymmetry functional '" + name + "'");
}

std::string to_string(Family f) { return f == Family::m ? "m" : "p"; }

double chi(const Semilinear& c, double u, double v) {
  require_unit_square(u, v);
  return chi_of(c, u, v);
}

double varrho(const Semilinear& c, double u, double v) {
  require_unit_square(u, v);
  return varrho_of(c, u, v);
}

double xi(const Semilinear& c, double u, double v) {
  require_unit_square(u, v);
  return xi_of(c, u, v);
}

double evaluate(Functional f, const Semilinear& c, double u, double v) {
  switch (f) {
    case Functional::chi:
      return chi(c, u, v);
    case Functional::varrho:
      return varrho(c, u, v);
    case Functional::xi:
      return xi(c, u, v);
  }
  return 0.0;
}

AsymmetryBounds bounds(double u, double v) {
  require_unit_square(u, v);
  AsymmetryBounds b;
  if (v <= 1.0 - u) {
    const double s = 1.0 - (u + v);
    const double lo = std::min(u, v);
    b.lower = s * (1.0 - lo);
    b.upper = s / (1.0 - lo);
    b.radial_upper = s * lo / (1.0 - lo);
  } else {
    const double s = (u + v) - 1.0;
    const double hi = std::max(u, v);
    b.lower = s * hi;
    b.upper = s / hi;
    b.radial_upper = s * (1.0 - hi) / hi;
  }
  return b;
}

AsymmetryBounds varrho_bounds(double u, double v) {
  require_unit_square(u, v);
  return bounds(std::min(u, 1.0 - u), std::min(v, 1.0 - v));
}

GridMap map_grid(const Semilinear& c, Functional f, int n) {
  if (n < 2) throw DomainError("map_grid: n must be >= 2");
  GridMap g(n, GridKind::asymmetry);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) g.at(i, j) = evaluate(f, c, g.coord(i), g.coord(j));
  }
  return g;
}

void write_bounds_csv(std::ostream& os, int n) {
  if (n < 2) throw DomainError("write_bounds_csv: n must be >= 2");
  os << "u,v,lower,upper,radial_upper\n";
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double u = static_cast<double>(i) / n;
      const double v = static_cast<double>(j) / n;
      const AsymmetryBounds b = bounds(u, v);
      os << format_g17(u) << ',' << format_g17(v) << ',' << format_g17(b.lower) << ',' << format_g17(b.upper) << ','
         << format_g17(b.radial_upper) << '\n';
    }
  }
}

Attainment attain_bounds(double u, double v, int param_grid_n) {
  if (!(u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0)) throw DomainError("attain_bounds: (u,v) must be interior");
  if (param_grid_n < 2) throw DomainError("attain_bounds: parameter grid must have >= 2 cells");
  auto chi_d = [&](const Diagonal& d) {
    return chi_of([&](double a, double b) { return semilinear_value(d, a, b); }, u, v);
  };
  auto xi_d = [&](const Diagonal& d) {
    return xi_of([&](double a, double b) { return semilinear_value(d, a, b); }, u, v);
  };
  Attainment out;
  out.sup_chi = best_of(chi_d, 1.0, param_grid_n);
  out.inf_chi = best_of(chi_d, -1.0, param_grid_n);
  out.sup_xi = best_of(xi_d, 1.0, param_grid_n);
  return out;
}

}  // namespace slc
