#pragma once

// Pointwise asymmetry functionals of semilinear copulas and their bounds.

#include <iosfwd>
#include <string>

#include "slcopula/numerics.hpp"
#include "slcopula/semilinear.hpp"

namespace slc {

enum class Functional { chi, varrho, xi };

std::string to_string(Functional f);
/// Throws SpecError for names other than chi, varrho, xi.
Functional functional_from_string(const std::string& name);

/// Asymmetry with respect to the opposite diagonal:
/// C(u v (1-v), v v (1-u)) - C(u ^ (1-v), v ^ (1-u)).
double chi(const Semilinear& c, double u, double v);

/// Asymmetry with respect to (1/2, 1/2):
/// C(u v (1-u), v v (1-v)) - C(u ^ (1-u), v ^ (1-v)).
double varrho(const Semilinear& c, double u, double v);

/// Radial asymmetry |C(u,v) - C(1-u,1-v) - u - v + 1|.
double xi(const Semilinear& c, double u, double v);

double evaluate(Functional f, const Semilinear& c, double u, double v);

struct AsymmetryBounds {
  double lower = 0.0;         ///< product form
  double upper = 0.0;         ///< quotient form
  double radial_upper = 0.0;  ///< bound on xi
};

/// For v <= 1-u: lower = (1-u-v)(1-(u^v)), upper = (1-u-v)/(1-(u^v)),
/// radial_upper = (1-u-v)(u^v)/(1-(u^v)); mirrored through (1-v, 1-u) above
/// the anti-diagonal. chi lies in [lower, upper] and xi <= radial_upper for
/// every semilinear copula.
AsymmetryBounds bounds(double u, double v);

/// Bounds for varrho: varrho(u,v) equals chi at the folded point
/// (u ^ (1-u), v ^ (1-v)), so the chi bounds apply there.
AsymmetryBounds varrho_bounds(double u, double v);

/// Node grid of a functional.
GridMap map_grid(const Semilinear& c, Functional f, int n);

/// `u,v,lower,upper,radial_upper` rows over the (n+1)^2 nodes.
void write_bounds_csv(std::ostream& os, int n);

enum class Family { m, p };
std::string to_string(Family f);

struct Optimum {
  double value = 0.0;
  Family family = Family::m;
  double param = 0.0;
};

struct Attainment {
  Optimum sup_chi;
  Optimum inf_chi;
  Optimum sup_xi;
};

/// Optimises chi (both directions) and xi over max(m t, t^2), m in [0,1], and
/// min(t^2/p, t), p in (0,1]: a grid of `param_grid_n` cells per family,
/// refined by golden-section search around the best grid point.
Attainment attain_bounds(double u, double v, int param_grid_n = 200);

}  // namespace slc
