#pragma once

// Spearman's rho, Gini's gamma and Spearman's footrule of semilinear copulas:
// closed forms for the max(m t, t^2) family and its mixtures, and a
// quadrature route for any copula-class object.

#include <optional>

#include "slcopula/measure.hpp"
#include "slcopula/semilinear.hpp"

namespace slc {

struct MeasureTriple {
  double rho = 0.0;
  double gamma = 0.0;
  double footrule = 0.0;
};

/// rho = m^4, footrule = m^3, gamma = 2m^3/3 for m <= 1/2 and
/// -2m^3/3 + 4m^2 - 3m + 2/3 above.
MeasureTriple closed_form_extreme(double m);

/// Weighted sums of closed_form_extreme over the atoms of mu.
MeasureTriple closed_form_mixture(const DiscreteMeasure& mu);

/// Closed form when the diagonal is a family_m member or a mixture.
std::optional<MeasureTriple> closed_form(const Diagonal& d);

/// rho = 12 int int C - 3, footrule = 6 int C(t,t) dt - 2,
/// gamma = 4 (int C(u,1-u) du - int (u - C(u,u)) du), by composite Simpson
/// split at the diagonal and at the declared kinks. Requires a copula.
MeasureTriple numeric_measures(const Semilinear& c, const Tolerance& tol = {});

}  // namespace slc
