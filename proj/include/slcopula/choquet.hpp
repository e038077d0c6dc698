#pragma once

// Mixtures of the extreme family delta_m(t) = max(m t, t^2) driven by a
// discrete probability measure on m, and the equivalent piecewise-quadratic
// form of their diagonals.

#include <functional>
#include <vector>

#include "slcopula/measure.hpp"

namespace slc {

/// delta(t) = t^2 F(t) + t * sum_{m_i > t} c_i m_i, with F right-continuous.
double mixture_diagonal(const DiscreteMeasure& mu, double t);

/// C(u,v) = ((u v v) F(u v v) + sum_{m_i > u v v} c_i m_i) (u ^ v).
double mixture_copula(const DiscreteMeasure& mu, double u, double v);

/// delta(x) = alpha_k x + beta_k x^2 on the k-th piece [x_k, x_{k+1}], where
/// x_0 = 0 and x_{j+1} = 1. Pieces may be degenerate when a breakpoint sits
/// at 0 or 1.
struct PiecewiseQuadratic {
  std::vector<double> breakpoints;  ///< x_1 < ... < x_j in [0,1]
  std::vector<double> alpha;        ///< j + 1 linear coefficients
  std::vector<double> beta;         ///< j + 1 quadratic coefficients

  double operator()(double t) const;
};

/// Breakpoints at the atoms; alpha_h = sum_{i>h} c_i m_i, beta_h = sum_{i<=h} c_i.
PiecewiseQuadratic to_piecewise(const DiscreteMeasure& mu);

/// Inverse of to_piecewise: atoms at the breakpoints with weights
/// beta_h - beta_{h-1}. Throws NotAMixtureError when the coefficients are not
/// those of a mixture (non-monotone, discontinuous, wrong end pieces).
DiscreteMeasure recover_measure(const PiecewiseQuadratic& pw);

/// k equally weighted atoms at the quantile midpoints Q((i - 1/2)/k).
DiscreteMeasure discretize_quantiles(const std::function<double(double)>& quantile, int k);

}  // namespace slc
