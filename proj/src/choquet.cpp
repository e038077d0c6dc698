#include "slcopula/choquet.hpp"

#include <algorithm>
#include <cmath>

#include "slcopula/errors.hpp"

namespace slc {

double mixture_diagonal(const DiscreteMeasure& mu, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixture_diagonal: t must lie in [0,1]");
  return t * t * mu.cdf(t) + t * mu.tail_moment(t);
}

double mixture_copula(const DiscreteMeasure& mu, double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
    throw DomainError("mixture_copula: (u,v) must lie in [0,1]^2");
  }
  const double hi = std::max(u, v);
  const double lo = std::min(u, v);
  return (hi * mu.cdf(hi) + mu.tail_moment(hi)) * lo;
}

double PiecewiseQuadratic::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("piecewise: t must lie in [0,1]");
  const auto k = static_cast<std::size_t>(std::upper_bound(breakpoints.begin(), breakpoints.end(), t) -
                                          breakpoints.begin());
  return alpha[k] * t + beta[k] * t * t;
}

PiecewiseQuadratic to_piecewise(const DiscreteMeasure& mu) {
  const auto atoms = mu.atoms();
  const std::size_t j = atoms.size();
  PiecewiseQuadratic pw;
  pw.breakpoints.reserve(j);
  pw.alpha.assign(j + 1, 0.0);
  pw.beta.assign(j + 1, 0.0);
  for (const Atom& a : atoms) pw.breakpoints.push_back(a.m);
  // Suffix sums for alpha, prefix sums for beta.
  double suffix = 0.0;
  for (std::size_t h = j; h-- > 0;) {
    suffix += atoms[h].w * atoms[h].m;
    pw.alpha[h] = suffix;
  }
  double prefix = 0.0;
  for (std::size_t h = 1; h <= j; ++h) {
    prefix += atoms[h - 1].w;
    pw.beta[h] = prefix;
  }
  pw.alpha[j] = 0.0;
  pw.beta[j] = 1.0;
  return pw;
}

DiscreteMeasure recover_measure(const PiecewiseQuadratic& pw) {
  constexpr double kTol = 1e-10;
  const std::size_t j = pw.breakpoints.size();
  if (j == 0 || pw.alpha.size() != j + 1 || pw.beta.size() != j + 1) {
    throw NotAMixtureError("recover_measure: need j >= 1 breakpoints and j + 1 coefficient pairs");
  }
  for (std::size_t h = 0; h < j; ++h) {
    const double x = pw.breakpoints[h];
    if (!(x >= 0.0 && x <= 1.0) || (h > 0 && !(x > pw.breakpoints[h - 1]))) {
      throw NotAMixtureError("recover_measure: breakpoints must be strictly increasing in [0,1]");
    }
  }
  for (std::size_t h = 0; h <= j; ++h) {
    if (!(pw.alpha[h] >= -kTol && pw.alpha[h] <= 1.0 + kTol && pw.beta[h] >= -kTol && pw.beta[h] <= 1.0 + kTol)) {
      throw NotAMixtureError("recover_measure: coefficients must lie in [0,1]");
    }
  }
  if (std::abs(pw.beta[0]) > kTol || std::abs(pw.alpha[j]) > kTol || std::abs(pw.beta[j] - 1.0) > kTol) {
    throw NotAMixtureError("recover_measure: first piece must be linear and last piece must be t^2");
  }
  std::vector<Atom> atoms;
  atoms.reserve(j);
  for (std::size_t h = 1; h <= j; ++h) {
    const double c = pw.beta[h] - pw.beta[h - 1];
    if (!(c > 0.0)) throw NotAMixtureError("recover_measure: quadratic coefficients must increase strictly");
    const double x = pw.breakpoints[h - 1];
    const double drop = pw.alpha[h - 1] - pw.alpha[h];
    if (std::abs(drop - c * x) > kTol) {
      throw NotAMixtureError("recover_measure: linear coefficients inconsistent with breakpoint " +
                             std::to_string(x));
    }
    atoms.push_back({x, c});
  }
  return DiscreteMeasure::normalized(std::move(atoms));
}

DiscreteMeasure discretize_quantiles(const std::function<double(double)>& quantile, int k) {
  if (k < 1) throw DomainError("discretize_quantiles: k must be positive");
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) atoms.push_back({quantile((i - 0.5) / k), 1.0 / k});
  return DiscreteMeasure::normalized(std::move(atoms));
}

}  // namespace slc
