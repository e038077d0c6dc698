#pragma once

// Extreme-point classification of diagonals within the copula, semi-copula
// and quasi-copula classes.

#include <vector>

#include "slcopula/diagonal.hpp"

namespace slc {

struct ExtremityWitness {
  double x;
  double value;  ///< delta'/delta (copula) or (delta/x)' (quasi-copula)
};

struct ExtremityReport {
  ClassTag class_tested = ClassTag::copula;
  double violating_measure = 0.0;  ///< estimated measure of the criterion-violating set
  bool verdict = false;            ///< true: extreme point
  double excluded_measure = 0.0;   ///< origin strip plus kink points left out of the estimate
  std::vector<ExtremityWitness> worst_witnesses;
  double eps_measure = 0.0;
  double eps_pred = 0.0;
  int samples = 0;
};

/// Extreme in the copula class iff {x : 1/x < delta'(x)/delta(x) < 2/x} is
/// null. Estimated on the midpoint grid of tol.measure_n points above
/// tol.origin_cut with kinks excluded. PreconditionError outside the class.
ExtremityReport classify_copula(const Diagonal& d, const Tolerance& tol = {});

/// Extreme in the semi-copula class iff delta is a one-jump step 0 -> t
/// (checked structurally, or pointwise on the validation grid).
ExtremityReport classify_semicopula(const Diagonal& d, const Tolerance& tol = {});

/// Extreme in the quasi-copula class iff (delta/x)' is in {0, 1/x} almost
/// everywhere; equality uses slack eps_pred (1 + 1/x).
ExtremityReport classify_quasicopula(const Diagonal& d, const Tolerance& tol = {});

/// t + t ln t, with value 0 at t = 0. DomainError outside [0,1].
double quasi_envelope(double t);

/// max(0, t + t ln t): admissible floor for quasi-copula diagonals.
double quasi_envelope_floor(double t);

}  // namespace slc
