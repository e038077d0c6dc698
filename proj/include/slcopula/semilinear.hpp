#pragma once

// Lower semilinear objects C(u,v) = (u ^ v) delta(u v v) / (u v v), 0/0 := 0.

#include <cstdint>
#include <utility>
#include <vector>

#include "slcopula/diagonal.hpp"
#include "slcopula/numerics.hpp"

namespace slc {

/// C(u,v) for any diagonal, without class checks. DomainError off the square.
double semilinear_value(const Diagonal& d, double u, double v);

/// A diagonal together with the strongest class it was validated into.
class Semilinear {
 public:
  /// Validates `d`; throws PreconditionError if it is not even a semi-copula diagonal.
  explicit Semilinear(Diagonal d, const Tolerance& tol = {});
  /// Trusts the caller's class declaration.
  Semilinear(Diagonal d, ClassTag declared);

  const Diagonal& diagonal() const noexcept { return diag_; }
  ClassTag declared_class() const noexcept { return declared_; }

  double operator()(double u, double v) const { return semilinear_value(diag_, u, v); }

  /// C-volume of [u1,u2] x [v1,v2]; zero for degenerate rectangles.
  double volume(double u1, double u2, double v1, double v2) const;

  /// u + v - 1 + C(1-u, 1-v).
  double survival(double u, double v) const;

  /// dC/du(u, t) as a function of t: t phi'(u) below u, phi(t) = delta(t)/t
  /// above u, right-continuous at t = u. Requires u in (0,1).
  double conditional_cdf(double u, double t) const;

 private:
  Diagonal diag_;
  ClassTag declared_;
};

/// Node values C(i/n, j/n).
GridMap surface_grid(const Semilinear& c, int n);

/// Volumes of the n x n uniform cells.
GridMap cell_volumes(const Semilinear& c, int n);

struct PositivityReport {
  int n = 0;
  double min_volume = 0.0;
  int argmin_i = 0;  ///< cell [i/n,(i+1)/n] x [j/n,(j+1)/n]
  int argmin_j = 0;
  double negative_mass_total = 0.0;  ///< sum of all negative cell volumes
};

/// Brute-force 2-increasingness scan over all n^2 cells.
PositivityReport positivity_oracle(const Semilinear& c, int n);

/// Draws (U,V) by the conditional-distribution method: U uniform, V from the
/// inverse of t -> dC/du(U,t) by bisection (absolute tolerance 1e-10) with the
/// atom at V = U taken explicitly. Deterministic in `seed`. Requires a copula.
std::vector<std::pair<double, double>> sample(const Semilinear& c, std::size_t count, std::uint64_t seed);

}  // namespace slc
