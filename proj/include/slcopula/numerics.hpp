#pragma once

// Shared numerical kernel: composite Simpson quadrature, finite differences,
// grid-based Lebesgue measure estimates and the GridMap container.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "slcopula/errors.hpp"

namespace slc {

/// Numerical knobs shared by validation, classification and quadrature.
struct Tolerance {
  double eps_mono = 1e-9;      ///< slack for monotonicity / inequality tests
  double eps_measure = 1e-3;   ///< "measure ~ 0" threshold
  double h_diff = 1e-6;        ///< finite-difference step
  int quad_n = 2048;           ///< Simpson panels on [0,1] (even)
  int quad_n_2d = 512;         ///< Simpson panels per axis for 2D integrals
  double eps_pred = 1e-6;      ///< slack on ratio / equality predicates
  double origin_cut = 1e-4;    ///< predicates are evaluated on (origin_cut, 1]
  int grid_n = 1000;           ///< validation grid cells
  int measure_n = 10000;       ///< measure-estimation grid points

  /// Throws SpecError unless every field is admissible.
  void check() const;
};

/// Composite Simpson rule on [a,b] with n (even) panels.
template <class F>
double integrate_1d(F&& f, double a, double b, int n) {
  if (!(a <= b)) throw DomainError("integrate_1d: requires a <= b");
  if (n < 2 || n % 2 != 0) throw DomainError("integrate_1d: panel count must be even and >= 2");
  if (a == b) return 0.0;
  const double h = (b - a) / n;
  auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw NumericalDomainError("integrate_1d: non-finite integrand at x = " + std::to_string(x), x);
    }
    return y;
  };
  double odd = 0.0;
  double even = 0.0;
  for (int k = 1; k < n; ++k) {
    const double x = a + k * h;
    (k % 2 == 1 ? odd : even) += eval(x);
  }
  return h / 3.0 * (eval(a) + eval(b) + 4.0 * odd + 2.0 * even);
}

/// Panel count for a sub-interval of relative length `frac`, rounded up to even.
inline int panels_for(double frac, int n_total) {
  int n = static_cast<int>(std::ceil(frac * n_total));
  n += n % 2;
  return std::max(n, 2);
}

/// Simpson on [a,b] split at the given breakpoints; integrands with kinks
/// there are integrated piecewise-smoothly.
template <class F>
double integrate_piecewise(F&& f, double a, double b, std::span<const double> breaks, int n_total) {
  if (!(a <= b)) throw DomainError("integrate_piecewise: requires a <= b");
  if (a == b) return 0.0;
  std::vector<double> pts{a};
  for (double x : breaks) {
    if (x > a && x < b) pts.push_back(x);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += integrate_1d(f, pts[i], pts[i + 1], panels_for((pts[i + 1] - pts[i]) / (b - a), n_total));
  }
  return total;
}

/// Product Simpson rule over [ax,bx] x [ay,by].
template <class F>
double integrate_2d(F&& f, double ax, double bx, double ay, double by, int nx, int ny) {
  auto row = [&](double y) {
    return integrate_1d([&](double x) { return f(x, y); }, ax, bx, nx);
  };
  return integrate_1d(row, ay, by, ny);
}

/// Central difference (f(x+h) - f(x-h)) / 2h on (0,1). Falls back to a
/// one-sided difference when the stencil would leave [0,1] (with h scaled to
/// a quarter of the distance to the boundary) or straddle a declared kink.
/// Throws DomainError outside (0,1) and KinkError at a kink.
template <class F>
double derivative(F&& f, double x, double h, std::span<const double> kinks = {}) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("derivative: x must lie in (0,1)");
  if (!(h > 0.0)) throw DomainError("derivative: step must be positive");
  double left_room = x;
  double right_room = 1.0 - x;
  for (double k : kinks) {
    if (k == x) throw KinkError("derivative: x is a declared kink", x);
    if (k < x) left_room = std::min(left_room, x - k);
    if (k > x) right_room = std::min(right_room, k - x);
  }
  if (h < left_room && h < right_room) return (f(x + h) - f(x - h)) / (2.0 * h);
  const double hs = std::min(h, std::min(left_room, right_room) / 4.0);
  if (right_room >= left_room) return (f(x + hs) - f(x)) / hs;
  return (f(x) - f(x - hs)) / hs;
}

/// Fraction of the midpoint grid {(k - 1/2)/n : k = 1..n} satisfying `pred`.
template <class P>
double estimate_measure(P&& pred, int n) {
  if (n < 1000) throw DomainError("estimate_measure: at least 1000 samples required");
  long hits = 0;
  for (int k = 1; k <= n; ++k) {
    if (pred((k - 0.5) / n)) ++hits;
  }
  return static_cast<double>(hits) / n;
}

enum class GridKind { surface, cell_volume, asymmetry };

std::string to_string(GridKind kind);

/// Square grid of values over [0,1]^2. Surface and asymmetry maps live on the
/// (n+1)^2 nodes i/n; cell-volume maps live on the n^2 cells, addressed by
/// their centres.
class GridMap {
 public:
  GridMap(int n, GridKind kind);

  int n() const noexcept { return n_; }
  GridKind kind() const noexcept { return kind_; }
  int side() const noexcept { return kind_ == GridKind::cell_volume ? n_ : n_ + 1; }
  double coord(int i) const noexcept {
    return kind_ == GridKind::cell_volume ? (i + 0.5) / n_ : static_cast<double>(i) / n_;
  }

  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * side() + j]; }
  double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * side() + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// `u,v,value` rows, u outer, 17 significant digits.
  void write_csv(std::ostream& os) const;

 private:
  int n_;
  GridKind kind_;
  std::vector<double> values_;
};

/// "%.17g" formatting used by every CSV writer.
std::string format_g17(double x);

}  // namespace slc
