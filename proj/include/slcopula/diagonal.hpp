#pragma once

// Finite descriptions of diagonal sections and their class-membership checks.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slcopula/measure.hpp"
#include "slcopula/numerics.hpp"

namespace slc {

enum class StepSide { right, left };
enum class Side { left, right };

struct Knot {
  double x;
  double y;
  friend bool operator==(const Knot&, const Knot&) = default;
};

class Diagonal;

namespace diag {

/// max(m t, t^2)
struct FamilyM {
  double m;
};
/// min(t^2 / p, t)
struct FamilyP {
  double p;
};
/// beta t below e^(beta-1), t + t ln t from there on.
struct FamilyBeta {
  double beta;
};
/// 0 then t, one jump at a. Right-continuous (delta(a) = a) for StepSide::right,
/// left-continuous (delta(a) = 0) for StepSide::left.
struct Step {
  double a;
  StepSide side;
};
/// Choquet mixture of max(m t, t^2) over a discrete measure on m.
struct Mixture {
  DiscreteMeasure measure;
};
/// Piecewise-linear interpolation of knots covering [0,1].
struct Tabulated {
  std::vector<Knot> knots;
};
/// delta(1 - t) + 2t - 1 of the inner diagonal.
struct Reflected {
  std::shared_ptr<const Diagonal> inner;
};
/// Convex combination sum w_i delta_i with unit total weight.
struct Combination {
  std::vector<std::pair<double, std::shared_ptr<const Diagonal>>> parts;
};

}  // namespace diag

/// Immutable diagonal-section value. Kinks (points where the derivative does
/// not exist) and jumps are declared by each variant and cached.
class Diagonal {
 public:
  using Variant = std::variant<diag::FamilyM, diag::FamilyP, diag::FamilyBeta, diag::Step, diag::Mixture,
                               diag::Tabulated, diag::Reflected, diag::Combination>;

  static Diagonal family_m(double m);
  static Diagonal family_p(double p);
  static Diagonal family_beta(double beta);
  static Diagonal step_right(double a);
  static Diagonal step_left(double a);
  static Diagonal mixture(DiscreteMeasure measure);
  /// Throws SpecError unless knots have strictly increasing x from 0 to 1.
  static Diagonal tabulated(std::vector<Knot> knots);
  /// Wraps `inner` without unwrapping; see reflect() for the involutive form.
  static Diagonal reflected(Diagonal inner);
  /// Weights are rescaled to unit sum; throws SpecError on empty or non-positive weights.
  static Diagonal combination(std::vector<std::pair<double, Diagonal>> parts);

  /// delta(t) = t, tabulated on {(0,0),(1,1)}.
  static Diagonal identity();

  const Variant& variant() const noexcept { return *variant_; }

  /// delta(t); DomainError outside [0,1].
  double operator()(double t) const;
  /// delta'(t) on (0,1); KinkError at a declared kink or jump.
  double derivative(double t) const;
  /// One-sided derivative; defined at kinks as well.
  double derivative(double t, Side side) const;

  /// Sorted points of (0,1) where delta is not differentiable (jumps included).
  const std::vector<double>& kinks() const noexcept { return kinks_; }
  /// Sorted points of [0,1] where delta is discontinuous.
  const std::vector<double>& jumps() const noexcept { return jumps_; }

  bool is_kink(double t) const noexcept;

 private:
  explicit Diagonal(Variant v);

  std::shared_ptr<const Variant> variant_;
  std::vector<double> kinks_;
  std::vector<double> jumps_;
};

/// Reflection delta(1 - t) + 2t - 1 mapping upper to lower semilinear
/// diagonals. Reflecting a reflected diagonal returns its inner diagonal.
Diagonal reflect(const Diagonal& d);

/// Grid location and size of a failed membership condition.
struct Witness {
  double x1;
  std::optional<double> x2;
  std::string condition;
  double magnitude;
};

/// Membership verdicts for the diagonal classes with per-condition flags.
/// phi = delta(x)/x, eta = delta(x)/x^2.
struct ClassReport {
  bool d1 = false;  ///< delta(0) = 0, delta(1) = 1
  bool d2 = false;  ///< nondecreasing
  bool d3 = false;  ///< delta(t) <= t
  bool d4 = false;  ///< 2-Lipschitz
  bool is_diagonal = false;

  bool phi_nondecreasing = false;
  bool eta_nonincreasing = false;
  bool in_copula_class = false;

  bool nonnegative = false;  ///< 0 <= delta
  bool in_semicopula_class = false;

  bool two_lipschitz = false;
  bool slope_cap = false;    ///< x1 (phi(x2) - phi(x1)) / (x2 - x1) <= 1
  bool envelope_ok = false;  ///< delta(x) >= x + x ln x
  bool in_quasicopula_class = false;

  std::vector<Witness> witnesses;
};

/// Strongest class a report certifies.
enum class ClassTag { copula, quasicopula, semicopula };

std::string to_string(ClassTag tag);

/// copula > quasi-copula > semi-copula; nullopt when not even a semi-copula diagonal.
std::optional<ClassTag> strongest_class(const ClassReport& r);

/// Evaluates every flag on the validation grid of `tol` (uniform grid plus
/// points at and around declared kinks and jumps).
ClassReport validate(const Diagonal& d, const Tolerance& tol = {});

/// Sorted abscissae used by validate().
std::vector<double> validation_grid(const Diagonal& d, int n);

}  // namespace slc
