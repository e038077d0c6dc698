#pragma once

#include <span>
#include <vector>

namespace slc {

/// One atom of a discrete probability measure on [0,1].
struct Atom {
  double m;  ///< location
  double w;  ///< probability mass, > 0

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported probability measure on [0,1]. Atoms are kept sorted by
/// location with duplicates merged; total mass is 1 within 1e-12.
class DiscreteMeasure {
 public:
  /// Throws SpecError on locations outside [0,1], non-positive weights, an
  /// empty list, or total mass differing from 1 by more than 1e-12.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  /// Rescales positive weights to unit mass before validating.
  static DiscreteMeasure normalized(std::vector<Atom> atoms);
  static DiscreteMeasure point_mass(double m);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// mu([0,t]); exactly 1 from the last atom on.
  double cdf(double t) const noexcept;
  /// mu([0,t)).
  double cdf_left(double t) const noexcept;
  /// Sum of w*m over atoms with m > t.
  double tail_moment(double t) const noexcept;
  /// Sum of w*m over atoms with m >= t.
  double tail_moment_closed(double t) const noexcept;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace slc
