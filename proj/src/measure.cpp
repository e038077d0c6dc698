#include "slcopula/measure.hpp"

#include <algorithm>
#include <cmath>

#include "slcopula/errors.hpp"

namespace slc {

namespace {

std::vector<Atom> sorted_merged(std::vector<Atom> atoms) {
  if (atoms.empty()) throw SpecError("measure: at least one atom required");
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.m) || a.m < 0.0 || a.m > 1.0) {
      throw SpecError("measure: atom locations must lie in [0,1]");
    }
    if (!std::isfinite(a.w) || a.w <= 0.0) throw SpecError("measure: atom weights must be > 0");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.m < b.m; });
  std::vector<Atom> out;
  for (const Atom& a : atoms) {
    if (!out.empty() && out.back().m == a.m) {
      out.back().w += a.w;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(sorted_merged(std::move(atoms))) {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.w;
  if (std::abs(total - 1.0) > 1e-12) throw SpecError("measure: weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::normalized(std::vector<Atom> atoms) {
  auto merged = sorted_merged(std::move(atoms));
  double total = 0.0;
  for (const Atom& a : merged) total += a.w;
  for (Atom& a : merged) a.w /= total;
  return DiscreteMeasure(std::move(merged));
}

DiscreteMeasure DiscreteMeasure::point_mass(double m) { return DiscreteMeasure({{m, 1.0}}); }

double DiscreteMeasure::cdf(double t) const noexcept {
  if (t >= atoms_.back().m) return 1.0;
  double f = 0.0;
  for (const Atom& a : atoms_) {
    if (a.m > t) break;
    f += a.w;
  }
  return f;
}

double DiscreteMeasure::cdf_left(double t) const noexcept {
  if (t > atoms_.back().m) return 1.0;
  double f = 0.0;
  for (const Atom& a : atoms_) {
    if (a.m >= t) break;
    f += a.w;
  }
  return f;
}

double DiscreteMeasure::tail_moment(double t) const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_) {
    if (a.m > t) s += a.w * a.m;
  }
  return s;
}

double DiscreteMeasure::tail_moment_closed(double t) const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_) {
    if (a.m >= t) s += a.w * a.m;
  }
  return s;
}

}  // namespace slc
