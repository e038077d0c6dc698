#include "slcopula/association.hpp"

#include <cmath>
#include <variant>

#include "slcopula/errors.hpp"

namespace slc {

MeasureTriple closed_form_extreme(double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw DomainError("closed_form_extreme: m must lie in [0,1]");
  const double m2 = m * m;
  const double m3 = m2 * m;
  MeasureTriple t;
  t.rho = m2 * m2;
  t.footrule = m3;
  t.gamma = m <= 0.5 ? 2.0 * m3 / 3.0 : -2.0 * m3 / 3.0 + 4.0 * m2 - 3.0 * m + 2.0 / 3.0;
  return t;
}

MeasureTriple closed_form_mixture(const DiscreteMeasure& mu) {
  MeasureTriple out;
  for (const Atom& a : mu.atoms()) {
    const MeasureTriple t = closed_form_extreme(a.m);
    out.rho += a.w * t.rho;
    out.gamma += a.w * t.gamma;
    out.footrule += a.w * t.footrule;
  }
  return out;
}

std::optional<MeasureTriple> closed_form(const Diagonal& d) {
  if (const auto* f = std::get_if<diag::FamilyM>(&d.variant())) return closed_form_extreme(f->m);
  if (const auto* mx = std::get_if<diag::Mixture>(&d.variant())) return closed_form_mixture(mx->measure);
  return std::nullopt;
}

MeasureTriple numeric_measures(const Semilinear& c, const Tolerance& tol) {
  tol.check();
  if (c.declared_class() != ClassTag::copula) throw PreconditionError("numeric_measures: requires a copula-class object");
  const auto& kinks = c.diagonal().kinks();
  const int n1 = tol.quad_n;
  const int n2 = tol.quad_n_2d;

  // Inner integral over u for fixed v, split at u = v and the kinks.
  auto row = [&](double v) {
    std::vector<double> breaks(kinks.begin(), kinks.end());
    breaks.push_back(v);
    return integrate_piecewise([&](double u) { return c(u, v); }, 0.0, 1.0, breaks, n2);
  };
  const double volume_integral = integrate_piecewise(row, 0.0, 1.0, kinks, n2);

  const double diag_integral = integrate_piecewise([&](double t) { return c(t, t); }, 0.0, 1.0, kinks, n1);

  std::vector<double> anti_breaks{0.5};
  for (double k : kinks) {
    anti_breaks.push_back(k);
    anti_breaks.push_back(1.0 - k);
  }
  const double anti_integral =
      integrate_piecewise([&](double u) { return c(u, 1.0 - u); }, 0.0, 1.0, anti_breaks, n1);
  const double gap_integral = integrate_piecewise([&](double u) { return u - c(u, u); }, 0.0, 1.0, kinks, n1);

  MeasureTriple t;
  t.rho = 12.0 * volume_integral - 3.0;
  t.footrule = 6.0 * diag_integral - 2.0;
  t.gamma = 4.0 * (anti_integral - gap_integral);
  return t;
}

}  // namespace slc
