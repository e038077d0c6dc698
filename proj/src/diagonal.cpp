#include "slcopula/diagonal.hpp"

#include <algorithm>
#include <cmath>

#include "slcopula/choquet.hpp"
#include "slcopula/errors.hpp"

namespace slc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_param(bool ok, const char* what) {
  if (!ok) throw SpecError(what);
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool interior(double x) { return x > 0.0 && x < 1.0; }

std::vector<double> declared_kinks(const Diagonal::Variant& v) {
  std::vector<double> out;
  std::visit(overloaded{
                 [&](const diag::FamilyM& f) {
                   if (interior(f.m)) out.push_back(f.m);
                 },
                 [&](const diag::FamilyP& f) {
                   if (interior(f.p)) out.push_back(f.p);
                 },
                 [&](const diag::FamilyBeta& f) { out.push_back(std::exp(f.beta - 1.0)); },
                 [&](const diag::Step& s) {
                   if (interior(s.a)) out.push_back(s.a);
                 },
                 [&](const diag::Mixture& mx) {
                   for (const Atom& a : mx.measure.atoms()) {
                     if (interior(a.m)) out.push_back(a.m);
                   }
                 },
                 [&](const diag::Tabulated& t) {
                   for (std::size_t i = 1; i + 1 < t.knots.size(); ++i) out.push_back(t.knots[i].x);
                 },
                 [&](const diag::Reflected& r) {
                   for (double k : r.inner->kinks()) out.push_back(1.0 - k);
                 },
                 [&](const diag::Combination& c) {
                   for (const auto& [w, d] : c.parts) out.insert(out.end(), d->kinks().begin(), d->kinks().end());
                 },
             },
             v);
  sort_unique(out);
  return out;
}

std::vector<double> declared_jumps(const Diagonal::Variant& v) {
  std::vector<double> out;
  std::visit(overloaded{
                 [&](const diag::Step& s) {
                   if (s.a > 0.0) out.push_back(s.a);
                 },
                 [&](const diag::Reflected& r) {
                   for (double k : r.inner->jumps()) out.push_back(1.0 - k);
                 },
                 [&](const diag::Combination& c) {
                   for (const auto& [w, d] : c.parts) out.insert(out.end(), d->jumps().begin(), d->jumps().end());
                 },
                 [](const auto&) {},
             },
             v);
  sort_unique(out);
  return out;
}

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

}  // namespace

Diagonal::Diagonal(Variant v)
    : variant_(std::make_shared<const Variant>(std::move(v))),
      kinks_(declared_kinks(*variant_)),
      jumps_(declared_jumps(*variant_)) {}

Diagonal Diagonal::family_m(double m) {
  require_param(m >= 0.0 && m <= 1.0, "family_m: m must lie in [0,1]");
  return Diagonal(diag::FamilyM{m});
}

Diagonal Diagonal::family_p(double p) {
  require_param(p > 0.0 && p <= 1.0, "family_p: p must lie in (0,1]");
  return Diagonal(diag::FamilyP{p});
}

Diagonal Diagonal::family_beta(double beta) {
  require_param(beta >= 0.0 && beta < 1.0, "family_beta: beta must lie in [0,1)");
  return Diagonal(diag::FamilyBeta{beta});
}

Diagonal Diagonal::step_right(double a) {
  require_param(a >= 0.0 && a <= 1.0, "step: a must lie in [0,1]");
  return Diagonal(diag::Step{a, StepSide::right});
}

Diagonal Diagonal::step_left(double a) {
  require_param(a >= 0.0 && a <= 1.0, "step: a must lie in [0,1]");
  return Diagonal(diag::Step{a, StepSide::left});
}

Diagonal Diagonal::mixture(DiscreteMeasure measure) { return Diagonal(diag::Mixture{std::move(measure)}); }

Diagonal Diagonal::tabulated(std::vector<Knot> knots) {
  if (knots.size() < 2) throw SpecError("tabulated: at least two knots required");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].x) || !std::isfinite(knots[i].y)) throw SpecError("tabulated: knots must be finite");
    if (i > 0 && !(knots[i].x > knots[i - 1].x)) throw SpecError("tabulated: knot abscissae must increase strictly");
  }
  if (knots.front().x != 0.0 || knots.back().x != 1.0) {
    throw SpecError("tabulated: knots must start at x = 0 and end at x = 1");
  }
  return Diagonal(diag::Tabulated{std::move(knots)});
}

Diagonal Diagonal::reflected(Diagonal inner) {
  return Diagonal(diag::Reflected{std::make_shared<const Diagonal>(std::move(inner))});
}

Diagonal Diagonal::combination(std::vector<std::pair<double, Diagonal>> parts) {
  if (parts.empty()) throw SpecError("combination: at least one part required");
  double total = 0.0;
  for (const auto& [w, d] : parts) {
    if (!std::isfinite(w) || w <= 0.0) throw SpecError("combination: weights must be > 0");
    total += w;
  }
  diag::Combination c;
  for (auto& [w, d] : parts) c.parts.emplace_back(w / total, std::make_shared<const Diagonal>(std::move(d)));
  return Diagonal(std::move(c));
}

Diagonal Diagonal::identity() { return tabulated({{0.0, 0.0}, {1.0, 1.0}}); }

bool Diagonal::is_kink(double t) const noexcept {
  return std::binary_search(kinks_.begin(), kinks_.end(), t);
}

double Diagonal::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("diagonal: t must lie in [0,1]");
  return std::visit(overloaded{
                        [&](const diag::FamilyM& f) { return std::max(f.m * t, t * t); },
                        [&](const diag::FamilyP& f) { return std::min(t * t / f.p, t); },
                        [&](const diag::FamilyBeta& f) {
                          const double a = std::exp(f.beta - 1.0);
                          return t < a ? f.beta * t : t + t * std::log(t);
                        },
                        [&](const diag::Step& s) {
                          const bool zero = s.side == StepSide::right ? t < s.a : t <= s.a;
                          return zero ? 0.0 : t;
                        },
                        [&](const diag::Mixture& mx) { return mixture_diagonal(mx.measure, t); },
                        [&](const diag::Tabulated& tab) {
                          const auto& k = tab.knots;
                          auto it = std::upper_bound(k.begin(), k.end(), t,
                                                     [](double x, const Knot& kn) { return x < kn.x; });
                          if (it == k.end()) return k.back().y;
                          const Knot& hi = *it;
                          const Knot& lo = *(it - 1);
                          if (t == lo.x) return lo.y;
                          return lo.y + (t - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
                        },
                        [&](const diag::Reflected& r) { return (*r.inner)(1.0 - t) + 2.0 * t - 1.0; },
                        [&](const diag::Combination& c) {
                          double s = 0.0;
                          for (const auto& [w, d] : c.parts) s += w * (*d)(t);
                          return s;
                        },
                    },
                    *variant_);
}

double Diagonal::derivative(double t) const {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("diagonal derivative: t must lie in (0,1)");
  if (is_kink(t)) throw KinkError("diagonal derivative: t is a declared kink", t);
  return derivative(t, Side::right);
}

double Diagonal::derivative(double t, Side side) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("diagonal derivative: t must lie in [0,1]");
  // Below/above a breakpoint b, respecting the requested side when t == b.
  auto below = [&](double b) { return t < b || (t == b && side == Side::left); };
  return std::visit(overloaded{
                        [&](const diag::FamilyM& f) { return below(f.m) ? f.m : 2.0 * t; },
                        [&](const diag::FamilyP& f) { return below(f.p) ? 2.0 * t / f.p : 1.0; },
                        [&](const diag::FamilyBeta& f) {
                          return below(std::exp(f.beta - 1.0)) ? f.beta : 2.0 + std::log(t);
                        },
                        [&](const diag::Step& s) { return below(s.a) ? 0.0 : 1.0; },
                        [&](const diag::Mixture& mx) {
                          const auto& mu = mx.measure;
                          if (side == Side::right) return 2.0 * t * mu.cdf(t) + mu.tail_moment(t);
                          return 2.0 * t * mu.cdf_left(t) + mu.tail_moment_closed(t);
                        },
                        [&](const diag::Tabulated& tab) {
                          const auto& k = tab.knots;
                          std::size_t i = 1;
                          while (i + 1 < k.size() && !below(k[i].x)) ++i;
                          return (k[i].y - k[i - 1].y) / (k[i].x - k[i - 1].x);
                        },
                        [&](const diag::Reflected& r) { return 2.0 - r.inner->derivative(1.0 - t, flip(side)); },
                        [&](const diag::Combination& c) {
                          double s = 0.0;
                          for (const auto& [w, d] : c.parts) s += w * d->derivative(t, side);
                          return s;
                        },
                    },
                    *variant_);
}

Diagonal reflect(const Diagonal& d) {
  if (const auto* r = std::get_if<diag::Reflected>(&d.variant())) return *r->inner;
  return Diagonal::reflected(d);
}

}  // namespace slc
