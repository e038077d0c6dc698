#include "slcopula/extremity.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "slcopula/errors.hpp"

namespace slc {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

struct Scored {
  double score;
  ExtremityWitness w;
};

std::vector<ExtremityWitness> top(std::vector<Scored> v) {
  const std::size_t k = std::min(kMaxWitnesses, v.size());
  std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end(),
                    [](const Scored& a, const Scored& b) { return a.score > b.score; });
  std::vector<ExtremityWitness> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(v[i].w);
  return out;
}

// Shared driver for the two derivative-based criteria. `score` returns a
// positive value at violating points, <= 0 elsewhere, and the witness value.
template <class Score>
ExtremityReport measure_criterion(const Diagonal& d, const Tolerance& tol, ClassTag tag, Score&& score) {
  ExtremityReport r;
  r.class_tested = tag;
  r.eps_measure = tol.eps_measure;
  r.eps_pred = tol.eps_pred;
  r.samples = tol.measure_n;
  long excluded = 0;
  std::vector<Scored> violations;
  r.violating_measure = estimate_measure(
      [&](double x) {
        if (x <= tol.origin_cut || d.is_kink(x)) {
          ++excluded;
          return false;
        }
        const auto [s, value] = score(x);
        if (s <= 0.0) return false;
        violations.push_back({s, {x, value}});
        return true;
      },
      tol.measure_n);
  r.excluded_measure = static_cast<double>(excluded) / tol.measure_n;
  r.worst_witnesses = top(std::move(violations));
  return r;
}

}  // namespace

ExtremityReport classify_copula(const Diagonal& d, const Tolerance& tol) {
  tol.check();
  if (!validate(d, tol).in_copula_class) throw PreconditionError("classify_copula: diagonal not in the copula class");
  const double s = tol.eps_pred;
  auto r = measure_criterion(d, tol, ClassTag::copula, [&](double x) {
    const double ratio = d.derivative(x) / d(x);
    const double scaled = x * ratio;  // strictly inside (1, 2) is a violation
    const double inside = std::min(scaled - 1.0 - s, 2.0 - s - scaled);
    return std::pair{inside, ratio};
  });
  r.verdict = r.violating_measure <= tol.eps_measure;
  return r;
}

ExtremityReport classify_quasicopula(const Diagonal& d, const Tolerance& tol) {
  tol.check();
  if (!validate(d, tol).in_quasicopula_class) {
    throw PreconditionError("classify_quasicopula: diagonal not in the quasi-copula class");
  }
  auto r = measure_criterion(d, tol, ClassTag::quasicopula, [&](double x) {
    const double dphi = (x * d.derivative(x) - d(x)) / (x * x);
    const double slack = tol.eps_pred * (1.0 + 1.0 / x);
    const double gap = std::min(std::abs(dphi), std::abs(dphi - 1.0 / x));
    return std::pair{gap - slack, dphi};
  });
  r.verdict = r.violating_measure <= tol.eps_measure;
  return r;
}

ExtremityReport classify_semicopula(const Diagonal& d, const Tolerance& tol) {
  tol.check();
  if (!validate(d, tol).in_semicopula_class) {
    throw PreconditionError("classify_semicopula: diagonal not in the semi-copula class");
  }
  ExtremityReport r;
  r.class_tested = ClassTag::semicopula;
  r.eps_measure = tol.eps_measure;
  r.eps_pred = tol.eps_pred;
  if (std::holds_alternative<diag::Step>(d.variant())) {
    r.verdict = true;
    return r;
  }
  // Pointwise: delta in {0, t} with every zero preceding every t.
  const auto xs = validation_grid(d, tol.grid_n);
  r.samples = static_cast<int>(xs.size());
  const double eps = tol.eps_mono;
  long off_pattern = 0;
  bool switched = false;
  std::vector<Scored> bad;
  for (double x : xs) {
    if (x == 0.0) continue;
    const double y = d(x);
    const bool zero = std::abs(y) <= eps;
    const bool diag = std::abs(y - x) <= eps;
    if (diag && !zero) switched = true;
    if ((!zero && !diag) || (zero && switched)) {
      ++off_pattern;
      const double gap = std::min(std::abs(y), std::abs(y - x));
      bad.push_back({gap, {x, y}});
    }
  }
  r.violating_measure = static_cast<double>(off_pattern) / static_cast<double>(xs.size());
  r.verdict = off_pattern == 0;
  r.worst_witnesses = top(std::move(bad));
  return r;
}

double quasi_envelope(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("quasi_envelope: t must lie in [0,1]");
  if (t == 0.0) return 0.0;
  return t + t * std::log(t);
}

double quasi_envelope_floor(double t) { return std::max(0.0, quasi_envelope(t)); }

}  // namespace slc
