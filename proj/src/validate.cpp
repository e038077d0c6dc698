#include <algorithm>
#include <cmath>
#include <map>

#include "slcopula/diagonal.hpp"

namespace slc {

namespace {

// Offset of the extra grid points placed on both sides of kinks and jumps.
constexpr double kNeighbour = 1e-9;

// Keeps the largest violation per condition.
class WitnessLog {
 public:
  void add(const std::string& condition, double magnitude, double x1, std::optional<double> x2 = std::nullopt) {
    auto it = worst_.find(condition);
    if (it == worst_.end() || magnitude > it->second.magnitude) {
      worst_[condition] = Witness{x1, x2, condition, magnitude};
    }
  }
  bool has(const std::string& condition) const { return worst_.count(condition) != 0; }
  std::vector<Witness> take() {
    std::vector<Witness> out;
    for (auto& [k, w] : worst_) out.push_back(std::move(w));
    return out;
  }

 private:
  std::map<std::string, Witness> worst_;
};

}  // namespace

std::vector<double> validation_grid(const Diagonal& d, int n) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n) + 1 + 3 * (d.kinks().size() + d.jumps().size()));
  for (int k = 0; k <= n; ++k) xs.push_back(static_cast<double>(k) / n);
  auto add_around = [&](double c) {
    for (double x : {c - kNeighbour, c, c + kNeighbour}) {
      if (x >= 0.0 && x <= 1.0) xs.push_back(x);
    }
  };
  for (double k : d.kinks()) add_around(k);
  for (double j : d.jumps()) add_around(j);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ClassReport validate(const Diagonal& d, const Tolerance& tol) {
  tol.check();
  const double eps = tol.eps_mono;
  const auto xs = validation_grid(d, tol.grid_n);
  const std::size_t n = xs.size();
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = d(xs[i]);

  WitnessLog log;

  const double e0 = std::abs(ys.front());
  const double e1 = std::abs(ys.back() - 1.0);
  if (e0 > eps) log.add("D1", e0, 0.0);
  if (e1 > eps) log.add("D1", e1, 1.0);

  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i];
    const double y = ys[i];
    if (y > x + eps) log.add("D3", y - x, x);
    if (y < -eps) log.add("nonnegative", -y, x);
    if (x > 0.0) {
      const double env = x + x * std::log(x);
      if (y < env - eps) log.add("envelope", env - y, x);
    }
    if (i + 1 < n) {
      const double dy = ys[i + 1] - y;
      const double dx = xs[i + 1] - x;
      if (dy < -eps) log.add("D2", -dy, x, xs[i + 1]);
      if (std::abs(dy) > 2.0 * dx + eps) log.add("D4", std::abs(dy) - 2.0 * dx, x, xs[i + 1]);
    }
  }

  // phi = delta/x and eta = delta/x^2 on the positive part of the grid.
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) phi[i] = ys[i] / xs[i];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double drop = phi[i] - phi[i + 1];
    if (drop > eps) log.add("phi_nondecreasing", drop, xs[i], xs[i + 1]);
    const double eta_i = phi[i] / xs[i];
    const double eta_next = phi[i + 1] / xs[i + 1];
    const double rise = eta_next - eta_i;
    if (rise > eps * (1.0 + std::abs(eta_i))) log.add("eta_nonincreasing", rise, xs[i], xs[i + 1]);
  }

  // Secant slope cap over every grid pair x1 < x2.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double excess = xs[i] * (phi[j] - phi[i]) - (xs[j] - xs[i]);
      if (excess > eps) log.add("slope_cap", excess / (xs[j] - xs[i]), xs[i], xs[j]);
    }
  }

  ClassReport r;
  r.d1 = !log.has("D1");
  r.d2 = !log.has("D2");
  r.d3 = !log.has("D3");
  r.d4 = !log.has("D4");
  r.is_diagonal = r.d1 && r.d2 && r.d3 && r.d4;
  r.phi_nondecreasing = !log.has("phi_nondecreasing");
  r.eta_nonincreasing = !log.has("eta_nonincreasing");
  r.in_copula_class = r.is_diagonal && r.phi_nondecreasing && r.eta_nonincreasing;
  r.nonnegative = !log.has("nonnegative");
  r.in_semicopula_class = r.d1 && r.d2 && r.d3 && r.nonnegative && r.phi_nondecreasing;
  r.two_lipschitz = r.d4;
  r.slope_cap = !log.has("slope_cap");
  r.envelope_ok = !log.has("envelope");
  r.in_quasicopula_class = r.in_semicopula_class && r.two_lipschitz && r.envelope_ok && r.slope_cap;
  r.witnesses = log.take();
  return r;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::copula:
      return "copula";
    case ClassTag::quasicopula:
      return "quasicopula";
    case ClassTag::semicopula:
      return "semicopula";
  }
  return "unknown";
}

std::optional<ClassTag> strongest_class(const ClassReport& r) {
  if (r.in_copula_class) return ClassTag::copula;
  if (r.in_quasicopula_class) return ClassTag::quasicopula;
  if (r.in_semicopula_class) return ClassTag::semicopula;
  return std::nullopt;
}

}  // namespace slc
