#include "slcopula/semilinear.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "slcopula/errors.hpp"

namespace slc {

namespace {

void require_unit_square(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
    throw DomainError("semilinear: (u,v) must lie in [0,1]^2");
  }
}

ClassTag validated_class(const Diagonal& d, const Tolerance& tol) {
  const auto tag = strongest_class(validate(d, tol));
  if (!tag) throw PreconditionError("semilinear: diagonal does not generate a semilinear semi-copula");
  return *tag;
}

// Uniform on the open interval (0,1) from the top 53 bits.
double open_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

constexpr double kBisectionTol = 1e-10;

// Smallest t in [lo, hi] with g(t) >= w, for nondecreasing g with g(hi) >= w.
template <class G>
double bisect(G&& g, double w, double lo, double hi) {
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= w) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double semilinear_value(const Diagonal& d, double u, double v) {
  require_unit_square(u, v);
  const double hi = std::max(u, v);
  if (hi == 0.0) return 0.0;
  const double lo = std::min(u, v);
  return lo * (d(hi) / hi);
}

Semilinear::Semilinear(Diagonal d, const Tolerance& tol) : diag_(std::move(d)), declared_(validated_class(diag_, tol)) {}

Semilinear::Semilinear(Diagonal d, ClassTag declared) : diag_(std::move(d)), declared_(declared) {}

double Semilinear::volume(double u1, double u2, double v1, double v2) const {
  require_unit_square(u1, v1);
  require_unit_square(u2, v2);
  if (!(u1 <= u2 && v1 <= v2)) throw DomainError("volume: requires u1 <= u2 and v1 <= v2");
  if (u1 == u2 || v1 == v2) return 0.0;
  const auto& c = *this;
  return c(u2, v2) - c(u1, v2) - c(u2, v1) + c(u1, v1);
}

double Semilinear::survival(double u, double v) const {
  require_unit_square(u, v);
  return u + v - 1.0 + (*this)(1.0 - u, 1.0 - v);
}

double Semilinear::conditional_cdf(double u, double t) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("conditional_cdf: u must lie in (0,1)");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("conditional_cdf: t must lie in [0,1]");
  if (t >= u) return t == 0.0 ? 0.0 : diag_(t) / t;
  const double du = diag_(u);
  const double slope = (u * diag_.derivative(u, Side::right) - du) / (u * u);
  return t * slope;
}

GridMap surface_grid(const Semilinear& c, int n) {
  GridMap g(n, GridKind::surface);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) g.at(i, j) = c(g.coord(i), g.coord(j));
  }
  return g;
}

GridMap cell_volumes(const Semilinear& c, int n) {
  if (n < 2) throw DomainError("cell_volumes: n must be >= 2");
  const GridMap nodes = surface_grid(c, n);
  GridMap g(n, GridKind::cell_volume);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g.at(i, j) = nodes.at(i + 1, j + 1) - nodes.at(i, j + 1) - nodes.at(i + 1, j) + nodes.at(i, j);
    }
  }
  return g;
}

PositivityReport positivity_oracle(const Semilinear& c, int n) {
  const GridMap vol = cell_volumes(c, n);
  PositivityReport r;
  r.n = n;
  r.min_volume = vol.at(0, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = vol.at(i, j);
      if (x < r.min_volume) {
        r.min_volume = x;
        r.argmin_i = i;
        r.argmin_j = j;
      }
      if (x < 0.0) r.negative_mass_total += x;
    }
  }
  return r;
}

std::vector<std::pair<double, double>> sample(const Semilinear& c, std::size_t count, std::uint64_t seed) {
  if (c.declared_class() != ClassTag::copula) throw PreconditionError("sample: requires a copula-class object");
  const Diagonal& d = c.diagonal();
  std::mt19937_64 gen(seed);
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double u = open_unit(gen);
    const double w = open_unit(gen);
    const double du = d(u);
    const double phi_u = du / u;
    const double slope = std::max(0.0, (u * d.derivative(u, Side::right) - du) / (u * u));
    const double below = u * slope;  // conditional CDF just left of t = u
    double v;
    if (w < below) {
      v = bisect([&](double t) { return t * slope; }, w, 0.0, u);
    } else if (w <= phi_u) {
      v = u;  // inside the jump at the diagonal
    } else {
      v = bisect([&](double t) { return d(t) / t; }, w, u, 1.0);
    }
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace slc
