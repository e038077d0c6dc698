#include "slcopula/numerics.hpp"

#include <cstdio>
#include <ostream>

namespace slc {

void Tolerance::check() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(eps_mono) || !positive(eps_measure) || !positive(h_diff) || !positive(eps_pred) ||
      !positive(origin_cut)) {
    throw SpecError("tolerance: all slack values must be finite and strictly positive");
  }
  if (quad_n < 2 || quad_n % 2 != 0 || quad_n_2d < 2 || quad_n_2d % 2 != 0) {
    throw SpecError("tolerance: quadrature panel counts must be even and >= 2");
  }
  if (grid_n < 2) throw SpecError("tolerance: grid_n must be >= 2");
  if (measure_n < 1000) throw SpecError("tolerance: measure_n must be >= 1000");
  if (origin_cut >= 1.0) throw SpecError("tolerance: origin_cut must be < 1");
}

std::string to_string(GridKind kind) {
  switch (kind) {
    case GridKind::surface:
      return "surface";
    case GridKind::cell_volume:
      return "cell_volume";
    case GridKind::asymmetry:
      return "asymmetry";
  }
  return "unknown";
}

GridMap::GridMap(int n, GridKind kind) : n_(n), kind_(kind) {
  if (n < 1) throw DomainError("GridMap: n must be positive");
  values_.assign(static_cast<std::size_t>(side()) * side(), 0.0);
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void GridMap::write_csv(std::ostream& os) const {
  os << "u,v,value\n";
  for (int i = 0; i < side(); ++i) {
    for (int j = 0; j < side(); ++j) {
      os << format_g17(coord(i)) << ',' << format_g17(coord(j)) << ',' << format_g17(at(i, j)) << '\n';
    }
  }
}

}  // namespace slc
