#include "relaxsolve/state.hpp"

#include <algorithm>
#include <cmath>

namespace relaxsolve {

StateVector join(const StateVector& head, const StateVector& tail) {
  StateVector out(head.size() + tail.size());
  std::copy(head.begin(), head.end(), out.begin());
  std::copy(tail.begin(), tail.end(), out.begin() + head.size());
  return out;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_cells)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells) {
  if (n_cells == 0) throw ConfigError("grid: number of cells must be positive");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw ConfigError("grid: require finite bounds with x_max > x_min");
  }
}

}  // namespace relaxsolve
