#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaxsolve/state.hpp"

namespace relaxsolve {

// A hyperbolic system with relaxation
//
//   d_t W + d_x f(W) = R(W) / eps,   R(W) = (0, Q(W^(1)) - W^(2)),
//
// where W^(1) are the first k components (conserved) and W^(2) the remaining
// n - k components (relaxing). Concrete models supply the flux, the
// equilibrium map Q and the admissible set; everything that only depends on
// the linear source structure is implemented here once.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string_view id() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::size_t conserved_size() const = 0;
  std::size_t relaxing_size() const { return size() - conserved_size(); }

  virtual StateVector flux(const StateVector& w) const = 0;
  StateVector flux1(const StateVector& w) const { return flux(w).slice(0, conserved_size()); }
  StateVector flux2(const StateVector& w) const {
    return flux(w).slice(conserved_size(), relaxing_size());
  }

  // Q: R^k -> R^(n-k).
  virtual StateVector equilibrium_map(const StateVector& w1) const = 0;

  StateVector conserved_part(const StateVector& w) const { return w.slice(0, conserved_size()); }
  StateVector relaxing_part(const StateVector& w) const {
    return w.slice(conserved_size(), relaxing_size());
  }
  StateVector equilibrium_of(const StateVector& w) const {
    return equilibrium_map(conserved_part(w));
  }
  // Projection of W onto the equilibrium manifold with the same W^(1).
  StateVector to_equilibrium(const StateVector& w) const {
    return join(conserved_part(w), equilibrium_of(w));
  }

  // R(W); the first k components are exactly zero.
  StateVector source(const StateVector& w) const;

  // Solution at time t of dW/dt = R(W)/eps with W(0) = w.
  StateVector exact_source_solution(const StateVector& w, double t, double eps) const;

  virtual double max_wave_speed(const StateVector& w) const = 0;
  double max_wave_speed(std::span<const StateVector> cells) const;

  // grad f^(2) . R == 0, i.e. f^(2) is invariant along the source ODE.
  virtual bool flux2_constant_along_source() const = 0;

  // Empty when w is admissible, otherwise names the offending component.
  virtual std::optional<std::string> admissibility_violation(const StateVector& w) const = 0;
  bool admissible(const StateVector& w) const { return !admissibility_violation(w).has_value(); }

  // Optional entropy H and its relaxation production grad H . R.
  virtual std::optional<double> entropy(const StateVector&) const { return std::nullopt; }
  virtual std::optional<double> entropy_source(const StateVector&) const { return std::nullopt; }

  virtual std::vector<std::string> primitive_names() const = 0;
  virtual StateVector to_primitive(const StateVector& w) const = 0;
  virtual StateVector from_primitive(const StateVector& p) const = 0;
};

// exp(-x) - 1 and (exp(-x) - 1) / x for x = dt / eps >= 0, both free of
// cancellation over the full range of x (including x -> 0 and x -> inf).
double decay_minus_one(double x);
double decay_minus_one_over(double x);

}  // namespace relaxsolve
