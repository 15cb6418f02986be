#pragma once

// Structure-of-arrays update kernels for the Jin-Xin model with Burgers flux
// g(u) = u^2/2. Each kernel has a scalar reference version and an AVX2
// version sharing the same expression tree (no FMA contraction), so the two
// agree bit for bit. The generic Model-based schemes remain the reference the
// kernels are tested against.

#include <cstddef>
#include <span>
#include <string_view>

namespace relaxsolve::kernels {

enum class SimdLevel { scalar, avx2 };

std::string_view to_string(SimdLevel level);

// Whether this build carries the level and the running CPU can execute it.
bool simd_available(SimdLevel level);

// Best available level, unless RELAXSOLVE_SIMD=scalar|avx2 requests one
// (an unavailable request falls back to scalar).
SimdLevel detected_simd_level();

struct StaggeredCoeffs {
  double ratio;    // dt_half / dx
  double relaxed;  // 1 - exp(-dt_half / eps)
  double keep;     // 1 / (1 + dt_half / eps)
  double lambda2;  // lambda^2
};

struct ArsCoeffs {
  double ratio;                // dt / dx
  double left;                 // lambda_l
  double right;                // lambda_r
  double inv_jump;             // 1 / (lambda_r - lambda_l)
  double dissipation;          // lambda_r lambda_l / (lambda_r - lambda_l)
  double decay;                // exp(-dt / eps)
  double decay_minus_one;      // exp(-dt / eps) - 1
  double relaxed_flux_weight;  // eps (exp(-dt / eps) - 1) / dt
  double lambda2;
};

struct SplittingCoeffs {
  double ratio;     // dt / dx
  double left;
  double right;
  double inv_jump;
  double keep;      // 1 / (1 + dt / eps)
  double lambda2;
};

// Interfaces between consecutive entries: out has u.size() - 1 entries.
void staggered_half_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
                         const StaggeredCoeffs& c, std::span<double> u_out, std::span<double> v_out);

// u, v are ghost-extended (n + 2 entries); out has n entries.
void ars_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
              const ArsCoeffs& c, std::span<double> u_out, std::span<double> v_out);

void splitting_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
                    const SplittingCoeffs& c, std::span<double> u_out, std::span<double> v_out);

}  // namespace relaxsolve::kernels
