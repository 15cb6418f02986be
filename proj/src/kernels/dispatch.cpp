#include <cstdlib>
#include <stdexcept>
#include <string>

#include "relaxsolve/kernels/jinxin_kernels.hpp"

namespace relaxsolve::kernels {

#define RELAXSOLVE_KERNEL_DECLS(ns)                                                          \
  namespace ns {                                                                             \
  void staggered_half_step(const double*, const double*, std::size_t, const StaggeredCoeffs&, \
                           double*, double*);                                                \
  void ars_step(const double*, const double*, std::size_t, const ArsCoeffs&, double*, double*); \
  void splitting_step(const double*, const double*, std::size_t, const SplittingCoeffs&,     \
                      double*, double*);                                                     \
  }

RELAXSOLVE_KERNEL_DECLS(scalar)
#ifdef RELAXSOLVE_HAVE_AVX2
RELAXSOLVE_KERNEL_DECLS(avx2)
#endif
#undef RELAXSOLVE_KERNEL_DECLS

std::string_view to_string(SimdLevel level) {
  return level == SimdLevel::avx2 ? "avx2" : "scalar";
}

bool simd_available(SimdLevel level) {
  if (level == SimdLevel::scalar) return true;
#if defined(RELAXSOLVE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

SimdLevel detected_simd_level() {
  static const SimdLevel level = [] {
    if (const char* env = std::getenv("RELAXSOLVE_SIMD")) {
      const std::string requested(env);
      if (requested == "scalar") return SimdLevel::scalar;
      if (requested == "avx2") return simd_available(SimdLevel::avx2) ? SimdLevel::avx2 : SimdLevel::scalar;
    }
    return simd_available(SimdLevel::avx2) ? SimdLevel::avx2 : SimdLevel::scalar;
  }();
  return level;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

SimdLevel usable(SimdLevel level) {
  return simd_available(level) ? level : SimdLevel::scalar;
}

}  // namespace

void staggered_half_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
                         const StaggeredCoeffs& c, std::span<double> u_out, std::span<double> v_out) {
  require(u.size() >= 2 && v.size() == u.size(), "staggered_half_step: bad input sizes");
  const std::size_t count = u.size() - 1;
  require(u_out.size() == count && v_out.size() == count, "staggered_half_step: bad output sizes");
#ifdef RELAXSOLVE_HAVE_AVX2
  if (usable(level) == SimdLevel::avx2) {
    return avx2::staggered_half_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
  }
#endif
  (void)level;
  scalar::staggered_half_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
}

void ars_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
              const ArsCoeffs& c, std::span<double> u_out, std::span<double> v_out) {
  require(u.size() >= 3 && v.size() == u.size(), "ars_step: bad input sizes");
  const std::size_t count = u.size() - 2;
  require(u_out.size() == count && v_out.size() == count, "ars_step: bad output sizes");
#ifdef RELAXSOLVE_HAVE_AVX2
  if (usable(level) == SimdLevel::avx2) {
    return avx2::ars_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
  }
#endif
  (void)level;
  scalar::ars_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
}

void splitting_step(SimdLevel level, std::span<const double> u, std::span<const double> v,
                    const SplittingCoeffs& c, std::span<double> u_out, std::span<double> v_out) {
  require(u.size() >= 3 && v.size() == u.size(), "splitting_step: bad input sizes");
  const std::size_t count = u.size() - 2;
  require(u_out.size() == count && v_out.size() == count, "splitting_step: bad output sizes");
#ifdef RELAXSOLVE_HAVE_AVX2
  if (usable(level) == SimdLevel::avx2) {
    return avx2::splitting_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
  }
#endif
  (void)level;
  scalar::splitting_step(u.data(), v.data(), count, c, u_out.data(), v_out.data());
}

}  // namespace relaxsolve::kernels
