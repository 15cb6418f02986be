// Compiled with -mavx2 (and without FMA); only reached after a runtime CPU check.

#include <immintrin.h>

#include "jinxin_lanes.hpp"

namespace relaxsolve::kernels::avx2 {
namespace {

struct Avx2Lane {
  __m256d x;
  static Avx2Lane load(const double* p) { return {_mm256_loadu_pd(p)}; }
  static Avx2Lane broadcast(double s) { return {_mm256_set1_pd(s)}; }
  void store(double* p) const { _mm256_storeu_pd(p, x); }
  friend Avx2Lane operator+(Avx2Lane a, Avx2Lane b) { return {_mm256_add_pd(a.x, b.x)}; }
  friend Avx2Lane operator-(Avx2Lane a, Avx2Lane b) { return {_mm256_sub_pd(a.x, b.x)}; }
  friend Avx2Lane operator*(Avx2Lane a, Avx2Lane b) { return {_mm256_mul_pd(a.x, b.x)}; }
};

constexpr std::size_t kWidth = 4;

}  // namespace

void staggered_half_step(const double* u, const double* v, std::size_t count,
                         const StaggeredCoeffs& c, double* u_out, double* v_out) {
  std::size_t i = 0;
  for (; i + kWidth <= count; i += kWidth) staggered_half_lane<Avx2Lane>(u, v, i, c, u_out, v_out);
  for (; i < count; ++i) staggered_half_lane<ScalarLane>(u, v, i, c, u_out, v_out);
}

void ars_step(const double* u, const double* v, std::size_t count, const ArsCoeffs& c,
              double* u_out, double* v_out) {
  std::size_t j = 0;
  for (; j + kWidth <= count; j += kWidth) ars_lane<Avx2Lane>(u, v, j, c, u_out, v_out);
  for (; j < count; ++j) ars_lane<ScalarLane>(u, v, j, c, u_out, v_out);
}

void splitting_step(const double* u, const double* v, std::size_t count, const SplittingCoeffs& c,
                    double* u_out, double* v_out) {
  std::size_t j = 0;
  for (; j + kWidth <= count; j += kWidth) splitting_lane<Avx2Lane>(u, v, j, c, u_out, v_out);
  for (; j < count; ++j) splitting_lane<ScalarLane>(u, v, j, c, u_out, v_out);
}

}  // namespace relaxsolve::kernels::avx2
