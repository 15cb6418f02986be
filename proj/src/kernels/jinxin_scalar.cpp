#include "jinxin_lanes.hpp"

namespace relaxsolve::kernels::scalar {

void staggered_half_step(const double* u, const double* v, std::size_t count,
                         const StaggeredCoeffs& c, double* u_out, double* v_out) {
  for (std::size_t i = 0; i < count; ++i) staggered_half_lane<ScalarLane>(u, v, i, c, u_out, v_out);
}

void ars_step(const double* u, const double* v, std::size_t count, const ArsCoeffs& c,
              double* u_out, double* v_out) {
  for (std::size_t j = 0; j < count; ++j) ars_lane<ScalarLane>(u, v, j, c, u_out, v_out);
}

void splitting_step(const double* u, const double* v, std::size_t count, const SplittingCoeffs& c,
                    double* u_out, double* v_out) {
  for (std::size_t j = 0; j < count; ++j) splitting_lane<ScalarLane>(u, v, j, c, u_out, v_out);
}

}  // namespace relaxsolve::kernels::scalar
