#pragma once

// Lane-generic bodies of the Jin-Xin/Burgers kernels. Included by the scalar
// and the AVX2 translation unit only; everything here has internal linkage so
// the two instantiations (compiled with different target flags) never merge.
//
// V provides load(const double*), broadcast(double), store(double*) and
// + - * on V. Keep the operation order identical across edits: the scalar and
// vector kernels are checked for bit-exact agreement.

#include <cstddef>

#include "relaxsolve/kernels/jinxin_kernels.hpp"

namespace relaxsolve::kernels {
namespace {

struct ScalarLane {
  double x;
  static ScalarLane load(const double* p) { return {*p}; }
  static ScalarLane broadcast(double s) { return {s}; }
  void store(double* p) const { *p = x; }
  friend ScalarLane operator+(ScalarLane a, ScalarLane b) { return {a.x + b.x}; }
  friend ScalarLane operator-(ScalarLane a, ScalarLane b) { return {a.x - b.x}; }
  friend ScalarLane operator*(ScalarLane a, ScalarLane b) { return {a.x * b.x}; }
};

template <class V>
inline void staggered_half_lane(const double* u, const double* v, std::size_t i,
                                const StaggeredCoeffs& c, double* u_out, double* v_out) {
  const V half = V::broadcast(0.5);
  const V ratio = V::broadcast(c.ratio);
  const V relaxed = V::broadcast(c.relaxed);
  const V keep = V::broadcast(c.keep);
  const V lambda2 = V::broadcast(c.lambda2);

  const V ul = V::load(u + i);
  const V ur = V::load(u + i + 1);
  const V vl = V::load(v + i);
  const V vr = V::load(v + i + 1);
  // Source-relaxed v; u is unchanged by the source.
  const V vl_relaxed = vl + (half * ul * ul - vl) * relaxed;
  const V vr_relaxed = vr + (half * ur * ur - vr) * relaxed;

  const V u_star = half * (ul + ur) - ratio * (vr_relaxed - vl_relaxed);
  const V q = half * u_star * u_star;
  const V explicit_v = half * (vl + vr) - ratio * (lambda2 * ur - lambda2 * ul);
  const V v_star = q + (explicit_v - q) * keep;
  u_star.store(u_out + i);
  v_star.store(v_out + i);
}

// Cell j of the output reads extended entries j, j+1, j+2.
template <class V>
inline void ars_lane(const double* u, const double* v, std::size_t j, const ArsCoeffs& c,
                     double* u_out, double* v_out) {
  const V half = V::broadcast(0.5);
  const V ratio = V::broadcast(c.ratio);
  const V left = V::broadcast(c.left);
  const V right = V::broadcast(c.right);
  const V inv_jump = V::broadcast(c.inv_jump);
  const V dissipation = V::broadcast(c.dissipation);
  const V decay = V::broadcast(c.decay);
  const V em1 = V::broadcast(c.decay_minus_one);
  const V relaxed_flux_weight = V::broadcast(c.relaxed_flux_weight);
  const V lambda2 = V::broadcast(c.lambda2);
  const V relax = V::broadcast(0.0) - em1;

  const V um = V::load(u + j);
  const V u0 = V::load(u + j + 1);
  const V up = V::load(u + j + 2);
  const V vm = V::load(v + j);
  const V v0 = V::load(v + j + 1);
  const V vp = V::load(v + j + 2);

  const V fm = vm + (half * um * um - vm) * relax;
  const V f0 = v0 + (half * u0 * u0 - v0) * relax;
  const V fp = vp + (half * up * up - vp) * relax;

  const V flux1_right = dissipation * (up - u0) - (left * fp - right * f0) * inv_jump;
  const V flux1_left = dissipation * (u0 - um) - (left * f0 - right * fm) * inv_jump;
  const V u_new = u0 - ratio * (flux1_right - flux1_left);

  const V gm = lambda2 * um;
  const V g0 = lambda2 * u0;
  const V gp = lambda2 * up;
  const V flux2_right = decay * dissipation * (vp - v0) +
                        relaxed_flux_weight * inv_jump * (left * gp - right * g0);
  const V flux2_left = decay * dissipation * (v0 - vm) +
                       relaxed_flux_weight * inv_jump * (left * g0 - right * gm);
  const V q = half * u_new * u_new;
  const V v_new = v0 - ratio * (flux2_right - flux2_left) - em1 * (q - v0);
  u_new.store(u_out + j);
  v_new.store(v_out + j);
}

template <class V>
inline void splitting_lane(const double* u, const double* v, std::size_t j,
                           const SplittingCoeffs& c, double* u_out, double* v_out) {
  const V half = V::broadcast(0.5);
  const V ratio = V::broadcast(c.ratio);
  const V left = V::broadcast(c.left);
  const V right = V::broadcast(c.right);
  const V inv_jump = V::broadcast(c.inv_jump);
  const V keep = V::broadcast(c.keep);
  const V lambda2 = V::broadcast(c.lambda2);
  const V product = V::broadcast(c.left * c.right);

  const V um = V::load(u + j);
  const V u0 = V::load(u + j + 1);
  const V up = V::load(u + j + 2);
  const V vm = V::load(v + j);
  const V v0 = V::load(v + j + 1);
  const V vp = V::load(v + j + 2);

  const V fu_right = (right * v0 - left * vp + product * (up - u0)) * inv_jump;
  const V fu_left = (right * vm - left * v0 + product * (u0 - um)) * inv_jump;
  const V fv_right = (right * (lambda2 * u0) - left * (lambda2 * up) + product * (vp - v0)) * inv_jump;
  const V fv_left = (right * (lambda2 * um) - left * (lambda2 * u0) + product * (v0 - vm)) * inv_jump;

  const V u_new = u0 - ratio * (fu_right - fu_left);
  const V v_conv = v0 - ratio * (fv_right - fv_left);
  const V q = half * u_new * u_new;
  const V v_new = q + (v_conv - q) * keep;
  u_new.store(u_out + j);
  v_new.store(v_out + j);
}

}  // namespace
}  // namespace relaxsolve::kernels
