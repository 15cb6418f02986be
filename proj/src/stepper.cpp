#include <cmath>
#include <vector>

#include "relaxsolve/jin_xin.hpp"
#include "relaxsolve/kernels/jinxin_kernels.hpp"
#include "relaxsolve/schemes.hpp"

namespace relaxsolve {

namespace {

struct SoaField {
  std::vector<double> u;
  std::vector<double> v;
};

// Ghost-extended (width 1) structure-of-arrays copy of a Jin-Xin field.
SoaField to_soa_extended(std::span<const StateVector> cells) {
  SoaField f;
  f.u.reserve(cells.size() + 2);
  f.v.reserve(cells.size() + 2);
  f.u.push_back(cells.front()[0]);
  f.v.push_back(cells.front()[1]);
  for (const auto& w : cells) {
    f.u.push_back(w[0]);
    f.v.push_back(w[1]);
  }
  f.u.push_back(cells.back()[0]);
  f.v.push_back(cells.back()[1]);
  return f;
}

std::vector<StateVector> to_aos(const SoaField& f) {
  std::vector<StateVector> out(f.u.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = StateVector{f.u[j], f.v[j]};
  return out;
}

const JinXinModel* vectorisable(const Model& model, KernelPolicy policy) {
  if (policy != KernelPolicy::automatic) return nullptr;
  const auto* jx = dynamic_cast<const JinXinModel*>(&model);
  if (jx == nullptr || jx->g().kind() != ScalarFlux::Kind::burgers) return nullptr;
  return jx;
}

FieldState advance_jinxin(SchemeKind kind, const FieldState& field, double dt, double eps,
                          const JinXinModel& model, const ArsSpeeds& speeds,
                          std::vector<StateVector>* interfaces) {
  const auto level = kernels::detected_simd_level();
  const std::size_t n = field.cells.size();
  const double dx = field.grid.dx();
  const double lambda2 = model.lambda() * model.lambda();
  const SoaField ext = to_soa_extended(field.cells);
  SoaField out{std::vector<double>(n), std::vector<double>(n)};

  switch (kind) {
    case SchemeKind::staggered: {
      const double dt_half = 0.5 * dt;
      const kernels::StaggeredCoeffs c{dt_half / dx, -decay_minus_one(dt_half / eps),
                                       1.0 / (1.0 + dt_half / eps), lambda2};
      SoaField half{std::vector<double>(n + 1), std::vector<double>(n + 1)};
      kernels::staggered_half_step(level, ext.u, ext.v, c, half.u, half.v);
      kernels::staggered_half_step(level, half.u, half.v, c, out.u, out.v);
      if (interfaces) *interfaces = to_aos(half);
      break;
    }
    case SchemeKind::ars: {
      const double jump = speeds.right - speeds.left;
      const double em1 = decay_minus_one(dt / eps);
      const kernels::ArsCoeffs c{dt / dx,
                                 speeds.left,
                                 speeds.right,
                                 1.0 / jump,
                                 speeds.right * speeds.left / jump,
                                 1.0 + em1,
                                 em1,
                                 decay_minus_one_over(dt / eps),
                                 lambda2};
      kernels::ars_step(level, ext.u, ext.v, c, out.u, out.v);
      break;
    }
    case SchemeKind::splitting: {
      const kernels::SplittingCoeffs c{dt / dx,
                                       speeds.left,
                                       speeds.right,
                                       1.0 / (speeds.right - speeds.left),
                                       1.0 / (1.0 + dt / eps),
                                       lambda2};
      kernels::splitting_step(level, ext.u, ext.v, c, out.u, out.v);
      break;
    }
  }
  return FieldState{field.grid, to_aos(out), field.time + dt};
}

}  // namespace

FieldState advance(SchemeKind kind, const FieldState& field, double dt, double eps,
                   const Model& model, KernelPolicy policy, std::vector<StateVector>* interfaces) {
  const ArsSpeeds speeds = ArsSpeeds::symmetric(model.max_wave_speed(field.cells));
  if (const JinXinModel* jx = vectorisable(model, policy)) {
    if (kind != SchemeKind::staggered) speeds.validate();
    return advance_jinxin(kind, field, dt, eps, *jx, speeds, interfaces);
  }
  switch (kind) {
    case SchemeKind::staggered: return staggered_step(field, dt, eps, model, interfaces);
    case SchemeKind::ars: return ars_step(field, dt, eps, speeds, model);
    case SchemeKind::splitting: return splitting_step(field, dt, eps, speeds, model);
  }
  throw std::logic_error("advance: unknown scheme");
}

}  // namespace relaxsolve
