#pragma once

#include <cmath>
#include <stdexcept>

#include "pftrack/rng.hpp"

namespace pftrack {

// Full state of one target: planar position and velocity, ordered
// [x, vx, y, vy]. Positions in scene units, velocities in units/step.
struct TargetState {
  double x = 0.0;
  double vx = 0.0;
  double y = 0.0;
  double vy = 0.0;
};

// Acceleration noise acting on one target over one step. This is also the
// coordinate system all transition densities and MCMC moves live in: the
// state-space transition is degenerate as a 4D density (the noise is 2D),
// so densities are evaluated on (vx, vy) and states are reconstructed
// deterministically via propagate().
struct NoiseVector {
  double vx = 0.0;
  double vy = 0.0;
};

struct DynamicsParams {
  double dt = 1.0;        // time between observations
  double sigma_x2 = 1.0;  // variance of vx
  double sigma_y2 = 1.0;  // variance of vy

  bool operator==(const DynamicsParams&) const = default;
};

enum class ObsSpace { kXY, kThetaR };

// One per-target measurement: (x, y) for the linear model, (theta, r) for
// the bearing-range model.
struct Observation {
  double a = 0.0;  // x or bearing
  double b = 0.0;  // y or range
  ObsSpace space = ObsSpace::kXY;
};

enum class ObsKind { kLinear, kBearingRange };

struct ObsModel {
  ObsKind kind = ObsKind::kLinear;
  // Linear model noise variances.
  double sigma2_obs_x = 1.0;
  double sigma2_obs_y = 1.0;
  // Bearing-range model noise variances.
  double sigma2_theta = 1e-4;
  double sigma2_r = 1.0;

  bool operator==(const ObsModel&) const = default;

  static ObsModel linear(double s2x = 1.0, double s2y = 1.0) {
    ObsModel m;
    m.kind = ObsKind::kLinear;
    m.sigma2_obs_x = s2x;
    m.sigma2_obs_y = s2y;
    return m;
  }

  static ObsModel bearing_range(double s2theta = 1e-4, double s2r = 1.0) {
    ObsModel m;
    m.kind = ObsKind::kBearingRange;
    m.sigma2_theta = s2theta;
    m.sigma2_r = s2r;
    return m;
  }
};

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// Near-constant-velocity transition: positions pick up dt * velocity plus
// dt^2/2 * noise, velocities pick up dt * noise.
inline TargetState propagate(const TargetState& s, const NoiseVector& v,
                             const DynamicsParams& p) {
  const double dt = p.dt;
  const double half_dt2 = 0.5 * dt * dt;
  return {s.x + dt * s.vx + half_dt2 * v.vx, s.vx + dt * v.vx,
          s.y + dt * s.vy + half_dt2 * v.vy, s.vy + dt * v.vy};
}

// Noiseless observation map. Bearing uses full-quadrant atan2; a target at
// the exact origin has no bearing and raises a domain error.
inline Observation observe(const TargetState& s, const ObsModel& m) {
  if (m.kind == ObsKind::kLinear) return {s.x, s.y, ObsSpace::kXY};
  if (s.x == 0.0 && s.y == 0.0)
    throw std::domain_error("observe: bearing undefined at the origin");
  return {std::atan2(s.y, s.x), std::hypot(s.x, s.y), ObsSpace::kThetaR};
}

// Log-density of the transition noise, normalizing constant included.
inline double noise_logdensity(const NoiseVector& v, const DynamicsParams& p) {
  return -0.5 * (v.vx * v.vx / p.sigma_x2 + v.vy * v.vy / p.sigma_y2) -
         0.5 * std::log(4.0 * kPi * kPi * p.sigma_x2 * p.sigma_y2);
}

// Log observation likelihood log g(s, z): Gaussian in the residual between
// the noiseless map and z. Bearing residuals are wrapped to (-pi, pi].
inline double obs_logdensity(const TargetState& s, const Observation& z,
                             const ObsModel& m) {
  if (m.kind == ObsKind::kLinear) {
    if (z.space != ObsSpace::kXY)
      throw std::invalid_argument("obs_logdensity: observation space does not match linear model");
    const double rx = z.a - s.x;
    const double ry = z.b - s.y;
    return -0.5 * (rx * rx / m.sigma2_obs_x + ry * ry / m.sigma2_obs_y) -
           0.5 * std::log(4.0 * kPi * kPi * m.sigma2_obs_x * m.sigma2_obs_y);
  }
  if (z.space != ObsSpace::kThetaR)
    throw std::invalid_argument("obs_logdensity: observation space does not match bearing-range model");
  const Observation pred = observe(s, m);  // throws at the origin
  const double rt = wrap_angle(z.a - pred.a);
  const double rr = z.b - pred.b;
  return -0.5 * (rt * rt / m.sigma2_theta + rr * rr / m.sigma2_r) -
         0.5 * std::log(4.0 * kPi * kPi * m.sigma2_theta * m.sigma2_r);
}

}  // namespace pftrack
