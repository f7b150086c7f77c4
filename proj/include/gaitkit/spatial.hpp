#ifndef GAITKIT_SPATIAL_HPP_
#define GAITKIT_SPATIAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gaitkit/config.hpp"
#include "gaitkit/diagnostics.hpp"
#include "gaitkit/geometry.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

struct OrientationOptions {
    // Align the initial tilt with the gravity direction measured while the
    // foot is flat. When false the initial attitude is assumed level
    // (identity), which is the naive strapdown baseline used for comparison.
    bool tilt_from_accel = true;
    // Re-align tilt at every zero-velocity anchor (keeping the propagated
    // heading) instead of trusting gyro propagation alone.
    bool realign_at_anchors = true;
};

struct IntegrationOptions {
    // Remove the residual end-anchor velocity with a linear ramp across the
    // stride (the zero-velocity update). Disabled = raw double integration.
    bool drift_correction = true;
};

// One anchor-to-anchor stride reconstructed in the world frame.
struct StrideTrajectory {
    Side side = Side::Left;
    std::size_t start_idx = 0;  // anchor sample (zero-velocity midpoint)
    std::size_t end_idx = 0;
    double start_t_s = 0.0;
    double end_t_s = 0.0;
    std::vector<Vec3> velocity_mps;   // per sample over [start_idx, end_idx]
    std::vector<Vec3> position_m;
    double stride_length_cm = 0.0;    // horizontal displacement
    double residual_speed_mps = 0.0;  // |v| at the end anchor before correction
};

// Body->world attitude per sample: gyro propagation between zero-velocity
// anchors, tilt re-initialized from the stationary accelerometer at each
// anchor (heading unobservable, kept continuous). Throws NoAnchors.
std::vector<Quat> estimate_orientation(std::span<const Vec3> gyro_dps,
                                       std::span<const Vec3> accel_g,
                                       std::span<const double> t_ms,
                                       const std::vector<ZeroVelocityInterval>& zvs,
                                       const OrientationOptions& opts = {});

// Strapdown double integration per stride: rotate to world frame, subtract
// gravity, trapezoidal integration with per-stride zero-velocity updates.
// Throws InsufficientAnchors with fewer than two intervals.
std::vector<StrideTrajectory> zvu_integrate(std::span<const Vec3> accel_g,
                                            std::span<const Quat> orientation,
                                            std::span<const double> t_ms,
                                            const std::vector<ZeroVelocityInterval>& zvs,
                                            const Config& cfg,
                                            Side side,
                                            const IntegrationOptions& opts = {});

// Walking speed over a known time span: km/h from total centimeters.
// Throws ZeroDuration.
double session_velocity(const std::vector<StrideTrajectory>& strides,
                        double total_time_s);

}  // namespace gaitkit

#endif  // GAITKIT_SPATIAL_HPP_
