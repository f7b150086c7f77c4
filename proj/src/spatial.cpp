#include "gaitkit/spatial.hpp"

#include <algorithm>
#include <cmath>

namespace gaitkit {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

Vec3 mean_accel_over(std::span<const Vec3> accel_g, const ZeroVelocityInterval& zv) {
    Vec3 sum{};
    std::size_t count = 0;
    for (std::size_t k = zv.start_idx; k <= zv.end_idx && k < accel_g.size(); ++k) {
        sum += accel_g[k];
        ++count;
    }
    return count > 0 ? sum * (1.0 / static_cast<double>(count)) : Vec3{0, 0, 1};
}

// Tilt part of an attitude replaced by the measured gravity direction; the
// heading (twist about world z) is preserved.
Quat retilt(const Quat& current, const Vec3& gravity_body) {
    const double yaw = current.yaw_rad();
    const Quat q_yaw = Quat::from_axis_angle({0, 0, 1}, yaw);
    const Quat q_tilt = Quat::from_two_vectors(gravity_body.normalized(), {0, 0, 1});
    return (q_yaw * q_tilt).normalized();
}

Quat gyro_step(const Quat& q, const Vec3& w0_dps, const Vec3& w1_dps, double dt_s) {
    const Vec3 w_mid = (w0_dps + w1_dps) * (0.5 * kDegToRad * dt_s);
    return (q * Quat::from_rotation_vector(w_mid)).normalized();
}

}  // namespace

std::vector<Quat> estimate_orientation(std::span<const Vec3> gyro_dps,
                                       std::span<const Vec3> accel_g,
                                       std::span<const double> t_ms,
                                       const std::vector<ZeroVelocityInterval>& zvs,
                                       const OrientationOptions& opts) {
    if (zvs.empty()) throw GaitError("NoAnchors", "orientation needs a zero-velocity anchor");
    const std::size_t n = gyro_dps.size();
    if (accel_g.size() != n || t_ms.size() != n)
        throw GaitError("LengthMismatch", "gyro/accel/time sequences differ in length");

    std::vector<Quat> q(n);
    std::vector<std::size_t> anchors(zvs.size());
    for (std::size_t i = 0; i < zvs.size(); ++i) anchors[i] = zvs[i].mid_idx();

    auto dt = [&](std::size_t k) { return (t_ms[k + 1] - t_ms[k]) / 1000.0; };

    // First anchor: gravity-aligned tilt (or assumed level), heading zero.
    q[anchors[0]] = opts.tilt_from_accel
                        ? retilt(Quat::identity(), mean_accel_over(accel_g, zvs[0]))
                        : Quat::identity();

    // Backward fill before the first anchor.
    for (std::size_t k = anchors[0]; k > 0; --k) {
        const Vec3 w = (gyro_dps[k - 1] + gyro_dps[k]) * (-0.5 * kDegToRad * dt(k - 1));
        q[k - 1] = (q[k] * Quat::from_rotation_vector(w)).normalized();
    }
    // Forward through all anchor segments.
    for (std::size_t a = 0; a < anchors.size(); ++a) {
        const std::size_t seg_end = a + 1 < anchors.size() ? anchors[a + 1] : n - 1;
        for (std::size_t k = anchors[a]; k < seg_end; ++k)
            q[k + 1] = gyro_step(q[k], gyro_dps[k], gyro_dps[k + 1], dt(k));
        if (a + 1 < anchors.size() && opts.realign_at_anchors) {
            q[anchors[a + 1]] =
                retilt(q[anchors[a + 1]], mean_accel_over(accel_g, zvs[a + 1]));
        }
    }
    return q;
}

std::vector<StrideTrajectory> zvu_integrate(std::span<const Vec3> accel_g,
                                            std::span<const Quat> orientation,
                                            std::span<const double> t_ms,
                                            const std::vector<ZeroVelocityInterval>& zvs,
                                            const Config& cfg,
                                            Side side,
                                            const IntegrationOptions& opts) {
    if (zvs.size() < 2)
        throw GaitError("InsufficientAnchors",
                        "stride integration needs two zero-velocity intervals, got " +
                            std::to_string(zvs.size()));
    const std::size_t n = accel_g.size();
    if (orientation.size() != n || t_ms.size() != n)
        throw GaitError("LengthMismatch", "accel/orientation/time sequences differ in length");

    const double g0 = cfg.gravity_mps2;
    // World-frame linear acceleration, gravity removed.
    std::vector<Vec3> lin(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
        const auto i = static_cast<std::size_t>(k);
        Vec3 world = orientation[i].rotate(accel_g[i] * g0);
        world.z -= g0;
        lin[i] = world;
    }

    std::vector<StrideTrajectory> strides(zvs.size() - 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(strides.size()); ++s) {
        const auto si = static_cast<std::size_t>(s);
        const std::size_t a0 = zvs[si].mid_idx();
        const std::size_t a1 = zvs[si + 1].mid_idx();
        StrideTrajectory& st = strides[si];
        st.side = side;
        st.start_idx = a0;
        st.end_idx = a1;
        st.start_t_s = t_ms[a0] / 1000.0;
        st.end_t_s = t_ms[a1] / 1000.0;

        const std::size_t len = a1 - a0 + 1;
        st.velocity_mps.assign(len, Vec3{});
        st.position_m.assign(len, Vec3{});
        for (std::size_t k = 1; k < len; ++k) {
            const double dt = (t_ms[a0 + k] - t_ms[a0 + k - 1]) / 1000.0;
            st.velocity_mps[k] =
                st.velocity_mps[k - 1] + (lin[a0 + k - 1] + lin[a0 + k]) * (0.5 * dt);
        }
        st.residual_speed_mps = st.velocity_mps.back().norm();
        if (opts.drift_correction && len > 1) {
            // Zero-velocity update: the end anchor is stationary, so the
            // residual is drift; remove it with a linear ramp.
            const Vec3 residual = st.velocity_mps.back();
            const double t0 = t_ms[a0], t1 = t_ms[a1];
            for (std::size_t k = 0; k < len; ++k) {
                const double w = (t_ms[a0 + k] - t0) / (t1 - t0);
                st.velocity_mps[k] = st.velocity_mps[k] - residual * w;
            }
        }
        for (std::size_t k = 1; k < len; ++k) {
            const double dt = (t_ms[a0 + k] - t_ms[a0 + k - 1]) / 1000.0;
            st.position_m[k] =
                st.position_m[k - 1] + (st.velocity_mps[k - 1] + st.velocity_mps[k]) * (0.5 * dt);
        }
        st.stride_length_cm = (st.position_m.back() - st.position_m.front()).horizontal_norm() * 100.0;
    }
    return strides;
}

double session_velocity(const std::vector<StrideTrajectory>& strides, double total_time_s) {
    if (!(total_time_s > 0.0))
        throw GaitError("ZeroDuration", "velocity needs a positive time span");
    double total_cm = 0.0;
    for (const StrideTrajectory& s : strides) total_cm += s.stride_length_cm;
    return 3.6 / 100.0 * total_cm / total_time_s;
}

}  // namespace gaitkit
