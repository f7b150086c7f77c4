#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaitkit/filters.hpp"
#include "gaitkit/spatial.hpp"
#include "gaitkit/synth.hpp"

using namespace gaitkit;

namespace {

std::vector<double> grid_ms(std::size_t n, double fs = 66.0) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) * 1000.0 / fs;
    return t;
}

struct FootSignals {
    std::vector<Vec3> gyro, accel;
    std::vector<double> t_ms;
    std::vector<ZeroVelocityInterval> zvs;
};

FootSignals filtered_foot(const FootStream& foot, const std::vector<ZeroVelocityInterval>& zvs,
                          const Config& cfg) {
    const FirFilter lpf = design_lowpass(cfg.lpf_cutoff_hz, foot.sample_rate_hz, cfg.lpf_taps);
    FootSignals s;
    std::vector<std::vector<double>> g(3), a(3);
    for (std::size_t ax = 0; ax < 3; ++ax) {
        g[ax] = apply_fir(lpf, foot.gyro_axis(ax));
        a[ax] = apply_fir(lpf, foot.accel_axis(ax));
    }
    s.gyro.resize(foot.size());
    s.accel.resize(foot.size());
    for (std::size_t i = 0; i < foot.size(); ++i) {
        s.gyro[i] = {g[0][i], g[1][i], g[2][i]};
        s.accel[i] = {a[0][i], a[1][i], a[2][i]};
    }
    s.t_ms = foot.times_ms();
    s.zvs = zvs;
    return s;
}

}  // namespace

TEST_CASE("estimate_orientation: identity for a level stationary foot") {
    const std::size_t n = 100;
    std::vector<Vec3> gyro(n, Vec3{0, 0, 0});
    std::vector<Vec3> accel(n, Vec3{0, 0, 1});
    const auto t = grid_ms(n);
    const std::vector<ZeroVelocityInterval> zvs{{10, 30, Side::Left}};
    const auto q = estimate_orientation(gyro, accel, t, zvs);
    for (const Quat& qi : q) {
        const Vec3 up = qi.rotate({0, 0, 1});
        CHECK(up.z == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("estimate_orientation: 90 deg/s about x for one second is a quarter roll") {
    const double fs = 66.0;
    const std::size_t flat = 20;
    const std::size_t spin = static_cast<std::size_t>(fs) + 1;  // one full second of motion
    const std::size_t n = flat + spin;
    std::vector<Vec3> gyro(n, Vec3{0, 0, 0});
    std::vector<Vec3> accel(n, Vec3{0, 0, 1});
    for (std::size_t i = flat; i < n; ++i) gyro[i] = {90.0, 0, 0};
    // Time grid with the rotation spanning exactly one second.
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) * 1000.0 / fs;
    const std::vector<ZeroVelocityInterval> zvs{{0, flat - 1, Side::Left}};
    const auto q = estimate_orientation(gyro, accel, t, zvs);

    // The step integrator sees the ramp sample at the boundary; compare the
    // rotation accumulated between the first and last motion samples.
    const Quat rel = q[n - 1] * q[flat].conjugate();
    const Vec3 y_world = rel.rotate({0, 1, 0});
    const double angle = std::atan2(y_world.z, y_world.y) * 180.0 / M_PI;
    CHECK(angle == doctest::Approx(90.0).epsilon(0.02));
}

TEST_CASE("estimate_orientation: gravity residual small inside every flat phase") {
    GaitProfile p = normal_profile();
    p.seed = 41;
    const auto [session, truth] = generate(p, 30.0);
    const Config cfg;
    const FootSignals s = filtered_foot(session.left, truth.left.zv, cfg);
    const auto q = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs);
    // Stay clear of the low-pass transient that smears swing acceleration
    // into the first/last half-support of each flat phase.
    const std::size_t margin = (cfg.lpf_taps - 1) / 2;
    for (const ZeroVelocityInterval& zv : s.zvs) {
        if (zv.end_idx - zv.start_idx < 2 * margin + 3) continue;
        for (std::size_t k = zv.start_idx + margin; k + margin <= zv.end_idx; ++k) {
            const Vec3 up = q[k].rotate(s.accel[k]);
            CHECK(std::abs(up.x) < 0.05);
            CHECK(std::abs(up.y) < 0.05);
            CHECK(std::abs(up.z - 1.0) < 0.05);
        }
    }
}

TEST_CASE("estimate_orientation: no anchors") {
    std::vector<Vec3> v(10);
    CHECK_THROWS_WITH_AS(estimate_orientation(v, v, grid_ms(10), {}),
                         doctest::Contains("NoAnchors"), GaitError);
}

TEST_CASE("zvu_integrate: stationary foot gives zero length and velocity") {
    const std::size_t n = 200;
    std::vector<Vec3> accel(n, Vec3{0, 0, 1});
    std::vector<Quat> q(n);
    const auto t = grid_ms(n);
    const std::vector<ZeroVelocityInterval> zvs{{10, 40, Side::Left}, {150, 190, Side::Left}};
    const Config cfg;
    const auto strides = zvu_integrate(accel, q, t, zvs, cfg, Side::Left);
    REQUIRE(strides.size() == 1);
    CHECK(strides[0].stride_length_cm == doctest::Approx(0.0).epsilon(1e-9));
    for (const Vec3& v : strides[0].velocity_mps) CHECK(v.norm() < 1e-9);
}

TEST_CASE("zvu_integrate: insufficient anchors") {
    std::vector<Vec3> accel(50, Vec3{0, 0, 1});
    std::vector<Quat> q(50);
    CHECK_THROWS_WITH_AS(
        zvu_integrate(accel, q, grid_ms(50), {{5, 15, Side::Left}}, Config{}, Side::Left),
        doctest::Contains("InsufficientAnchors"), GaitError);
}

TEST_CASE("zvu_integrate: closed-form 80 cm strides recovered within 2 cm") {
    GaitProfile p = normal_profile();
    p.stride_length_cm = 80.0;
    p.seed = 51;
    const auto [session, truth] = generate(p, 30.0);
    const Config cfg;
    const FootSignals s = filtered_foot(session.left, truth.left.zv, cfg);
    const auto q = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs);
    const auto strides = zvu_integrate(s.accel, q, s.t_ms, s.zvs, cfg, Side::Left);
    REQUIRE(!strides.empty());
    for (const StrideTrajectory& st : strides) {
        CHECK(st.stride_length_cm == doctest::Approx(80.0).epsilon(0.025));
        // Anchor velocities vanish after the update.
        CHECK(strides[0].velocity_mps.front().norm() < cfg.zvu_residual_tol_mps);
        CHECK(strides[0].velocity_mps.back().norm() < cfg.zvu_residual_tol_mps);
    }
}

TEST_CASE("zvu_integrate: constant bias, corrected error a tenth of the naive one") {
    GaitProfile p = normal_profile();
    p.seed = 52;
    const double bias = 0.02;
    p.accel_bias_g = {0.0, bias, 0.0};
    const auto [session, truth] = generate(p, 30.0);
    const Config cfg;
    const FootSignals s = filtered_foot(session.left, truth.left.zv, cfg);

    // Corrected path: gravity-aligned anchors + drift removal.
    const auto q_full = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs);
    const auto corrected = zvu_integrate(s.accel, q_full, s.t_ms, s.zvs, cfg, Side::Left);

    // Naive baseline: assumed-level start, gyro-only attitude, no updates.
    const auto q_naive = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs,
                                              {.tilt_from_accel = false,
                                               .realign_at_anchors = false});
    const auto uncorrected = zvu_integrate(s.accel, q_naive, s.t_ms, s.zvs, cfg, Side::Left,
                                           {.drift_correction = false});

    REQUIRE(corrected.size() == uncorrected.size());
    const double g0 = cfg.gravity_mps2;
    for (std::size_t i = 0; i < corrected.size(); ++i) {
        const double truth_cm = truth.left.stride_length_cm[i];
        const double err_corr = std::abs(corrected[i].stride_length_cm - truth_cm);
        const double err_raw = std::abs(uncorrected[i].stride_length_cm - truth_cm);
        const double duration = corrected[i].end_t_s - corrected[i].start_t_s;
        const double closed_form_cm = 0.5 * bias * g0 * duration * duration * 100.0;
        CHECK(err_raw > 0.6 * closed_form_cm);
        CHECK(err_raw < 1.3 * closed_form_cm);
        CHECK(err_corr <= err_raw / 10.0);
    }
}

TEST_CASE("session_velocity: unit identities") {
    std::vector<StrideTrajectory> strides(1);
    strides[0].stride_length_cm = 100.0;
    CHECK(session_velocity(strides, 3.6) == doctest::Approx(1.0));
    strides[0].stride_length_cm = 0.0;
    CHECK(session_velocity(strides, 3.6) == 0.0);
    CHECK_THROWS_WITH_AS(session_velocity(strides, 0.0), doctest::Contains("ZeroDuration"),
                         GaitError);
}

TEST_CASE("a 1.2 m/s walk reads 4.32 km/h within 5 percent") {
    GaitProfile p = normal_profile();
    p.stride_length_cm = 132.0;  // 1.32 m per 1.1 s stride = 1.2 m/s
    p.seed = 53;
    const auto [session, truth] = generate(p, 40.0);
    CHECK(truth.velocity_kmh == doctest::Approx(4.32).epsilon(0.05));
}

TEST_CASE("heading invariance: yawing the walk does not change stride lengths") {
    auto lengths_for = [](double heading) {
        GaitProfile p = normal_profile();
        p.seed = 54;
        p.heading_deg = heading;
        const auto [session, truth] = generate(p, 20.0);
        const Config cfg;
        const FootSignals s = filtered_foot(session.left, truth.left.zv, cfg);
        const auto q = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs);
        std::vector<double> lens;
        for (const auto& st : zvu_integrate(s.accel, q, s.t_ms, s.zvs, cfg, Side::Left))
            lens.push_back(st.stride_length_cm);
        return lens;
    };
    const auto base = lengths_for(0.0);
    const auto yawed = lengths_for(73.0);
    REQUIRE(base.size() == yawed.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(std::abs(yawed[i] - base[i]) / base[i] < 1e-6);
}

TEST_CASE("doubling the sample rate moves stride length less than 1 percent") {
    auto mean_len = [](double fs) {
        GaitProfile p = normal_profile();
        p.seed = 55;
        const auto [session, truth] = generate(p, 20.0, fs);
        const Config cfg;
        const FootSignals s = filtered_foot(session.left, truth.left.zv, cfg);
        const auto q = estimate_orientation(s.gyro, s.accel, s.t_ms, s.zvs);
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& st : zvu_integrate(s.accel, q, s.t_ms, s.zvs, cfg, Side::Left)) {
            sum += st.stride_length_cm;
            ++count;
        }
        return sum / static_cast<double>(count);
    };
    const double at66 = mean_len(66.0);
    const double at132 = mean_len(132.0);
    CHECK(std::abs(at132 - at66) / at66 < 0.01);
}
