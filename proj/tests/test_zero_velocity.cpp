#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaitkit/filters.hpp"
#include "gaitkit/synth.hpp"
#include "gaitkit/zero_velocity.hpp"

using namespace gaitkit;

namespace {

FootStream constant_pressure_stream(std::size_t n, double level) {
    FootStream fs;
    fs.side = Side::Left;
    fs.frames.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        fs.frames[i].t_ms = static_cast<double>(i) * 1000.0 / 66.0;
        fs.frames[i].pressure.fill(level);
        fs.frames[i].accel_g = {0, 0, 1};
    }
    return fs;
}

std::vector<double> filtered_gyro_x(const FootStream& foot, const Config& cfg) {
    const FirFilter lpf = design_lowpass(cfg.lpf_cutoff_hz, foot.sample_rate_hz, cfg.lpf_taps);
    return apply_fir(lpf, foot.gyro_axis(0));
}

}  // namespace

TEST_CASE("pressure_sums: constants pass through the whole chain") {
    const Config cfg;
    const FootStream fs = constant_pressure_stream(40, 0.3);
    const PressureSums sums = pressure_sums(fs, cfg);
    REQUIRE(sums.forefoot.size() == 40);
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(sums.forefoot[i] == doctest::Approx(0.3).epsilon(1e-9));
        CHECK(sums.hindfoot[i] == doctest::Approx(0.3).epsilon(1e-9));
        CHECK(sums.total[i] == doctest::Approx(0.6).epsilon(1e-9));
    }
}

TEST_CASE("pressure_sums: channel averaging per the insole layout") {
    const Config cfg;
    FootStream fs = constant_pressure_stream(40, 0.0);
    for (SensorFrame& f : fs.frames) {
        f.pressure[1] = 0.1;  // channel 2
        f.pressure[2] = 0.2;  // channel 3
        f.pressure[3] = 0.3;  // channel 4
    }
    const PressureSums sums = pressure_sums(fs, cfg);
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(sums.forefoot[i] == doctest::Approx(0.2).epsilon(1e-9));
        CHECK(sums.hindfoot[i] == doctest::Approx(0.0));
    }
}

TEST_CASE("pressure_sums: empty stream") {
    const Config cfg;
    FootStream fs;
    CHECK_THROWS_WITH_AS(pressure_sums(fs, cfg), doctest::Contains("EmptyStream"), GaitError);
}

TEST_CASE("diff_variance: hand-computed values") {
    const std::vector<double> constant(20, 3.5);
    CHECK(diff_variance(constant, 0, 10) == 0.0);

    // Diffs of [0,1,0,1] are [1,-1,1]; population variance 8/9.
    const std::vector<double> alt{0, 1, 0, 1};
    CHECK(diff_variance(alt, 0, 4) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));

    std::vector<double> ramp(20);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 2.5 * static_cast<double>(i);
    CHECK(diff_variance(ramp, 3, 10) == doctest::Approx(0.0));

    CHECK_THROWS_WITH_AS(diff_variance(alt, 2, 4), doctest::Contains("WindowOutOfBounds"),
                         GaitError);
    CHECK(diff_variance(alt, 0, 4) >= 0.0);
}

TEST_CASE("detect_zero_velocity: trapezoid with silent gyro and forced heel-off gate") {
    // One steep trapezoid; gyro identically zero, so the toe-on gate passes
    // at the first rising-edge index and a zero heel-off gate fires at the
    // start of the falling edge.
    const std::size_t n = 132;
    PressureSums sums;
    sums.total.assign(n, 0.0);
    for (std::size_t i = 0; i < 3; ++i) sums.total[40 + i] = (i + 1) / 3.0;
    for (std::size_t i = 43; i < 90; ++i) sums.total[i] = 1.0;
    for (std::size_t i = 0; i < 3; ++i) sums.total[90 + i] = 1.0 - (i + 1) / 3.0;
    sums.forefoot = sums.total;
    sums.hindfoot = sums.total;
    const std::vector<double> gyro(n, 0.0);

    VarianceGateConfig gate{10, 0.0, 0.5};
    DiagnosticList diags;
    const auto zvs = detect_zero_velocity(sums, gyro, gate, 0.2, Side::Left, &diags);
    REQUIRE(zvs.size() == 1);
    // Expected from the contract: start = first index with P > 0.2*p95,
    // end = first falling-edge index (variance 0 >= 0 fires immediately).
    CHECK(zvs[0].start_idx == 40);  // 1/3 > 0.2
    CHECK(zvs[0].end_idx == 89);    // last index at the plateau maximum
}

TEST_CASE("detect_zero_velocity: never-loaded foot yields nothing") {
    PressureSums sums;
    sums.total.assign(100, 0.0);
    sums.forefoot = sums.total;
    sums.hindfoot = sums.total;
    const std::vector<double> gyro(100, 0.0);
    DiagnosticList diags;
    const auto zvs =
        detect_zero_velocity(sums, gyro, VarianceGateConfig{}, 0.2, Side::Left, &diags);
    CHECK(zvs.empty());
}

TEST_CASE("detect_zero_velocity: length mismatch") {
    PressureSums sums;
    sums.total.assign(50, 0.0);
    const std::vector<double> gyro(40, 0.0);
    CHECK_THROWS_WITH_AS(
        detect_zero_velocity(sums, gyro, VarianceGateConfig{}, 0.2, Side::Left, nullptr),
        doctest::Contains("LengthMismatch"), GaitError);
}

TEST_CASE("detect_zero_velocity: oracle closure on the default profile") {
    GaitProfile p = normal_profile();
    p.seed = 17;
    const auto [session, truth] = generate(p, 60.0);
    const Config cfg;
    int hit = 0, total = 0;
    for (Side side : {Side::Left, Side::Right}) {
        const FootStream& foot = session.foot(side);
        const PressureSums sums = pressure_sums(foot, cfg);
        const std::vector<double> gx = filtered_gyro_x(foot, cfg);
        DiagnosticList diags;
        const auto zvs = detect_zero_velocity(
            sums, gx,
            VarianceGateConfig{cfg.zv_window_samples, cfg.zv_variance_threshold1,
                               cfg.zv_variance_threshold2},
            cfg.stance_rel_threshold, side, &diags);

        const auto& tzv = truth.foot(side).zv;
        for (const ZeroVelocityInterval& t : tzv) {
            ++total;
            for (const ZeroVelocityInterval& d : zvs) {
                if (std::abs(static_cast<long>(d.start_idx) - static_cast<long>(t.start_idx)) <= 2 &&
                    std::abs(static_cast<long>(d.end_idx) - static_cast<long>(t.end_idx)) <= 2) {
                    ++hit;
                    break;
                }
            }
        }

        // Structural invariants: sorted, disjoint, above the stance level,
        // quiet middle third, loaded at least as much as the session mean.
        double record_mean = 0.0;
        for (double v : sums.total) record_mean += v;
        record_mean /= static_cast<double>(sums.total.size());
        for (std::size_t i = 0; i < zvs.size(); ++i) {
            CHECK(zvs[i].start_idx < zvs[i].end_idx);
            if (i > 0) CHECK(zvs[i - 1].end_idx < zvs[i].start_idx);
            const std::size_t len = zvs[i].end_idx - zvs[i].start_idx;
            const std::size_t third = len / 3;
            if (len >= cfg.zv_window_samples + 2 * third) {
                const double mid_var =
                    diff_variance(gx, zvs[i].start_idx + third, len - 2 * third);
                CHECK(mid_var < cfg.zv_variance_threshold2);
            }
            double interval_mean = 0.0;
            for (std::size_t k = zvs[i].start_idx; k <= zvs[i].end_idx; ++k)
                interval_mean += sums.total[k];
            interval_mean /= static_cast<double>(len + 1);
            CHECK(interval_mean >= record_mean);
        }
    }
    CHECK(static_cast<double>(hit) >= 0.95 * static_cast<double>(total));
}

TEST_CASE("detect_zero_velocity: pressure-amplitude scale invariance") {
    GaitProfile p = normal_profile();
    p.seed = 23;
    const auto [session, truth] = generate(p, 20.0);
    const Config cfg;
    const FootStream& foot = session.left;
    const std::vector<double> gx = filtered_gyro_x(foot, cfg);
    const VarianceGateConfig gate{cfg.zv_window_samples, cfg.zv_variance_threshold1,
                                  cfg.zv_variance_threshold2};

    const PressureSums base = pressure_sums(foot, cfg);
    const auto zv_base = detect_zero_velocity(base, gx, gate, 0.2, Side::Left, nullptr);

    for (double c : {0.5, 3.7}) {
        PressureSums scaled = base;
        for (double& v : scaled.forefoot) v *= c;
        for (double& v : scaled.hindfoot) v *= c;
        for (double& v : scaled.total) v *= c;
        const auto zv_scaled = detect_zero_velocity(scaled, gx, gate, 0.2, Side::Left, nullptr);
        REQUIRE(zv_scaled.size() == zv_base.size());
        for (std::size_t i = 0; i < zv_base.size(); ++i) {
            CHECK(zv_scaled[i].start_idx == zv_base[i].start_idx);
            CHECK(zv_scaled[i].end_idx == zv_base[i].end_idx);
        }
    }
}
