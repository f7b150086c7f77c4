#include "gaitkit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gaitkit/csv_log.hpp"
#include "gaitkit/event_detect.hpp"
#include "gaitkit/filters.hpp"
#include "gaitkit/spatial.hpp"
#include "gaitkit/temporal.hpp"
#include "gaitkit/zero_velocity.hpp"

namespace gaitkit {

namespace {

struct FootAnalysis {
    PressureSums sums;
    std::vector<double> t_ms;
    std::vector<ZeroVelocityInterval> zvs;
    std::vector<GaitEvent> events;
    std::vector<GaitCycle> cycles;
    std::vector<StrideTrajectory> strides;
    DiagnosticList diagnostics;
};

std::vector<Vec3> axis_triplet(const FootStream& foot, bool gyro, const Config& cfg) {
    // 20 Hz low-pass per axis before any inertial consumer.
    const FirFilter lpf = design_lowpass(cfg.lpf_cutoff_hz, foot.sample_rate_hz, cfg.lpf_taps);
    std::vector<std::vector<double>> axes(3);
    for (std::size_t a = 0; a < 3; ++a)
        axes[a] = apply_fir(lpf, gyro ? foot.gyro_axis(a) : foot.accel_axis(a));
    std::vector<Vec3> out(foot.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = {axes[0][i], axes[1][i], axes[2][i]};
    return out;
}

FootAnalysis analyze_foot(const FootStream& foot, const Config& cfg) {
    FootAnalysis fa;
    fa.t_ms = foot.times_ms();
    fa.sums = pressure_sums(foot, cfg);

    const std::vector<Vec3> gyro = axis_triplet(foot, /*gyro=*/true, cfg);
    std::vector<double> gyro_x(gyro.size());
    for (std::size_t i = 0; i < gyro.size(); ++i) gyro_x[i] = gyro[i].x;

    VarianceGateConfig gate{cfg.zv_window_samples, cfg.zv_variance_threshold1,
                            cfg.zv_variance_threshold2};
    fa.zvs = detect_zero_velocity(fa.sums, gyro_x, gate, cfg.stance_rel_threshold,
                                  foot.side, &fa.diagnostics);

    // Heel-strike / toe-off voting per interval; intervals are independent.
    // The three-score vote locks onto the point where the smoothed curve
    // departs its flat level, which leads the raw loading onset by half the
    // smoothing-kernel support; shift the winner back by that known amount.
    const std::size_t smear = (cfg.gauss_taps - 1) / 2;
    std::vector<std::optional<GaitEvent>> strikes(fa.zvs.size()), toeoffs(fa.zvs.size());
    std::vector<DiagnosticList> slot_diags(fa.zvs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fa.zvs.size()); ++i) {
        const auto s = static_cast<std::size_t>(i);
        try {
            GaitEvent hs = detect_heel_strike(fa.sums, fa.zvs[s], fa.t_ms, cfg, &slot_diags[s]);
            hs.idx = std::min(hs.idx + smear, fa.zvs[s].start_idx);
            hs.t_ms = fa.t_ms[hs.idx];
            strikes[s] = hs;
        } catch (const GaitError& e) {
            slot_diags[s].push_back({e.code(), e.what(), fa.zvs[s].start_idx});
        }
        try {
            GaitEvent to = detect_toe_off(fa.sums, fa.zvs[s], fa.t_ms, cfg, &slot_diags[s]);
            to.idx = std::max(to.idx >= smear ? to.idx - smear : 0, fa.zvs[s].end_idx);
            to.t_ms = fa.t_ms[to.idx];
            toeoffs[s] = to;
        } catch (const GaitError& e) {
            slot_diags[s].push_back({e.code(), e.what(), fa.zvs[s].end_idx});
        }
    }
    for (DiagnosticList& d : slot_diags)
        fa.diagnostics.insert(fa.diagnostics.end(), d.begin(), d.end());

    fa.events = assemble_events(fa.zvs, strikes, toeoffs, fa.t_ms, foot.side,
                                &fa.diagnostics);
    fa.cycles = segment_cycles(fa.events, &fa.diagnostics);

    // Spatial path: strapdown double integration between anchors.
    if (fa.zvs.size() >= 2) {
        const std::vector<Vec3> accel = axis_triplet(foot, /*gyro=*/false, cfg);
        const std::vector<Quat> orient = estimate_orientation(gyro, accel, fa.t_ms, fa.zvs);
        fa.strides = zvu_integrate(accel, orient, fa.t_ms, fa.zvs, cfg, foot.side);
        for (const StrideTrajectory& st : fa.strides)
            if (st.velocity_mps.front().norm() > cfg.zvu_residual_tol_mps ||
                (st.velocity_mps.back().norm() > cfg.zvu_residual_tol_mps))
                fa.diagnostics.push_back({"ResidualVelocity",
                                          "stride anchor speed above " +
                                              std::to_string(cfg.zvu_residual_tol_mps) +
                                              " m/s after correction",
                                          st.start_idx});
    } else {
        fa.diagnostics.push_back({"InsufficientAnchors",
                                  std::string(to_string(foot.side)) +
                                      " foot: fewer than two zero-velocity intervals, "
                                      "spatial parameters skipped",
                                  std::nullopt});
    }
    return fa;
}

std::vector<double> heel_strike_times_s(const std::vector<GaitEvent>& events) {
    std::vector<double> out;
    for (const GaitEvent& e : events)
        if (e.kind == EventKind::HeelStrike) out.push_back(e.t_ms / 1000.0);
    return out;
}

double bilateral_overlap_s(const GaitSession& session) {
    if (session.left.frames.empty() || session.right.frames.empty()) return 0.0;
    const double lo =
        std::max(session.left.frames.front().t_ms, session.right.frames.front().t_ms);
    const double hi =
        std::min(session.left.frames.back().t_ms, session.right.frames.back().t_ms);
    return (hi - lo) / 1000.0;
}

}  // namespace

AnalysisResult analyze_session(const GaitSession& session, const Config& cfg) {
    AnalysisResult result;
    GaitReport& rep = result.report;
    rep.config = cfg;
    rep.meta = session.meta;
    rep.meta["frames_left"] = std::to_string(session.left.size());
    rep.meta["frames_right"] = std::to_string(session.right.size());

    FootAnalysis fa[2];
    const FootStream* feet[2] = {&session.left, &session.right};
    for (std::size_t s = 0; s < 2; ++s) {
        fa[s] = analyze_foot(*feet[s], cfg);
        rep.meta[std::string("sample_rate_hz_") + (s == 0 ? "left" : "right")] =
            std::to_string(feet[s]->sample_rate_hz);
    }

    for (std::size_t s = 0; s < 2; ++s) {
        for (const GaitCycle& c : fa[s].cycles) {
            const auto [stp, swp] = stance_swing(c);
            rep.stance_pct[s].values.push_back(stp);
            rep.swing_pct[s].values.push_back(swp);
        }
        rep.events.insert(rep.events.end(), fa[s].events.begin(), fa[s].events.end());
        for (const StrideTrajectory& st : fa[s].strides) {
            rep.strides.push_back({st.side, st.start_idx, st.end_idx, st.start_t_s,
                                   st.end_t_s, st.stride_length_cm});
            rep.stride_length_cm.values.push_back(st.stride_length_cm);
        }
        rep.diagnostics.insert(rep.diagnostics.end(), fa[s].diagnostics.begin(),
                               fa[s].diagnostics.end());
    }
    std::sort(rep.events.begin(), rep.events.end(),
              [](const GaitEvent& a, const GaitEvent& b) {
                  if (a.t_ms != b.t_ms) return a.t_ms < b.t_ms;
                  if (a.side != b.side) return side_index(a.side) < side_index(b.side);
                  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
              });

    // Bilateral parameters.
    const double overlap = bilateral_overlap_s(session);
    const std::vector<StanceInterval> stance_l = stance_intervals(fa[0].events);
    const std::vector<StanceInterval> stance_r = stance_intervals(fa[1].events);
    if (!fa[0].cycles.empty() || !fa[1].cycles.empty()) {
        rep.double_stance_pct.values = double_stance(fa[0].cycles, stance_r, overlap);
        const std::vector<double> dsp_r = double_stance(fa[1].cycles, stance_l, overlap);
        rep.double_stance_pct.values.insert(rep.double_stance_pct.values.end(),
                                            dsp_r.begin(), dsp_r.end());
    }

    const std::vector<double> hs_l = heel_strike_times_s(fa[0].events);
    const std::vector<double> hs_r = heel_strike_times_s(fa[1].events);
    if (hs_l.size() + hs_r.size() >= 2) {
        const StepCadenceResult sc = step_stride_cadence(hs_l, hs_r, &rep.diagnostics);
        rep.step_time_s[0].values = sc.step_time_left_s;
        rep.step_time_s[1].values = sc.step_time_right_s;
        rep.stride_time_s.values = sc.stride_time_s;
        rep.cadence_steps_per_min = sc.cadence_steps_per_min;
    } else {
        rep.diagnostics.push_back({"InsufficientEvents",
                                   "fewer than two heel strikes in the session",
                                   std::nullopt});
    }

    // Session velocity: each foot covers the walked path once.
    double vel_sum = 0.0;
    int vel_feet = 0;
    for (std::size_t s = 0; s < 2; ++s) {
        if (fa[s].strides.empty()) continue;
        const double span =
            fa[s].strides.back().end_t_s - fa[s].strides.front().start_t_s;
        if (span > 0.0) {
            vel_sum += session_velocity(fa[s].strides, span);
            ++vel_feet;
        }
    }
    rep.velocity_kmh = vel_feet > 0 ? vel_sum / vel_feet : 0.0;

    for (std::size_t s = 0; s < 2; ++s) {
        result.curves[s].t_ms = fa[s].t_ms;
        result.curves[s].forefoot = fa[s].sums.forefoot;
        result.curves[s].hindfoot = fa[s].sums.hindfoot;
        result.curves[s].total = fa[s].sums.total;
        result.curves[s].zv = fa[s].zvs;
        result.curves[s].events = fa[s].events;
    }
    return result;
}

AnalysisResult analyze_log_bytes(std::string_view bytes, const Config& cfg) {
    const GaitSession session = parse_log(bytes);
    const DiagnosticList diags = validate_session(session);
    for (const Diagnostic& d : diags) {
        if (d.code == "NonMonotoneTime" || d.code == "OutOfRangeValue" ||
            d.code == "NonFiniteValue")
            throw GaitError(d.code, d.format());
    }
    AnalysisResult result = analyze_session(session, cfg);
    result.report.diagnostics.insert(result.report.diagnostics.begin(), diags.begin(),
                                     diags.end());
    return result;
}

}  // namespace gaitkit
