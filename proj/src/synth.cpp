#include "gaitkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "gaitkit/diagnostics.hpp"
#include "gaitkit/temporal.hpp"

namespace gaitkit {

namespace {

constexpr double kGravity = 9.80665;
constexpr double kDegToRad = M_PI / 180.0;

// Second derivative of the quintic step h(u) = 6u^5 - 15u^4 + 10u^3:
// h(0)=0, h(1)=1 with first and second derivatives zero at both ends, so the
// swing acceleration is continuous at the flat-phase boundaries and the
// displacement over one movement window is exactly the stride length.
double smooth_step_dd(double u) { return 60.0 * u + u * u * (-180.0 + 120.0 * u); }

// Second derivative of the foot-lift bump sin^4(pi u) (zero at both ends).
double lift_shape_dd(double u) {
    const double s = std::sin(M_PI * u), c = std::cos(M_PI * u);
    return 4.0 * M_PI * M_PI * s * s * (3.0 * c * c - s * s);
}

// Sagittal pitch over one movement window. A pure sin^2 bump would have
// stretches of constant angular-rate increments (rate extrema, near-linear
// onset) that no real gyro shows; a small multiplicative wobble keeps the
// rate texture realistic while the angle still starts and ends at zero with
// zero rate.
constexpr double kPitchWobble = 0.18;
constexpr double kPitchWobbleCycles = 6.0;

double pitch_deg(double amplitude_deg, double u) {
    const double s = std::sin(M_PI * u);
    const double w = 1.0 + kPitchWobble * std::sin(2.0 * M_PI * kPitchWobbleCycles * u);
    return amplitude_deg * s * s * w;
}

double pitch_rate_dps(double amplitude_deg, double u, double t_mv) {
    const double s = std::sin(M_PI * u);
    const double sp = M_PI * std::sin(2.0 * M_PI * u);
    const double w = 1.0 + kPitchWobble * std::sin(2.0 * M_PI * kPitchWobbleCycles * u);
    const double wp = kPitchWobble * 2.0 * M_PI * kPitchWobbleCycles *
                      std::cos(2.0 * M_PI * kPitchWobbleCycles * u);
    return amplitude_deg * (sp * w + s * s * wp) / t_mv;
}

double trapezoid(double t, double up_start, double down_start, double ramp) {
    if (t <= up_start || t >= down_start + ramp) return 0.0;
    if (t < up_start + ramp) return (t - up_start) / ramp;
    if (t <= down_start) return 1.0;
    return 1.0 - (t - down_start) / ramp;
}

// Event schedule of one foot. Stride k covers heel strike k to heel strike
// k+1; the session opens and closes with the foot flat, so the first movement
// belongs to a "pre" stride whose stance began before t = 0.
struct FootTimeline {
    double stride_t = 1.0;
    double stance = 0.62;  // fraction of the stride
    double load = 0.08;
    double push = 0.10;
    double first_hs = 0.0;
    std::size_t strides = 0;  // number of heel strikes in range

    double hs(std::ptrdiff_t k) const { return first_hs + static_cast<double>(k) * stride_t; }
    double toe_on(std::ptrdiff_t k) const { return hs(k) + load * stride_t; }
    double heel_off(std::ptrdiff_t k) const { return hs(k) + (stance - push) * stride_t; }
    double toe_off(std::ptrdiff_t k) const { return hs(k) + stance * stride_t; }
    // Movement window ending at toe-on k (covers push-off, swing, loading).
    double move_begin(std::ptrdiff_t k) const { return heel_off(k - 1); }
    double move_end(std::ptrdiff_t k) const { return toe_on(k); }
    double move_duration() const { return (1.0 + load - stance + push) * stride_t; }
};

FootTimeline make_timeline(const GaitProfile& p, Side side, double duration_s) {
    constexpr double kStandMin = 0.35;  // both feet flat at the session edges
    FootTimeline tl;
    tl.stride_t = p.stride_time_s;
    tl.stance = (side == Side::Left ? p.stance_pct_left : p.stance_pct_right) / 100.0;
    tl.load = p.load_frac;
    tl.push = p.push_frac;
    const double offset = side == Side::Left ? 0.0 : p.step_offset_frac * p.stride_time_s;
    // Place the pre-stride heel-off at the end of the opening stand phase.
    tl.first_hs = kStandMin + (1.0 - tl.stance + tl.push) * tl.stride_t + offset;
    std::ptrdiff_t k = 0;
    while (tl.toe_on(k) + kStandMin <= duration_s) ++k;
    tl.strides = k > 0 ? static_cast<std::size_t>(k) : 0;
    return tl;
}

struct NoiseSource {
    std::mt19937_64 rng;
    std::normal_distribution<double> unit{0.0, 1.0};
    // One draw per call regardless of sigma, so toggling one noise component
    // leaves the others bit-identical under the same seed.
    double draw(double sigma) {
        const double u = unit(rng);
        return sigma * u;
    }
};

std::size_t time_to_idx(double t_s, double fs, std::size_t n) {
    const auto i = static_cast<std::ptrdiff_t>(std::llround(t_s * fs));
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 1));
}

void synthesize_foot(const GaitProfile& p, const FootTimeline& tl, Side side,
                     double duration_s, double fs, NoiseSource& noise,
                     FootStream* stream, FootTruth* truth) {
    const auto n = static_cast<std::size_t>(std::llround(duration_s * fs));
    const double dt_ms = 1000.0 / fs;
    const double t_mv = tl.move_duration();
    const double stride_m = p.stride_length_cm / 100.0;
    const double psi = p.heading_deg * kDegToRad;
    const double cpsi = std::cos(psi), spsi = std::sin(psi);

    const auto k_last = static_cast<std::ptrdiff_t>(tl.strides) - 1;

    // Per-channel plateau amplitudes (1-based channels 1..8).
    constexpr double kForefootAmp[3] = {0.88, 0.92, 0.70};  // channels 2,3,4
    constexpr double kHindAmp[2] = {0.90, 0.80};            // channels 7,8
    constexpr double kThumbAmp = 0.55;                      // channel 1
    constexpr double kMidAmp[2] = {0.35, 0.30};             // channels 5,6

    stream->side = side;
    stream->sample_rate_hz = fs;
    stream->frames.resize(n);

    std::ptrdiff_t move_k = 0;  // movement window cursor, advanced with time
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        SensorFrame& f = stream->frames[i];
        f.t_ms = static_cast<double>(i) * dt_ms;

        while (move_k <= k_last && t >= tl.move_end(move_k)) ++move_k;
        const bool moving = move_k <= k_last && t > tl.move_begin(move_k);

        double pitch = 0.0, pitch_rate = 0.0;  // deg, deg/s
        Vec3 accel_w{0.0, 0.0, 0.0};
        if (moving) {
            const double u = (t - tl.move_begin(move_k)) / t_mv;
            pitch = pitch_deg(p.pitch_amplitude_deg, u);
            pitch_rate = pitch_rate_dps(p.pitch_amplitude_deg, u, t_mv);
            accel_w.y = stride_m * smooth_step_dd(u) / (t_mv * t_mv);
            accel_w.z = p.lift_height_m * lift_shape_dd(u) / (t_mv * t_mv);
        }

        // World frame includes the heading; body frame undoes heading then
        // pitch. The two z-rotations cancel analytically, but going through
        // them keeps the construction faithful to the attitude chain.
        const Vec3 accel_world{cpsi * accel_w.x - spsi * accel_w.y,
                               spsi * accel_w.x + cpsi * accel_w.y, accel_w.z};
        const Vec3 specific{accel_world.x, accel_world.y, accel_world.z + kGravity};
        const Vec3 w_no_yaw{cpsi * specific.x + spsi * specific.y,
                            -spsi * specific.x + cpsi * specific.y, specific.z};
        const double th = pitch * kDegToRad;
        const double cth = std::cos(th), sth = std::sin(th);
        const Vec3 body{w_no_yaw.x, cth * w_no_yaw.y + sth * w_no_yaw.z,
                        -sth * w_no_yaw.y + cth * w_no_yaw.z};

        f.accel_g[0] = body.x / kGravity + p.accel_bias_g.x + noise.draw(p.accel_noise_g);
        f.accel_g[1] = body.y / kGravity + p.accel_bias_g.y + noise.draw(p.accel_noise_g);
        f.accel_g[2] = body.z / kGravity + p.accel_bias_g.z + noise.draw(p.accel_noise_g);
        f.gyro_dps[0] = pitch_rate + p.gyro_bias_dps.x + noise.draw(p.gyro_noise_dps);
        f.gyro_dps[1] = p.gyro_bias_dps.y + noise.draw(p.gyro_noise_dps);
        f.gyro_dps[2] = p.gyro_bias_dps.z + noise.draw(p.gyro_noise_dps);

        // Plantar loading: hindfoot carries the strike, forefoot the push-off.
        double hind = 0.0, fore = 0.0;
        for (std::ptrdiff_t k = -1; k <= k_last; ++k) {
            const double hs = k >= 0 ? tl.hs(k) : -10.0;
            const double ho = k < k_last ? tl.heel_off(k) : duration_s + 10.0;
            hind += trapezoid(t, hs, ho, p.pressure_ramp_s);
            const double on = k >= 0 ? tl.toe_on(k) - p.pressure_ramp_s : -10.0;
            const double off = k < k_last ? tl.toe_off(k) - p.pressure_ramp_s
                                          : duration_s + 10.0;
            fore += trapezoid(t, on, off, p.pressure_ramp_s);
        }
        const double mid = 0.5 * (hind + fore);
        const double ideal[kPressureChannels] = {
            kThumbAmp * fore,     kForefootAmp[0] * fore, kForefootAmp[1] * fore,
            kForefootAmp[2] * fore, kMidAmp[0] * mid,     kMidAmp[1] * mid,
            kHindAmp[0] * hind,   kHindAmp[1] * hind};
        for (std::size_t c = 0; c < kPressureChannels; ++c)
            f.pressure[c] = std::clamp(ideal[c] + noise.draw(p.pressure_noise), 0.0, 1.0);
    }

    // Exact event record. The closing flat phase has no heel-off, so the last
    // zero-velocity interval in range is the one before it.
    auto push_event = [&](EventKind kind, double t_s) {
        truth->events.push_back({kind, time_to_idx(t_s, fs, n), t_s * 1000.0, side});
    };
    push_event(EventKind::HeelOff, tl.heel_off(-1));
    push_event(EventKind::ToeOff, tl.toe_off(-1));
    for (std::ptrdiff_t k = 0; k <= k_last; ++k) {
        push_event(EventKind::HeelStrike, tl.hs(k));
        push_event(EventKind::ToeOn, tl.toe_on(k));
        if (k < k_last) {
            push_event(EventKind::HeelOff, tl.heel_off(k));
            push_event(EventKind::ToeOff, tl.toe_off(k));
        }
    }
    std::sort(truth->events.begin(), truth->events.end(),
              [](const GaitEvent& a, const GaitEvent& b) { return a.t_ms < b.t_ms; });

    truth->zv.push_back({0, time_to_idx(tl.heel_off(-1), fs, n), side});
    for (std::ptrdiff_t k = 0; k < k_last; ++k)
        truth->zv.push_back({time_to_idx(tl.toe_on(k), fs, n),
                             time_to_idx(tl.heel_off(k), fs, n), side});
    truth->stride_length_cm.assign(truth->zv.size() > 1 ? truth->zv.size() - 1 : 0,
                                   p.stride_length_cm);

    truth->stance_s.emplace_back(0.0, tl.toe_off(-1));
    for (std::ptrdiff_t k = 0; k <= k_last; ++k)
        truth->stance_s.emplace_back(tl.hs(k),
                                     k < k_last ? tl.toe_off(k) : duration_s);
}

std::vector<double> strike_times_s(const FootTruth& ft) {
    std::vector<double> out;
    for (const GaitEvent& e : ft.events)
        if (e.kind == EventKind::HeelStrike) out.push_back(e.t_ms / 1000.0);
    return out;
}

}  // namespace

GaitProfile normal_profile() {
    GaitProfile p;
    p.name = "normal";
    return p;
}

GaitProfile stroke_left_profile() {
    GaitProfile p;
    p.name = "stroke-left";
    p.stride_time_s = 2.2;
    p.stance_pct_left = 82.0;   // affected side spends longer in stance
    p.stance_pct_right = 78.0;
    p.step_offset_frac = 0.53;
    p.stride_length_cm = 48.5;
    p.pitch_amplitude_deg = 25.0;
    p.lift_height_m = 0.03;
    return p;
}

GaitProfile stroke_right_profile() {
    GaitProfile p = stroke_left_profile();
    p.name = "stroke-right";
    std::swap(p.stance_pct_left, p.stance_pct_right);
    p.step_offset_frac = 0.47;
    return p;
}

GaitProfile profile_by_name(const std::string& name) {
    if (name == "normal") return normal_profile();
    if (name == "stroke-left") return stroke_left_profile();
    if (name == "stroke-right") return stroke_right_profile();
    throw GaitError("UnknownProfile", name + " (expected normal, stroke-left, stroke-right)");
}

void apply_default_noise(GaitProfile& profile) {
    profile.accel_noise_g = 0.01;
    profile.gyro_noise_dps = 1.0;
    profile.pressure_noise = 0.01;
}

std::vector<GaitEvent> GroundTruth::events_of_kind(Side s, EventKind k) const {
    std::vector<GaitEvent> out;
    for (const GaitEvent& e : foot(s).events)
        if (e.kind == k) out.push_back(e);
    return out;
}

std::pair<GaitSession, GroundTruth> generate(const GaitProfile& profile,
                                             double duration_s, double sample_rate_hz) {
    const FootTimeline left_tl = make_timeline(profile, Side::Left, duration_s);
    const FootTimeline right_tl = make_timeline(profile, Side::Right, duration_s);
    if (left_tl.strides < 2 || right_tl.strides < 2)
        throw GaitError("DurationTooShort",
                        std::to_string(duration_s) + " s does not fit two strides of " +
                            std::to_string(profile.stride_time_s) + " s per foot");

    GaitSession session;
    GroundTruth truth;
    NoiseSource noise{std::mt19937_64{profile.seed}};
    synthesize_foot(profile, left_tl, Side::Left, duration_s, sample_rate_hz, noise,
                    &session.left, &truth.left);
    synthesize_foot(profile, right_tl, Side::Right, duration_s, sample_rate_hz, noise,
                    &session.right, &truth.right);
    session.meta["profile"] = profile.name;
    session.meta["seed"] = std::to_string(profile.seed);

    // Session parameters evaluated on the exact event times with the same
    // formulas the analyzer uses.
    DiagnosticList scratch;
    const std::vector<GaitCycle> lc = segment_cycles(truth.left.events, &scratch);
    const std::vector<GaitCycle> rc = segment_cycles(truth.right.events, &scratch);
    {
        auto mean_of = [](const std::vector<double>& v) {
            double s = 0.0;
            for (double x : v) s += x;
            return v.empty() ? 0.0 : s / static_cast<double>(v.size());
        };
        std::vector<double> stp_l, stp_r;
        for (const GaitCycle& c : lc) stp_l.push_back(stance_swing(c).first);
        for (const GaitCycle& c : rc) stp_r.push_back(stance_swing(c).first);
        truth.stance_pct_left = mean_of(stp_l);
        truth.stance_pct_right = mean_of(stp_r);
        truth.swing_pct_left = 100.0 - truth.stance_pct_left;
        truth.swing_pct_right = 100.0 - truth.stance_pct_right;

        auto exact_stances = [](const FootTruth& ft, Side side) {
            std::vector<StanceInterval> out;
            for (const auto& [b, e] : ft.stance_s) out.push_back({b, e, side});
            return out;
        };
        const std::vector<StanceInterval> ls = exact_stances(truth.left, Side::Left);
        const std::vector<StanceInterval> rs = exact_stances(truth.right, Side::Right);
        std::vector<double> dsp = double_stance(lc, rs, duration_s);
        const std::vector<double> dsp_r = double_stance(rc, ls, duration_s);
        dsp.insert(dsp.end(), dsp_r.begin(), dsp_r.end());
        truth.double_stance_pct = mean_of(dsp);

        const StepCadenceResult sc = step_stride_cadence(
            strike_times_s(truth.left), strike_times_s(truth.right), &scratch);
        truth.step_time_left_s = mean_of(sc.step_time_left_s);
        truth.step_time_right_s = mean_of(sc.step_time_right_s);
        truth.stride_time_s = mean_of(sc.stride_time_s);
        truth.cadence_steps_per_min = sc.cadence_steps_per_min;

        truth.stride_length_cm = profile.stride_length_cm;
        double vel_sum = 0.0;
        for (const FootTruth* ft : {&truth.left, &truth.right}) {
            const double span_s =
                (static_cast<double>(ft->zv.back().mid_idx()) -
                 static_cast<double>(ft->zv.front().mid_idx())) / sample_rate_hz;
            double total_cm = 0.0;
            for (double l : ft->stride_length_cm) total_cm += l;
            vel_sum += 3.6 / 100.0 * total_cm / span_s;
        }
        truth.velocity_kmh = vel_sum / 2.0;
    }
    return {std::move(session), std::move(truth)};
}

std::string serialize_ground_truth(const GaitProfile& profile, const GroundTruth& truth) {
    std::string out = "# ground truth\n";
    char buf[160];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.6f\n", key, v);
        out += buf;
    };
    out += "profile = " + profile.name + "\n";
    out += "seed = " + std::to_string(profile.seed) + "\n";
    put("stride_time_s", truth.stride_time_s);
    put("stance_pct_left", truth.stance_pct_left);
    put("swing_pct_left", truth.swing_pct_left);
    put("stance_pct_right", truth.stance_pct_right);
    put("swing_pct_right", truth.swing_pct_right);
    put("double_stance_pct", truth.double_stance_pct);
    put("step_time_left_s", truth.step_time_left_s);
    put("step_time_right_s", truth.step_time_right_s);
    put("cadence_steps_per_min", truth.cadence_steps_per_min);
    put("stride_length_cm", truth.stride_length_cm);
    put("velocity_kmh", truth.velocity_kmh);
    for (Side side : {Side::Left, Side::Right}) {
        const FootTruth& ft = truth.foot(side);
        out += std::string("[events_") + (side == Side::Left ? "left" : "right") + "]\n";
        for (const GaitEvent& e : ft.events) {
            std::snprintf(buf, sizeof buf, "%s %zu %.6f\n", to_string(e.kind), e.idx, e.t_ms);
            out += buf;
        }
        out += std::string("[zero_velocity_") + (side == Side::Left ? "left" : "right") + "]\n";
        for (const ZeroVelocityInterval& zv : ft.zv) {
            std::snprintf(buf, sizeof buf, "%zu %zu\n", zv.start_idx, zv.end_idx);
            out += buf;
        }
    }
    return out;
}

}  // namespace gaitkit
