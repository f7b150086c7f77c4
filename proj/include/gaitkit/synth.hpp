#ifndef GAITKIT_SYNTH_HPP_
#define GAITKIT_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gaitkit/geometry.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

// Parameters of a synthetic two-foot walk. Pressure channels are phased
// trapezoids, the foot trajectory is a closed-form smooth swing whose double
// integral is known exactly, so the generator doubles as the verification
// oracle for the whole pipeline.
struct GaitProfile {
    std::string name = "normal";

    double stride_time_s = 1.1;
    double stance_pct_left = 62.0;
    double stance_pct_right = 62.0;
    // Right heel strike delay after the left one, as a fraction of a stride.
    double step_offset_frac = 0.5;
    double stride_length_cm = 130.0;

    // Within-stride phase fractions (of stride time).
    double load_frac = 0.08;  // heel strike -> toe on
    double push_frac = 0.10;  // heel off -> toe off

    double pressure_ramp_s = 0.09;  // loading/unloading edge duration
    double pitch_amplitude_deg = 40.0;
    double lift_height_m = 0.05;
    double heading_deg = 0.0;  // walking direction about world z

    // Noise / bias injection (zero = ideal sensors).
    double accel_noise_g = 0.0;
    double gyro_noise_dps = 0.0;
    double pressure_noise = 0.0;
    Vec3 accel_bias_g{0.0, 0.0, 0.0};
    Vec3 gyro_bias_dps{0.0, 0.0, 0.0};

    std::uint64_t seed = 1;

    double stance_asymmetry() const { return stance_pct_left / stance_pct_right; }
    double double_stance_pct() const {
        return stance_pct_left + stance_pct_right - 100.0;
    }
};

// Named presets exposed on the CLI. The *_noisy variants carry each preset's
// default sensor-noise levels.
GaitProfile normal_profile();
GaitProfile stroke_left_profile();
GaitProfile stroke_right_profile();
GaitProfile profile_by_name(const std::string& name);  // throws UnknownProfile
void apply_default_noise(GaitProfile& profile);

// Exact event/interval/parameter record of a generated session.
struct FootTruth {
    std::vector<GaitEvent> events;               // all four kinds, ordered
    std::vector<ZeroVelocityInterval> zv;        // complete foot-flat phases
    std::vector<double> stride_length_cm;        // anchor-to-anchor
    // Contact spans in seconds, including the opening/closing stand phases
    // that have no heel-strike/toe-off event inside the record.
    std::vector<std::pair<double, double>> stance_s;
};

struct GroundTruth {
    FootTruth left, right;

    // Session parameters evaluated on the exact event times.
    double stance_pct_left = 0, swing_pct_left = 0;
    double stance_pct_right = 0, swing_pct_right = 0;
    double double_stance_pct = 0;
    double step_time_left_s = 0, step_time_right_s = 0;
    double stride_time_s = 0;
    double cadence_steps_per_min = 0;
    double stride_length_cm = 0;
    double velocity_kmh = 0;

    const FootTruth& foot(Side s) const { return s == Side::Left ? left : right; }

    std::vector<GaitEvent> events_of_kind(Side s, EventKind k) const;
};

// Builds the session plus its ground truth. Throws DurationTooShort when the
// duration does not fit two strides per foot.
std::pair<GaitSession, GroundTruth> generate(const GaitProfile& profile,
                                             double duration_s,
                                             double sample_rate_hz = kNominalSampleRateHz);

// Sidecar serialization of the ground truth (structured text).
std::string serialize_ground_truth(const GaitProfile& profile, const GroundTruth& truth);

}  // namespace gaitkit

#endif  // GAITKIT_SYNTH_HPP_
