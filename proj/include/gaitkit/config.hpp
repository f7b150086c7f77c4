#ifndef GAITKIT_CONFIG_HPP_
#define GAITKIT_CONFIG_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace gaitkit {

// Every tunable of the pipeline with its shipped default. Loaded from a flat
// `key=value` file; unknown keys are rejected so typos do not silently revert
// to defaults.
struct Config {
    // preprocessing
    double lpf_cutoff_hz = 20.0;
    std::size_t lpf_taps = 21;
    double gauss_sigma = 5.0;
    std::size_t gauss_taps = 7;
    std::size_t psum_taps = 23;

    // zero-velocity detection
    double zv_variance_threshold1 = 10.0;  // heel-off gate (variance rises above)
    double zv_variance_threshold2 = 4.0;   // toe-on gate (variance falls below)
    std::size_t zv_window_samples = 10;
    double stance_rel_threshold = 0.2;

    // heel-strike / toe-off candidate search
    std::size_t ev_window_before = 60;
    std::size_t ev_window_after = 6;
    std::size_t ev_neighborhood_r = 10;

    // spatial integration
    double gravity_mps2 = 9.80665;
    double zvu_residual_tol_mps = 0.02;
};

// Parses `key=value` lines; '#' starts a comment, blank lines are ignored.
// Throws GaitError("UnknownConfigKey"/"MalformedConfig") on bad input.
Config parse_config(std::string_view text);
Config load_config_file(const std::string& path);

// Serialization used for the report's config echo (fixed key order).
std::string serialize_config(const Config& cfg);

}  // namespace gaitkit

#endif  // GAITKIT_CONFIG_HPP_
