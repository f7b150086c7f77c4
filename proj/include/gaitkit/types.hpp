#ifndef GAITKIT_TYPES_HPP_
#define GAITKIT_TYPES_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gaitkit {

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "L" : "R"; }
inline std::size_t side_index(Side s) { return s == Side::Left ? 0 : 1; }

inline constexpr double kNominalSampleRateHz = 66.0;
inline constexpr std::size_t kPressureChannels = 8;

// One sample of one foot. Axes follow the body convention used throughout:
// y toward the walking direction, z up, x mediolateral. Pressure channels are
// 1-based on the insole: 1-4 forefoot (1 = big toe), 5-6 midfoot, 7-8 hindfoot,
// each normalized to [0,1] of full scale.
struct SensorFrame {
    double t_ms = 0.0;
    std::array<double, 3> accel_g{};    // specific force, units of g
    std::array<double, 3> gyro_dps{};   // angular rate, deg/s
    std::array<double, kPressureChannels> pressure{};
};

struct FootStream {
    Side side = Side::Left;
    std::vector<SensorFrame> frames;
    double sample_rate_hz = kNominalSampleRateHz;

    std::size_t size() const { return frames.size(); }

    std::vector<double> times_ms() const {
        std::vector<double> t(frames.size());
        for (std::size_t i = 0; i < frames.size(); ++i) t[i] = frames[i].t_ms;
        return t;
    }
    // 1-based insole channel number, matching the device labels.
    std::vector<double> pressure_channel(std::size_t channel) const {
        std::vector<double> v(frames.size());
        for (std::size_t i = 0; i < frames.size(); ++i)
            v[i] = frames[i].pressure[channel - 1];
        return v;
    }
    std::vector<double> gyro_axis(std::size_t axis) const {
        std::vector<double> v(frames.size());
        for (std::size_t i = 0; i < frames.size(); ++i) v[i] = frames[i].gyro_dps[axis];
        return v;
    }
    std::vector<double> accel_axis(std::size_t axis) const {
        std::vector<double> v(frames.size());
        for (std::size_t i = 0; i < frames.size(); ++i) v[i] = frames[i].accel_g[axis];
        return v;
    }
};

struct GaitSession {
    FootStream left{Side::Left, {}, kNominalSampleRateHz};
    FootStream right{Side::Right, {}, kNominalSampleRateHz};
    std::map<std::string, std::string> meta;

    const FootStream& foot(Side s) const { return s == Side::Left ? left : right; }
    FootStream& foot(Side s) { return s == Side::Left ? left : right; }
};

enum class EventKind { HeelStrike, ToeOn, HeelOff, ToeOff };

inline const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::HeelStrike: return "HeelStrike";
        case EventKind::ToeOn: return "ToeOn";
        case EventKind::HeelOff: return "HeelOff";
        case EventKind::ToeOff: return "ToeOff";
    }
    return "?";
}

struct GaitEvent {
    EventKind kind = EventKind::HeelStrike;
    std::size_t idx = 0;
    double t_ms = 0.0;
    Side side = Side::Left;
};

// Foot-flat phase: [start=toe on, end=heel off], inclusive sample indices.
struct ZeroVelocityInterval {
    std::size_t start_idx = 0;
    std::size_t end_idx = 0;
    Side side = Side::Left;

    std::size_t mid_idx() const { return start_idx + (end_idx - start_idx) / 2; }
};

}  // namespace gaitkit

#endif  // GAITKIT_TYPES_HPP_
