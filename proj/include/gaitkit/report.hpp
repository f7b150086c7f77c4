#ifndef GAITKIT_REPORT_HPP_
#define GAITKIT_REPORT_HPP_

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gaitkit/config.hpp"
#include "gaitkit/diagnostics.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

// Per-cycle samples of one parameter with population statistics.
struct SummaryStat {
    std::vector<double> values;

    std::size_t n() const { return values.size(); }
    double mean() const {
        if (values.empty()) return 0.0;
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }
    double sd() const {
        if (values.empty()) return 0.0;
        double m = mean(), s = 0.0;
        for (double v : values) s += (v - m) * (v - m);
        return std::sqrt(s / static_cast<double>(values.size()));
    }
};

struct StrideRecord {
    Side side = Side::Left;
    std::size_t start_idx = 0, end_idx = 0;
    double start_t_s = 0.0, end_t_s = 0.0;
    double length_cm = 0.0;
};

// Everything the analysis produces: the per-foot/bilateral parameter set,
// the event and stride tables the summaries are computed from, diagnostics,
// and the configuration echo.
struct GaitReport {
    SummaryStat stance_pct[2];      // indexed by side_index
    SummaryStat swing_pct[2];
    SummaryStat double_stance_pct;
    SummaryStat step_time_s[2];
    SummaryStat stride_time_s;
    double cadence_steps_per_min = 0.0;
    SummaryStat stride_length_cm;
    double velocity_kmh = 0.0;

    std::vector<GaitEvent> events;        // both feet, time-ordered
    std::vector<StrideRecord> strides;
    DiagnosticList diagnostics;
    Config config;
    std::map<std::string, std::string> meta;
};

// Deterministic structured-text rendering (fixed 6-decimal floats); equal
// inputs give byte-identical output.
std::string format_report(const GaitReport& report);

// Per-sample curves behind the detection (smoothed forefoot/hindfoot/total
// pressure, zero-velocity flags, event markers) as plain CSV for plotting.
struct FootCurves {
    std::vector<double> t_ms;
    std::vector<double> forefoot, hindfoot, total;
    std::vector<ZeroVelocityInterval> zv;
    std::vector<GaitEvent> events;
};

std::string format_plot_data(const FootCurves& left, const FootCurves& right);

}  // namespace gaitkit

#endif  // GAITKIT_REPORT_HPP_
