#include "gaitkit/report.hpp"

#include <cstdio>

namespace gaitkit {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void put_stat(std::string& out, const char* key, const SummaryStat& s) {
    out += std::string(key) + "_mean = " + fmt6(s.mean()) + "\n";
    out += std::string(key) + "_sd = " + fmt6(s.sd()) + "\n";
    out += std::string(key) + "_n = " + std::to_string(s.n()) + "\n";
}

}  // namespace

std::string format_report(const GaitReport& report) {
    std::string out = "# gait report\nformat = 1\n\n[config]\n";
    out += serialize_config(report.config);

    out += "\n[meta]\n";
    for (const auto& [k, v] : report.meta) out += k + " = " + v + "\n";

    out += "\n[parameters]\n";
    put_stat(out, "stance_pct_left", report.stance_pct[0]);
    put_stat(out, "swing_pct_left", report.swing_pct[0]);
    put_stat(out, "stance_pct_right", report.stance_pct[1]);
    put_stat(out, "swing_pct_right", report.swing_pct[1]);
    put_stat(out, "double_stance_pct", report.double_stance_pct);
    put_stat(out, "step_time_s_left", report.step_time_s[0]);
    put_stat(out, "step_time_s_right", report.step_time_s[1]);
    put_stat(out, "stride_time_s", report.stride_time_s);
    out += "cadence_steps_per_min = " + fmt6(report.cadence_steps_per_min) + "\n";
    put_stat(out, "stride_length_cm", report.stride_length_cm);
    out += "velocity_kmh = " + fmt6(report.velocity_kmh) + "\n";

    out += "\n[events]\n# side kind idx t_ms\n";
    for (const GaitEvent& e : report.events) {
        out += std::string(to_string(e.side)) + " " + to_string(e.kind) + " " +
               std::to_string(e.idx) + " " + fmt6(e.t_ms) + "\n";
    }

    out += "\n[strides]\n# side start_idx end_idx start_t_s end_t_s length_cm\n";
    for (const StrideRecord& s : report.strides) {
        out += std::string(to_string(s.side)) + " " + std::to_string(s.start_idx) + " " +
               std::to_string(s.end_idx) + " " + fmt6(s.start_t_s) + " " +
               fmt6(s.end_t_s) + " " + fmt6(s.length_cm) + "\n";
    }

    out += "\n[diagnostics]\n";
    for (const Diagnostic& d : report.diagnostics) out += d.format() + "\n";
    return out;
}

std::string format_plot_data(const FootCurves& left, const FootCurves& right) {
    std::string out = "foot,idx,t_ms,forefoot,hindfoot,total,in_zv,event\n";
    const FootCurves* curves[2] = {&left, &right};
    const char* names[2] = {"L", "R"};
    for (std::size_t s = 0; s < 2; ++s) {
        const FootCurves& c = *curves[s];
        std::vector<std::string> event_at(c.t_ms.size());
        for (const GaitEvent& e : c.events)
            if (e.idx < event_at.size())
                event_at[e.idx] += event_at[e.idx].empty() ? to_string(e.kind)
                                                           : std::string("+") + to_string(e.kind);
        std::size_t zv_i = 0;
        for (std::size_t i = 0; i < c.t_ms.size(); ++i) {
            while (zv_i < c.zv.size() && c.zv[zv_i].end_idx < i) ++zv_i;
            const bool in_zv =
                zv_i < c.zv.size() && c.zv[zv_i].start_idx <= i && i <= c.zv[zv_i].end_idx;
            out += names[s];
            out += ',';
            out += std::to_string(i) + "," + fmt6(c.t_ms[i]) + "," + fmt6(c.forefoot[i]) +
                   "," + fmt6(c.hindfoot[i]) + "," + fmt6(c.total[i]) + "," +
                   (in_zv ? "1" : "0") + "," + event_at[i] + "\n";
        }
    }
    return out;
}

}  // namespace gaitkit
