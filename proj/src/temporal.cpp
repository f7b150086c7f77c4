#include "gaitkit/temporal.hpp"

#include <algorithm>
#include <cmath>

namespace gaitkit {

std::vector<GaitCycle> segment_cycles(const std::vector<GaitEvent>& events,
                                      DiagnosticList* diagnostics) {
    std::vector<GaitCycle> cycles;
    std::vector<std::size_t> hs_pos;
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].kind == EventKind::HeelStrike) hs_pos.push_back(i);

    for (std::size_t h = 0; h + 1 < hs_pos.size(); ++h) {
        const GaitEvent& start = events[hs_pos[h]];
        const GaitEvent& end = events[hs_pos[h + 1]];
        // The enclosed events must be exactly one toe-on, heel-off, toe-off
        // in phase order.
        const GaitEvent* toe_on = nullptr;
        const GaitEvent* heel_off = nullptr;
        const GaitEvent* toe_off = nullptr;
        bool clean = true;
        for (std::size_t i = hs_pos[h] + 1; i < hs_pos[h + 1]; ++i) {
            const GaitEvent& e = events[i];
            switch (e.kind) {
                case EventKind::ToeOn: clean = clean && !toe_on; toe_on = &e; break;
                case EventKind::HeelOff: clean = clean && !heel_off; heel_off = &e; break;
                case EventKind::ToeOff: clean = clean && !toe_off; toe_off = &e; break;
                case EventKind::HeelStrike: clean = false; break;
            }
        }
        clean = clean && toe_on && heel_off && toe_off && start.idx < toe_on->idx &&
                toe_on->idx < heel_off->idx && heel_off->idx < toe_off->idx &&
                toe_off->idx < end.idx;
        if (!clean) {
            if (diagnostics)
                diagnostics->push_back({"IncompleteCycle",
                                        std::string(to_string(start.side)) +
                                            " foot cycle lacks an ordered event quadruple",
                                        start.idx});
            continue;
        }
        GaitCycle c;
        c.side = start.side;
        c.hs_start_s = start.t_ms / 1000.0;
        c.toe_on_s = toe_on->t_ms / 1000.0;
        c.heel_off_s = heel_off->t_ms / 1000.0;
        c.toe_off_s = toe_off->t_ms / 1000.0;
        c.hs_end_s = end.t_ms / 1000.0;
        cycles.push_back(c);
    }
    return cycles;
}

std::pair<double, double> stance_swing(const GaitCycle& c) {
    const double stp = (c.toe_off_s - c.hs_start_s) / c.duration_s() * 100.0;
    return {stp, 100.0 - stp};  // complementary by construction
}

std::vector<StanceInterval> stance_intervals(const std::vector<GaitEvent>& events) {
    std::vector<StanceInterval> out;
    double open_t = 0.0;
    bool open = false;
    Side side = Side::Left;
    for (const GaitEvent& e : events) {
        if (e.kind == EventKind::HeelStrike) {
            open_t = e.t_ms / 1000.0;
            open = true;
            side = e.side;
        } else if (e.kind == EventKind::ToeOff && open) {
            out.push_back({open_t, e.t_ms / 1000.0, side});
            open = false;
        }
    }
    return out;
}

std::vector<double> double_stance(const std::vector<GaitCycle>& reference,
                                  const std::vector<StanceInterval>& opposite,
                                  double bilateral_overlap_s) {
    if (bilateral_overlap_s < 1.0)
        throw GaitError("NoBilateralOverlap",
                        "feet share " + std::to_string(bilateral_overlap_s) +
                            " s of time base, need >= 1 s");
    std::vector<double> dsp;
    dsp.reserve(reference.size());
    for (const GaitCycle& c : reference) {
        double both = 0.0;
        for (const StanceInterval& s : opposite) {
            const double lo = std::max(c.stance_begin_s(), s.begin_s);
            const double hi = std::min(c.stance_end_s(), s.end_s);
            if (hi > lo) both += hi - lo;
        }
        dsp.push_back(both / c.duration_s() * 100.0);
    }
    return dsp;
}

StepCadenceResult step_stride_cadence(const std::vector<double>& left_hs_s,
                                      const std::vector<double>& right_hs_s,
                                      DiagnosticList* diagnostics) {
    if (left_hs_s.size() + right_hs_s.size() < 2)
        throw GaitError("InsufficientEvents",
                        "need at least two heel strikes, got " +
                            std::to_string(left_hs_s.size() + right_hs_s.size()));

    struct Strike {
        double t;
        Side side;
    };
    std::vector<Strike> strikes;
    strikes.reserve(left_hs_s.size() + right_hs_s.size());
    for (double t : left_hs_s) strikes.push_back({t, Side::Left});
    for (double t : right_hs_s) strikes.push_back({t, Side::Right});
    std::sort(strikes.begin(), strikes.end(),
              [](const Strike& a, const Strike& b) { return a.t < b.t; });

    StepCadenceResult res;
    for (std::size_t i = 1; i < strikes.size(); ++i) {
        if (strikes[i].side == strikes[i - 1].side) {
            if (diagnostics)
                diagnostics->push_back({"NonAlternatingStrikes",
                                        "two consecutive " +
                                            std::string(to_string(strikes[i].side)) +
                                            " strikes, step skipped",
                                        std::nullopt});
            continue;
        }
        const double dt = strikes[i].t - strikes[i - 1].t;
        // Step time of a foot spans from the opposite strike to its own.
        if (strikes[i].side == Side::Right)
            res.step_time_left_s.push_back(dt);
        else
            res.step_time_right_s.push_back(dt);
    }
    for (const std::vector<double>* hs : {&left_hs_s, &right_hs_s})
        for (std::size_t i = 1; i < hs->size(); ++i)
            res.stride_time_s.push_back((*hs)[i] - (*hs)[i - 1]);

    const double span = strikes.back().t - strikes.front().t;
    const auto steps = static_cast<double>(strikes.size() - 1);
    res.cadence_steps_per_min = span > 0.0 ? 60.0 * steps / span : 0.0;
    return res;
}

}  // namespace gaitkit
