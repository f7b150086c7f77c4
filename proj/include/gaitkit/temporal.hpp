#ifndef GAITKIT_TEMPORAL_HPP_
#define GAITKIT_TEMPORAL_HPP_

#include <cstddef>
#include <vector>

#include "gaitkit/diagnostics.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

// One heel-strike-to-heel-strike segment with its inner events (seconds).
struct GaitCycle {
    Side side = Side::Left;
    double hs_start_s = 0.0;
    double toe_on_s = 0.0;
    double heel_off_s = 0.0;
    double toe_off_s = 0.0;
    double hs_end_s = 0.0;

    double duration_s() const { return hs_end_s - hs_start_s; }
    // Foot-on-ground part of the cycle.
    double stance_begin_s() const { return hs_start_s; }
    double stance_end_s() const { return toe_off_s; }
};

// [heel strike, toe off] contact span, independent of cycle segmentation.
struct StanceInterval {
    double begin_s = 0.0;
    double end_s = 0.0;
    Side side = Side::Left;
};

struct StepCadenceResult {
    std::vector<double> step_time_left_s;   // opposite-strike pairs L -> R
    std::vector<double> step_time_right_s;  // opposite-strike pairs R -> L
    std::vector<double> stride_time_s;      // same-foot strike pairs, both feet
    double cadence_steps_per_min = 0.0;
};

// One cycle per consecutive heel-strike pair enclosing a full, strictly
// ordered toe-on/heel-off/toe-off triple; anything else is skipped with a
// Diagnostic.
std::vector<GaitCycle> segment_cycles(const std::vector<GaitEvent>& events,
                                      DiagnosticList* diagnostics);

// Stance/swing percentages of one cycle; the pair always sums to exactly 100.
std::pair<double, double> stance_swing(const GaitCycle& c);

// Heel-strike -> next-toe-off contact intervals from an event list.
std::vector<StanceInterval> stance_intervals(const std::vector<GaitEvent>& events);

// Double-stance percentage of each reference cycle: time where the reference
// foot's stance and any opposite-foot stance overlap, inside the cycle, as a
// share of the cycle. Throws NoBilateralOverlap when the feet never share
// at least one second of time base.
std::vector<double> double_stance(const std::vector<GaitCycle>& reference,
                                  const std::vector<StanceInterval>& opposite,
                                  double bilateral_overlap_s);

// Step/stride times from bilateral heel-strike sequences plus cadence
// (60 * steps / elapsed, steps = strikes - 1 over the pooled strike span).
// Throws InsufficientEvents with fewer than two strikes in total.
StepCadenceResult step_stride_cadence(const std::vector<double>& left_hs_s,
                                      const std::vector<double>& right_hs_s,
                                      DiagnosticList* diagnostics);

}  // namespace gaitkit

#endif  // GAITKIT_TEMPORAL_HPP_
