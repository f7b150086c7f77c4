#ifndef GAITKIT_EVENT_DETECT_HPP_
#define GAITKIT_EVENT_DETECT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gaitkit/config.hpp"
#include "gaitkit/diagnostics.hpp"
#include "gaitkit/types.hpp"
#include "gaitkit/zero_velocity.hpp"

namespace gaitkit {

// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t length() const { return end - begin; }
};

// One candidate event point: the middle sample of a three-sample angle.
struct CandidatePoint {
    std::size_t idx = 0;
    double theta_deg = 180.0;
    double delta_c = 0.0;
    double score_distance = 0.0;  // m: proximity to the zero-velocity anchor
    double score_left = 0.0;      // n: changing degree left of the point
    double score_right = 0.0;     // l: changing degree right of the point
};

// Scaling applied before the angle is measured, so the angle is invariant to
// sample rate and pressure amplitude: index axis divided by the window
// length, value axis by the window's value range.
struct WindowFrame {
    double index_scale = 1.0;
    double value_offset = 0.0;
    double value_scale = 1.0;
};

// Candidate search window around a zero-velocity boundary: for a heel strike,
// `before` samples left and `after` samples right of the interval start; for
// a toe off, mirrored around the interval end. Clipped to [0, len) with a
// ClippedWindow diagnostic.
IndexRange candidate_window(const ZeroVelocityInterval& zv, EventKind which,
                            std::size_t len, const Config& cfg,
                            DiagnosticList* diagnostics);

// Curvature measure of an angle: 1-cos(|theta-180|) below 180 degrees,
// cos(|theta-180|)-1 above, 0 at 180.
double delta_c_from_angle(double theta_deg);

// Interior angle at (i1,v1) of the polyline through three (index, value)
// points, measured after axis normalization; returns {theta_deg, delta_c}.
// Upward kinks give theta < 180 (delta_c > 0), downward kinks theta > 180.
// Throws DegenerateTriple when indices are not strictly increasing.
std::pair<double, double> angle_delta_c(std::size_t i0, double v0, std::size_t i1,
                                        double v1, std::size_t i2, double v2,
                                        const WindowFrame& frame);

// All interior triples of `curve` restricted to `window`, with their angles.
std::vector<CandidatePoint> extract_candidates(std::span<const double> curve,
                                               IndexRange window);

// The three largest |delta_c| candidates (ties to the smaller index),
// duplicated with a Diagnostic when fewer than three exist. Throws
// NoCandidates when every delta_c is zero or the window is degenerate.
std::vector<CandidatePoint> top3_by_curvature(std::vector<CandidatePoint> candidates,
                                              DiagnosticList* diagnostics);

// Fills the three scores of each candidate: distance to the anchor and the
// left/right changing degrees over r neighbors, each max-normalized to
// [-100, 100]; degenerate normalizers (max 0) give all-zero scores.
void score_candidates(std::span<CandidatePoint> candidates, std::size_t zv_anchor,
                      std::span<const double> curve, std::size_t r);

// Full candidate procedure on the hindfoot curve near the interval start;
// winner maximizes m - n + l (ties to the smaller index).
GaitEvent detect_heel_strike(const PressureSums& sums, const ZeroVelocityInterval& zv,
                             std::span<const double> t_ms, const Config& cfg,
                             DiagnosticList* diagnostics);

// Mirror on the forefoot curve near the interval end; winner maximizes
// m + n - l.
GaitEvent detect_toe_off(const PressureSums& sums, const ZeroVelocityInterval& zv,
                         std::span<const double> t_ms, const Config& cfg,
                         DiagnosticList* diagnostics);

// Orders the four events of every stride (heel strike, toe on, heel off,
// toe off) and drops strides that are incomplete or out of phase order,
// with a Diagnostic each.
std::vector<GaitEvent> assemble_events(const std::vector<ZeroVelocityInterval>& zvs,
                                       const std::vector<std::optional<GaitEvent>>& strikes,
                                       const std::vector<std::optional<GaitEvent>>& toeoffs,
                                       std::span<const double> t_ms, Side side,
                                       DiagnosticList* diagnostics);

}  // namespace gaitkit

#endif  // GAITKIT_EVENT_DETECT_HPP_
