#include "gaitkit/event_detect.hpp"

#include <algorithm>
#include <cmath>

namespace gaitkit {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

// Best candidate under a kind-specific total score, ties to the smaller index.
const CandidatePoint& pick_winner(const std::vector<CandidatePoint>& scored,
                                  EventKind kind) {
    const CandidatePoint* best = &scored.front();
    double best_total = -1e300;
    for (const CandidatePoint& c : scored) {
        const double total = kind == EventKind::HeelStrike
                                 ? c.score_distance - c.score_left + c.score_right
                                 : c.score_distance + c.score_left - c.score_right;
        if (total > best_total || (total == best_total && c.idx < best->idx)) {
            best_total = total;
            best = &c;
        }
    }
    return *best;
}

GaitEvent detect_boundary_event(std::span<const double> curve,
                                const ZeroVelocityInterval& zv, EventKind kind,
                                std::span<const double> t_ms, const Config& cfg,
                                DiagnosticList* diagnostics) {
    const IndexRange window = candidate_window(zv, kind, curve.size(), cfg, diagnostics);
    std::vector<CandidatePoint> cands = extract_candidates(curve, window);
    cands = top3_by_curvature(std::move(cands), diagnostics);
    const std::size_t anchor = kind == EventKind::HeelStrike ? zv.start_idx : zv.end_idx;
    score_candidates(cands, anchor, curve, cfg.ev_neighborhood_r);
    const CandidatePoint& winner = pick_winner(cands, kind);
    return {kind, winner.idx, t_ms[winner.idx], zv.side};
}

}  // namespace

IndexRange candidate_window(const ZeroVelocityInterval& zv, EventKind which,
                            std::size_t len, const Config& cfg,
                            DiagnosticList* diagnostics) {
    const std::ptrdiff_t before = static_cast<std::ptrdiff_t>(cfg.ev_window_before);
    const std::ptrdiff_t after = static_cast<std::ptrdiff_t>(cfg.ev_window_after);
    std::ptrdiff_t begin, end;
    if (which == EventKind::HeelStrike) {
        begin = static_cast<std::ptrdiff_t>(zv.start_idx) - before;
        end = static_cast<std::ptrdiff_t>(zv.start_idx) + after;
    } else {
        begin = static_cast<std::ptrdiff_t>(zv.end_idx) - after;
        end = static_cast<std::ptrdiff_t>(zv.end_idx) + before;
    }
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(len);
    IndexRange r{static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(begin, 0, n)),
                 static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(end, 0, n))};
    if ((begin < 0 || end > n) && diagnostics)
        diagnostics->push_back({"ClippedWindow",
                                std::string(to_string(which)) + " window [" +
                                    std::to_string(begin) + ", " + std::to_string(end) +
                                    ") clipped to stream",
                                r.begin});
    return r;
}

double delta_c_from_angle(double theta_deg) {
    const double dev = std::abs(theta_deg - 180.0) * M_PI / 180.0;
    if (theta_deg < 180.0) return 1.0 - std::cos(dev);
    if (theta_deg > 180.0) return std::cos(dev) - 1.0;
    return 0.0;
}

std::pair<double, double> angle_delta_c(std::size_t i0, double v0, std::size_t i1,
                                        double v1, std::size_t i2, double v2,
                                        const WindowFrame& frame) {
    if (!(i0 < i1 && i1 < i2))
        throw GaitError("DegenerateTriple", "indices " + std::to_string(i0) + ", " +
                                                std::to_string(i1) + ", " +
                                                std::to_string(i2) +
                                                " are not strictly increasing");
    const double x0 = static_cast<double>(i0) * frame.index_scale;
    const double x1 = static_cast<double>(i1) * frame.index_scale;
    const double x2 = static_cast<double>(i2) * frame.index_scale;
    const double y0 = (v0 - frame.value_offset) * frame.value_scale;
    const double y1 = (v1 - frame.value_offset) * frame.value_scale;
    const double y2 = (v2 - frame.value_offset) * frame.value_scale;

    const double e1x = x1 - x0, e1y = y1 - y0;
    const double e2x = x2 - x1, e2y = y2 - y1;
    // Signed turn of the polyline at the middle point; a left (upward) turn
    // reads as an interior angle below 180 degrees.
    const double turn = std::atan2(e1x * e2y - e1y * e2x, e1x * e2x + e1y * e2y);
    const double theta = 180.0 - turn * kRadToDeg;
    return {theta, delta_c_from_angle(theta)};
}

std::vector<CandidatePoint> extract_candidates(std::span<const double> curve,
                                               IndexRange window) {
    std::vector<CandidatePoint> out;
    if (window.length() < 3) return out;
    double lo = curve[window.begin], hi = curve[window.begin];
    for (std::size_t k = window.begin; k < window.end; ++k) {
        lo = std::min(lo, curve[k]);
        hi = std::max(hi, curve[k]);
    }
    WindowFrame frame;
    frame.index_scale = 1.0 / static_cast<double>(window.length());
    frame.value_offset = lo;
    frame.value_scale = hi > lo ? 1.0 / (hi - lo) : 0.0;

    out.reserve(window.length() - 2);
    for (std::size_t mid = window.begin + 1; mid + 1 < window.end; ++mid) {
        auto [theta, dc] = angle_delta_c(mid - 1, curve[mid - 1], mid, curve[mid],
                                         mid + 1, curve[mid + 1], frame);
        out.push_back({mid, theta, dc, 0.0, 0.0, 0.0});
    }
    return out;
}

std::vector<CandidatePoint> top3_by_curvature(std::vector<CandidatePoint> candidates,
                                              DiagnosticList* diagnostics) {
    // Both event kinds live at a bottom corner of the loading curve (flat
    // meeting a steep edge), which is an upward kink: delta_c > 0. Downward
    // kinks are the plateau corners and never the event, so the "biggest
    // three delta_c" ranking is taken over the signed value.
    std::erase_if(candidates, [](const CandidatePoint& c) { return c.delta_c <= 0.0; });
    if (candidates.empty())
        throw GaitError("NoCandidates", "no upward bend found in the candidate window");
    std::sort(candidates.begin(), candidates.end(),
              [](const CandidatePoint& a, const CandidatePoint& b) {
                  if (a.delta_c != b.delta_c) return a.delta_c > b.delta_c;
                  return a.idx < b.idx;
              });
    if (candidates.size() > 3) candidates.resize(3);
    if (candidates.size() < 3) {
        if (diagnostics)
            diagnostics->push_back({"PaddedCandidates",
                                    "only " + std::to_string(candidates.size()) +
                                        " distinct candidates, padding by duplication",
                                    candidates.front().idx});
        while (candidates.size() < 3) candidates.push_back(candidates.back());
    }
    return candidates;
}

void score_candidates(std::span<CandidatePoint> candidates, std::size_t zv_anchor,
                      std::span<const double> curve, std::size_t r) {
    if (candidates.empty()) throw GaitError("EmptyCandidates", "nothing to score");
    const auto n = static_cast<std::ptrdiff_t>(curve.size());
    auto at = [&](std::ptrdiff_t k) {
        return curve[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, n - 1))];
    };

    double max_x = 0.0, max_s_left = 0.0, max_s_right = 0.0;
    std::vector<double> xs(candidates.size()), sl(candidates.size()), sr(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto idx = static_cast<std::ptrdiff_t>(candidates[i].idx);
        xs[i] = std::abs(static_cast<double>(idx) - static_cast<double>(zv_anchor));
        const double center = at(idx);
        double left = 0.0, right = 0.0;
        for (std::size_t j = 1; j <= r; ++j) {
            left += std::abs(at(idx - static_cast<std::ptrdiff_t>(j)) - center);
            right += std::abs(at(idx + static_cast<std::ptrdiff_t>(j)) - center);
        }
        sl[i] = left;
        sr[i] = right;
        max_x = std::max(max_x, xs[i]);
        max_s_left = std::max(max_s_left, left);
        max_s_right = std::max(max_s_right, right);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        candidates[i].score_distance = max_x > 0.0 ? -(xs[i] / max_x * 100.0) : 0.0;
        candidates[i].score_left = max_s_left > 0.0 ? sl[i] / max_s_left * 100.0 : 0.0;
        candidates[i].score_right = max_s_right > 0.0 ? sr[i] / max_s_right * 100.0 : 0.0;
    }
}

GaitEvent detect_heel_strike(const PressureSums& sums, const ZeroVelocityInterval& zv,
                             std::span<const double> t_ms, const Config& cfg,
                             DiagnosticList* diagnostics) {
    return detect_boundary_event(sums.hindfoot, zv, EventKind::HeelStrike, t_ms, cfg,
                                 diagnostics);
}

GaitEvent detect_toe_off(const PressureSums& sums, const ZeroVelocityInterval& zv,
                         std::span<const double> t_ms, const Config& cfg,
                         DiagnosticList* diagnostics) {
    return detect_boundary_event(sums.forefoot, zv, EventKind::ToeOff, t_ms, cfg,
                                 diagnostics);
}

std::vector<GaitEvent> assemble_events(const std::vector<ZeroVelocityInterval>& zvs,
                                       const std::vector<std::optional<GaitEvent>>& strikes,
                                       const std::vector<std::optional<GaitEvent>>& toeoffs,
                                       std::span<const double> t_ms, Side side,
                                       DiagnosticList* diagnostics) {
    std::vector<GaitEvent> out;
    for (std::size_t i = 0; i < zvs.size(); ++i) {
        const ZeroVelocityInterval& zv = zvs[i];
        if (!strikes[i] || !toeoffs[i]) {
            if (diagnostics)
                diagnostics->push_back({"IncompleteStride",
                                        std::string(to_string(side)) + " foot stride at zv [" +
                                            std::to_string(zv.start_idx) + ", " +
                                            std::to_string(zv.end_idx) + "] dropped",
                                        zv.start_idx});
            continue;
        }
        const GaitEvent& hs = *strikes[i];
        const GaitEvent& to = *toeoffs[i];
        const bool ordered = hs.idx <= zv.start_idx && zv.start_idx < zv.end_idx &&
                             zv.end_idx <= to.idx;
        if (!ordered) {
            if (diagnostics)
                diagnostics->push_back({"OrderViolation",
                                        std::string(to_string(side)) +
                                            " foot stride events out of phase order",
                                        zv.start_idx});
            continue;
        }
        out.push_back(hs);
        out.push_back({EventKind::ToeOn, zv.start_idx, t_ms[zv.start_idx], side});
        out.push_back({EventKind::HeelOff, zv.end_idx, t_ms[zv.end_idx], side});
        out.push_back(to);
    }
    std::sort(out.begin(), out.end(), [](const GaitEvent& a, const GaitEvent& b) {
        if (a.idx != b.idx) return a.idx < b.idx;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    return out;
}

}  // namespace gaitkit
