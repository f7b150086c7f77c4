#include "gaitkit/zero_velocity.hpp"

#include <algorithm>
#include <cmath>

#include "gaitkit/filters.hpp"
#include "gaitkit/kernels.hpp"

namespace gaitkit {

namespace {

std::vector<double> smoothed_channel_mean(const FootStream& foot,
                                          std::initializer_list<std::size_t> channels,
                                          const Config& cfg) {
    std::vector<double> mean(foot.size(), 0.0);
    for (std::size_t ch : channels) {
        const std::vector<double> raw = foot.pressure_channel(ch);
        const std::vector<double> smooth = gauss_smooth(raw, cfg.gauss_sigma, cfg.gauss_taps);
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += smooth[i];
    }
    const double inv = 1.0 / static_cast<double>(channels.size());
    for (double& v : mean) v *= inv;
    return mean;
}

double percentile95(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t idx = (v.size() - 1) * 95 / 100;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx), v.end());
    return v[idx];
}

}  // namespace

PressureSums pressure_sums(const FootStream& foot, const Config& cfg) {
    if (foot.frames.empty())
        throw GaitError("EmptyStream",
                        std::string(to_string(foot.side)) + " foot has no frames");
    PressureSums sums;
    sums.forefoot = smoothed_channel_mean(foot, {2, 3, 4}, cfg);
    sums.hindfoot = smoothed_channel_mean(foot, {7, 8}, cfg);
    std::vector<double> whole(foot.size());
    for (std::size_t i = 0; i < whole.size(); ++i)
        whole[i] = sums.forefoot[i] + sums.hindfoot[i];
    sums.total = pressure_sum_smooth(whole, foot.sample_rate_hz, cfg.psum_taps);
    return sums;
}

double diff_variance(std::span<const double> x, std::size_t begin, std::size_t n) {
    if (n < 2 || begin + n > x.size())
        throw GaitError("WindowOutOfBounds",
                        "[" + std::to_string(begin) + ", " + std::to_string(begin + n) +
                            ") with n=" + std::to_string(n) + " on " +
                            std::to_string(x.size()) + " samples");
    const double diffs = static_cast<double>(n - 1);
    double mean = 0.0;
    for (std::size_t k = begin + 1; k < begin + n; ++k) mean += x[k] - x[k - 1];
    mean /= diffs;
    double acc = 0.0;
    for (std::size_t k = begin + 1; k < begin + n; ++k) {
        const double d = (x[k] - x[k - 1]) - mean;
        acc += d * d;
    }
    return acc / diffs;
}

std::vector<ZeroVelocityInterval> detect_zero_velocity(const PressureSums& sums,
                                                       std::span<const double> gyro_x,
                                                       const VarianceGateConfig& gate,
                                                       double stance_rel_threshold,
                                                       Side side,
                                                       DiagnosticList* diagnostics) {
    const std::vector<double>& total = sums.total;
    if (gyro_x.size() != total.size())
        throw GaitError("LengthMismatch", "pressure sum has " + std::to_string(total.size()) +
                                              " samples, gyro has " +
                                              std::to_string(gyro_x.size()));
    if (!gate.valid())
        throw GaitError("InvalidGateConfig", "variance window must be at least 3 samples");

    std::vector<ZeroVelocityInterval> intervals;
    if (total.empty()) return intervals;

    const std::size_t n = gate.window;
    // var_at[i] = variance of gyro diffs over [i, i+n); serves as the
    // forward-looking window at i and the backward-looking window at i+n-1.
    const std::vector<double> var_at = sliding_diff_variance(gyro_x, n);
    const double stance_level = stance_rel_threshold * percentile95(total);

    std::size_t i = 0;
    const std::size_t len = total.size();
    while (i < len) {
        if (!(total[i] > stance_level)) {
            ++i;
            continue;
        }
        // Stance region [region_begin, region_end], inclusive.
        const std::size_t region_begin = i;
        while (i < len && total[i] > stance_level) ++i;
        const std::size_t region_end = i - 1;

        const double peak =
            *std::max_element(total.begin() + static_cast<std::ptrdiff_t>(region_begin),
                              total.begin() + static_cast<std::ptrdiff_t>(region_end) + 1);
        std::size_t first_peak = region_begin;
        while (total[first_peak] < peak) ++first_peak;
        std::size_t last_peak = region_end;
        while (total[last_peak] < peak) --last_peak;

        // Toe on: earliest rising-edge index whose forward window is quiet.
        std::optional<std::size_t> toe_on;
        for (std::size_t k = region_begin; k <= first_peak; ++k) {
            if (k >= var_at.size()) break;
            if (var_at[k] < gate.toe_on_threshold) {
                toe_on = k;
                break;
            }
        }
        // Heel off: earliest falling-edge index whose backward window moves.
        std::optional<std::size_t> heel_off;
        for (std::size_t k = std::max(last_peak, n - 1); k <= region_end; ++k) {
            if (k - (n - 1) >= var_at.size()) break;
            if (var_at[k - (n - 1)] >= gate.heel_off_threshold) {
                heel_off = k;
                break;
            }
        }

        if (toe_on && heel_off && *toe_on < *heel_off) {
            intervals.push_back({*toe_on, *heel_off, side});
        } else if (diagnostics) {
            diagnostics->push_back({"NoGateCrossing",
                                    std::string(to_string(side)) + " foot stance region [" +
                                        std::to_string(region_begin) + ", " +
                                        std::to_string(region_end) + "] skipped",
                                    region_begin});
        }
    }
    return intervals;
}

}  // namespace gaitkit
