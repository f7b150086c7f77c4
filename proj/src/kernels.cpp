#include "gaitkit/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace gaitkit {

std::vector<double> convolve_same_replicate(std::span<const double> x,
                                            std::span<const double> taps) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    const auto m = static_cast<std::ptrdiff_t>(taps.size());
    if (n == 0 || m == 0) return {};
    const std::ptrdiff_t half = (m - 1) / 2;
    std::vector<double> out(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::ptrdiff_t j = 0; j < m; ++j) {
            std::ptrdiff_t k = std::clamp<std::ptrdiff_t>(i + j - half, 0, n - 1);
            acc += taps[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> sliding_diff_variance(std::span<const double> x,
                                          std::size_t window) {
    if (window < 2 || x.size() < window) return {};
    const auto count = static_cast<std::ptrdiff_t>(x.size() - window + 1);
    const auto diffs = static_cast<double>(window - 1);
    std::vector<double> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const std::size_t b = static_cast<std::size_t>(i);
        double mean = 0.0;
        for (std::size_t k = b + 1; k < b + window; ++k) mean += x[k] - x[k - 1];
        mean /= diffs;
        double acc = 0.0;
        for (std::size_t k = b + 1; k < b + window; ++k) {
            double d = (x[k] - x[k - 1]) - mean;
            acc += d * d;
        }
        out[static_cast<std::size_t>(i)] = acc / diffs;
    }
    return out;
}

namespace reference {

std::vector<double> convolve_same_replicate(std::span<const double> x,
                                            std::span<const double> taps) {
    const std::size_t n = x.size();
    const std::size_t m = taps.size();
    if (n == 0 || m == 0) return {};
    const std::size_t half = (m - 1) / 2;
    // Explicit padded copy; same inner summation order as the parallel kernel.
    std::vector<double> padded;
    padded.reserve(n + m);
    for (std::size_t j = 0; j < half; ++j) padded.push_back(x.front());
    padded.insert(padded.end(), x.begin(), x.end());
    for (std::size_t j = 0; j + half < m; ++j) padded.push_back(x.back());
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += taps[j] * padded[i + j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> sliding_diff_variance(std::span<const double> x,
                                          std::size_t window) {
    if (window < 2 || x.size() < window) return {};
    const std::size_t count = x.size() - window + 1;
    const double diffs = static_cast<double>(window - 1);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        double mean = 0.0;
        for (std::size_t k = i + 1; k < i + window; ++k) mean += x[k] - x[k - 1];
        mean /= diffs;
        double acc = 0.0;
        for (std::size_t k = i + 1; k < i + window; ++k) {
            double d = (x[k] - x[k - 1]) - mean;
            acc += d * d;
        }
        out[i] = acc / diffs;
    }
    return out;
}

}  // namespace reference
}  // namespace gaitkit
