#include "gaitkit/filters.hpp"

#include <cmath>

#include "gaitkit/diagnostics.hpp"
#include "gaitkit/kernels.hpp"

namespace gaitkit {

namespace {

double sinc(double v) {
    if (std::abs(v) < 1e-12) return 1.0;
    return std::sin(M_PI * v) / (M_PI * v);
}

void require_odd_taps(std::size_t num_taps) {
    if (num_taps == 0 || num_taps % 2 == 0)
        throw GaitError("EvenTaps", "tap count must be odd and positive, got " +
                                        std::to_string(num_taps));
}

}  // namespace

FirFilter design_lowpass(double cutoff_hz, double sample_rate_hz, std::size_t num_taps) {
    require_odd_taps(num_taps);
    const double nyquist = sample_rate_hz / 2.0;
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < nyquist))
        throw GaitError("InvalidCutoff",
                        "cutoff " + std::to_string(cutoff_hz) + " Hz outside (0, " +
                            std::to_string(nyquist) + ") at fs=" +
                            std::to_string(sample_rate_hz));

    const double fc = cutoff_hz / sample_rate_hz;  // normalized
    const auto center = static_cast<double>((num_taps - 1) / 2);
    FirFilter f;
    f.coefficients.resize(num_taps);
    double sum = 0.0;
    for (std::size_t k = 0; k < num_taps; ++k) {
        const double t = static_cast<double>(k) - center;
        const double window =
            0.54 - 0.46 * std::cos(2.0 * M_PI * static_cast<double>(k) /
                                   static_cast<double>(num_taps - 1));
        f.coefficients[k] = 2.0 * fc * sinc(2.0 * fc * t) * window;
        sum += f.coefficients[k];
    }
    for (double& c : f.coefficients) c /= sum;  // unity DC gain
    f.description = "windowed-sinc lowpass, cutoff " + std::to_string(cutoff_hz) +
                    " Hz @ " + std::to_string(sample_rate_hz) + " Hz, " +
                    std::to_string(num_taps) + " taps";
    return f;
}

std::vector<double> apply_fir(const FirFilter& f, std::span<const double> x) {
    if (x.empty()) return {};
    return convolve_same_replicate(x, f.coefficients);
}

GaussKernel make_gauss_kernel(double sigma, std::size_t taps) {
    if (!(sigma > 0.0))
        throw GaitError("InvalidSigma", "sigma must be positive, got " + std::to_string(sigma));
    require_odd_taps(taps);
    GaussKernel k;
    k.sigma = sigma;
    k.taps.resize(taps);
    const auto center = static_cast<std::ptrdiff_t>((taps - 1) / 2);
    double sum = 0.0;
    for (std::size_t i = 0; i < taps; ++i) {
        const double lag = static_cast<double>(static_cast<std::ptrdiff_t>(i) - center);
        k.taps[i] = std::exp(-lag * lag / (2.0 * sigma * sigma));
        sum += k.taps[i];
    }
    for (double& t : k.taps) t /= sum;
    return k;
}

std::vector<double> gauss_smooth(std::span<const double> x, double sigma, std::size_t taps) {
    const GaussKernel k = make_gauss_kernel(sigma, taps);
    if (x.empty()) return {};
    return convolve_same_replicate(x, k.taps);
}

std::vector<double> pressure_sum_smooth(std::span<const double> p,
                                        double sample_rate_hz, std::size_t taps) {
    require_odd_taps(taps);
    if (p.size() < taps)
        throw GaitError("TooShort", "pressure sum has " + std::to_string(p.size()) +
                                        " samples, needs at least " + std::to_string(taps));
    // Lowest cutoff whose main lobe fits the tap budget; the nominal sub-Hz
    // label stays in the config file only.
    const double cutoff = sample_rate_hz / static_cast<double>(taps);
    const FirFilter f = design_lowpass(cutoff, sample_rate_hz, taps);
    return convolve_same_replicate(p, f.coefficients);
}

double fir_magnitude_at(const FirFilter& f, double freq_hz, double sample_rate_hz) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
        const double phase = -2.0 * M_PI * freq_hz * static_cast<double>(k) / sample_rate_hz;
        re += f.coefficients[k] * std::cos(phase);
        im += f.coefficients[k] * std::sin(phase);
    }
    return std::sqrt(re * re + im * im);
}

}  // namespace gaitkit
