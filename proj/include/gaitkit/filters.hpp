#ifndef GAITKIT_FILTERS_HPP_
#define GAITKIT_FILTERS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gaitkit {

// Linear-phase FIR filter: symmetric coefficients, unity DC gain.
struct FirFilter {
    std::vector<double> coefficients;
    std::string description;

    std::size_t taps() const { return coefficients.size(); }
};

// 1-D Gaussian smoothing kernel sampled at integer lags, normalized to sum 1.
struct GaussKernel {
    double sigma = 5.0;
    std::vector<double> taps;
};

// Windowed-sinc (Hamming) low-pass design, normalized to unity DC gain.
// Throws InvalidCutoff if cutoff is outside (0, Nyquist), EvenTaps if
// num_taps is not an odd positive count.
FirFilter design_lowpass(double cutoff_hz, double sample_rate_hz, std::size_t num_taps);

// Centered application with replicate padding; output length == input length.
std::vector<double> apply_fir(const FirFilter& f, std::span<const double> x);

GaussKernel make_gauss_kernel(double sigma, std::size_t taps);

// Gaussian smoothing of a pressure channel. Throws InvalidSigma / EvenTaps.
std::vector<double> gauss_smooth(std::span<const double> x, double sigma = 5.0,
                                 std::size_t taps = 7);

// Heavy smoothing of the whole-foot pressure sum. The requested sub-Hz cutoff
// is not realizable with this tap budget at gait sampling rates, so the design
// uses the lowest cutoff whose main lobe still fits the window
// (sample_rate / taps). Throws TooShort when the input has fewer samples
// than taps.
std::vector<double> pressure_sum_smooth(std::span<const double> p,
                                        double sample_rate_hz,
                                        std::size_t taps = 23);

// Magnitude response of a FIR at one frequency, |H(f)|, from its taps.
double fir_magnitude_at(const FirFilter& f, double freq_hz, double sample_rate_hz);

}  // namespace gaitkit

#endif  // GAITKIT_FILTERS_HPP_
