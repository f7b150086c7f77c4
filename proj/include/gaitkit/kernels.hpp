#ifndef GAITKIT_KERNELS_HPP_
#define GAITKIT_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel inner loops of the pipeline. The functions in gaitkit:: are
// the OpenMP-parallel production kernels; gaitkit::reference:: holds plain
// serial implementations kept as ground truth for tests and for the
// bench_kernels comparison. Both variants perform the per-element arithmetic
// in the same order, so outputs are bit-identical.

namespace gaitkit {

// Same-length correlation of x with `taps`, edges handled by replicating the
// first/last sample. `taps` is expected to be odd-length (center-aligned).
std::vector<double> convolve_same_replicate(std::span<const double> x,
                                            std::span<const double> taps);

// Population variance of the first differences of x over every window of
// `window` samples. out[i] covers samples [i, i+window); output length is
// x.size() - window + 1 (empty if x is shorter than the window).
std::vector<double> sliding_diff_variance(std::span<const double> x,
                                          std::size_t window);

namespace reference {
std::vector<double> convolve_same_replicate(std::span<const double> x,
                                            std::span<const double> taps);
std::vector<double> sliding_diff_variance(std::span<const double> x,
                                          std::size_t window);
}  // namespace reference

}  // namespace gaitkit

#endif  // GAITKIT_KERNELS_HPP_
