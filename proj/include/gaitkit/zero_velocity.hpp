#ifndef GAITKIT_ZERO_VELOCITY_HPP_
#define GAITKIT_ZERO_VELOCITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gaitkit/config.hpp"
#include "gaitkit/diagnostics.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

// Aggregated plantar loading curves. forefoot = mean of channels 2,3,4,
// hindfoot = mean of channels 7,8 (channels 1,5,6 stay out of the sums),
// total = heavily smoothed forefoot+hindfoot.
struct PressureSums {
    std::vector<double> forefoot;
    std::vector<double> hindfoot;
    std::vector<double> total;
};

struct VarianceGateConfig {
    std::size_t window = 10;         // samples per variance window
    double heel_off_threshold = 10;  // gate 1: variance rises above => heel off
    double toe_on_threshold = 4;     // gate 2: variance falls below => toe on

    // Config files additionally require toe_on <= heel_off; the detector
    // itself accepts any gate pair (a zero heel-off gate forces the falling
    // edge, which degenerate test setups rely on).
    bool valid() const { return window >= 3; }
};

// Gaussian-smooths each relevant channel, averages per the insole
// layout, and applies the heavy sum filter. Throws EmptyStream, and TooShort
// when the stream is shorter than the sum filter.
PressureSums pressure_sums(const FootStream& foot, const Config& cfg);

// Population variance of the first differences of x over [begin, begin+n).
// Throws WindowOutOfBounds.
double diff_variance(std::span<const double> x, std::size_t begin, std::size_t n);

// Fuses the pressure-sum trend with the gyro X-axis variance gates. For each
// stance region of `total` (relative threshold on the session's 95th
// percentile): toe on = first index on the rising edge whose forward-looking
// variance window drops below the toe-on gate; heel off = first index on the
// falling edge whose backward-looking window rises above the heel-off gate.
// Regions with no gate crossing are skipped with a Diagnostic.
std::vector<ZeroVelocityInterval> detect_zero_velocity(const PressureSums& sums,
                                                       std::span<const double> gyro_x,
                                                       const VarianceGateConfig& gate,
                                                       double stance_rel_threshold,
                                                       Side side,
                                                       DiagnosticList* diagnostics);

}  // namespace gaitkit

#endif  // GAITKIT_ZERO_VELOCITY_HPP_
