#ifndef GAITKIT_CSV_LOG_HPP_
#define GAITKIT_CSV_LOG_HPP_

#include <string>
#include <string_view>

#include "gaitkit/diagnostics.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

// Column layout of the log format (LF line endings, UTF-8, no quoting,
// floats with up to 6 fractional digits).
inline constexpr std::string_view kCsvHeader =
    "t_ms,foot,ax_g,ay_g,az_g,gx_dps,gy_dps,gz_dps,p1,p2,p3,p4,p5,p6,p7,p8";

// Parses one data row (no header). line_no is used in error messages only.
// Returns the foot side and the decoded frame.
std::pair<Side, SensorFrame> parse_csv_row(std::string_view line, std::size_t line_no);

// Parses a full log (header + rows). Frames are sorted by timestamp per foot
// and the per-foot sample rate is inferred from the median spacing.
// Throws MalformedRow / NonMonotoneTime / OutOfRangeValue.
GaitSession parse_log(std::string_view bytes);

// Inverse of parse_log on valid sessions: both feet merged by timestamp
// (left first on ties), numbers with 6 fractional digits.
std::string serialize_session(const GaitSession& session);

// Checks every type invariant; returns one Diagnostic per violation
// (NonMonotoneTime, OutOfRangeValue, NonFiniteValue, SampleRateMismatch,
// SampleGap, NoBilateralOverlap). Empty result == sound session.
DiagnosticList validate_session(const GaitSession& session);

std::string format_csv_row(Side side, const SensorFrame& f);

}  // namespace gaitkit

#endif  // GAITKIT_CSV_LOG_HPP_
