#ifndef GAITKIT_PIPELINE_HPP_
#define GAITKIT_PIPELINE_HPP_

#include <string>

#include "gaitkit/config.hpp"
#include "gaitkit/report.hpp"
#include "gaitkit/types.hpp"

namespace gaitkit {

struct AnalysisResult {
    GaitReport report;
    FootCurves curves[2];  // indexed by side_index, for plot data
};

// Full pipeline on a validated session: preprocessing, zero-velocity fusion,
// event voting, cycle segmentation, temporal parameters, strapdown spatial
// parameters. Hard input violations throw GaitError; per-stride shortfalls
// become diagnostics in the report.
AnalysisResult analyze_session(const GaitSession& session, const Config& cfg);

// parse_log + validate + analyze, the path shared by the CLI `analyze`
// command and the stream ingester so both produce identical reports.
AnalysisResult analyze_log_bytes(std::string_view bytes, const Config& cfg);

}  // namespace gaitkit

#endif  // GAITKIT_PIPELINE_HPP_
