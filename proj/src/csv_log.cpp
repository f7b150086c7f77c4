#include "gaitkit/csv_log.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace gaitkit {

namespace {

constexpr std::size_t kColumns = 16;

double parse_field(std::string_view field, std::size_t line_no, std::size_t col) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw GaitError("MalformedRow", "line " + std::to_string(line_no) +
                                            ": column " + std::to_string(col + 1) +
                                            " is not a number: '" + std::string(field) + "'");
    return v;
}

double median_spacing(const std::vector<SensorFrame>& frames) {
    if (frames.size() < 2) return 0.0;
    std::vector<double> dt(frames.size() - 1);
    for (std::size_t i = 1; i < frames.size(); ++i) dt[i - 1] = frames[i].t_ms - frames[i - 1].t_ms;
    auto mid = dt.begin() + static_cast<std::ptrdiff_t>(dt.size() / 2);
    std::nth_element(dt.begin(), mid, dt.end());
    return *mid;
}

void finalize_foot(FootStream& foot) {
    std::stable_sort(foot.frames.begin(), foot.frames.end(),
                     [](const SensorFrame& a, const SensorFrame& b) { return a.t_ms < b.t_ms; });
    for (std::size_t i = 1; i < foot.frames.size(); ++i) {
        if (!(foot.frames[i].t_ms > foot.frames[i - 1].t_ms))
            throw GaitError("NonMonotoneTime",
                            std::string(to_string(foot.side)) + " foot, sample " +
                                std::to_string(i) + ": t=" +
                                std::to_string(foot.frames[i].t_ms) + " not after " +
                                std::to_string(foot.frames[i - 1].t_ms));
    }
    const double med = median_spacing(foot.frames);
    if (med > 0.0) foot.sample_rate_hz = 1000.0 / med;
}

}  // namespace

std::pair<Side, SensorFrame> parse_csv_row(std::string_view line, std::size_t line_no) {
    std::array<std::string_view, kColumns> fields;
    std::size_t start = 0, count = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            if (count >= kColumns)
                throw GaitError("MalformedRow",
                                "line " + std::to_string(line_no) + ": too many columns");
            fields[count++] = line.substr(start, i - start);
            start = i + 1;
        }
    }
    if (count != kColumns)
        throw GaitError("MalformedRow", "line " + std::to_string(line_no) + ": expected " +
                                            std::to_string(kColumns) + " columns, got " +
                                            std::to_string(count));

    Side side;
    if (fields[1] == "L") side = Side::Left;
    else if (fields[1] == "R") side = Side::Right;
    else
        throw GaitError("MalformedRow", "line " + std::to_string(line_no) +
                                            ": foot must be L or R, got '" +
                                            std::string(fields[1]) + "'");

    SensorFrame f;
    f.t_ms = parse_field(fields[0], line_no, 0);
    for (std::size_t a = 0; a < 3; ++a) f.accel_g[a] = parse_field(fields[2 + a], line_no, 2 + a);
    for (std::size_t a = 0; a < 3; ++a) f.gyro_dps[a] = parse_field(fields[5 + a], line_no, 5 + a);
    for (std::size_t p = 0; p < kPressureChannels; ++p)
        f.pressure[p] = parse_field(fields[8 + p], line_no, 8 + p);

    if (!std::isfinite(f.t_ms))
        throw GaitError("OutOfRangeValue", "line " + std::to_string(line_no) + ": non-finite t_ms");
    for (double v : f.accel_g)
        if (!std::isfinite(v))
            throw GaitError("OutOfRangeValue",
                            "line " + std::to_string(line_no) + ": non-finite accel");
    for (double v : f.gyro_dps)
        if (!std::isfinite(v))
            throw GaitError("OutOfRangeValue",
                            "line " + std::to_string(line_no) + ": non-finite gyro");
    for (std::size_t p = 0; p < kPressureChannels; ++p) {
        const double v = f.pressure[p];
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
            throw GaitError("OutOfRangeValue",
                            "line " + std::to_string(line_no) + ": p" + std::to_string(p + 1) +
                                "=" + std::to_string(v) + " outside [0,1]");
    }
    return {side, f};
}

GaitSession parse_log(std::string_view bytes) {
    GaitSession session;
    std::size_t pos = 0, line_no = 0;
    bool header_seen = false;
    while (pos < bytes.size()) {
        std::size_t nl = bytes.find('\n', pos);
        std::string_view line =
            bytes.substr(pos, nl == std::string_view::npos ? bytes.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? bytes.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw GaitError("MalformedRow", "line 1: bad header, expected '" +
                                                    std::string(kCsvHeader) + "'");
            header_seen = true;
            continue;
        }
        auto [side, frame] = parse_csv_row(line, line_no);
        session.foot(side).frames.push_back(frame);
    }
    if (!header_seen) throw GaitError("MalformedRow", "empty log: missing header");
    finalize_foot(session.left);
    finalize_foot(session.right);
    return session;
}

std::string format_csv_row(Side side, const SensorFrame& f) {
    char buf[512];
    int n = std::snprintf(
        buf, sizeof buf,
        "%.6f,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f",
        f.t_ms, to_string(side), f.accel_g[0], f.accel_g[1], f.accel_g[2], f.gyro_dps[0],
        f.gyro_dps[1], f.gyro_dps[2], f.pressure[0], f.pressure[1], f.pressure[2],
        f.pressure[3], f.pressure[4], f.pressure[5], f.pressure[6], f.pressure[7]);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string serialize_session(const GaitSession& session) {
    std::string out(kCsvHeader);
    out += '\n';
    std::size_t li = 0, ri = 0;
    const auto& lf = session.left.frames;
    const auto& rf = session.right.frames;
    out.reserve(out.size() + 170 * (lf.size() + rf.size()));
    while (li < lf.size() || ri < rf.size()) {
        const bool take_left =
            ri >= rf.size() || (li < lf.size() && lf[li].t_ms <= rf[ri].t_ms);
        if (take_left) {
            out += format_csv_row(Side::Left, lf[li++]);
        } else {
            out += format_csv_row(Side::Right, rf[ri++]);
        }
        out += '\n';
    }
    return out;
}

DiagnosticList validate_session(const GaitSession& session) {
    DiagnosticList diags;
    for (const FootStream* foot : {&session.left, &session.right}) {
        const char* side = to_string(foot->side);
        const auto& fr = foot->frames;
        for (std::size_t i = 0; i < fr.size(); ++i) {
            if (i > 0 && !(fr[i].t_ms > fr[i - 1].t_ms))
                diags.push_back({"NonMonotoneTime", std::string(side) + " foot", i});
            bool finite = std::isfinite(fr[i].t_ms);
            for (double v : fr[i].accel_g) finite = finite && std::isfinite(v);
            for (double v : fr[i].gyro_dps) finite = finite && std::isfinite(v);
            for (double v : fr[i].pressure) finite = finite && std::isfinite(v);
            if (!finite) diags.push_back({"NonFiniteValue", std::string(side) + " foot", i});
            for (std::size_t p = 0; p < kPressureChannels; ++p)
                if (fr[i].pressure[p] < 0.0 || fr[i].pressure[p] > 1.0) {
                    diags.push_back({"OutOfRangeValue",
                                     std::string(side) + " foot p" + std::to_string(p + 1), i});
                    break;
                }
        }
        if (fr.size() >= 2) {
            const double nominal = 1000.0 / foot->sample_rate_hz;
            const double med = median_spacing(fr);
            if (med < 0.8 * nominal || med > 1.2 * nominal)
                diags.push_back({"SampleRateMismatch",
                                 std::string(side) + " foot: median spacing " +
                                     std::to_string(med) + " ms vs nominal " +
                                     std::to_string(nominal) + " ms",
                                 std::nullopt});
            for (std::size_t i = 1; i < fr.size(); ++i)
                if (fr[i].t_ms - fr[i - 1].t_ms > 3.0 * nominal)
                    diags.push_back({"SampleGap", std::string(side) + " foot", i});
        }
    }
    if (!session.left.frames.empty() && !session.right.frames.empty()) {
        const double lo = std::max(session.left.frames.front().t_ms,
                                   session.right.frames.front().t_ms);
        const double hi = std::min(session.left.frames.back().t_ms,
                                   session.right.frames.back().t_ms);
        if (hi - lo < 1000.0)
            diags.push_back({"NoBilateralOverlap",
                             "feet share " + std::to_string((hi - lo) / 1000.0) +
                                 " s of time base, need >= 1 s",
                             std::nullopt});
    }
    return diags;
}

}  // namespace gaitkit
