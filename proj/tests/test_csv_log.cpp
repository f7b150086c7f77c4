#include <doctest.h>

#include <cmath>

#include "gaitkit/csv_log.hpp"
#include "gaitkit/synth.hpp"

using namespace gaitkit;

namespace {

const char* kTwoRowLog =
    "t_ms,foot,ax_g,ay_g,az_g,gx_dps,gy_dps,gz_dps,p1,p2,p3,p4,p5,p6,p7,p8\n"
    "0.000000,L,0.01,0.02,1.00,0.1,0.2,0.3,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8\n"
    "0.000000,R,0.01,0.02,1.00,0.1,0.2,0.3,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8\n";

}  // namespace

TEST_CASE("parse_log: minimal well-formed input") {
    const GaitSession s = parse_log(kTwoRowLog);
    CHECK(s.left.size() == 1);
    CHECK(s.right.size() == 1);
    CHECK(s.left.frames[0].pressure[7] == doctest::Approx(0.8));
    CHECK(s.right.frames[0].accel_g[2] == doctest::Approx(1.0));
}

TEST_CASE("parse_log: pressure outside [0,1] is rejected") {
    std::string log(kCsvHeader);
    log += "\n1.0,L,0,0,1,0,0,0,1.3,0,0,0,0,0,0,0\n";
    CHECK_THROWS_WITH_AS(parse_log(log), doctest::Contains("OutOfRangeValue"), GaitError);
}

TEST_CASE("parse_log: malformed rows carry the line number") {
    std::string log(kCsvHeader);
    log += "\n1.0,L,0,0,1,0,0,0,0,0,0,0,0,0,0\n";  // 15 columns
    CHECK_THROWS_WITH_AS(parse_log(log), doctest::Contains("line 2"), GaitError);
    std::string log2(kCsvHeader);
    log2 += "\n1.0,L,abc,0,1,0,0,0,0,0,0,0,0,0,0,0\n";
    CHECK_THROWS_WITH_AS(parse_log(log2), doctest::Contains("MalformedRow"), GaitError);
    CHECK_THROWS_WITH_AS(parse_log(""), doctest::Contains("missing header"), GaitError);
}

TEST_CASE("parse_log: duplicate timestamps per foot are rejected") {
    std::string log(kCsvHeader);
    log += "\n1.0,L,0,0,1,0,0,0,0,0,0,0,0,0,0,0\n";
    log += "1.0,L,0,0,1,0,0,0,0,0,0,0,0,0,0,0\n";
    CHECK_THROWS_WITH_AS(parse_log(log), doctest::Contains("NonMonotoneTime"), GaitError);
}

TEST_CASE("parse_log infers the sample rate from the spacing") {
    // A full synthetic session runs at the nominal 66 Hz grid.
    const auto [session, truth] = generate(normal_profile(), 60.0);
    const std::string bytes = serialize_session(session);
    const GaitSession parsed = parse_log(bytes);
    CHECK(parsed.left.size() == 3960);
    CHECK(parsed.left.sample_rate_hz == doctest::Approx(66.0).epsilon(0.01));
    CHECK(parsed.right.sample_rate_hz == doctest::Approx(66.0).epsilon(0.01));
}

TEST_CASE("serialize/parse round trip is byte-exact") {
    GaitProfile p = normal_profile();
    p.seed = 9;
    apply_default_noise(p);
    const auto [session, truth] = generate(p, 12.0);
    const std::string once = serialize_session(session);
    const std::string twice = serialize_session(parse_log(once));
    CHECK(once == twice);
}

TEST_CASE("parse_log output always passes validate_session type invariants") {
    GaitProfile p = stroke_left_profile();
    p.seed = 3;
    apply_default_noise(p);
    const auto [session, truth] = generate(p, 12.0);
    const GaitSession parsed = parse_log(serialize_session(session));
    for (const Diagnostic& d : validate_session(parsed)) {
        CHECK(d.code != "NonMonotoneTime");
        CHECK(d.code != "OutOfRangeValue");
        CHECK(d.code != "NonFiniteValue");
    }
}

TEST_CASE("validate_session diagnostics") {
    const auto [session, truth] = generate(normal_profile(), 10.0);
    CHECK(validate_session(session).empty());

    GaitSession dup = session;
    dup.left.frames[10].t_ms = dup.left.frames[9].t_ms;
    bool found = false;
    for (const Diagnostic& d : validate_session(dup))
        if (d.code == "NonMonotoneTime" && d.index == 10) found = true;
    CHECK(found);

    // Left stream ends two seconds before the right one begins.
    GaitSession split = session;
    split.left.frames.resize(66);
    for (SensorFrame& f : split.right.frames) f.t_ms += 66 * 15.1515 + 2000.0;
    bool overlap_flagged = false;
    for (const Diagnostic& d : validate_session(split))
        if (d.code == "NoBilateralOverlap") overlap_flagged = true;
    CHECK(overlap_flagged);

    GaitSession gap = session;
    gap.right.frames.erase(gap.right.frames.begin() + 100, gap.right.frames.begin() + 110);
    bool gap_flagged = false;
    for (const Diagnostic& d : validate_session(gap))
        if (d.code == "SampleGap") gap_flagged = true;
    CHECK(gap_flagged);
}
