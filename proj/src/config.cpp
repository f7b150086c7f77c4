#include "gaitkit/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaitkit/diagnostics.hpp"

namespace gaitkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view v, std::string_view key) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw GaitError("MalformedConfig",
                        "bad numeric value '" + std::string(v) + "' for " + std::string(key));
    return out;
}

std::size_t parse_size(std::string_view v, std::string_view key) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw GaitError("MalformedConfig",
                        "bad integer value '" + std::string(v) + "' for " + std::string(key));
    return out;
}

}  // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw GaitError("MalformedConfig",
                            "line " + std::to_string(line_no) + " has no '='");
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "lpf_cutoff_hz") cfg.lpf_cutoff_hz = parse_double(value, key);
        else if (key == "lpf_taps") cfg.lpf_taps = parse_size(value, key);
        else if (key == "gauss_sigma") cfg.gauss_sigma = parse_double(value, key);
        else if (key == "gauss_taps") cfg.gauss_taps = parse_size(value, key);
        else if (key == "psum_taps") cfg.psum_taps = parse_size(value, key);
        else if (key == "zv_variance_threshold1") cfg.zv_variance_threshold1 = parse_double(value, key);
        else if (key == "zv_variance_threshold2") cfg.zv_variance_threshold2 = parse_double(value, key);
        else if (key == "zv_window_samples") cfg.zv_window_samples = parse_size(value, key);
        else if (key == "stance_rel_threshold") cfg.stance_rel_threshold = parse_double(value, key);
        else if (key == "ev_window_before") cfg.ev_window_before = parse_size(value, key);
        else if (key == "ev_window_after") cfg.ev_window_after = parse_size(value, key);
        else if (key == "ev_neighborhood_r") cfg.ev_neighborhood_r = parse_size(value, key);
        else if (key == "gravity_mps2") cfg.gravity_mps2 = parse_double(value, key);
        else if (key == "zvu_residual_tol_mps") cfg.zvu_residual_tol_mps = parse_double(value, key);
        else
            throw GaitError("UnknownConfigKey", std::string(key));
    }
    if (cfg.zv_variance_threshold2 > cfg.zv_variance_threshold1)
        throw GaitError("MalformedConfig",
                        "zv_variance_threshold2 must not exceed zv_variance_threshold1");
    if (cfg.zv_window_samples < 3)
        throw GaitError("MalformedConfig", "zv_window_samples must be at least 3");
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GaitError("ConfigNotFound", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const Config& cfg) {
    char buf[64];
    std::string out;
    auto put_d = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.6f\n", key, v);
        out += buf;
    };
    auto put_s = [&](const char* key, std::size_t v) {
        std::snprintf(buf, sizeof buf, "%s = %zu\n", key, v);
        out += buf;
    };
    put_d("lpf_cutoff_hz", cfg.lpf_cutoff_hz);
    put_s("lpf_taps", cfg.lpf_taps);
    put_d("gauss_sigma", cfg.gauss_sigma);
    put_s("gauss_taps", cfg.gauss_taps);
    put_s("psum_taps", cfg.psum_taps);
    put_d("zv_variance_threshold1", cfg.zv_variance_threshold1);
    put_d("zv_variance_threshold2", cfg.zv_variance_threshold2);
    put_s("zv_window_samples", cfg.zv_window_samples);
    put_d("stance_rel_threshold", cfg.stance_rel_threshold);
    put_s("ev_window_before", cfg.ev_window_before);
    put_s("ev_window_after", cfg.ev_window_after);
    put_s("ev_neighborhood_r", cfg.ev_neighborhood_r);
    put_d("gravity_mps2", cfg.gravity_mps2);
    put_d("zvu_residual_tol_mps", cfg.zvu_residual_tol_mps);
    return out;
}

}  // namespace gaitkit
