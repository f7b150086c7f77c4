#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gaitkit/csv_log.hpp"
#include "gaitkit/pipeline.hpp"
#include "gaitkit/report.hpp"
#include "gaitkit/stream_server.hpp"
#include "gaitkit/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;     // input / validation errors
constexpr int kExitInternal = 3;  // broken internal contract

volatile std::sig_atomic_t g_stop_requested = 0;
void handle_signal(int) { g_stop_requested = 1; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gaitkit::GaitError("InputNotFound", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gaitkit::GaitError("OutputNotWritable", path);
    out << body;
}

int cmd_analyze(const std::string& input, const std::string& config_path,
                const std::string& output, const std::string& plot_path) {
    gaitkit::Config cfg;
    if (!config_path.empty()) cfg = gaitkit::load_config_file(config_path);
    const std::string bytes = read_file(input);
    gaitkit::AnalysisResult result = gaitkit::analyze_log_bytes(bytes, cfg);
    write_file(output, gaitkit::format_report(result.report));
    if (!plot_path.empty())
        write_file(plot_path, gaitkit::format_plot_data(result.curves[0], result.curves[1]));
    return kExitOk;
}

int cmd_generate(const std::string& profile_name, double duration, std::uint64_t seed,
                 const std::string& output, bool with_noise) {
    gaitkit::GaitProfile profile = gaitkit::profile_by_name(profile_name);
    profile.seed = seed;
    if (with_noise) gaitkit::apply_default_noise(profile);
    const auto [session, truth] = gaitkit::generate(profile, duration);
    write_file(output, gaitkit::serialize_session(session));
    write_file(output + ".truth", gaitkit::serialize_ground_truth(profile, truth));
    return kExitOk;
}

int cmd_stream(const std::string& listen, const std::string& output_dir,
               const std::string& config_path) {
    gaitkit::Config cfg;
    if (!config_path.empty()) cfg = gaitkit::load_config_file(config_path);
    const std::size_t colon = listen.rfind(':');
    if (colon == std::string::npos)
        throw gaitkit::GaitError("BindFailure", "listen address must be HOST:PORT");
    const std::string host = listen.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(listen.substr(colon + 1));
    } catch (const std::exception&) {
        throw gaitkit::GaitError("BindFailure", "bad port in " + listen);
    }
    if (port < 0 || port > 65535)
        throw gaitkit::GaitError("BindFailure", "bad port in " + listen);

    gaitkit::StreamServer server(host, static_cast<std::uint16_t>(port), output_dir, cfg);
    server.start();
    std::fprintf(stderr, "listening on %s:%u, reports in %s\n", host.c_str(),
                 server.port(), output_dir.c_str());
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    while (!g_stop_requested)
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaitkit: spatial-temporal gait parameters from two-foot "
                 "inertial + insole-pressure logs"};
    app.require_subcommand(1);

    std::string input, config_path, output, plot_path;
    auto* analyze = app.add_subcommand("analyze", "analyze a recorded CSV log");
    analyze->add_option("--input", input, "CSV log file")->required();
    analyze->add_option("--config", config_path, "key=value config file");
    analyze->add_option("--output", output, "report file to write")->required();
    analyze->add_option("--plot-data", plot_path, "per-sample curves CSV");

    std::string profile_name = "normal";
    double duration = 60.0;
    std::uint64_t seed = 1;
    std::string gen_output;
    bool with_noise = false;
    auto* generate = app.add_subcommand("generate", "write a synthetic log + ground truth");
    generate->add_option("--profile", profile_name, "normal | stroke-left | stroke-right");
    generate->add_option("--duration", duration, "seconds of walking");
    generate->add_option("--seed", seed, "RNG seed");
    generate->add_option("--output", gen_output, "CSV file to write")->required();
    generate->add_flag("--noise", with_noise, "add the profile's default sensor noise");

    std::string listen = "127.0.0.1:7066", output_dir = ".";
    auto* stream = app.add_subcommand("stream", "ingest frames over TCP until interrupted");
    stream->add_option("--listen", listen, "HOST:PORT to bind");
    stream->add_option("--output-dir", output_dir, "directory for session reports");
    stream->add_option("--config", config_path, "key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(input, config_path, output, plot_path);
        if (generate->parsed())
            return cmd_generate(profile_name, duration, seed, gen_output, with_noise);
        if (stream->parsed()) return cmd_stream(listen, output_dir, config_path);
    } catch (const gaitkit::GaitError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitOk;
}
