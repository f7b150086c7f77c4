#include <doctest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "gaitkit/pipeline.hpp"
#include "gaitkit/report.hpp"
#include "gaitkit/stream_server.hpp"
#include "gaitkit/synth.hpp"
#include "gaitkit/csv_log.hpp"

using namespace gaitkit;
namespace fs = std::filesystem;

namespace {

int connect_to(std::uint16_t port) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    REQUIRE(fd >= 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    ::inet_pton(AF_INET, "127.0.0.1", &addr.sin_addr);
    REQUIRE(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0);
    return fd;
}

void send_all(int fd, std::string_view data) {
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t n = ::send(fd, data.data() + off, data.size() - off, 0);
        REQUIRE(n > 0);
        off += static_cast<std::size_t>(n);
    }
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void wait_for_sessions(const StreamServer& server, std::size_t count) {
    for (int i = 0; i < 200 && server.sessions_written() < count; ++i)
        std::this_thread::sleep_for(std::chrono::milliseconds(25));
    REQUIRE(server.sessions_written() >= count);
}

fs::path fresh_dir(const char* name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("stream and file analysis produce byte-identical reports") {
    GaitProfile p = normal_profile();
    p.seed = 81;
    const auto [session, truth] = generate(p, 15.0);
    const std::string log = serialize_session(session);
    const Config cfg;
    const std::string file_report = format_report(analyze_log_bytes(log, cfg).report);

    const fs::path dir = fresh_dir("gaitkit_stream_eq");
    StreamServer server("127.0.0.1", 0, dir.string(), cfg);
    server.start();
    const int fd = connect_to(server.port());
    send_all(fd, log);
    ::close(fd);
    wait_for_sessions(server, 1);
    server.stop();

    CHECK(slurp(dir / "session-001-01.txt") == file_report);
}

TEST_CASE("flush marker splits one connection into separate sessions") {
    GaitProfile p = normal_profile();
    p.seed = 82;
    const auto [session, truth] = generate(p, 12.0);
    const std::string log = serialize_session(session);

    const fs::path dir = fresh_dir("gaitkit_stream_flush");
    StreamServer server("127.0.0.1", 0, dir.string(), Config{});
    server.start();
    const int fd = connect_to(server.port());
    send_all(fd, log);
    send_all(fd, "#flush\n");
    send_all(fd, log);
    ::close(fd);
    wait_for_sessions(server, 2);
    server.stop();

    const std::string a = slurp(dir / "session-001-01.txt");
    const std::string b = slurp(dir / "session-001-02.txt");
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("malformed mid-stream lines are diagnosed, the rest is processed") {
    GaitProfile p = normal_profile();
    p.seed = 83;
    const auto [session, truth] = generate(p, 12.0);
    std::string log = serialize_session(session);
    log.insert(log.find('\n', log.find('\n') + 1) + 1, "garbage,line\n");

    const fs::path dir = fresh_dir("gaitkit_stream_bad");
    StreamServer server("127.0.0.1", 0, dir.string(), Config{});
    server.start();
    const int fd = connect_to(server.port());
    send_all(fd, log);
    ::close(fd);
    wait_for_sessions(server, 1);
    server.stop();

    const std::string report = slurp(dir / "session-001-01.txt");
    CHECK(report.find("ProtocolError") != std::string::npos);
    CHECK(report.find("cadence_steps_per_min") != std::string::npos);
}

TEST_CASE("concurrent connections are isolated") {
    GaitProfile pa = normal_profile();
    pa.seed = 84;
    GaitProfile pb = stroke_left_profile();
    pb.seed = 85;
    const std::string log_a = serialize_session(generate(pa, 12.0).first);
    const std::string log_b = serialize_session(generate(pb, 12.0).first);
    const Config cfg;
    const std::string rep_a = format_report(analyze_log_bytes(log_a, cfg).report);
    const std::string rep_b = format_report(analyze_log_bytes(log_b, cfg).report);

    const fs::path dir = fresh_dir("gaitkit_stream_conc");
    StreamServer server("127.0.0.1", 0, dir.string(), cfg);
    server.start();
    const int fa = connect_to(server.port());
    const int fb = connect_to(server.port());
    // Interleave chunks from both connections.
    std::size_t oa = 0, ob = 0;
    const std::size_t chunk = 8192;
    while (oa < log_a.size() || ob < log_b.size()) {
        if (oa < log_a.size()) {
            const std::size_t n = std::min(chunk, log_a.size() - oa);
            send_all(fa, std::string_view(log_a).substr(oa, n));
            oa += n;
        }
        if (ob < log_b.size()) {
            const std::size_t n = std::min(chunk, log_b.size() - ob);
            send_all(fb, std::string_view(log_b).substr(ob, n));
            ob += n;
        }
    }
    ::close(fa);
    ::close(fb);
    wait_for_sessions(server, 2);
    server.stop();

    // Connection ids follow accept order.
    const std::string r1 = slurp(dir / "session-001-01.txt");
    const std::string r2 = slurp(dir / "session-002-01.txt");
    CHECK(r1 == rep_a);
    CHECK(r2 == rep_b);
}
