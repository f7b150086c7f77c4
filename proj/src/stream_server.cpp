#include "gaitkit/stream_server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string_view>

#include "gaitkit/csv_log.hpp"
#include "gaitkit/pipeline.hpp"
#include "gaitkit/report.hpp"

namespace gaitkit {

namespace {

// Per-connection session state. Frames are buffered as raw rows so the
// analysis path is byte-for-byte the same as file analysis.
struct ConnectionSession {
    std::string rows;
    std::size_t frame_count = 0;
    std::size_t dropped = 0;
    std::size_t bad_lines = 0;
};

}  // namespace

StreamServer::StreamServer(std::string host, std::uint16_t port, std::string output_dir,
                           Config cfg)
    : host_(std::move(host)), port_(port), output_dir_(std::move(output_dir)),
      cfg_(cfg) {}

StreamServer::~StreamServer() { stop(); }

void StreamServer::start() {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw GaitError("BindFailure", "socket: " + std::string(strerror(errno)));
    int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port_);
    if (::inet_pton(AF_INET, host_.c_str(), &addr.sin_addr) != 1) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw GaitError("BindFailure", "bad listen address: " + host_);
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
        ::listen(listen_fd_, 16) != 0) {
        const std::string why = strerror(errno);
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw GaitError("BindFailure", host_ + ":" + std::to_string(port_) + ": " + why);
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);

    std::error_code ec;
    std::filesystem::create_directories(output_dir_, ec);
    if (ec) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw GaitError("OutputNotWritable", output_dir_ + ": " + ec.message());
    }
    running_ = true;
    accept_thread_ = std::thread(&StreamServer::accept_loop, this);
}

void StreamServer::stop() {
    if (!running_.exchange(false)) return;
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
    if (accept_thread_.joinable()) accept_thread_.join();
    for (std::thread& t : workers_)
        if (t.joinable()) t.join();
    workers_.clear();
}

void StreamServer::accept_loop() {
    std::size_t next_conn = 0;
    while (running_) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) break;  // listener closed
        const std::size_t conn_id = ++next_conn;
        workers_.emplace_back(&StreamServer::serve_connection, this, fd, conn_id);
    }
}

void StreamServer::serve_connection(int fd, std::size_t conn_id) {
    ConnectionSession session;
    std::size_t seq = 0;

    auto flush_session = [&]() {
        if (session.frame_count == 0) {
            session = ConnectionSession{};
            return;
        }
        ++seq;
        char name[64];
        std::snprintf(name, sizeof name, "session-%03zu-%02zu.txt", conn_id, seq);
        const std::filesystem::path path = std::filesystem::path(output_dir_) / name;
        std::string log(kCsvHeader);
        log += '\n';
        log += session.rows;
        std::string body;
        try {
            AnalysisResult result = analyze_log_bytes(log, cfg_);
            if (session.dropped > 0)
                result.report.diagnostics.push_back(
                    {"FrameDropped",
                     std::to_string(session.dropped) + " frames beyond the buffer cap",
                     std::nullopt});
            if (session.bad_lines > 0)
                result.report.diagnostics.push_back(
                    {"ProtocolError", std::to_string(session.bad_lines) + " malformed lines",
                     std::nullopt});
            body = format_report(result.report);
        } catch (const GaitError& e) {
            body = std::string("# gait report\nerror = ") + e.what() + "\n";
        }
        std::ofstream out(path, std::ios::binary);
        out << body;
        out.close();
        ++sessions_written_;
        session = ConnectionSession{};
    };

    std::string pending;
    char buf[4096];
    for (;;) {
        const ssize_t got = ::recv(fd, buf, sizeof buf, 0);
        if (got <= 0) break;
        pending.append(buf, static_cast<std::size_t>(got));
        std::size_t start = 0;
        for (;;) {
            const std::size_t nl = pending.find('\n', start);
            if (nl == std::string::npos) break;
            std::string_view line(pending.data() + start, nl - start);
            start = nl + 1;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty()) continue;
            if (line == "#flush") {
                flush_session();
                continue;
            }
            if (line.front() == '#' || line.substr(0, 5) == "t_ms,") continue;
            // Validate the row now so one bad line cannot poison the session.
            try {
                parse_csv_row(line, session.frame_count + 1);
            } catch (const GaitError&) {
                ++session.bad_lines;
                continue;
            }
            if (session.frame_count >= kMaxBufferedFrames) {
                ++session.dropped;
                continue;
            }
            session.rows.append(line);
            session.rows.push_back('\n');
            ++session.frame_count;
        }
        pending.erase(0, start);
    }
    flush_session();
    ::close(fd);
}

}  // namespace gaitkit
