#ifndef GAITKIT_STREAM_SERVER_HPP_
#define GAITKIT_STREAM_SERVER_HPP_

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "gaitkit/config.hpp"

namespace gaitkit {

// TCP ingest emulating the device link: clients send CSV rows (one frame per
// line); a `#flush` line or the end of the connection closes the current
// session, runs the pipeline and writes `session-<conn>-<seq>.txt` into the
// output directory. Connections are served concurrently with fully isolated
// per-connection state. Frames beyond the buffer cap are dropped with a
// diagnostic.
class StreamServer {
  public:
    static constexpr std::size_t kMaxBufferedFrames = 1'000'000;

    StreamServer(std::string host, std::uint16_t port, std::string output_dir,
                 Config cfg);
    ~StreamServer();

    StreamServer(const StreamServer&) = delete;
    StreamServer& operator=(const StreamServer&) = delete;

    // Binds and starts accepting. Throws GaitError("BindFailure").
    void start();
    // Stops accepting, waits for open connections to finish.
    void stop();

    std::uint16_t port() const { return port_; }  // actual port after start()
    std::size_t sessions_written() const { return sessions_written_.load(); }

  private:
    void accept_loop();
    void serve_connection(int fd, std::size_t conn_id);

    std::string host_;
    std::uint16_t port_;
    std::string output_dir_;
    Config cfg_;
    int listen_fd_ = -1;
    std::atomic<bool> running_{false};
    std::atomic<std::size_t> sessions_written_{0};
    std::thread accept_thread_;
    std::vector<std::thread> workers_;
};

}  // namespace gaitkit

#endif  // GAITKIT_STREAM_SERVER_HPP_
