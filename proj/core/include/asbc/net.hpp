#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asbc/config.hpp"
#include "asbc/util.hpp"

namespace asbc {

// Blocking TCP connection carrying length-prefixed messages:
// u32 little-endian byte count, then the bytes. A zero-length message marks
// end of stream. recv_message returns false on a clean close or EOS marker.
class TcpConnection {
  public:
    TcpConnection() = default;
    explicit TcpConnection(int fd) : fd_(fd) {}
    TcpConnection(TcpConnection&& other) noexcept;
    TcpConnection& operator=(TcpConnection&& other) noexcept;
    ~TcpConnection();

    static TcpConnection connect_to(const std::string& host, std::uint16_t port);

    void send_message(BytesView bytes);
    void send_eos();
    bool recv_message(Bytes& out);
    bool valid() const { return fd_ >= 0; }
    void close();

  private:
    int fd_ = -1;
};

class TcpListener {
  public:
    explicit TcpListener(std::uint16_t port);  // 0 picks a free port
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    std::uint16_t port() const { return port_; }
    TcpConnection accept_one();

  private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

struct StreamSendStats {
    std::uint64_t frames = 0;
    std::uint64_t bytes = 0;
    double elapsed_s = 0.0;
};

struct StreamRecvStats {
    std::uint64_t frames = 0;
    std::uint64_t bytes = 0;
    std::uint32_t gaps = 0;
    bool clean_eos = false;
};

// Sends an encoded bitstream (header message first, then one message per
// frame) over a connection. When `pace_fs` > 0, frames are released in real
// time at that sample rate. `on_second` fires about once per second with the
// cumulative payload bitrate.
StreamSendStats stream_send(TcpConnection& conn, BytesView bitstream, double pace_fs,
                            const std::function<void(double bps)>& on_second = {});

// Receives and incrementally decodes a stream. A disconnect mid-stream
// flushes whatever was decoded up to that point.
struct StreamRecvResult {
    std::vector<double> samples;
    StreamRecvStats stats;
    StreamConfig cfg;
    int delay_samples = 0;
};

StreamRecvResult stream_recv(TcpConnection& conn);

}  // namespace asbc
