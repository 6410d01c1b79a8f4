// Two-party wire mode for the protocol: length-prefixed binary frames
//   { 1-byte version, 1-byte type, 4-byte big-endian payload length, payload }
// carried over a Transport. A session is CHALLENGE/RESPONSE repeated k times
// followed by one VERDICT whose payload is the final verdict byte plus one
// accepted byte per round. The in-process transport exchanges identical
// frame contents, so wire and local transcripts can be compared byte for
// byte. The verifier's secrets (b, g) never cross the transport.
#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "gac/ip.hpp"

namespace gac {
namespace wire {

inline constexpr uint8_t kProtocolVersion = 1;
inline constexpr size_t kMaxPayload = 1 << 20;

enum class FrameType : uint8_t {
    challenge = 1,
    response = 2,
    verdict = 3,
};

struct Frame {
    uint8_t version = kProtocolVersion;
    FrameType type = FrameType::challenge;
    Bytes payload;
};

Bytes encode_frame(const Frame& frame);
// Decodes one frame from `in` starting at `offset`; TransportError on
// malformed input.
Frame decode_frame(const Bytes& in, size_t& offset);

class Transport {
public:
    virtual ~Transport() = default;
    virtual void send(const Frame& frame) = 0;
    virtual Frame recv() = 0;
};

// In-process duplex: two endpoints over mutex-guarded frame queues.
class LocalDuplex {
public:
    LocalDuplex();
    ~LocalDuplex();
    Transport& a();
    Transport& b();

private:
    struct Channel;
    class Endpoint;
    std::shared_ptr<Channel> a_to_b_;
    std::shared_ptr<Channel> b_to_a_;
    std::unique_ptr<Endpoint> a_end_;
    std::unique_ptr<Endpoint> b_end_;
};

// Blocking framed TCP transport over an owned socket.
class TcpTransport : public Transport {
public:
    explicit TcpTransport(int fd) : fd_(fd) {}
    ~TcpTransport() override;
    TcpTransport(const TcpTransport&) = delete;
    TcpTransport& operator=(const TcpTransport&) = delete;

    void send(const Frame& frame) override;
    Frame recv() override;

private:
    int fd_;
};

class TcpListener {
public:
    // port 0 binds an ephemeral port; port() reports the bound one.
    explicit TcpListener(uint16_t port);
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    uint16_t port() const { return port_; }
    std::unique_ptr<TcpTransport> accept_one();

private:
    int fd_;
    uint16_t port_;
};

// Connects with bounded retries (the peer may still be starting up).
std::unique_ptr<TcpTransport> tcp_connect(const std::string& host, uint16_t port,
                                          int attempts = 50);

// Verifier drives the session: k challenge/response exchanges, then the
// verdict frame. Transport failures surface as a rejecting transcript with
// a diagnostic.
Transcript run_verifier_session(Transport& transport, const ProtocolInstance& inst,
                                uint32_t rounds, RandomTape& tape);
// Prover side: answers challenges until the verdict frame arrives and
// returns its view of the transcript (byte-identical to the verifier's).
Transcript run_prover_session(Transport& transport, Prover& prover);

// One full session over the in-process transport (prover on a second
// thread). Produces the same transcript bytes as the TCP path.
Transcript run_local_session(const ProtocolInstance& inst, Prover& prover, uint32_t rounds,
                             RandomTape& tape);

}  // namespace wire
}  // namespace gac
