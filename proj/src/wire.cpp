#include "gac/wire.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

namespace gac {
namespace wire {

Bytes encode_frame(const Frame& frame) {
    Bytes out;
    out.push_back(static_cast<char>(frame.version));
    out.push_back(static_cast<char>(frame.type));
    append_be32(out, static_cast<uint32_t>(frame.payload.size()));
    out += frame.payload;
    return out;
}

Frame decode_frame(const Bytes& in, size_t& offset) {
    if (offset + 6 > in.size()) {
        throw TransportError("frame header truncated");
    }
    Frame frame;
    frame.version = static_cast<uint8_t>(in[offset]);
    if (frame.version != kProtocolVersion) {
        throw TransportError("unsupported frame version " + std::to_string(frame.version));
    }
    const uint8_t type = static_cast<uint8_t>(in[offset + 1]);
    if (type < 1 || type > 3) {
        throw TransportError("unknown frame type " + std::to_string(type));
    }
    frame.type = static_cast<FrameType>(type);
    const uint32_t len = read_be32(in, offset + 2);
    if (len > kMaxPayload) {
        throw TransportError("frame payload too large");
    }
    if (offset + 6 + len > in.size()) {
        throw TransportError("frame payload truncated");
    }
    frame.payload = in.substr(offset + 6, len);
    offset += 6 + len;
    return frame;
}

// --- in-process transport ---

struct LocalDuplex::Channel {
    std::mutex mutex;
    std::condition_variable ready;
    std::deque<Frame> queue;
    bool closed = false;

    void push(const Frame& frame) {
        {
            std::lock_guard<std::mutex> lock(mutex);
            queue.push_back(frame);
        }
        ready.notify_one();
    }
    Frame pop() {
        std::unique_lock<std::mutex> lock(mutex);
        ready.wait(lock, [&] { return !queue.empty() || closed; });
        if (queue.empty()) {
            throw TransportError("local channel closed");
        }
        Frame frame = std::move(queue.front());
        queue.pop_front();
        return frame;
    }
};

class LocalDuplex::Endpoint : public Transport {
public:
    Endpoint(std::shared_ptr<Channel> out, std::shared_ptr<Channel> in)
        : out_(std::move(out)), in_(std::move(in)) {}

    void send(const Frame& frame) override { out_->push(frame); }
    Frame recv() override { return in_->pop(); }

private:
    std::shared_ptr<Channel> out_;
    std::shared_ptr<Channel> in_;
};

LocalDuplex::LocalDuplex()
    : a_to_b_(std::make_shared<Channel>()), b_to_a_(std::make_shared<Channel>()),
      a_end_(std::make_unique<Endpoint>(a_to_b_, b_to_a_)),
      b_end_(std::make_unique<Endpoint>(b_to_a_, a_to_b_)) {}

LocalDuplex::~LocalDuplex() = default;

Transport& LocalDuplex::a() { return *a_end_; }
Transport& LocalDuplex::b() { return *b_end_; }

// --- TCP transport ---

namespace {

void write_full(int fd, const char* data, size_t n) {
    while (n > 0) {
        const ssize_t wrote = ::write(fd, data, n);
        if (wrote <= 0) {
            throw TransportError("socket write failed: " + std::string(std::strerror(errno)));
        }
        data += wrote;
        n -= static_cast<size_t>(wrote);
    }
}

void read_full(int fd, char* data, size_t n) {
    while (n > 0) {
        const ssize_t got = ::read(fd, data, n);
        if (got == 0) {
            throw TransportError("socket closed mid-frame");
        }
        if (got < 0) {
            throw TransportError("socket read failed: " + std::string(std::strerror(errno)));
        }
        data += got;
        n -= static_cast<size_t>(got);
    }
}

}  // namespace

TcpTransport::~TcpTransport() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

void TcpTransport::send(const Frame& frame) {
    const Bytes encoded = encode_frame(frame);
    write_full(fd_, encoded.data(), encoded.size());
}

Frame TcpTransport::recv() {
    char header[6];
    read_full(fd_, header, sizeof(header));
    Bytes buffer(header, sizeof(header));
    const uint32_t len = read_be32(buffer, 2);
    if (len > kMaxPayload) {
        throw TransportError("frame payload too large");
    }
    buffer.resize(6 + len);
    if (len > 0) {
        read_full(fd_, buffer.data() + 6, len);
    }
    size_t offset = 0;
    return decode_frame(buffer, offset);
}

TcpListener::TcpListener(uint16_t port) : fd_(-1), port_(0) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) {
        throw TransportError("socket() failed");
    }
    const int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
        ::close(fd_);
        throw TransportError("bind() failed: " + std::string(std::strerror(errno)));
    }
    if (::listen(fd_, 8) < 0) {
        ::close(fd_);
        throw TransportError("listen() failed");
    }
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

std::unique_ptr<TcpTransport> TcpListener::accept_one() {
    const int client = ::accept(fd_, nullptr, nullptr);
    if (client < 0) {
        throw TransportError("accept() failed");
    }
    return std::make_unique<TcpTransport>(client);
}

std::unique_ptr<TcpTransport> tcp_connect(const std::string& host, uint16_t port, int attempts) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        throw TransportError("bad host address: " + host);
    }
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd < 0) {
            throw TransportError("socket() failed");
        }
        if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0) {
            return std::make_unique<TcpTransport>(fd);
        }
        ::close(fd);
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
    throw TransportError("connect() failed after retries");
}

// --- framed sessions ---

Transcript run_verifier_session(Transport& transport, const ProtocolInstance& inst,
                                uint32_t rounds, RandomTape& tape) {
    Transcript transcript;
    transcript.rounds_count = rounds;
    try {
        bool all_accepted = true;
        for (uint32_t r = 0; r < rounds; ++r) {
            const VerifierState state = verifier_challenge(inst, tape);
            transport.send(Frame{kProtocolVersion, FrameType::challenge, state.challenge.bytes});
            const Frame reply = transport.recv();
            if (reply.type != FrameType::response || reply.payload.size() != 1) {
                throw TransportError("expected a one-byte response frame");
            }
            const int response = reply.payload[0] ? 1 : 0;
            TranscriptRound round;
            round.challenge = state.challenge;
            round.response = response;
            round.accepted = (response == state.b);
            all_accepted = all_accepted && round.accepted;
            transcript.rounds.push_back(std::move(round));
        }
        transcript.verdict = all_accepted;
        Bytes verdict_payload;
        verdict_payload.push_back(transcript.verdict ? 1 : 0);
        for (const TranscriptRound& round : transcript.rounds) {
            verdict_payload.push_back(round.accepted ? 1 : 0);
        }
        transport.send(Frame{kProtocolVersion, FrameType::verdict, verdict_payload});
    } catch (const TransportError& err) {
        transcript.verdict = false;
        transcript.diagnostic = err.what();
    }
    return transcript;
}

Transcript run_prover_session(Transport& transport, Prover& prover) {
    Transcript transcript;
    try {
        for (;;) {
            const Frame frame = transport.recv();
            if (frame.type == FrameType::challenge) {
                const SetElement challenge{frame.payload};
                const int response = prover.respond(challenge);
                TranscriptRound round;
                round.challenge = challenge;
                round.response = response;
                transcript.rounds.push_back(std::move(round));
                Bytes payload;
                payload.push_back(static_cast<char>(response));
                transport.send(Frame{kProtocolVersion, FrameType::response, payload});
            } else if (frame.type == FrameType::verdict) {
                if (frame.payload.size() != 1 + transcript.rounds.size()) {
                    throw TransportError("verdict payload length mismatch");
                }
                transcript.verdict = frame.payload[0] != 0;
                transcript.rounds_count = static_cast<uint32_t>(transcript.rounds.size());
                for (size_t r = 0; r < transcript.rounds.size(); ++r) {
                    transcript.rounds[r].accepted = frame.payload[1 + r] != 0;
                }
                return transcript;
            } else {
                throw TransportError("unexpected frame type");
            }
        }
    } catch (const TransportError& err) {
        transcript.verdict = false;
        transcript.rounds_count = static_cast<uint32_t>(transcript.rounds.size());
        transcript.diagnostic = err.what();
        return transcript;
    }
}

Transcript run_local_session(const ProtocolInstance& inst, Prover& prover, uint32_t rounds,
                             RandomTape& tape) {
    LocalDuplex duplex;
    Transcript prover_view;
    std::thread prover_thread(
        [&] { prover_view = run_prover_session(duplex.b(), prover); });
    Transcript verifier_view = run_verifier_session(duplex.a(), inst, rounds, tape);
    prover_thread.join();
    if (!(prover_view.serialize() == verifier_view.serialize())) {
        throw TransportError("local session views diverged");
    }
    return verifier_view;
}

}  // namespace wire
}  // namespace gac
