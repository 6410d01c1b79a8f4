// Frame codec and framed sessions: the in-process transport and the TCP
// transport must produce byte-identical transcripts for equal seeds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <thread>

#include "doctest.h"
#include "gac/actions.hpp"
#include "gac/wire.hpp"

using namespace gac;
using namespace gac::wire;

namespace {

SetElement graph3(std::initializer_list<std::pair<int, int>> edges) {
    Graph g(3);
    for (const auto& [u, v] : edges) {
        g.set_edge(static_cast<uint8_t>(u), static_cast<uint8_t>(v), true);
    }
    return graph_set_element(g);
}

ProtocolInstance triangle_vs_path() {
    return ProtocolInstance(build_action(ActionSpec::graph_iso(3)),
                            graph3({{0, 1}, {1, 2}, {0, 2}}), graph3({{0, 1}, {1, 2}}));
}

}  // namespace

TEST_CASE("frame codec round-trips and rejects malformed frames") {
    const Frame frame{kProtocolVersion, FrameType::challenge, Bytes("payload")};
    const Bytes encoded = encode_frame(frame);
    CHECK(encoded.size() == 6 + 7);
    CHECK(static_cast<uint8_t>(encoded[0]) == kProtocolVersion);

    size_t offset = 0;
    const Frame back = decode_frame(encoded, offset);
    CHECK(offset == encoded.size());
    CHECK(back.type == FrameType::challenge);
    CHECK(back.payload == "payload");

    Bytes bad_version = encoded;
    bad_version[0] = 9;
    offset = 0;
    CHECK_THROWS_AS(decode_frame(bad_version, offset), TransportError);

    Bytes bad_type = encoded;
    bad_type[1] = 7;
    offset = 0;
    CHECK_THROWS_AS(decode_frame(bad_type, offset), TransportError);

    offset = 0;
    CHECK_THROWS_AS(decode_frame(Bytes("\x01\x01"), offset), TransportError);
}

TEST_CASE("local frame session reproduces the direct session") {
    const ProtocolInstance inst = triangle_vs_path();

    HonestProver direct_prover(inst, RandomTape::seeded(100));
    RandomTape direct_tape = RandomTape::seeded(7);
    const Transcript direct = run_session(inst, direct_prover, 5, direct_tape);

    HonestProver framed_prover(inst, RandomTape::seeded(100));
    RandomTape framed_tape = RandomTape::seeded(7);
    const Transcript framed = run_local_session(inst, framed_prover, 5, framed_tape);

    CHECK(direct.serialize() == framed.serialize());
    CHECK(framed.verdict);
}

TEST_CASE("tcp session matches the local session byte for byte") {
    const ProtocolInstance inst = triangle_vs_path();

    for (uint64_t seed : {1ull, 2ull, 42ull}) {
        HonestProver local_prover(inst, RandomTape::seeded(seed * 11));
        RandomTape local_tape = RandomTape::seeded(seed);
        const Transcript local = run_local_session(inst, local_prover, 4, local_tape);

        TcpListener listener(0);
        Transcript remote_prover_view;
        std::thread prover_thread([&] {
            auto transport = tcp_connect("127.0.0.1", listener.port());
            HonestProver prover(inst, RandomTape::seeded(seed * 11));
            remote_prover_view = run_prover_session(*transport, prover);
        });
        auto server_side = listener.accept_one();
        RandomTape tcp_tape = RandomTape::seeded(seed);
        const Transcript tcp = run_verifier_session(*server_side, inst, 4, tcp_tape);
        prover_thread.join();

        REQUIRE(tcp.serialize() == local.serialize());
        REQUIRE(remote_prover_view.serialize() == local.serialize());
    }
}

TEST_CASE("verifier records transport failures as a rejecting verdict") {
    // the 'prover' replies with a verdict frame out of turn
    LocalDuplex duplex;
    std::thread bogus([&] {
        (void)duplex.b().recv();
        duplex.b().send(Frame{kProtocolVersion, FrameType::verdict, Bytes("\x01", 1)});
    });
    const ProtocolInstance inst = triangle_vs_path();
    RandomTape tape = RandomTape::seeded(3);
    const Transcript t = run_verifier_session(duplex.a(), inst, 2, tape);
    bogus.join();
    CHECK_FALSE(t.verdict);
    CHECK_FALSE(t.diagnostic.empty());
}

TEST_CASE("prover flags verdict payload length mismatches") {
    LocalDuplex duplex;
    const ProtocolInstance inst = triangle_vs_path();
    std::thread verifier([&] {
        // one challenge, then a verdict missing its per-round flags
        duplex.a().send(Frame{kProtocolVersion, FrameType::challenge,
                              inst.y0.bytes});
        (void)duplex.a().recv();
        duplex.a().send(Frame{kProtocolVersion, FrameType::verdict, Bytes("\x01", 1)});
    });
    HonestProver prover(inst, RandomTape::seeded(0));
    const Transcript t = run_prover_session(duplex.b(), prover);
    verifier.join();
    CHECK_FALSE(t.verdict);
    CHECK_FALSE(t.diagnostic.empty());
}
