// Challenge generation, prover strategies, session verdicts and the exact
// probability claims, all by full enumeration of the verifier's tape space
// (4 bits per round on graphiso-3: one secret bit plus one S3 sample).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <map>

#include "doctest.h"
#include "gac/actions.hpp"
#include "gac/ip.hpp"
#include "gac/oracle.hpp"
#include "gac/stats.hpp"

using namespace gac;

namespace {

ActionDescriptor graphiso3() { return build_action(ActionSpec::graph_iso(3)); }

SetElement graph3(std::initializer_list<std::pair<int, int>> edges) {
    Graph g(3);
    for (const auto& [u, v] : edges) {
        g.set_edge(static_cast<uint8_t>(u), static_cast<uint8_t>(v), true);
    }
    return graph_set_element(g);
}

SetElement triangle() { return graph3({{0, 1}, {1, 2}, {0, 2}}); }
SetElement path123() { return graph3({{0, 1}, {1, 2}}); }
SetElement path213() { return graph3({{1, 0}, {0, 2}}); }
SetElement empty3() { return graph3({}); }

// Wraps a plain function as a prover strategy.
class LambdaProver : public Prover {
public:
    explicit LambdaProver(std::function<int(const SetElement&)> fn) : fn_(std::move(fn)) {}
    int respond(const SetElement& challenge) override { return fn_(challenge); }

private:
    std::function<int(const SetElement&)> fn_;
};

// Enumerates the verifier tape space for k rounds against a prover factory
// (fresh prover per tape so prover coins can be part of the enumeration).
struct SessionCensus {
    uint64_t accepted_sessions = 0;
    uint64_t completed_sessions = 0;
};

SessionCensus enumerate_sessions(const ProtocolInstance& inst, uint32_t rounds,
                                 uint32_t bits_per_round,
                                 const std::function<std::unique_ptr<Prover>()>& make_prover) {
    SessionCensus census;
    const uint32_t bits = rounds * bits_per_round;
    for (uint64_t index = 0; index < (1ull << bits); ++index) {
        RandomTape tape = RandomTape::from_index(index, bits);
        auto prover = make_prover();
        try {
            const Transcript t = run_session(inst, *prover, rounds, tape);
            ++census.completed_sessions;
            if (t.verdict) {
                ++census.accepted_sessions;
            }
        } catch (const TapeExhaustedError&) {
        }
    }
    return census;
}

}  // namespace

TEST_CASE("protocol instances require non-transitive actions") {
    auto mod = build_action(ActionSpec::mod_add(12));
    CHECK_THROWS_AS(ProtocolInstance(mod, residue_set_element(0), residue_set_element(1)),
                    InvalidParameterError);
    CHECK_THROWS_AS(ProtocolInstance(graphiso3(), triangle(), SetElement{"junk"}),
                    MembershipError);
}

TEST_CASE("verifier_challenge uses one bit and one group sample") {
    const ProtocolInstance inst(graphiso3(), triangle(), path123());

    // b = 0, identity relabeling: the challenge is y0 itself
    RandomTape t0 = RandomTape::from_bits("0000");
    const VerifierState s0 = verifier_challenge(inst, t0);
    CHECK(s0.b == 0);
    CHECK(s0.challenge == triangle());

    // b = 1, g = the transposition swapping vertices 0 and 1
    RandomTape t1 = RandomTape::from_bits("1010");
    const VerifierState s1 = verifier_challenge(inst, t1);
    CHECK(s1.b == 1);
    CHECK(s1.g == perm_group_element({1, 0, 2}));
    CHECK(s1.challenge == path213());
    CHECK(s1.challenge == act(inst.action, s1.g, inst.y1));
}

TEST_CASE("honest prover answers from orbit membership") {
    const ProtocolInstance inst(graphiso3(), triangle(), path123());
    HonestProver prover(inst, RandomTape::seeded(3));

    CHECK(prover.respond(triangle()) == 0);   // only the triangle orbit
    CHECK(prover.respond(path213()) == 1);    // a relabeled path
    CHECK_THROWS_AS(prover.respond(empty3()), NeitherOrbitError);
}

TEST_CASE("honest prover guesses from its own coin when both orbits match") {
    const ProtocolInstance iso(graphiso3(), path123(), path213());
    HonestProver heads(iso, RandomTape::from_bits("1"));
    CHECK(heads.respond(path123()) == 1);
    HonestProver tails(iso, RandomTape::from_bits("0"));
    CHECK(tails.respond(path123()) == 0);
}

TEST_CASE("completeness on a disjoint-orbit instance is exact") {
    const ProtocolInstance inst(graphiso3(), triangle(), path123());
    const SessionCensus census = enumerate_sessions(inst, 1, 4, [&] {
        return std::make_unique<HonestProver>(inst, RandomTape::seeded(0));
    });
    CHECK(census.completed_sessions == 12);  // 2 * |S3| accepted tapes
    CHECK(census.accepted_sessions == 12);   // no round ever rejects
}

TEST_CASE("ten seeded rounds accept on a disjoint-orbit instance") {
    const ProtocolInstance inst(graphiso3(), triangle(), path123());
    HonestProver prover(inst, RandomTape::seeded(1));
    RandomTape tape = RandomTape::seeded(7);
    const Transcript t = run_session(inst, prover, 10, tape);
    CHECK(t.verdict);
    CHECK(t.rounds_count == 10);
    uint32_t accepted = 0;
    for (const auto& round : t.rounds) {
        accepted += round.accepted ? 1 : 0;
    }
    CHECK(accepted == 10);
}

TEST_CASE("challenge distributions: identical across b on one-orbit inputs") {
    auto a = graphiso3();
    auto conditional_histogram = [&](const ProtocolInstance& inst, int b) {
        Histogram h;
        for (uint64_t index = 0; index < 16; ++index) {
            RandomTape tape = RandomTape::from_index(index, 4);
            try {
                const VerifierState s = verifier_challenge(inst, tape);
                if (s.b == b) {
                    h.add(s.challenge.bytes);
                }
            } catch (const TapeExhaustedError&) {
            }
        }
        return h;
    };

    const ProtocolInstance iso(a, path123(), path213());
    CHECK(tv_distance(conditional_histogram(iso, 0), conditional_histogram(iso, 1)) ==
          Rational(0));

    // and fully distinguishable when the orbits are disjoint
    const ProtocolInstance far(a, triangle(), path123());
    CHECK(tv_distance(conditional_histogram(far, 0), conditional_histogram(far, 1)) ==
          Rational(1));
}

TEST_CASE("per-round soundness is exactly one half on one-orbit instances") {
    const ProtocolInstance iso(graphiso3(), path123(), path213());

    // the constant strategy
    const SessionCensus fixed = enumerate_sessions(iso, 1, 4, [&] {
        return std::make_unique<CheatingProver>(iso);
    });
    CHECK(fixed.completed_sessions == 12);
    CHECK(fixed.accepted_sessions == 6);

    // any deterministic strategy lands on one half as well
    const SessionCensus fancy = enumerate_sessions(iso, 1, 4, [&] {
        return std::make_unique<LambdaProver>(
            [](const SetElement& x) { return fnv1a64(x.bytes) & 1 ? 1 : 0; });
    });
    CHECK(fancy.accepted_sessions * 2 == fancy.completed_sessions);

    // the honest prover's coin joins the enumeration: 24 combined outcomes
    uint64_t accepted = 0, completed = 0;
    for (uint64_t coin = 0; coin < 2; ++coin) {
        const SessionCensus honest = enumerate_sessions(iso, 1, 4, [&] {
            return std::make_unique<HonestProver>(
                iso, RandomTape::from_bits(coin ? "1" : "0"));
        });
        accepted += honest.accepted_sessions;
        completed += honest.completed_sessions;
    }
    CHECK(completed == 24);
    CHECK(accepted == 12);
}

TEST_CASE("two sequential rounds accept with probability exactly 1/4") {
    const ProtocolInstance iso(graphiso3(), path123(), path213());
    const SessionCensus census = enumerate_sessions(iso, 2, 4, [&] {
        return std::make_unique<CheatingProver>(iso);
    });
    CHECK(census.completed_sessions == 144);
    CHECK(census.accepted_sessions == 36);
}

TEST_CASE("best cheating strategy is legal only on one-orbit instances") {
    const ProtocolInstance iso(graphiso3(), path123(), path213());
    CHECK(best_cheating_prover_respond(iso, path123()) == 0);

    const ProtocolInstance far(graphiso3(), triangle(), path123());
    CHECK_THROWS_AS(best_cheating_prover_respond(far, triangle()), InvalidParameterError);
    CHECK_THROWS_AS(CheatingProver{far}, InvalidParameterError);
}

TEST_CASE("session verdicts track delta existence exactly") {
    // accept-on-every-tape against the honest prover happens precisely when
    // the inputs lie in different orbits
    auto a = graphiso3();
    const ActionBackend& b = a.backend();
    for (uint64_t yi = 0; yi < b.set_size(); ++yi) {
        for (uint64_t yj = 0; yj < b.set_size(); ++yj) {
            const SetElement y0 = b.set_element_at(yi);
            const SetElement y1 = b.set_element_at(yj);
            const ProtocolInstance inst(a, y0, y1);
            const bool different_orbits =
                decide_dgaip_bruteforce(a, y0, y1) == 0;
            uint64_t accepted = 0, completed = 0;
            for (uint64_t coin = 0; coin < 2; ++coin) {
                const SessionCensus census = enumerate_sessions(inst, 1, 4, [&] {
                    return std::make_unique<HonestProver>(
                        inst, RandomTape::from_bits(coin ? "1" : "0"));
                });
                accepted += census.accepted_sessions;
                completed += census.completed_sessions;
            }
            if (different_orbits) {
                REQUIRE(accepted == completed);
            } else {
                REQUIRE(accepted * 2 == completed);  // coin flips decide
            }
        }
    }
}

TEST_CASE("transcripts carry only challenges, responses and verdict data") {
    const ProtocolInstance inst(graphiso3(), triangle(), path123());
    HonestProver prover(inst, RandomTape::seeded(1));
    RandomTape tape = RandomTape::seeded(2);
    const Transcript t = run_session(inst, prover, 3, tape);

    // serialized size: rounds_count + per round (length + challenge + two
    // bytes) + verdict byte + empty diagnostic length
    const size_t challenge_size = graph_encoded_size(3);
    CHECK(t.serialize().size() == 4 + 3 * (4 + challenge_size + 2) + 1 + 4);

    // identical runs serialize identically
    HonestProver prover2(inst, RandomTape::seeded(1));
    RandomTape tape2 = RandomTape::seeded(2);
    CHECK(run_session(inst, prover2, 3, tape2).serialize() == t.serialize());

    CHECK_THROWS_AS(run_session(inst, prover, 0, tape), InvalidParameterError);
}

TEST_CASE("protocol works on the code action too") {
    auto code = build_action(ActionSpec::code_perm(3, 1));
    // [1 0 0] and [1 1 1] lie in different orbits (weights differ)
    F2Matrix w1(1, 3), w3(1, 3);
    w1.set(0, 0, true);
    for (uint8_t c = 0; c < 3; ++c) {
        w3.set(0, c, true);
    }
    const ProtocolInstance inst(code, code_set_element(w1), code_set_element(w3));
    HonestProver prover(inst, RandomTape::seeded(5));
    RandomTape tape = RandomTape::seeded(6);
    CHECK(run_session(inst, prover, 8, tape).verdict);
}
