// Private-coin interactive protocol deciding that two set elements lie in
// different orbits. Per round the verifier draws a secret bit b and a secret
// uniform g, sends the challenge x = g star y_b, and accepts when the
// prover's answer names b. Disjoint orbits let an unbounded prover answer
// from orbit membership every time; in one orbit the challenge distribution
// carries no information about b, so any prover passes a round with
// probability exactly one half.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gac/action.hpp"
#include "gac/instances.hpp"

namespace gac {

struct ProtocolInstance {
    ActionDescriptor action;
    SetElement y0;
    SetElement y1;

    // Rejects transitive actions and non-member elements.
    ProtocolInstance(ActionDescriptor a, SetElement y0_in, SetElement y1_in);
};

// Secret per-round verifier state; only `challenge` ever leaves the verifier.
struct VerifierState {
    int b = 0;
    GroupElement g;
    SetElement challenge;
};

// Draws one bit then one uniform group element from the tape.
VerifierState verifier_challenge(const ProtocolInstance& inst, RandomTape& tape);

class Prover {
public:
    virtual ~Prover() = default;
    virtual int respond(const SetElement& challenge) = 0;
};

// Unbounded prover: precomputes both orbits, answers the unique matching
// side, and flips its own coin when the challenge lies in both orbits.
// NeitherOrbitError on challenges in neither orbit (a corrupted message).
class HonestProver : public Prover {
public:
    HonestProver(const ProtocolInstance& inst, RandomTape coin,
                 uint64_t bound = kDefaultEnumBound);
    int respond(const SetElement& challenge) override;

private:
    std::set<Bytes> orbit0_;
    std::set<Bytes> orbit1_;
    RandomTape coin_;
};

// Optimal strategy witness for one-orbit instances: since the challenge law
// is identical under b = 0 and b = 1, no strategy beats a coin toss, so a
// constant answer is already optimal. InvalidParameterError unless the
// instance really is one orbit.
int best_cheating_prover_respond(const ProtocolInstance& inst, const SetElement& challenge,
                                 uint64_t bound = kDefaultEnumBound);

class CheatingProver : public Prover {
public:
    explicit CheatingProver(const ProtocolInstance& inst, uint64_t bound = kDefaultEnumBound);
    int respond(const SetElement& challenge) override;

private:
    ProtocolInstance inst_;
};

// Answers an independent fair coin per challenge.
class GuessingProver : public Prover {
public:
    explicit GuessingProver(RandomTape coin) : coin_(std::move(coin)) {}
    int respond(const SetElement&) override { return coin_.read_bit() ? 1 : 0; }

private:
    RandomTape coin_;
};

struct TranscriptRound {
    SetElement challenge;
    int response = 0;
    bool accepted = false;
};

struct Transcript {
    std::vector<TranscriptRound> rounds;
    bool verdict = false;  // accept iff every round accepted
    uint32_t rounds_count = 0;
    std::string diagnostic;  // set when a transport failure forced a reject

    // Deterministic byte serialization for replay comparison.
    Bytes serialize() const;
};

// k sequential rounds with fresh verifier randomness from `tape`; the
// verdict accepts iff all rounds matched.
Transcript run_session(const ProtocolInstance& inst, Prover& prover, uint32_t rounds,
                       RandomTape& tape);

}  // namespace gac
