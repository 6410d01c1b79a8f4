#include "gac/ip.hpp"

#include "gac/actions.hpp"
#include "gac/oracle.hpp"

namespace gac {

ProtocolInstance::ProtocolInstance(ActionDescriptor a, SetElement y0_in, SetElement y1_in)
    : action(std::move(a)), y0(std::move(y0_in)), y1(std::move(y1_in)) {
    if (action.properties().transitive) {
        throw InvalidParameterError(
            "protocol instance requires a non-transitive action; " + action.id() +
            " is transitive");
    }
    require_set_member(action, y0);
    require_set_member(action, y1);
}

VerifierState verifier_challenge(const ProtocolInstance& inst, RandomTape& tape) {
    VerifierState state;
    state.b = tape.read_bit() ? 1 : 0;
    state.g = sample_group(inst.action, tape);
    state.challenge = act(inst.action, state.g, state.b == 0 ? inst.y0 : inst.y1);
    return state;
}

HonestProver::HonestProver(const ProtocolInstance& inst, RandomTape coin, uint64_t bound)
    : orbit0_(orbit_of(inst.action, inst.y0, bound)),
      orbit1_(orbit_of(inst.action, inst.y1, bound)), coin_(std::move(coin)) {}

int HonestProver::respond(const SetElement& challenge) {
    const bool in0 = orbit0_.count(challenge.bytes) > 0;
    const bool in1 = orbit1_.count(challenge.bytes) > 0;
    if (in0 && in1) {
        // both deltas exist; nothing distinguishes b, so guess
        return coin_.read_bit() ? 1 : 0;
    }
    if (in0) {
        return 0;
    }
    if (in1) {
        return 1;
    }
    throw NeitherOrbitError("challenge lies in neither input orbit");
}

int best_cheating_prover_respond(const ProtocolInstance& inst, const SetElement& challenge,
                                 uint64_t bound) {
    if (!solve_gaip_bruteforce(inst.action, inst.y0, inst.y1, bound).is_found()) {
        throw InvalidParameterError(
            "best_cheating_prover_respond: inputs lie in different orbits");
    }
    (void)challenge;
    return 0;
}

CheatingProver::CheatingProver(const ProtocolInstance& inst, uint64_t bound) : inst_(inst) {
    if (!solve_gaip_bruteforce(inst.action, inst.y0, inst.y1, bound).is_found()) {
        throw InvalidParameterError("CheatingProver: inputs lie in different orbits");
    }
}

int CheatingProver::respond(const SetElement& challenge) {
    return best_cheating_prover_respond(inst_, challenge);
}

Bytes Transcript::serialize() const {
    Bytes out;
    append_be32(out, rounds_count);
    for (const TranscriptRound& round : rounds) {
        append_be32(out, static_cast<uint32_t>(round.challenge.bytes.size()));
        out += round.challenge.bytes;
        out.push_back(static_cast<char>(round.response));
        out.push_back(round.accepted ? 1 : 0);
    }
    out.push_back(verdict ? 1 : 0);
    append_be32(out, static_cast<uint32_t>(diagnostic.size()));
    out += diagnostic;
    return out;
}

Transcript run_session(const ProtocolInstance& inst, Prover& prover, uint32_t rounds,
                       RandomTape& tape) {
    if (rounds < 1) {
        throw InvalidParameterError("run_session: rounds must be >= 1");
    }
    Transcript transcript;
    transcript.rounds_count = rounds;
    bool all_accepted = true;
    for (uint32_t r = 0; r < rounds; ++r) {
        const VerifierState state = verifier_challenge(inst, tape);
        const int response = prover.respond(state.challenge);
        TranscriptRound round;
        round.challenge = state.challenge;
        round.response = response;
        round.accepted = (response == state.b);
        all_accepted = all_accepted && round.accepted;
        transcript.rounds.push_back(std::move(round));
    }
    transcript.verdict = all_accepted;
    return transcript;
}

}  // namespace gac
