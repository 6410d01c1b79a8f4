#include "gac/reduce.hpp"

namespace gac {

namespace {

// Discard the samples earlier rounds would have drawn so round i reads its
// own segment; keeps blinders a function of (round, tape contents) only.
void skip_rounds(const ActionDescriptor& a, uint32_t rounds, uint32_t samples_per_round,
                 RandomTape& tape) {
    for (uint32_t r = 0; r < rounds; ++r) {
        for (uint32_t s = 0; s < samples_per_round; ++s) {
            (void)sample_group(a, tape);
        }
    }
}

}  // namespace

GaipBlinders derive_gaip_blinders(const ActionDescriptor& a, uint32_t round, RandomTape& tape) {
    if (round < 1) {
        throw InvalidParameterError("round index is 1-based");
    }
    skip_rounds(a, round - 1, 2, tape);
    GroupElement gx = sample_group(a, tape);
    GroupElement gy = sample_group(a, tape);
    return {std::move(gx), std::move(gy)};
}

GroupElement derive_instance_blinder(const ActionDescriptor& a, uint32_t round,
                                     RandomTape& tape) {
    if (round < 1) {
        throw InvalidParameterError("round index is 1-based");
    }
    skip_rounds(a, round - 1, 1, tape);
    return sample_group(a, tape);
}

uint64_t nominal_round_bits(const ActionDescriptor& a, Problem problem) {
    const uint64_t per_sample = a.backend().group_sample_bits();
    const uint64_t samples = (problem == Problem::gaip) ? 2 : 1;
    return 2 * samples * per_sample;
}

GaipInstance sigma_gaip(const ActionDescriptor& a, uint32_t round, const GaipInstance& inst,
                        RandomTape& tape) {
    validate_instance(a, inst);
    const GaipBlinders blinders = derive_gaip_blinders(a, round, tape);
    return GaipInstance{act(a, blinders.gx, inst.x), act(a, blinders.gy, inst.y)};
}

MGaipInstance sigma_mgaip(const ActionDescriptor& a, uint32_t round, const MGaipInstance& inst,
                          RandomTape& tape) {
    validate_instance(a, inst);
    const GroupElement g = derive_instance_blinder(a, round, tape);
    MGaipInstance out;
    out.pairs.reserve(inst.pairs.size());
    for (const auto& [x, y] : inst.pairs) {
        out.pairs.emplace_back(act(a, g, x), act(a, g, y));
    }
    return out;
}

PGaipInstance sigma_pgaip(const ActionDescriptor& a, uint32_t round, const PGaipInstance& inst,
                          RandomTape& tape) {
    validate_instance(a, inst);
    const GroupElement g = derive_instance_blinder(a, round, tape);
    PGaipInstance out;
    out.promise_tag = inst.promise_tag;  // bookkeeping rides along
    out.pairs.reserve(inst.pairs.size());
    for (const auto& [x, y] : inst.pairs) {
        out.pairs.emplace_back(act(a, g, x), act(a, g, y));
    }
    return out;
}

DeltaSolution phi_gaip(const ActionDescriptor& a, const GaipInstance& inst, RandomTape& tape,
                       const DeltaSolution& answer) {
    const GaipBlinders blinders = derive_gaip_blinders(a, 1, tape);
    (void)inst;
    if (!answer.is_found()) {
        return answer;
    }
    // g_x^{-1} * f * g_y maps y to x whenever f mapped the blinded pair
    const GroupElement left = compose(a, inverse(a, blinders.gx), *answer.witness);
    return DeltaSolution::found(compose(a, left, blinders.gy));
}

DeltaSolution phi_mgaip(const ActionDescriptor& a, const MGaipInstance& inst, RandomTape& tape,
                        const DeltaSolution& answer) {
    const GroupElement g = derive_instance_blinder(a, 1, tape);
    (void)inst;
    if (!answer.is_found()) {
        return answer;
    }
    const GroupElement left = compose(a, inverse(a, g), *answer.witness);
    return DeltaSolution::found(compose(a, left, g));
}

int phi_pgaip(const ActionDescriptor& a, const PGaipInstance& inst, RandomTape& tape,
              int answer) {
    (void)a;
    (void)inst;
    (void)tape;
    return answer;
}

namespace {

std::string delta_answer_string(const DeltaSolution& sol) {
    return sol.is_found() ? "found:" + to_hex(sol.witness->bytes) : "not-in-orbit";
}

template <typename Instance, typename Sigma, typename Phi, typename Query>
ReductionOutcome run_search_rounds(const ActionDescriptor& a, const Instance& inst,
                                   const ReductionConfig& cfg, RandomTape tape, Sigma sigma,
                                   Phi phi, Query query) {
    cfg.validate();
    ReductionOutcome outcome;
    uint64_t consumed = 0;
    uint32_t not_in_orbit_rounds = 0;
    for (uint32_t r = 1; r <= cfg.repetitions; ++r) {
        RandomTape segment = tape.suffix(consumed);
        RandomTape replay = segment;
        const Instance blinded = sigma(a, 1, inst, segment);
        consumed += segment.cursor();

        const DeltaSolution oracle_answer = query(blinded);
        const DeltaSolution recovered = phi(a, inst, replay, oracle_answer);

        RoundDiagnostic diag;
        diag.round = r;
        diag.blinded_instance_hash = hash_hex(instance_bytes(blinded));
        diag.oracle_answer = delta_answer_string(oracle_answer);
        if (recovered.is_found() && witness_valid(a, inst, *recovered.witness)) {
            diag.verified = true;
            outcome.rounds.push_back(diag);
            outcome.answer = recovered;
            outcome.verified = true;
            outcome.winning_round = r;
            return outcome;
        }
        if (!recovered.is_found()) {
            ++not_in_orbit_rounds;
        }
        outcome.rounds.push_back(diag);
    }
    if (not_in_orbit_rounds == cfg.repetitions) {
        // unanimous not-in-orbit across rounds is the reduction's answer
        outcome.answer = DeltaSolution::not_in_orbit();
        outcome.verified = false;
        return outcome;
    }
    throw AllRoundsFailedError("self_reduce: no round produced a verified witness",
                               outcome.rounds);
}

}  // namespace

ReductionOutcome self_reduce_gaip(const ActionDescriptor& a, const GaipInstance& inst,
                                  const Oracle& oracle, const ReductionConfig& cfg,
                                  RandomTape tape) {
    return run_search_rounds(
        a, inst, cfg, std::move(tape),
        [](const ActionDescriptor& aa, uint32_t round, const GaipInstance& ii, RandomTape& t) {
            return sigma_gaip(aa, round, ii, t);
        },
        [](const ActionDescriptor& aa, const GaipInstance& ii, RandomTape& t,
           const DeltaSolution& ans) { return phi_gaip(aa, ii, t, ans); },
        [&](const GaipInstance& blinded) { return oracle.query_gaip(a, blinded); });
}

ReductionOutcome self_reduce_mgaip(const ActionDescriptor& a, const MGaipInstance& inst,
                                   const Oracle& oracle, const ReductionConfig& cfg,
                                   RandomTape tape) {
    return run_search_rounds(
        a, inst, cfg, std::move(tape),
        [](const ActionDescriptor& aa, uint32_t round, const MGaipInstance& ii, RandomTape& t) {
            return sigma_mgaip(aa, round, ii, t);
        },
        [](const ActionDescriptor& aa, const MGaipInstance& ii, RandomTape& t,
           const DeltaSolution& ans) { return phi_mgaip(aa, ii, t, ans); },
        [&](const MGaipInstance& blinded) { return oracle.query_mgaip(a, blinded); });
}

PgaipOutcome self_reduce_pgaip(const ActionDescriptor& a, const PGaipInstance& inst,
                               const Oracle& oracle, const ReductionConfig& cfg,
                               RandomTape tape) {
    cfg.validate();
    PgaipOutcome outcome;
    uint64_t consumed = 0;
    for (uint32_t r = 1; r <= cfg.repetitions; ++r) {
        RandomTape segment = tape.suffix(consumed);
        RandomTape replay = segment;
        const PGaipInstance blinded = sigma_pgaip(a, 1, inst, segment);
        consumed += segment.cursor();

        const int bit = phi_pgaip(a, inst, replay, oracle.query_pgaip(a, blinded));

        RoundDiagnostic diag;
        diag.round = r;
        diag.blinded_instance_hash = hash_hex(instance_bytes(blinded));
        diag.oracle_answer = std::to_string(bit);
        diag.verified = false;  // decision answers are not act-and-compare checkable
        outcome.rounds.push_back(diag);
        if (bit == 1) {
            ++outcome.ones;
        } else {
            ++outcome.zeros;
        }
    }
    outcome.bit = outcome.ones > outcome.zeros ? 1 : 0;
    return outcome;
}

}  // namespace gac
