// Nonadaptive 1-query random self-reductions for the three inversion
// problems: instance-blinding maps (sigma) and answer-recovery maps (phi),
// plus an orchestrator that repeats rounds against faulty oracles.
//
// Blinders are derived from (round index, tape) alone, never from the
// instance. sigma for round i replays rounds 1..i-1 from the tape's start
// and then samples, so the whole schedule is a pure function of the tape
// contents; phi re-derives the round-1 blinders from the tape it is given
// (the orchestrator hands phi the same tape segment sigma consumed).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gac/instances.hpp"
#include "gac/oracle.hpp"

namespace gac {

struct ReductionConfig {
    uint32_t queries = 1;      // oracle queries per round; the reductions use one
    uint32_t repetitions = 1;  // independent rounds for faulty-oracle amplification

    void validate() const {
        if (queries != 1) {
            throw InvalidParameterError("reduction uses exactly one oracle query per round");
        }
        if (repetitions < 1) {
            throw InvalidParameterError("repetitions must be >= 1");
        }
    }
};

// The pair (g_x, g_y) blinding a single-pair instance.
struct GaipBlinders {
    GroupElement gx;
    GroupElement gy;
};

GaipBlinders derive_gaip_blinders(const ActionDescriptor& a, uint32_t round, RandomTape& tape);
// The single per-round blinder shared by every pair of a multi-pair instance.
GroupElement derive_instance_blinder(const ActionDescriptor& a, uint32_t round, RandomTape& tape);

// Nominal tape length the default schedule budgets per round: the bits of
// the required rejection-free samples with a 2x rejection margin. Seeded
// tapes are not truncated to it; explicit tapes enforce their own length.
uint64_t nominal_round_bits(const ActionDescriptor& a, Problem problem);

// sigma: blind. The output instance is (g_x star x, g_y star y) for gaip and
// the single-blinder tuple for mgaip/pgaip; round blinders depend only on
// (round, tape).
GaipInstance sigma_gaip(const ActionDescriptor& a, uint32_t round, const GaipInstance& inst,
                        RandomTape& tape);
MGaipInstance sigma_mgaip(const ActionDescriptor& a, uint32_t round, const MGaipInstance& inst,
                          RandomTape& tape);
PGaipInstance sigma_pgaip(const ActionDescriptor& a, uint32_t round, const PGaipInstance& inst,
                          RandomTape& tape);

// phi: recover. For gaip the blinded answer f becomes g_x^{-1} f g_y; for
// mgaip it is conjugated by the instance blinder; for pgaip the oracle bit
// passes through. not_in_orbit passes through unchanged.
DeltaSolution phi_gaip(const ActionDescriptor& a, const GaipInstance& inst, RandomTape& tape,
                       const DeltaSolution& answer);
DeltaSolution phi_mgaip(const ActionDescriptor& a, const MGaipInstance& inst, RandomTape& tape,
                        const DeltaSolution& answer);
int phi_pgaip(const ActionDescriptor& a, const PGaipInstance& inst, RandomTape& tape, int answer);

struct RoundDiagnostic {
    uint32_t round = 0;
    std::string blinded_instance_hash;
    std::string oracle_answer;
    bool verified = false;
};

// Raised when every search round produced an unverifiable answer and no
// not-in-orbit consensus was reached.
class AllRoundsFailedError : public Error {
public:
    AllRoundsFailedError(std::string what, std::vector<RoundDiagnostic> rounds)
        : Error(std::move(what)), rounds_(std::move(rounds)) {}
    const std::vector<RoundDiagnostic>& rounds() const { return rounds_; }

private:
    std::vector<RoundDiagnostic> rounds_;
};

struct ReductionOutcome {
    DeltaSolution answer;
    bool verified = false;
    uint32_t winning_round = 0;  // 1-based; 0 when no round verified
    std::vector<RoundDiagnostic> rounds;
};

struct PgaipOutcome {
    int bit = 0;
    uint32_t ones = 0;
    uint32_t zeros = 0;
    std::vector<RoundDiagnostic> rounds;
};

// Runs cfg.repetitions independent blind/query/recover rounds on fresh tape
// segments. Search problems return the first act-and-compare verified answer
// (or not_in_orbit when every round agrees on it); the decision problem
// takes the majority bit. With an exact oracle one round suffices.
ReductionOutcome self_reduce_gaip(const ActionDescriptor& a, const GaipInstance& inst,
                                  const Oracle& oracle, const ReductionConfig& cfg,
                                  RandomTape tape);
ReductionOutcome self_reduce_mgaip(const ActionDescriptor& a, const MGaipInstance& inst,
                                   const Oracle& oracle, const ReductionConfig& cfg,
                                   RandomTape tape);
PgaipOutcome self_reduce_pgaip(const ActionDescriptor& a, const PGaipInstance& inst,
                               const Oracle& oracle, const ReductionConfig& cfg, RandomTape tape);

}  // namespace gac
