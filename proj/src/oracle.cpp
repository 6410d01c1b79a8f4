#include "gac/oracle.hpp"

#include "gac/actions.hpp"

namespace gac {

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::gaip:
            return "gaip";
        case Problem::mgaip:
            return "mgaip";
        case Problem::pgaip:
            return "pgaip";
        case Problem::dgaip:
            return "dgaip";
    }
    throw InvalidParameterError("unknown problem");
}

Problem problem_from_name(const std::string& name) {
    if (name == "gaip") return Problem::gaip;
    if (name == "mgaip") return Problem::mgaip;
    if (name == "pgaip") return Problem::pgaip;
    if (name == "dgaip") return Problem::dgaip;
    throw InvalidParameterError("unknown problem: '" + name + "'");
}

DeltaSolution solve_gaip_bruteforce(const ActionDescriptor& a, const SetElement& x,
                                    const SetElement& y, uint64_t bound) {
    require_set_member(a, x);
    require_set_member(a, y);
    const ActionBackend& b = a.backend();
    if (b.group_order() > bound) {
        throw EnumerationBoundError("solve_gaip_bruteforce: |G| exceeds bound for " + a.id());
    }
    for (uint64_t i = 0; i < b.group_order(); ++i) {
        GroupElement g = b.group_element_at(i);
        if (b.apply(g, y) == x) {
            return DeltaSolution::found(std::move(g));
        }
    }
    return DeltaSolution::not_in_orbit();
}

DeltaSolution solve_mgaip_bruteforce(const ActionDescriptor& a, const MGaipInstance& q,
                                     uint64_t bound) {
    validate_instance(a, q);
    const ActionBackend& b = a.backend();
    if (b.group_order() > bound) {
        throw EnumerationBoundError("solve_mgaip_bruteforce: |G| exceeds bound for " + a.id());
    }
    for (uint64_t i = 0; i < b.group_order(); ++i) {
        GroupElement g = b.group_element_at(i);
        bool all = true;
        for (const auto& [x, y] : q.pairs) {
            if (!(b.apply(g, y) == x)) {
                all = false;
                break;
            }
        }
        if (all) {
            return DeltaSolution::found(std::move(g));
        }
    }
    return DeltaSolution::not_in_orbit();
}

int decide_pgaip_bruteforce(const ActionDescriptor& a, const PGaipInstance& q, uint64_t bound) {
    MGaipInstance search{q.pairs};
    return solve_mgaip_bruteforce(a, search, bound).is_found() ? 1 : 0;
}

int decide_dgaip_bruteforce(const ActionDescriptor& a, const SetElement& x, const SetElement& y,
                            uint64_t bound) {
    return solve_gaip_bruteforce(a, x, y, bound).is_found() ? 1 : 0;
}

void Oracle::require(Problem p) const {
    if (problem_ != p) {
        throw InvalidParameterError("oracle for " + problem_name(problem_) +
                                    " queried as " + problem_name(p));
    }
}

void Oracle::log(const std::string& hash, const std::string& answer, bool correct) const {
    if (log_) {
        log_(OracleQueryRecord{problem_name(problem_), hash, answer, correct});
    }
}

Oracle Oracle::exact(Problem problem, uint64_t enum_bound) {
    return Oracle(problem, enum_bound);
}

namespace {

std::string answer_string(const DeltaSolution& sol) {
    if (sol.is_found()) {
        return "found:" + to_hex(sol.witness->bytes);
    }
    return "not-in-orbit";
}

}  // namespace

DeltaSolution Oracle::query_gaip(const ActionDescriptor& a, const GaipInstance& inst) const {
    require(Problem::gaip);
    bump();
    const DeltaSolution truth = solve_gaip_bruteforce(a, inst.x, inst.y, enum_bound_);
    DeltaSolution answer = truth;
    if (behavior_ == OracleBehavior::average_case && gaip_bad_ && gaip_bad_(inst)) {
        answer = DeltaSolution::not_in_orbit();
        // fixed wrong answer: on instances that truly have no witness the
        // corruption instead fabricates the identity
        if (!truth.is_found()) {
            answer = DeltaSolution::found(a.backend().group_identity());
        }
    } else if (behavior_ == OracleBehavior::adversarial && gaip_corrupt_) {
        answer = gaip_corrupt_(inst, truth);
    }
    log(hash_hex(instance_bytes(inst)), answer_string(answer), answer == truth);
    return answer;
}

DeltaSolution Oracle::query_mgaip(const ActionDescriptor& a, const MGaipInstance& inst) const {
    require(Problem::mgaip);
    bump();
    const DeltaSolution truth = solve_mgaip_bruteforce(a, inst, enum_bound_);
    DeltaSolution answer = truth;
    if (behavior_ == OracleBehavior::average_case && mgaip_bad_ && mgaip_bad_(inst)) {
        answer = truth.is_found() ? DeltaSolution::not_in_orbit()
                                  : DeltaSolution::found(a.backend().group_identity());
    }
    log(hash_hex(instance_bytes(inst)), answer_string(answer), answer == truth);
    return answer;
}

int Oracle::query_pgaip(const ActionDescriptor& a, const PGaipInstance& inst) const {
    require(Problem::pgaip);
    bump();
    const int truth = decide_pgaip_bruteforce(a, inst, enum_bound_);
    int answer = truth;
    if (behavior_ == OracleBehavior::average_case && pgaip_bad_ && pgaip_bad_(inst)) {
        answer = 1 - truth;
    }
    log(hash_hex(instance_bytes(inst)), std::to_string(answer), answer == truth);
    return answer;
}

int Oracle::query_dgaip(const ActionDescriptor& a, const GaipInstance& inst) const {
    require(Problem::dgaip);
    bump();
    const int truth = decide_dgaip_bruteforce(a, inst.x, inst.y, enum_bound_);
    log(hash_hex(instance_bytes(inst)), std::to_string(truth), true);
    return truth;
}

Oracle wrap_average_case(const Oracle& inner,
                         std::function<bool(const GaipInstance&)> gaip_bad,
                         std::function<bool(const MGaipInstance&)> mgaip_bad,
                         std::function<bool(const PGaipInstance&)> pgaip_bad) {
    if (inner.behavior_ != OracleBehavior::exact) {
        throw InvalidParameterError("wrap_average_case: inner oracle must be exact");
    }
    Oracle out = inner;
    out.behavior_ = OracleBehavior::average_case;
    out.gaip_bad_ = std::move(gaip_bad);
    out.mgaip_bad_ = std::move(mgaip_bad);
    out.pgaip_bad_ = std::move(pgaip_bad);
    out.counter_ = std::make_shared<std::atomic<uint64_t>>(0);
    return out;
}

Oracle wrap_adversarial(
    const Oracle& inner,
    std::function<DeltaSolution(const GaipInstance&, const DeltaSolution&)> rule) {
    if (inner.behavior_ != OracleBehavior::exact) {
        throw InvalidParameterError("wrap_adversarial: inner oracle must be exact");
    }
    Oracle out = inner;
    out.behavior_ = OracleBehavior::adversarial;
    out.gaip_corrupt_ = std::move(rule);
    out.counter_ = std::make_shared<std::atomic<uint64_t>>(0);
    return out;
}

DeltaSolution solve_mgaip_with_gaip_oracle(const ActionDescriptor& a, const MGaipInstance& inst,
                                           const Oracle& gaip_oracle) {
    validate_instance(a, inst);
    const uint32_t q = static_cast<uint32_t>(inst.pairs.size());
    const ActionDescriptor diag = power_action(a, q);
    std::vector<SetElement> xs, ys;
    xs.reserve(q);
    ys.reserve(q);
    for (const auto& [x, y] : inst.pairs) {
        xs.push_back(x);
        ys.push_back(y);
    }
    const GaipInstance tupled{tuple_element(a, xs), tuple_element(a, ys)};
    return gaip_oracle.query_gaip(diag, tupled);
}

int decide_pgaip_with_gaip_oracle(const ActionDescriptor& a, const PGaipInstance& inst,
                                  const Oracle& gaip_oracle) {
    MGaipInstance search{inst.pairs};
    return solve_mgaip_with_gaip_oracle(a, search, gaip_oracle).is_found() ? 1 : 0;
}

}  // namespace gac
