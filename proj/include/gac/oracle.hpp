// Oracles for the inversion problems: exact brute-force solvers (the
// unbounded party at desk scale) plus wrappers that corrupt answers on a
// chosen bad set, used to stage worst-to-average experiments.
#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gac/action.hpp"
#include "gac/instances.hpp"

namespace gac {

enum class Problem { gaip, mgaip, pgaip, dgaip };

std::string problem_name(Problem p);
Problem problem_from_name(const std::string& name);

// Enumerates G in index order and returns the first witness, so answers are
// deterministic even when several witnesses exist.
DeltaSolution solve_gaip_bruteforce(const ActionDescriptor& a, const SetElement& x,
                                    const SetElement& y, uint64_t bound = kDefaultEnumBound);
DeltaSolution solve_mgaip_bruteforce(const ActionDescriptor& a, const MGaipInstance& q,
                                     uint64_t bound = kDefaultEnumBound);
// Total decision: 1 iff a common g exists (i.e. the pair list sits inside
// some L_g); returns the same deterministic answer off promise.
int decide_pgaip_bruteforce(const ActionDescriptor& a, const PGaipInstance& q,
                            uint64_t bound = kDefaultEnumBound);
// 1 iff delta(x, y) exists.
int decide_dgaip_bruteforce(const ActionDescriptor& a, const SetElement& x, const SetElement& y,
                            uint64_t bound = kDefaultEnumBound);

enum class OracleBehavior { exact, average_case, adversarial };

struct OracleQueryRecord {
    std::string problem;
    std::string instance_hash;
    std::string answer;
    bool correct = false;
};

using OracleLogSink = std::function<void(const OracleQueryRecord&)>;

// Handle around a solver. Exact handles answer every query correctly;
// average-case handles answer a fixed wrong answer (not_in_orbit for search,
// flipped bit for decision) exactly on the bad set; adversarial handles pass
// the correct answer through a corruption rule. The call counter increments
// once per query and is shared across copies of the handle.
class Oracle {
public:
    static Oracle exact(Problem problem, uint64_t enum_bound = kDefaultEnumBound);

    Problem problem() const { return problem_; }
    OracleBehavior behavior() const { return behavior_; }
    uint64_t call_count() const { return counter_->load(); }
    void set_log_sink(OracleLogSink sink) { log_ = std::move(sink); }

    DeltaSolution query_gaip(const ActionDescriptor& a, const GaipInstance& inst) const;
    DeltaSolution query_mgaip(const ActionDescriptor& a, const MGaipInstance& inst) const;
    int query_pgaip(const ActionDescriptor& a, const PGaipInstance& inst) const;
    int query_dgaip(const ActionDescriptor& a, const GaipInstance& inst) const;

    friend Oracle wrap_average_case(const Oracle& inner,
                                    std::function<bool(const GaipInstance&)> gaip_bad,
                                    std::function<bool(const MGaipInstance&)> mgaip_bad,
                                    std::function<bool(const PGaipInstance&)> pgaip_bad);
    friend Oracle wrap_adversarial(
        const Oracle& inner,
        std::function<DeltaSolution(const GaipInstance&, const DeltaSolution&)> rule);

private:
    Oracle(Problem problem, uint64_t bound)
        : problem_(problem), enum_bound_(bound),
          counter_(std::make_shared<std::atomic<uint64_t>>(0)) {}

    void bump() const { counter_->fetch_add(1); }
    void require(Problem p) const;
    void log(const std::string& hash, const std::string& answer, bool correct) const;

    Problem problem_;
    OracleBehavior behavior_ = OracleBehavior::exact;
    uint64_t enum_bound_;
    std::function<bool(const GaipInstance&)> gaip_bad_;
    std::function<bool(const MGaipInstance&)> mgaip_bad_;
    std::function<bool(const PGaipInstance&)> pgaip_bad_;
    std::function<DeltaSolution(const GaipInstance&, const DeltaSolution&)> gaip_corrupt_;
    std::shared_ptr<std::atomic<uint64_t>> counter_;
    OracleLogSink log_;
};

// Only exact oracles may be wrapped. Predicates not relevant to the target
// problem may be null.
Oracle wrap_average_case(const Oracle& inner,
                         std::function<bool(const GaipInstance&)> gaip_bad,
                         std::function<bool(const MGaipInstance&)> mgaip_bad = nullptr,
                         std::function<bool(const PGaipInstance&)> pgaip_bad = nullptr);

Oracle wrap_adversarial(
    const Oracle& inner,
    std::function<DeltaSolution(const GaipInstance&, const DeltaSolution&)> rule);

// Multi-pair and decision solvers composed from a single-pair oracle: the
// pair list becomes one pair of tuples under the diagonal action on X^q and
// the oracle is asked once.
DeltaSolution solve_mgaip_with_gaip_oracle(const ActionDescriptor& a, const MGaipInstance& inst,
                                           const Oracle& gaip_oracle);
int decide_pgaip_with_gaip_oracle(const ActionDescriptor& a, const PGaipInstance& inst,
                                  const Oracle& gaip_oracle);

}  // namespace gac
