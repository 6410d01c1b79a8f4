// Exact and empirical distribution comparison: histograms over enumerated
// tape spaces, total variation distance in exact rational arithmetic, and
// seeded binomial rate estimates.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include <boost/rational.hpp>

#include "gac/bytes.hpp"
#include "gac/tape.hpp"

namespace gac {

using Rational = boost::rational<long long>;

struct Histogram {
    std::map<Bytes, uint64_t> bins;
    uint64_t total = 0;     // accepted outcomes
    uint64_t rejected = 0;  // tapes a sampler exhausted (rejection reads ran out)

    void add(const Bytes& outcome) {
        ++bins[outcome];
        ++total;
    }
    // Exactly uniform over its own support.
    bool is_flat() const;
};

// Runs the sampler on every explicit tape of `tape_bits` bits and bins the
// outcomes. Tapes on which the sampler runs out of bits (a rejection read
// past the end) are excluded from the distribution and counted as rejected,
// so the histogram is the conditional law given acceptance.
Histogram exact_distribution(const std::function<Bytes(RandomTape&)>& sampler,
                             uint32_t tape_bits, uint64_t max_space_bound = 1ull << 24);

// Half the L1 distance between the two normalized histograms; exact.
Rational tv_distance(const Histogram& h1, const Histogram& h2);

// TV distance from the uniform distribution over the histogram's support of
// `support_size` outcomes.
Rational tv_distance_from_uniform(const Histogram& h, uint64_t support_size);

struct RateEstimate {
    double rate = 0.0;
    double half_width = 0.0;  // 3-sigma normal-approximation half width
    uint64_t successes = 0;
    uint64_t trials = 0;
};

// Runs `trials` seeded boolean trials; trial i sees its own derived tape, so
// results are reproducible and order-independent. Requires trials >= 100.
RateEstimate estimate_rate(const std::function<bool(uint64_t, RandomTape&)>& trial,
                           uint64_t trials, uint64_t seed);

// Sorted (hex bin, count) JSON lines for diffing across runs.
std::string histogram_jsonl(const Histogram& h);

}  // namespace gac
