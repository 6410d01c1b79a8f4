#include "gac/stats.hpp"

#include <cmath>
#include <sstream>

#include "gac/errors.hpp"

namespace gac {

bool Histogram::is_flat() const {
    if (bins.empty()) {
        return false;
    }
    const uint64_t first = bins.begin()->second;
    for (const auto& [bin, count] : bins) {
        if (count != first) {
            return false;
        }
    }
    return true;
}

Histogram exact_distribution(const std::function<Bytes(RandomTape&)>& sampler,
                             uint32_t tape_bits, uint64_t max_space_bound) {
    if (tape_bits >= 63 || (1ull << tape_bits) > max_space_bound) {
        throw EnumerationBoundError("exact_distribution: tape space exceeds bound");
    }
    Histogram h;
    const uint64_t space = 1ull << tape_bits;
    for (uint64_t index = 0; index < space; ++index) {
        RandomTape tape = RandomTape::from_index(index, tape_bits);
        try {
            h.add(sampler(tape));
        } catch (const TapeExhaustedError&) {
            ++h.rejected;
        }
    }
    return h;
}

Rational tv_distance(const Histogram& h1, const Histogram& h2) {
    if (h1.total == 0 || h2.total == 0) {
        throw Error("tv_distance: empty histogram");
    }
    const long long t1 = static_cast<long long>(h1.total);
    const long long t2 = static_cast<long long>(h2.total);
    Rational sum(0);
    auto it1 = h1.bins.begin();
    auto it2 = h2.bins.begin();
    while (it1 != h1.bins.end() || it2 != h2.bins.end()) {
        long long c1 = 0, c2 = 0;
        if (it2 == h2.bins.end() || (it1 != h1.bins.end() && it1->first < it2->first)) {
            c1 = static_cast<long long>(it1->second);
            ++it1;
        } else if (it1 == h1.bins.end() || it2->first < it1->first) {
            c2 = static_cast<long long>(it2->second);
            ++it2;
        } else {
            c1 = static_cast<long long>(it1->second);
            c2 = static_cast<long long>(it2->second);
            ++it1;
            ++it2;
        }
        const Rational diff = Rational(c1, t1) - Rational(c2, t2);
        sum += diff < Rational(0) ? -diff : diff;
    }
    return sum / 2;
}

Rational tv_distance_from_uniform(const Histogram& h, uint64_t support_size) {
    if (h.total == 0 || support_size == 0) {
        throw Error("tv_distance_from_uniform: empty input");
    }
    const long long t = static_cast<long long>(h.total);
    const Rational uniform(1, static_cast<long long>(support_size));
    Rational sum(0);
    uint64_t bins_seen = 0;
    for (const auto& [bin, count] : h.bins) {
        const Rational diff = Rational(static_cast<long long>(count), t) - uniform;
        sum += diff < Rational(0) ? -diff : diff;
        ++bins_seen;
    }
    // outcomes of the support the histogram never hit
    if (bins_seen < support_size) {
        sum += Rational(static_cast<long long>(support_size - bins_seen)) * uniform;
    }
    return sum / 2;
}

RateEstimate estimate_rate(const std::function<bool(uint64_t, RandomTape&)>& trial,
                           uint64_t trials, uint64_t seed) {
    if (trials < 100) {
        throw InvalidParameterError("estimate_rate: need at least 100 trials");
    }
    RateEstimate est;
    est.trials = trials;
    for (uint64_t i = 0; i < trials; ++i) {
        RandomTape tape = RandomTape::seeded(derive_seed(seed, i));
        if (trial(i, tape)) {
            ++est.successes;
        }
    }
    est.rate = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.half_width = 3.0 * std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(trials));
    return est;
}

std::string histogram_jsonl(const Histogram& h) {
    std::ostringstream out;
    for (const auto& [bin, count] : h.bins) {
        out << "{\"bin\":\"" << to_hex(bin) << "\",\"count\":" << count << "}\n";
    }
    return out.str();
}

}  // namespace gac
