// Problem instances for the three worst-case inversion problems, and the
// answer type for the search variants.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gac/action.hpp"
#include "gac/element.hpp"

namespace gac {

// Answer to a delta search: the witness g with x = g star y, or the verdict
// that x and y lie in different orbits.
struct DeltaSolution {
    enum class Status { found, not_in_orbit };

    Status status = Status::not_in_orbit;
    std::optional<GroupElement> witness;

    static DeltaSolution found(GroupElement g) {
        return DeltaSolution{Status::found, std::move(g)};
    }
    static DeltaSolution not_in_orbit() { return DeltaSolution{}; }

    bool is_found() const { return status == Status::found; }

    friend bool operator==(const DeltaSolution&, const DeltaSolution&) = default;
};

// Single-pair instance: find g with x = g star y.
struct GaipInstance {
    SetElement x;
    SetElement y;

    friend bool operator==(const GaipInstance&, const GaipInstance&) = default;
};

// Multi-pair instance: find one g with x_i = g star y_i for every i.
struct MGaipInstance {
    std::vector<std::pair<SetElement, SetElement>> pairs;

    friend bool operator==(const MGaipInstance&, const MGaipInstance&) = default;
};

// Bookkeeping tag for the promise branch an instance was drawn from; never
// read by any computation.
enum class PromiseTag { structured, uniform };

// Pair list to classify: subset of some L_g = {(x, g star x)} versus drawn
// uniformly from X x X.
struct PGaipInstance {
    std::vector<std::pair<SetElement, SetElement>> pairs;
    std::optional<PromiseTag> promise_tag;

    friend bool operator==(const PGaipInstance& a, const PGaipInstance& b) {
        return a.pairs == b.pairs;  // the tag is bookkeeping only
    }
};

void validate_instance(const ActionDescriptor& a, const GaipInstance& inst);
void validate_instance(const ActionDescriptor& a, const MGaipInstance& inst);
void validate_instance(const ActionDescriptor& a, const PGaipInstance& inst);

// Stable content hashes for logs and reports.
Bytes instance_bytes(const GaipInstance& inst);
Bytes instance_bytes(const MGaipInstance& inst);
Bytes instance_bytes(const PGaipInstance& inst);

// True when the witness maps y to x under the action (the act-and-compare
// check used throughout the reduction machinery).
bool witness_valid(const ActionDescriptor& a, const GaipInstance& inst, const GroupElement& g);
bool witness_valid(const ActionDescriptor& a, const MGaipInstance& inst, const GroupElement& g);

}  // namespace gac
