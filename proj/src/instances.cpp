#include "gac/instances.hpp"

namespace gac {

void validate_instance(const ActionDescriptor& a, const GaipInstance& inst) {
    require_set_member(a, inst.x);
    require_set_member(a, inst.y);
}

namespace {

void validate_pairs(const ActionDescriptor& a,
                    const std::vector<std::pair<SetElement, SetElement>>& pairs) {
    if (pairs.empty()) {
        throw EmptyInstanceError("instance has zero pairs");
    }
    for (const auto& [x, y] : pairs) {
        require_set_member(a, x);
        require_set_member(a, y);
    }
}

Bytes pair_bytes(const std::vector<std::pair<SetElement, SetElement>>& pairs) {
    Bytes out;
    append_be32(out, static_cast<uint32_t>(pairs.size()));
    for (const auto& [x, y] : pairs) {
        append_be32(out, static_cast<uint32_t>(x.bytes.size()));
        out += x.bytes;
        append_be32(out, static_cast<uint32_t>(y.bytes.size()));
        out += y.bytes;
    }
    return out;
}

}  // namespace

void validate_instance(const ActionDescriptor& a, const MGaipInstance& inst) {
    validate_pairs(a, inst.pairs);
}

void validate_instance(const ActionDescriptor& a, const PGaipInstance& inst) {
    validate_pairs(a, inst.pairs);
}

Bytes instance_bytes(const GaipInstance& inst) {
    Bytes out = "gaip:";
    append_be32(out, static_cast<uint32_t>(inst.x.bytes.size()));
    out += inst.x.bytes;
    append_be32(out, static_cast<uint32_t>(inst.y.bytes.size()));
    out += inst.y.bytes;
    return out;
}

Bytes instance_bytes(const MGaipInstance& inst) {
    return "mgaip:" + pair_bytes(inst.pairs);
}

Bytes instance_bytes(const PGaipInstance& inst) {
    return "pgaip:" + pair_bytes(inst.pairs);
}

bool witness_valid(const ActionDescriptor& a, const GaipInstance& inst, const GroupElement& g) {
    return act(a, g, inst.y) == inst.x;
}

bool witness_valid(const ActionDescriptor& a, const MGaipInstance& inst, const GroupElement& g) {
    for (const auto& [x, y] : inst.pairs) {
        if (!(act(a, g, y) == x)) {
            return false;
        }
    }
    return true;
}

}  // namespace gac
