// Opaque byte-encoded elements of G and X. Semantics (membership, equality
// after canonicalization, decoding) belong to the owning action; these types
// only carry bytes and compare exactly.
#pragma once

#include <compare>

#include "gac/bytes.hpp"

namespace gac {

struct GroupElement {
    Bytes bytes;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct SetElement {
    Bytes bytes;

    friend bool operator==(const SetElement&, const SetElement&) = default;
    friend std::strong_ordering operator<=>(const SetElement&, const SetElement&) = default;
};

}  // namespace gac
