// The effective group action abstraction: a finite group G acting on a
// finite set X through a map star: G x X -> X with
//   identity()  star x == x
//   (g1 g2) star x == g1 star (g2 star x)
// plus byte encodings, membership tests, uniform samplers and desk-scale
// enumeration. Concrete actions implement ActionBackend; ActionDescriptor is
// the shared-ownership handle the rest of the library passes around.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "gac/element.hpp"
#include "gac/errors.hpp"
#include "gac/tape.hpp"

namespace gac {

// Default ceiling for exhaustive enumeration (group elements / set elements /
// tape-space size). Overridable per call.
inline constexpr uint64_t kDefaultEnumBound = 1'000'000;

struct ActionProperties {
    bool transitive = false;
    bool free = false;
    bool regular = false;
};

class ActionBackend {
public:
    virtual ~ActionBackend() = default;

    virtual std::string id() const = 0;
    // Complexity parameter indexing G and X (bit length scale of encodings).
    virtual uint32_t lambda() const = 0;
    virtual ActionProperties properties() const = 0;

    // --- group interface ---
    virtual bool group_member(const GroupElement& g) const = 0;
    virtual GroupElement group_identity() const = 0;
    virtual GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const = 0;
    virtual GroupElement group_inverse(const GroupElement& g) const = 0;
    virtual uint64_t group_order() const = 0;
    virtual GroupElement group_element_at(uint64_t index) const = 0;
    // Uniform over G via rejection reads; consumes tape bits.
    virtual GroupElement group_sample(RandomTape& tape) const = 0;
    // Bits one rejection-free group sample consumes.
    virtual uint32_t group_sample_bits() const = 0;

    // --- set interface ---
    virtual bool set_member(const SetElement& x) const = 0;
    virtual bool unique_representation() const { return true; }
    // Canonical byte string for a set element; default: the encoding itself
    // (valid whenever elements are encoded canonically).
    virtual Bytes set_canonical(const SetElement& x) const;
    virtual uint64_t set_size() const = 0;
    virtual SetElement set_element_at(uint64_t index) const = 0;
    virtual SetElement set_sample(RandomTape& tape) const = 0;

    // --- the action map ---
    virtual SetElement apply(const GroupElement& g, const SetElement& x) const = 0;

    virtual std::optional<SetElement> origin() const { return std::nullopt; }
};

class ActionDescriptor {
public:
    explicit ActionDescriptor(std::shared_ptr<const ActionBackend> backend)
        : backend_(std::move(backend)) {}

    const ActionBackend& backend() const { return *backend_; }
    std::string id() const { return backend_->id(); }
    uint32_t lambda() const { return backend_->lambda(); }
    ActionProperties properties() const { return backend_->properties(); }
    uint64_t group_order() const { return backend_->group_order(); }
    uint64_t set_size() const { return backend_->set_size(); }

private:
    std::shared_ptr<const ActionBackend> backend_;
};

// Membership-checked operations; these are the public surface the rest of
// the library calls. Violations raise MembershipError.
GroupElement identity(const ActionDescriptor& a);
GroupElement compose(const ActionDescriptor& a, const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const ActionDescriptor& a, const GroupElement& g);
SetElement act(const ActionDescriptor& a, const GroupElement& g, const SetElement& x);
GroupElement sample_group(const ActionDescriptor& a, RandomTape& tape);
SetElement sample_set(const ActionDescriptor& a, RandomTape& tape);
// Canonical byte string; raises UnsupportedOperationError when the action
// lacks unique representation.
Bytes canonical(const ActionDescriptor& a, const SetElement& x);

bool is_group_member(const ActionDescriptor& a, const GroupElement& g);
bool is_set_member(const ActionDescriptor& a, const SetElement& x);

void require_group_member(const ActionDescriptor& a, const GroupElement& g);
void require_set_member(const ActionDescriptor& a, const SetElement& x);

// --- desk-scale verification helpers ---

struct AxiomReport {
    uint64_t identity_cases = 0;
    uint64_t identity_failures = 0;
    uint64_t compatibility_cases = 0;
    uint64_t compatibility_failures = 0;
    bool exhaustive = false;

    bool pass() const { return identity_failures == 0 && compatibility_failures == 0; }
};

// Checks e star x == x for all x and (g1 g2) star x == g1 star (g2 star x)
// over all triples when |G|^2 * |X| <= budget, otherwise over `samples`
// seeded triples.
AxiomReport check_action_axioms(const ActionDescriptor& a, uint64_t budget = kDefaultEnumBound,
                                uint64_t samples = 10000, uint64_t seed = 1);

struct GroupLawReport {
    uint64_t cases = 0;
    uint64_t failures = 0;
    bool exhaustive = false;

    bool pass() const { return failures == 0; }
};

// Associativity, identity neutrality and two-sided inverses over the
// enumerated group (exhaustive when |G|^3 <= budget).
GroupLawReport check_group_laws(const ActionDescriptor& a, uint64_t budget = kDefaultEnumBound,
                                uint64_t samples = 10000, uint64_t seed = 2);

struct RegularityReport {
    bool sizes_match = false;
    uint64_t points_checked = 0;
    uint64_t bijection_failures = 0;

    bool pass() const { return sizes_match && bijection_failures == 0; }
};

// For regular actions: |G| == |X| and for every x the map g -> g star x is a
// bijection onto X. Cost |G| * |X|, bounded by budget.
RegularityReport check_regularity(const ActionDescriptor& a, uint64_t budget = kDefaultEnumBound);

}  // namespace gac
