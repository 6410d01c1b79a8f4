#include "gac/action.hpp"

#include <set>

namespace gac {

Bytes ActionBackend::set_canonical(const SetElement& x) const {
    if (!unique_representation()) {
        throw UnsupportedOperationError("action " + id() + " has no unique representation");
    }
    return x.bytes;
}

GroupElement identity(const ActionDescriptor& a) {
    return a.backend().group_identity();
}

void require_group_member(const ActionDescriptor& a, const GroupElement& g) {
    if (!a.backend().group_member(g)) {
        throw MembershipError("group membership test failed for action " + a.id());
    }
}

void require_set_member(const ActionDescriptor& a, const SetElement& x) {
    if (!a.backend().set_member(x)) {
        throw MembershipError("set membership test failed for action " + a.id());
    }
}

bool is_group_member(const ActionDescriptor& a, const GroupElement& g) {
    return a.backend().group_member(g);
}

bool is_set_member(const ActionDescriptor& a, const SetElement& x) {
    return a.backend().set_member(x);
}

GroupElement compose(const ActionDescriptor& a, const GroupElement& g1, const GroupElement& g2) {
    require_group_member(a, g1);
    require_group_member(a, g2);
    return a.backend().group_compose(g1, g2);
}

GroupElement inverse(const ActionDescriptor& a, const GroupElement& g) {
    require_group_member(a, g);
    return a.backend().group_inverse(g);
}

SetElement act(const ActionDescriptor& a, const GroupElement& g, const SetElement& x) {
    require_group_member(a, g);
    require_set_member(a, x);
    return a.backend().apply(g, x);
}

GroupElement sample_group(const ActionDescriptor& a, RandomTape& tape) {
    return a.backend().group_sample(tape);
}

SetElement sample_set(const ActionDescriptor& a, RandomTape& tape) {
    return a.backend().set_sample(tape);
}

Bytes canonical(const ActionDescriptor& a, const SetElement& x) {
    require_set_member(a, x);
    return a.backend().set_canonical(x);
}

AxiomReport check_action_axioms(const ActionDescriptor& a, uint64_t budget, uint64_t samples,
                                uint64_t seed) {
    AxiomReport report;
    const ActionBackend& b = a.backend();
    const uint64_t n_g = b.group_order();
    const uint64_t n_x = b.set_size();
    const GroupElement e = b.group_identity();

    const bool x_enumerable = n_x <= budget;
    const bool triples_enumerable = x_enumerable && n_g <= budget && n_g * n_g <= budget / (n_x ? n_x : 1);
    report.exhaustive = triples_enumerable;

    if (x_enumerable) {
        for (uint64_t xi = 0; xi < n_x; ++xi) {
            const SetElement x = b.set_element_at(xi);
            ++report.identity_cases;
            if (!(b.apply(e, x) == x)) {
                ++report.identity_failures;
            }
        }
    }

    if (triples_enumerable) {
        for (uint64_t i = 0; i < n_g; ++i) {
            const GroupElement g1 = b.group_element_at(i);
            for (uint64_t j = 0; j < n_g; ++j) {
                const GroupElement g2 = b.group_element_at(j);
                const GroupElement g12 = b.group_compose(g1, g2);
                for (uint64_t xi = 0; xi < n_x; ++xi) {
                    const SetElement x = b.set_element_at(xi);
                    ++report.compatibility_cases;
                    if (!(b.apply(g12, x) == b.apply(g1, b.apply(g2, x)))) {
                        ++report.compatibility_failures;
                    }
                }
            }
        }
    } else {
        RandomTape tape = RandomTape::seeded(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            const GroupElement g1 = b.group_sample(tape);
            const GroupElement g2 = b.group_sample(tape);
            const SetElement x = b.set_sample(tape);
            if (!x_enumerable) {
                ++report.identity_cases;
                if (!(b.apply(e, x) == x)) {
                    ++report.identity_failures;
                }
            }
            ++report.compatibility_cases;
            if (!(b.apply(b.group_compose(g1, g2), x) == b.apply(g1, b.apply(g2, x)))) {
                ++report.compatibility_failures;
            }
        }
    }
    return report;
}

GroupLawReport check_group_laws(const ActionDescriptor& a, uint64_t budget, uint64_t samples,
                                uint64_t seed) {
    GroupLawReport report;
    const ActionBackend& b = a.backend();
    const uint64_t n = b.group_order();
    const GroupElement e = b.group_identity();

    auto check_unary = [&](const GroupElement& g) {
        ++report.cases;
        bool ok = b.group_compose(g, e) == g && b.group_compose(e, g) == g;
        const GroupElement inv = b.group_inverse(g);
        ok = ok && b.group_compose(g, inv) == e && b.group_compose(inv, g) == e;
        if (!ok) {
            ++report.failures;
        }
    };
    auto check_assoc = [&](const GroupElement& g1, const GroupElement& g2, const GroupElement& g3) {
        ++report.cases;
        if (!(b.group_compose(b.group_compose(g1, g2), g3) ==
              b.group_compose(g1, b.group_compose(g2, g3)))) {
            ++report.failures;
        }
    };

    const bool exhaustive = n <= budget && n * n <= budget && n * n * n <= budget;
    report.exhaustive = exhaustive;
    if (exhaustive) {
        std::vector<GroupElement> elems;
        elems.reserve(n);
        for (uint64_t i = 0; i < n; ++i) {
            elems.push_back(b.group_element_at(i));
        }
        for (const auto& g : elems) {
            check_unary(g);
        }
        for (const auto& g1 : elems) {
            for (const auto& g2 : elems) {
                for (const auto& g3 : elems) {
                    check_assoc(g1, g2, g3);
                }
            }
        }
    } else {
        RandomTape tape = RandomTape::seeded(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            const GroupElement g1 = b.group_sample(tape);
            const GroupElement g2 = b.group_sample(tape);
            const GroupElement g3 = b.group_sample(tape);
            check_unary(g1);
            check_assoc(g1, g2, g3);
        }
    }
    return report;
}

RegularityReport check_regularity(const ActionDescriptor& a, uint64_t budget) {
    const ActionBackend& b = a.backend();
    const uint64_t n_g = b.group_order();
    const uint64_t n_x = b.set_size();
    if (n_g > budget || n_x > budget || n_g * n_x > budget) {
        throw EnumerationBoundError("check_regularity: |G| * |X| exceeds bound for " + a.id());
    }
    RegularityReport report;
    report.sizes_match = (n_g == n_x);
    for (uint64_t xi = 0; xi < n_x; ++xi) {
        const SetElement x = b.set_element_at(xi);
        std::set<Bytes> images;
        for (uint64_t gi = 0; gi < n_g; ++gi) {
            images.insert(b.apply(b.group_element_at(gi), x).bytes);
        }
        ++report.points_checked;
        if (images.size() != n_x) {
            ++report.bijection_failures;
        }
    }
    return report;
}

}  // namespace gac
