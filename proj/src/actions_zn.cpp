// Residue-based actions: modular addition and the discrete-log action.
#include <string>

#include "gac/actions.hpp"

namespace gac {

GroupElement residue_group_element(uint64_t value) {
    return GroupElement{be32(static_cast<uint32_t>(value))};
}

SetElement residue_set_element(uint64_t value) {
    return SetElement{be32(static_cast<uint32_t>(value))};
}

uint64_t residue_value(const Bytes& bytes) {
    return read_be32(bytes);
}

namespace {

bool valid_residue(const Bytes& bytes, uint64_t modulus) {
    return bytes.size() == 4 && read_be32(bytes) < modulus;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) {
            acc = (acc * b) % mod;
        }
        b = (b * b) % mod;
        exp >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

class ModAddAction final : public ActionBackend {
public:
    explicit ModAddAction(uint64_t n) : n_(n) {}

    std::string id() const override { return "modadd-" + std::to_string(n_); }
    uint32_t lambda() const override { return uniform_bits_needed(n_); }
    ActionProperties properties() const override { return {true, true, true}; }

    bool group_member(const GroupElement& g) const override { return valid_residue(g.bytes, n_); }
    GroupElement group_identity() const override { return residue_group_element(0); }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        return residue_group_element((read_be32(g1.bytes) + read_be32(g2.bytes)) % n_);
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        return residue_group_element((n_ - read_be32(g.bytes)) % n_);
    }
    uint64_t group_order() const override { return n_; }
    GroupElement group_element_at(uint64_t index) const override {
        return residue_group_element(index);
    }
    GroupElement group_sample(RandomTape& tape) const override {
        return residue_group_element(uniform_below(tape, n_));
    }
    uint32_t group_sample_bits() const override { return uniform_bits_needed(n_); }

    bool set_member(const SetElement& x) const override { return valid_residue(x.bytes, n_); }
    uint64_t set_size() const override { return n_; }
    SetElement set_element_at(uint64_t index) const override { return residue_set_element(index); }
    SetElement set_sample(RandomTape& tape) const override {
        return residue_set_element(uniform_below(tape, n_));
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        return residue_set_element((read_be32(g.bytes) + read_be32(x.bytes)) % n_);
    }

    std::optional<SetElement> origin() const override { return residue_set_element(0); }

private:
    uint64_t n_;
};

// a star x = g^a * x mod p on the subgroup <g> of Z_p^*; the group is
// (Z_q, +) with q = ord_p(g). Membership in <g> is x^q == 1 (the subgroup of
// order q in a cyclic group is unique).
class DiscreteLogAction final : public ActionBackend {
public:
    DiscreteLogAction(uint64_t p, uint64_t gen, uint64_t order)
        : p_(p), gen_(gen), order_(order) {}

    std::string id() const override {
        return "dlog-" + std::to_string(p_) + "-" + std::to_string(gen_);
    }
    uint32_t lambda() const override { return uniform_bits_needed(p_); }
    ActionProperties properties() const override { return {true, true, true}; }

    bool group_member(const GroupElement& g) const override {
        return valid_residue(g.bytes, order_);
    }
    GroupElement group_identity() const override { return residue_group_element(0); }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        return residue_group_element((read_be32(g1.bytes) + read_be32(g2.bytes)) % order_);
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        return residue_group_element((order_ - read_be32(g.bytes)) % order_);
    }
    uint64_t group_order() const override { return order_; }
    GroupElement group_element_at(uint64_t index) const override {
        return residue_group_element(index);
    }
    GroupElement group_sample(RandomTape& tape) const override {
        return residue_group_element(uniform_below(tape, order_));
    }
    uint32_t group_sample_bits() const override { return uniform_bits_needed(order_); }

    bool set_member(const SetElement& x) const override {
        if (x.bytes.size() != 4) {
            return false;
        }
        const uint64_t v = read_be32(x.bytes);
        return v >= 1 && v < p_ && pow_mod(v, order_, p_) == 1;
    }
    uint64_t set_size() const override { return order_; }
    SetElement set_element_at(uint64_t index) const override {
        return residue_set_element(pow_mod(gen_, index, p_));
    }
    SetElement set_sample(RandomTape& tape) const override {
        return set_element_at(uniform_below(tape, order_));
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        const uint64_t scale = pow_mod(gen_, read_be32(g.bytes), p_);
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(scale) * read_be32(x.bytes);
        return residue_set_element(static_cast<uint64_t>(prod % p_));
    }

    std::optional<SetElement> origin() const override { return residue_set_element(1); }

private:
    uint64_t p_;
    uint64_t gen_;
    uint64_t order_;
};

}  // namespace

ActionDescriptor build_mod_add(uint64_t n) {
    if (n < 2) {
        throw InvalidParameterError("modadd: modulus must be >= 2");
    }
    if (n > 0x7fffffff) {
        throw InvalidParameterError("modadd: modulus exceeds encoding width");
    }
    return ActionDescriptor(std::make_shared<ModAddAction>(n));
}

ActionDescriptor build_discrete_log(uint64_t p, uint64_t gen) {
    if (p > 0x7fffffff) {
        throw InvalidParameterError("dlog: p exceeds desk-scale bound");
    }
    if (!is_prime(p)) {
        throw InvalidParameterError("dlog: p must be prime");
    }
    if (gen < 2 || gen >= p) {
        throw InvalidParameterError("dlog: generator out of range");
    }
    // multiplicative order by iteration; p is desk scale
    uint64_t order = 1;
    uint64_t cur = gen % p;
    while (cur != 1) {
        cur = static_cast<uint64_t>((static_cast<unsigned __int128>(cur) * gen) % p);
        ++order;
        if (order > p) {
            throw InvalidParameterError("dlog: order computation failed");
        }
    }
    return ActionDescriptor(std::make_shared<DiscreteLogAction>(p, gen, order));
}

}  // namespace gac
