// Code equivalence actions: GL_k(F2) x S_n acting on binary [n,k] codes.
// The standard variant stores codes as RREF-canonical generator matrices and
// re-reduces after each action; the raw variant acts on generator matrices
// exactly and offers no canonical form.
#include <algorithm>
#include <string>

#include "gac/actions.hpp"

namespace gac {

GroupElement code_group_element(const F2Matrix& s, const Perm& p) {
    return GroupElement{f2_encode(s) + perm_encode(p)};
}

SetElement code_set_element(const F2Matrix& generator) {
    return SetElement{f2_encode(f2_rref(generator))};
}

F2Matrix code_matrix_of(const SetElement& x) {
    size_t offset = 0;
    return f2_decode(x.bytes, offset);
}

namespace {

struct CodeGroup {
    F2Matrix s;
    Perm p;
};

class CodePermBase : public ActionBackend {
public:
    CodePermBase(uint8_t n, uint8_t k) : n_(n), k_(k), gl_(enumerate_gl(k)) {}

    uint32_t lambda() const override { return n_; }
    ActionProperties properties() const override {
        const bool trivial = set_size() == 1;
        const bool single = group_order() == 1;
        return {trivial, single, trivial && single};
    }

    bool group_member(const GroupElement& g) const override {
        CodeGroup cg;
        return decode_group(g.bytes, cg);
    }
    GroupElement group_identity() const override {
        return code_group_element(f2_identity(k_), perm_identity(n_));
    }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        CodeGroup a = decode_group_or_throw(g1.bytes);
        CodeGroup b = decode_group_or_throw(g2.bytes);
        // right action on columns: permutation parts compose in swapped order
        return code_group_element(f2_mul(a.s, b.s), perm_compose(b.p, a.p));
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        CodeGroup cg = decode_group_or_throw(g.bytes);
        return code_group_element(f2_inverse(cg.s), perm_inverse(cg.p));
    }
    uint64_t group_order() const override { return gl_.size() * factorial(n_); }
    GroupElement group_element_at(uint64_t index) const override {
        const uint64_t perms = factorial(n_);
        return code_group_element(gl_[index / perms], perm_from_index(n_, index % perms));
    }
    GroupElement group_sample(RandomTape& tape) const override {
        // rejection over k x k bit masks, then Fisher-Yates for the column part
        F2Matrix s;
        for (;;) {
            s = f2_square_from_mask(k_, tape.read_bits(static_cast<uint32_t>(k_) * k_));
            if (f2_is_invertible(s)) {
                break;
            }
        }
        return code_group_element(s, sample_perm(n_, tape));
    }
    uint32_t group_sample_bits() const override {
        return static_cast<uint32_t>(k_) * k_ + perm_sample_bits(n_);
    }

    uint64_t set_size() const override { return elements_.size(); }
    SetElement set_element_at(uint64_t index) const override {
        return SetElement{elements_[index]};
    }
    SetElement set_sample(RandomTape& tape) const override {
        return SetElement{elements_[uniform_below(tape, elements_.size())]};
    }

protected:
    uint8_t n_;
    uint8_t k_;
    std::vector<F2Matrix> gl_;
    std::vector<Bytes> elements_;  // sorted encodings, filled by subclasses

    bool shape_ok(const F2Matrix& m) const { return m.rows == k_ && m.cols == n_; }

    bool decode_group(const Bytes& bytes, CodeGroup& out) const {
        if (bytes.size() != f2_encoded_size(k_, k_) + 1u + n_) {
            return false;
        }
        size_t offset = 0;
        out.s = f2_decode(bytes, offset);
        if (out.s.rows != k_ || out.s.cols != k_ || !f2_is_invertible(out.s)) {
            return false;
        }
        out.p = perm_decode(bytes, offset);
        return out.p.size() == n_ && is_perm(out.p);
    }
    CodeGroup decode_group_or_throw(const Bytes& bytes) const {
        CodeGroup cg;
        if (!decode_group(bytes, cg)) {
            throw MembershipError("code group element malformed");
        }
        return cg;
    }
    void enumerate_elements(bool rref_only) {
        const uint64_t total = 1ull << (static_cast<uint32_t>(k_) * n_);
        for (uint64_t mask = 0; mask < total; ++mask) {
            F2Matrix m(k_, n_);
            for (uint8_t r = 0; r < k_; ++r) {
                m.row_bits[r] =
                    static_cast<uint32_t>((mask >> (r * n_)) & ((1ull << n_) - 1));
            }
            if (f2_rank(m) != k_) {
                continue;
            }
            if (rref_only && !f2_is_rref(m)) {
                continue;
            }
            elements_.push_back(f2_encode(m));
        }
        std::sort(elements_.begin(), elements_.end());
    }
};

class CodePermAction final : public CodePermBase {
public:
    CodePermAction(uint8_t n, uint8_t k) : CodePermBase(n, k) { enumerate_elements(true); }

    std::string id() const override {
        return "codeperm-" + std::to_string(n_) + "-" + std::to_string(k_);
    }

    bool set_member(const SetElement& x) const override {
        size_t offset = 0;
        F2Matrix m;
        try {
            m = f2_decode(x.bytes, offset);
        } catch (const MembershipError&) {
            return false;
        }
        return offset == x.bytes.size() && shape_ok(m) && f2_rank(m) == k_ && f2_is_rref(m);
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        CodeGroup cg = decode_group_or_throw(g.bytes);
        const F2Matrix scaled = f2_mul(cg.s, code_matrix_of(x));
        return SetElement{f2_encode(f2_rref(f2_permute_cols(scaled, cg.p)))};
    }
};

class CodePermRawAction final : public CodePermBase {
public:
    CodePermRawAction(uint8_t n, uint8_t k) : CodePermBase(n, k) { enumerate_elements(false); }

    std::string id() const override {
        return "codepermraw-" + std::to_string(n_) + "-" + std::to_string(k_);
    }

    bool unique_representation() const override { return false; }

    bool set_member(const SetElement& x) const override {
        size_t offset = 0;
        F2Matrix m;
        try {
            m = f2_decode(x.bytes, offset);
        } catch (const MembershipError&) {
            return false;
        }
        return offset == x.bytes.size() && shape_ok(m) && f2_rank(m) == k_;
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        CodeGroup cg = decode_group_or_throw(g.bytes);
        const F2Matrix scaled = f2_mul(cg.s, code_matrix_of(x));
        return SetElement{f2_encode(f2_permute_cols(scaled, cg.p))};
    }
};

void validate_code_params(uint64_t n, uint64_t k) {
    if (k < 1 || k > n) {
        throw InvalidParameterError("codeperm: need 1 <= k <= n");
    }
    if (k > 4) {
        throw InvalidParameterError("codeperm: k > 4 exceeds desk-scale GL enumeration");
    }
    if (n * k > 20) {
        throw InvalidParameterError("codeperm: k*n > 20 exceeds desk-scale set enumeration");
    }
    if (n > 20) {
        throw InvalidParameterError("codeperm: n > 20 not supported");
    }
}

}  // namespace

ActionDescriptor build_code_perm(uint64_t n, uint64_t k) {
    validate_code_params(n, k);
    return ActionDescriptor(
        std::make_shared<CodePermAction>(static_cast<uint8_t>(n), static_cast<uint8_t>(k)));
}

ActionDescriptor build_code_perm_raw(uint64_t n, uint64_t k) {
    validate_code_params(n, k);
    return ActionDescriptor(
        std::make_shared<CodePermRawAction>(static_cast<uint8_t>(n), static_cast<uint8_t>(k)));
}

}  // namespace gac
