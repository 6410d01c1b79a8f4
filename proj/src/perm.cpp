#include "gac/perm.hpp"

#include <algorithm>

#include "gac/errors.hpp"

namespace gac {

Perm perm_identity(uint8_t m) {
    Perm p(m);
    for (uint8_t i = 0; i < m; ++i) {
        p[i] = i;
    }
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t v = 0; v < b.size(); ++v) {
        r[v] = a[b[v]];
    }
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t v = 0; v < p.size(); ++v) {
        r[p[v]] = static_cast<uint8_t>(v);
    }
    return r;
}

bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (uint8_t img : p) {
        if (img >= p.size() || seen[img]) {
            return false;
        }
        seen[img] = true;
    }
    return true;
}

Bytes perm_encode(const Perm& p) {
    Bytes out;
    out.push_back(static_cast<char>(p.size()));
    for (uint8_t img : p) {
        out.push_back(static_cast<char>(img));
    }
    return out;
}

Perm perm_decode(const Bytes& in, size_t& offset) {
    if (offset >= in.size()) {
        throw MembershipError("permutation encoding truncated");
    }
    const uint8_t m = static_cast<uint8_t>(in[offset]);
    if (offset + 1 + m > in.size()) {
        throw MembershipError("permutation encoding truncated");
    }
    Perm p(m);
    for (uint8_t i = 0; i < m; ++i) {
        p[i] = static_cast<uint8_t>(in[offset + 1 + i]);
    }
    offset += 1u + m;
    return p;
}

uint64_t factorial(uint32_t m) {
    uint64_t f = 1;
    for (uint32_t i = 2; i <= m; ++i) {
        f *= i;
    }
    return f;
}

Perm perm_from_index(uint8_t m, uint64_t index) {
    // Decode the factorial number system into a Lehmer code.
    std::vector<uint8_t> lehmer(m, 0);
    for (uint8_t i = 0; i < m; ++i) {
        const uint64_t f = factorial(static_cast<uint32_t>(m - 1 - i));
        lehmer[i] = static_cast<uint8_t>(index / f);
        index %= f;
    }
    std::vector<uint8_t> pool;
    pool.reserve(m);
    for (uint8_t v = 0; v < m; ++v) {
        pool.push_back(v);
    }
    Perm p(m);
    for (uint8_t i = 0; i < m; ++i) {
        p[i] = pool[lehmer[i]];
        pool.erase(pool.begin() + lehmer[i]);
    }
    return p;
}

Perm sample_perm(uint8_t m, RandomTape& tape) {
    Perm p = perm_identity(m);
    for (uint8_t i = 0; i + 1 < m; ++i) {
        const uint64_t j = i + uniform_below(tape, static_cast<uint64_t>(m - i));
        std::swap(p[i], p[j]);
    }
    return p;
}

uint32_t perm_sample_bits(uint8_t m) {
    uint32_t bits = 0;
    for (uint8_t i = 0; i + 1 < m; ++i) {
        bits += uniform_bits_needed(static_cast<uint64_t>(m - i));
    }
    return bits;
}

}  // namespace gac
