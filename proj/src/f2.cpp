#include "gac/f2.hpp"

#include <bit>

#include "gac/errors.hpp"

namespace gac {

F2Matrix f2_identity(uint8_t k) {
    F2Matrix m(k, k);
    for (uint8_t i = 0; i < k; ++i) {
        m.set(i, i, true);
    }
    return m;
}

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix r(a.rows, b.cols);
    for (uint8_t i = 0; i < a.rows; ++i) {
        uint32_t acc = 0;
        uint32_t row = a.row_bits[i];
        for (uint8_t k = 0; k < a.cols; ++k) {
            if ((row >> k) & 1) {
                acc ^= b.row_bits[k];
            }
        }
        r.row_bits[i] = acc;
    }
    return r;
}

F2Matrix f2_rref(const F2Matrix& a) {
    F2Matrix m = a;
    uint8_t pivot_row = 0;
    for (uint8_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        uint8_t sel = pivot_row;
        while (sel < m.rows && !m.get(sel, col)) {
            ++sel;
        }
        if (sel == m.rows) {
            continue;
        }
        std::swap(m.row_bits[sel], m.row_bits[pivot_row]);
        for (uint8_t r = 0; r < m.rows; ++r) {
            if (r != pivot_row && m.get(r, col)) {
                m.row_bits[r] ^= m.row_bits[pivot_row];
            }
        }
        ++pivot_row;
    }
    return m;
}

uint8_t f2_rank(const F2Matrix& a) {
    F2Matrix m = f2_rref(a);
    uint8_t rank = 0;
    for (uint8_t r = 0; r < m.rows; ++r) {
        if (m.row_bits[r] != 0) {
            ++rank;
        }
    }
    return rank;
}

bool f2_is_rref(const F2Matrix& a) {
    return f2_rref(a) == a;
}

bool f2_is_invertible(const F2Matrix& a) {
    return a.rows == a.cols && f2_rank(a) == a.rows;
}

F2Matrix f2_inverse(const F2Matrix& a) {
    if (a.rows != a.cols) {
        throw InvalidParameterError("f2_inverse: matrix not square");
    }
    const uint8_t k = a.rows;
    // Row-reduce [a | I]; the right block becomes the inverse.
    F2Matrix aug(k, static_cast<uint8_t>(2 * k));
    for (uint8_t r = 0; r < k; ++r) {
        aug.row_bits[r] = a.row_bits[r] | (1u << (k + r));
    }
    uint8_t pivot_row = 0;
    for (uint8_t col = 0; col < k && pivot_row < k; ++col) {
        uint8_t sel = pivot_row;
        while (sel < k && !aug.get(sel, col)) {
            ++sel;
        }
        if (sel == k) {
            throw InvalidParameterError("f2_inverse: matrix singular");
        }
        std::swap(aug.row_bits[sel], aug.row_bits[pivot_row]);
        for (uint8_t r = 0; r < k; ++r) {
            if (r != pivot_row && aug.get(r, col)) {
                aug.row_bits[r] ^= aug.row_bits[pivot_row];
            }
        }
        ++pivot_row;
    }
    if (pivot_row != k) {
        throw InvalidParameterError("f2_inverse: matrix singular");
    }
    F2Matrix inv(k, k);
    for (uint8_t r = 0; r < k; ++r) {
        inv.row_bits[r] = aug.row_bits[r] >> k;
    }
    return inv;
}

F2Matrix f2_permute_cols(const F2Matrix& a, const Perm& pi) {
    F2Matrix r(a.rows, a.cols);
    for (uint8_t i = 0; i < a.rows; ++i) {
        uint32_t out = 0;
        for (uint8_t j = 0; j < a.cols; ++j) {
            if (a.get(i, pi[j])) {
                out |= (1u << j);
            }
        }
        r.row_bits[i] = out;
    }
    return r;
}

size_t f2_encoded_size(uint8_t rows, uint8_t cols) {
    return 2 + (static_cast<size_t>(rows) * cols + 7) / 8;
}

Bytes f2_encode(const F2Matrix& a) {
    Bytes out;
    out.push_back(static_cast<char>(a.rows));
    out.push_back(static_cast<char>(a.cols));
    uint8_t acc = 0;
    int nbits = 0;
    for (uint8_t r = 0; r < a.rows; ++r) {
        for (uint8_t c = 0; c < a.cols; ++c) {
            acc = static_cast<uint8_t>((acc << 1) | (a.get(r, c) ? 1 : 0));
            if (++nbits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        out.push_back(static_cast<char>(acc << (8 - nbits)));
    }
    return out;
}

F2Matrix f2_decode(const Bytes& in, size_t& offset) {
    if (offset + 2 > in.size()) {
        throw MembershipError("matrix encoding truncated");
    }
    const uint8_t rows = static_cast<uint8_t>(in[offset]);
    const uint8_t cols = static_cast<uint8_t>(in[offset + 1]);
    if (cols > 32) {
        throw MembershipError("matrix encoding too wide");
    }
    const size_t total = f2_encoded_size(rows, cols);
    if (offset + total > in.size()) {
        throw MembershipError("matrix encoding truncated");
    }
    F2Matrix m(rows, cols);
    size_t bit = 0;
    for (uint8_t r = 0; r < rows; ++r) {
        for (uint8_t c = 0; c < cols; ++c, ++bit) {
            const uint8_t byte = static_cast<uint8_t>(in[offset + 2 + bit / 8]);
            m.set(r, c, (byte >> (7 - bit % 8)) & 1);
        }
    }
    offset += total;
    return m;
}

F2Matrix f2_square_from_mask(uint8_t k, uint64_t mask) {
    F2Matrix m(k, k);
    for (uint8_t r = 0; r < k; ++r) {
        m.row_bits[r] = static_cast<uint32_t>((mask >> (r * k)) & ((1u << k) - 1));
    }
    return m;
}

std::vector<F2Matrix> enumerate_gl(uint8_t k) {
    if (k > 4) {
        throw EnumerationBoundError("enumerate_gl: k > 4 not enumerated");
    }
    std::vector<F2Matrix> out;
    const uint64_t total = 1ull << (k * k);
    for (uint64_t mask = 0; mask < total; ++mask) {
        F2Matrix m = f2_square_from_mask(k, mask);
        if (f2_is_invertible(m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<uint64_t> f2_weight_enumerator(const F2Matrix& generator) {
    std::vector<uint64_t> counts(generator.cols + 1, 0);
    const uint64_t words = 1ull << generator.rows;
    for (uint64_t mask = 0; mask < words; ++mask) {
        uint32_t word = 0;
        for (uint8_t r = 0; r < generator.rows; ++r) {
            if ((mask >> r) & 1) {
                word ^= generator.row_bits[r];
            }
        }
        counts[std::popcount(word)]++;
    }
    return counts;
}

}  // namespace gac
