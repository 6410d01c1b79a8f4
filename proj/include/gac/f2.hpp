// Dense matrices over F2 with rows packed into 32-bit words (cols <= 32).
#pragma once

#include <cstdint>
#include <vector>

#include "gac/bytes.hpp"
#include "gac/perm.hpp"

namespace gac {

struct F2Matrix {
    uint8_t rows = 0;
    uint8_t cols = 0;
    std::vector<uint32_t> row_bits;  // bit c of row_bits[r] = entry (r, c)

    F2Matrix() = default;
    F2Matrix(uint8_t r, uint8_t c) : rows(r), cols(c), row_bits(r, 0) {}

    bool get(uint8_t r, uint8_t c) const { return (row_bits[r] >> c) & 1; }
    void set(uint8_t r, uint8_t c, bool v) {
        if (v) {
            row_bits[r] |= (1u << c);
        } else {
            row_bits[r] &= ~(1u << c);
        }
    }
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
};

F2Matrix f2_identity(uint8_t k);
F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b);

// Gauss-Jordan reduced row echelon form (pivots 1, zeroes above and below,
// pivot columns strictly increasing). Canonical per row space.
F2Matrix f2_rref(const F2Matrix& a);
uint8_t f2_rank(const F2Matrix& a);
bool f2_is_rref(const F2Matrix& a);
bool f2_is_invertible(const F2Matrix& a);
// Inverse of a square invertible matrix.
F2Matrix f2_inverse(const F2Matrix& a);

// Column permutation: result column j = input column pi(j). Realizes right
// multiplication by the permutation matrix of pi.
F2Matrix f2_permute_cols(const F2Matrix& a, const Perm& pi);

// Row-major bit packing, one byte of dimensions each, MSB-first bits.
Bytes f2_encode(const F2Matrix& a);
F2Matrix f2_decode(const Bytes& in, size_t& offset);
size_t f2_encoded_size(uint8_t rows, uint8_t cols);

// Build the k x k matrix whose row r packs the low k bits of mask >> (r*k).
F2Matrix f2_square_from_mask(uint8_t k, uint64_t mask);

// All invertible k x k matrices in mask order; desk scale (k <= 4).
std::vector<F2Matrix> enumerate_gl(uint8_t k);

// Weight distribution of the row space: counts[w] = codewords of weight w.
std::vector<uint64_t> f2_weight_enumerator(const F2Matrix& generator);

}  // namespace gac
