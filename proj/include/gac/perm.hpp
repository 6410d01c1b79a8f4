// Permutations on {0,...,m-1} stored as image arrays: p[v] is the image of v.
#pragma once

#include <cstdint>
#include <vector>

#include "gac/bytes.hpp"
#include "gac/tape.hpp"

namespace gac {

using Perm = std::vector<uint8_t>;

Perm perm_identity(uint8_t m);

// Function composition: (a after b), i.e. result[v] = a[b[v]].
Perm perm_compose(const Perm& a, const Perm& b);

Perm perm_inverse(const Perm& p);

bool is_perm(const Perm& p);

// Wire form: one byte m followed by m image bytes.
Bytes perm_encode(const Perm& p);
Perm perm_decode(const Bytes& in, size_t& offset);

uint64_t factorial(uint32_t m);

// Lehmer-code bijection [0, m!) -> S_m, used for exhaustive enumeration.
Perm perm_from_index(uint8_t m, uint64_t index);

// Tape-driven Fisher-Yates: stage i draws j in [i, m) and swaps p[i], p[j].
// An all-zeros tape yields the identity; over the full minimal tape space the
// accepted draws hit every permutation exactly once.
Perm sample_perm(uint8_t m, RandomTape& tape);

// Bits one rejection-free permutation sample consumes.
uint32_t perm_sample_bits(uint8_t m);

}  // namespace gac
