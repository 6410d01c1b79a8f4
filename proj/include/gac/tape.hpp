// Randomness tapes: deterministic bit sources for samplers and reductions.
//
// Two modes share one interface:
//   * explicit tapes hold a finite bit string and raise TapeExhaustedError
//     when a read passes the end (this is what exact enumeration uses);
//   * seeded tapes expand a 64-bit seed in counter mode and are unbounded
//     unless a length is given.
//
// Reading bit p is a pure function of (contents, p), so re-reading from the
// same position always yields the same bits. Copies are cheap and share the
// underlying explicit bit storage.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gac/bytes.hpp"

namespace gac {

class RandomTape {
public:
    // Explicit tape from a string of '0'/'1' characters.
    static RandomTape from_bits(const std::string& bits01);
    static RandomTape from_bit_vector(std::vector<bool> bits);
    // Explicit tape holding `bits` bits of `index`, most significant first.
    // Enumerating index over [0, 2^bits) walks the whole tape space.
    static RandomTape from_index(uint64_t index, uint32_t bits);
    // Counter-mode expansion of a seed; unbounded unless length_bits given.
    static RandomTape seeded(uint64_t seed);
    static RandomTape seeded(uint64_t seed, uint64_t length_bits);

    bool read_bit();
    // Up to 64 bits, assembled most-significant-first.
    uint64_t read_bits(uint32_t count);

    uint64_t cursor() const { return cursor_; }
    void seek(uint64_t bit_pos) { cursor_ = bit_pos; }

    bool bounded() const { return bounded_; }
    // Only meaningful for bounded tapes.
    uint64_t length_bits() const { return length_; }

    // Tape that exposes this tape's bits starting at absolute position
    // `offset_bits`, with a fresh cursor at 0. Used to hand a reduction
    // round its own segment.
    RandomTape suffix(uint64_t offset_bits) const;

private:
    RandomTape() = default;

    std::shared_ptr<const std::vector<bool>> bits_;  // null for seeded mode
    uint64_t seed_ = 0;
    uint64_t base_ = 0;    // absolute offset of this view
    uint64_t length_ = 0;  // remaining length of the view when bounded
    bool bounded_ = false;
    uint64_t cursor_ = 0;

    bool bit_at(uint64_t pos) const;
};

// Uniform draw from [0, upper) by rejection: reads bit_width(upper-1) bits
// per attempt and rereads on values >= upper. upper == 1 reads nothing.
uint64_t uniform_below(RandomTape& tape, uint64_t upper);

// Minimal bits one rejection-free uniform_below(upper) read consumes.
uint32_t uniform_bits_needed(uint64_t upper);

}  // namespace gac
