#include "gac/tape.hpp"

#include <bit>

#include "gac/errors.hpp"

namespace gac {

RandomTape RandomTape::from_bits(const std::string& bits01) {
    std::vector<bool> bits;
    bits.reserve(bits01.size());
    for (char c : bits01) {
        if (c == '0') {
            bits.push_back(false);
        } else if (c == '1') {
            bits.push_back(true);
        } else {
            throw InvalidParameterError("tape literal must contain only '0'/'1'");
        }
    }
    return from_bit_vector(std::move(bits));
}

RandomTape RandomTape::from_bit_vector(std::vector<bool> bits) {
    RandomTape t;
    t.length_ = bits.size();
    t.bits_ = std::make_shared<const std::vector<bool>>(std::move(bits));
    t.bounded_ = true;
    return t;
}

RandomTape RandomTape::from_index(uint64_t index, uint32_t bits) {
    std::vector<bool> v(bits);
    for (uint32_t i = 0; i < bits; ++i) {
        v[i] = (index >> (bits - 1 - i)) & 1;
    }
    return from_bit_vector(std::move(v));
}

RandomTape RandomTape::seeded(uint64_t seed) {
    RandomTape t;
    t.seed_ = seed;
    t.bounded_ = false;
    return t;
}

RandomTape RandomTape::seeded(uint64_t seed, uint64_t length_bits) {
    RandomTape t = seeded(seed);
    t.bounded_ = true;
    t.length_ = length_bits;
    return t;
}

bool RandomTape::bit_at(uint64_t pos) const {
    const uint64_t abs = base_ + pos;
    if (bits_) {
        return (*bits_)[abs];
    }
    const uint64_t block = mix64(seed_ + (abs >> 6) + 1);
    return (block >> (63 - (abs & 63))) & 1;
}

bool RandomTape::read_bit() {
    if (bounded_ && cursor_ >= length_) {
        throw TapeExhaustedError("random tape exhausted at bit " + std::to_string(base_ + cursor_));
    }
    const bool b = bit_at(cursor_);
    ++cursor_;
    return b;
}

uint64_t RandomTape::read_bits(uint32_t count) {
    uint64_t v = 0;
    for (uint32_t i = 0; i < count; ++i) {
        v = (v << 1) | (read_bit() ? 1u : 0u);
    }
    return v;
}

RandomTape RandomTape::suffix(uint64_t offset_bits) const {
    RandomTape t = *this;
    t.base_ = base_ + offset_bits;
    if (bounded_) {
        t.length_ = offset_bits <= length_ ? length_ - offset_bits : 0;
    }
    t.cursor_ = 0;
    return t;
}

uint32_t uniform_bits_needed(uint64_t upper) {
    if (upper <= 1) {
        return 0;
    }
    return static_cast<uint32_t>(std::bit_width(upper - 1));
}

uint64_t uniform_below(RandomTape& tape, uint64_t upper) {
    if (upper == 0) {
        throw InvalidParameterError("uniform_below: empty range");
    }
    const uint32_t bits = uniform_bits_needed(upper);
    if (bits == 0) {
        return 0;
    }
    for (;;) {
        const uint64_t v = tape.read_bits(bits);
        if (v < upper) {
            return v;
        }
        // value out of range: discard and reread
    }
}

}  // namespace gac
