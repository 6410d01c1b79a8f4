// Byte-string utilities shared by element encodings, hashing and reports.
#pragma once

#include <cstdint>
#include <string>

namespace gac {

// All element encodings are opaque byte strings.
using Bytes = std::string;

inline void append_be32(Bytes& out, uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

inline Bytes be32(uint32_t v) {
    Bytes out;
    append_be32(out, v);
    return out;
}

inline uint32_t read_be32(const Bytes& in, size_t offset = 0) {
    return (static_cast<uint32_t>(static_cast<unsigned char>(in[offset])) << 24) |
           (static_cast<uint32_t>(static_cast<unsigned char>(in[offset + 1])) << 16) |
           (static_cast<uint32_t>(static_cast<unsigned char>(in[offset + 2])) << 8) |
           static_cast<uint32_t>(static_cast<unsigned char>(in[offset + 3]));
}

inline std::string to_hex(const Bytes& in) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(in.size() * 2);
    for (unsigned char c : in) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

// Inverse of to_hex. Returns false on odd length or non-hex characters.
bool from_hex(const std::string& hex, Bytes& out);

// FNV-1a, used for instance hashes in reports and logs.
inline uint64_t fnv1a64(const Bytes& data, uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : data) {
        h ^= static_cast<uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(const Bytes& data);

// splitmix64 finalizer; block i of a seeded stream is mix64(seed + (i+1)*golden).
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-index seed derivation for independent trial streams.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix64(seed ^ mix64(index + 0x517cc1b727220a95ULL));
}

}  // namespace gac
