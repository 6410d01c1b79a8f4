// Simple undirected graphs on labeled vertices, no self-loops.
// Encoding: one byte n, then the upper-triangular adjacency bits for pairs
// (0,1),(0,2),...,(0,n-1),(1,2),... packed MSB-first.
#pragma once

#include <cstdint>
#include <vector>

#include "gac/bytes.hpp"
#include "gac/perm.hpp"

namespace gac {

struct Graph {
    uint8_t n = 0;
    std::vector<bool> adj;  // C(n,2) upper-triangular entries

    Graph() = default;
    explicit Graph(uint8_t vertices) : n(vertices), adj(pair_count(vertices), false) {}

    static size_t pair_count(uint8_t n) { return static_cast<size_t>(n) * (n - 1) / 2; }
    static size_t pair_index(uint8_t n, uint8_t i, uint8_t j);

    bool edge(uint8_t i, uint8_t j) const;
    void set_edge(uint8_t i, uint8_t j, bool present);
    size_t edge_count() const;
    std::vector<uint32_t> degree_sequence() const;  // sorted multiset

    friend bool operator==(const Graph&, const Graph&) = default;
};

Bytes graph_encode(const Graph& g);
Graph graph_decode(const Bytes& in, size_t& offset);
size_t graph_encoded_size(uint8_t n);

// Vertex relabeling: edge (u,v) maps to (pi(u), pi(v)).
Graph permute_graph(const Graph& g, const Perm& pi);

// Graphs on n vertices indexed by edge-set bitmask; index i sets pair p
// when bit p of i is one.
Graph graph_from_index(uint8_t n, uint64_t index);
uint64_t graph_count(uint8_t n);  // 2^C(n,2)

// Minimum encoding over all relabelings: a brute-force canonical form for
// the isomorphism class. Desk scale only (n <= 8).
Bytes min_isomorph_encoding(const Graph& g);

// Card i of the deck: g with vertex i deleted and later vertices shifted down.
Graph delete_vertex(const Graph& g, uint8_t v);

}  // namespace gac
