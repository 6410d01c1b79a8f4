#include "gac/graph.hpp"

#include <algorithm>

#include "gac/errors.hpp"

namespace gac {

size_t Graph::pair_index(uint8_t n, uint8_t i, uint8_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    // offset of row i in the upper triangle, then distance past the diagonal
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

bool Graph::edge(uint8_t i, uint8_t j) const {
    if (i == j) {
        return false;
    }
    return adj[pair_index(n, i, j)];
}

void Graph::set_edge(uint8_t i, uint8_t j, bool present) {
    if (i == j) {
        throw InvalidParameterError("graph: self-loops not representable");
    }
    adj[pair_index(n, i, j)] = present;
}

size_t Graph::edge_count() const {
    return static_cast<size_t>(std::count(adj.begin(), adj.end(), true));
}

std::vector<uint32_t> Graph::degree_sequence() const {
    std::vector<uint32_t> deg(n, 0);
    for (uint8_t i = 0; i < n; ++i) {
        for (uint8_t j = static_cast<uint8_t>(i + 1); j < n; ++j) {
            if (edge(i, j)) {
                ++deg[i];
                ++deg[j];
            }
        }
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

size_t graph_encoded_size(uint8_t n) {
    return 1 + (Graph::pair_count(n) + 7) / 8;
}

Bytes graph_encode(const Graph& g) {
    Bytes out;
    out.push_back(static_cast<char>(g.n));
    uint8_t acc = 0;
    int nbits = 0;
    for (bool bit : g.adj) {
        acc = static_cast<uint8_t>((acc << 1) | (bit ? 1 : 0));
        if (++nbits == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) {
        out.push_back(static_cast<char>(acc << (8 - nbits)));
    }
    return out;
}

Graph graph_decode(const Bytes& in, size_t& offset) {
    if (offset >= in.size()) {
        throw MembershipError("graph encoding truncated");
    }
    const uint8_t n = static_cast<uint8_t>(in[offset]);
    const size_t total = graph_encoded_size(n);
    if (offset + total > in.size()) {
        throw MembershipError("graph encoding truncated");
    }
    Graph g(n);
    const size_t pairs = Graph::pair_count(n);
    for (size_t bit = 0; bit < pairs; ++bit) {
        const uint8_t byte = static_cast<uint8_t>(in[offset + 1 + bit / 8]);
        g.adj[bit] = (byte >> (7 - bit % 8)) & 1;
    }
    offset += total;
    return g;
}

Graph permute_graph(const Graph& g, const Perm& pi) {
    Graph out(g.n);
    for (uint8_t i = 0; i < g.n; ++i) {
        for (uint8_t j = static_cast<uint8_t>(i + 1); j < g.n; ++j) {
            if (g.edge(i, j)) {
                out.set_edge(pi[i], pi[j], true);
            }
        }
    }
    return out;
}

Graph graph_from_index(uint8_t n, uint64_t index) {
    Graph g(n);
    const size_t pairs = Graph::pair_count(n);
    for (size_t p = 0; p < pairs; ++p) {
        g.adj[p] = (index >> p) & 1;
    }
    return g;
}

uint64_t graph_count(uint8_t n) {
    return 1ull << Graph::pair_count(n);
}

Bytes min_isomorph_encoding(const Graph& g) {
    if (g.n > 8) {
        throw EnumerationBoundError("min_isomorph_encoding: n > 8");
    }
    Bytes best;
    const uint64_t total = factorial(g.n);
    for (uint64_t idx = 0; idx < total; ++idx) {
        Bytes enc = graph_encode(permute_graph(g, perm_from_index(g.n, idx)));
        if (best.empty() || enc < best) {
            best = std::move(enc);
        }
    }
    return best;
}

Graph delete_vertex(const Graph& g, uint8_t v) {
    if (v >= g.n) {
        throw InvalidParameterError("delete_vertex: vertex out of range");
    }
    Graph out(static_cast<uint8_t>(g.n - 1));
    for (uint8_t i = 0; i < g.n; ++i) {
        if (i == v) {
            continue;
        }
        for (uint8_t j = static_cast<uint8_t>(i + 1); j < g.n; ++j) {
            if (j == v || !g.edge(i, j)) {
                continue;
            }
            const uint8_t a = i < v ? i : static_cast<uint8_t>(i - 1);
            const uint8_t b = j < v ? j : static_cast<uint8_t>(j - 1);
            out.set_edge(a, b, true);
        }
    }
    return out;
}

}  // namespace gac
