// Graph-based actions: vertex relabeling on labeled graphs, and the deck
// action (position shuffle plus per-card relabeling on tuples of cards).
#include <string>

#include "gac/actions.hpp"

namespace gac {

GroupElement perm_group_element(const Perm& p) {
    return GroupElement{perm_encode(p)};
}

SetElement graph_set_element(const Graph& g) {
    return SetElement{graph_encode(g)};
}

Graph graph_of(const SetElement& x) {
    size_t offset = 0;
    return graph_decode(x.bytes, offset);
}

namespace {

bool decode_perm_checked(const Bytes& bytes, uint8_t expect_m, Perm& out) {
    if (bytes.empty() || static_cast<uint8_t>(bytes[0]) != expect_m ||
        bytes.size() != 1u + expect_m) {
        return false;
    }
    size_t offset = 0;
    out = perm_decode(bytes, offset);
    return is_perm(out);
}

class GraphIsoAction final : public ActionBackend {
public:
    explicit GraphIsoAction(uint8_t n) : n_(n) {}

    std::string id() const override { return "graphiso-" + std::to_string(n_); }
    uint32_t lambda() const override { return n_; }
    ActionProperties properties() const override {
        const bool trivial = set_size() == 1;
        const bool single = group_order() == 1;
        return {trivial, single, trivial && single};
    }

    bool group_member(const GroupElement& g) const override {
        Perm p;
        return decode_perm_checked(g.bytes, n_, p);
    }
    GroupElement group_identity() const override { return perm_group_element(perm_identity(n_)); }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        size_t o1 = 0, o2 = 0;
        return perm_group_element(
            perm_compose(perm_decode(g1.bytes, o1), perm_decode(g2.bytes, o2)));
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        size_t o = 0;
        return perm_group_element(perm_inverse(perm_decode(g.bytes, o)));
    }
    uint64_t group_order() const override { return factorial(n_); }
    GroupElement group_element_at(uint64_t index) const override {
        return perm_group_element(perm_from_index(n_, index));
    }
    GroupElement group_sample(RandomTape& tape) const override {
        return perm_group_element(sample_perm(n_, tape));
    }
    uint32_t group_sample_bits() const override { return perm_sample_bits(n_); }

    bool set_member(const SetElement& x) const override {
        return x.bytes.size() == graph_encoded_size(n_) &&
               static_cast<uint8_t>(x.bytes[0]) == n_;
    }
    uint64_t set_size() const override { return graph_count(n_); }
    SetElement set_element_at(uint64_t index) const override {
        return graph_set_element(graph_from_index(n_, index));
    }
    SetElement set_sample(RandomTape& tape) const override {
        const uint32_t pairs = static_cast<uint32_t>(Graph::pair_count(n_));
        return set_element_at(tape.read_bits(pairs));
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        size_t o = 0;
        return graph_set_element(permute_graph(graph_of(x), perm_decode(g.bytes, o)));
    }

private:
    uint8_t n_;
};

// Deck group element: sigma on card positions followed by n relabelings of
// (n-1)-vertex cards; out_i = pi_i(in_{sigma(i)}).
struct DeckGroup {
    Perm sigma;
    std::vector<Perm> relabels;
};

class DeckAction final : public ActionBackend {
public:
    explicit DeckAction(uint8_t n) : n_(n), card_vertices_(static_cast<uint8_t>(n - 1)) {}

    std::string id() const override { return "deck-" + std::to_string(n_); }
    uint32_t lambda() const override { return n_; }
    ActionProperties properties() const override {
        const bool trivial = set_size() == 1;
        const bool single = group_order() == 1;
        return {trivial, single, trivial && single};
    }

    bool group_member(const GroupElement& g) const override {
        DeckGroup dg;
        return decode_group(g.bytes, dg);
    }
    GroupElement group_identity() const override {
        return encode_group({perm_identity(n_),
                             std::vector<Perm>(n_, perm_identity(card_vertices_))});
    }
    GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) const override {
        DeckGroup a, b;
        decode_group_or_throw(g1.bytes, a);
        decode_group_or_throw(g2.bytes, b);
        DeckGroup out;
        out.sigma = perm_compose(b.sigma, a.sigma);
        out.relabels.reserve(n_);
        for (uint8_t i = 0; i < n_; ++i) {
            out.relabels.push_back(perm_compose(a.relabels[i], b.relabels[a.sigma[i]]));
        }
        return encode_group(out);
    }
    GroupElement group_inverse(const GroupElement& g) const override {
        DeckGroup dg;
        decode_group_or_throw(g.bytes, dg);
        DeckGroup out;
        out.sigma = perm_inverse(dg.sigma);
        out.relabels.resize(n_);
        for (uint8_t j = 0; j < n_; ++j) {
            out.relabels[j] = perm_inverse(dg.relabels[out.sigma[j]]);
        }
        return encode_group(out);
    }
    uint64_t group_order() const override {
        uint64_t order = factorial(n_);
        const uint64_t card_perm = factorial(card_vertices_);
        for (uint8_t i = 0; i < n_; ++i) {
            order *= card_perm;
        }
        return order;
    }
    GroupElement group_element_at(uint64_t index) const override {
        DeckGroup dg;
        const uint64_t card_perm = factorial(card_vertices_);
        dg.relabels.resize(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            dg.relabels[i] = perm_from_index(card_vertices_, index % card_perm);
            index /= card_perm;
        }
        dg.sigma = perm_from_index(n_, index);
        return encode_group(dg);
    }
    GroupElement group_sample(RandomTape& tape) const override {
        DeckGroup dg;
        dg.sigma = sample_perm(n_, tape);
        dg.relabels.reserve(n_);
        for (uint8_t i = 0; i < n_; ++i) {
            dg.relabels.push_back(sample_perm(card_vertices_, tape));
        }
        return encode_group(dg);
    }
    uint32_t group_sample_bits() const override {
        return perm_sample_bits(n_) + n_ * perm_sample_bits(card_vertices_);
    }

    bool set_member(const SetElement& x) const override {
        const size_t card_size = graph_encoded_size(card_vertices_);
        if (x.bytes.size() != 1 + n_ * card_size ||
            static_cast<uint8_t>(x.bytes[0]) != n_) {
            return false;
        }
        for (uint8_t i = 0; i < n_; ++i) {
            if (static_cast<uint8_t>(x.bytes[1 + i * card_size]) != card_vertices_) {
                return false;
            }
        }
        return true;
    }
    uint64_t set_size() const override {
        const uint64_t per_card = graph_count(card_vertices_);
        uint64_t total = 1;
        for (uint8_t i = 0; i < n_; ++i) {
            total *= per_card;
        }
        return total;
    }
    SetElement set_element_at(uint64_t index) const override {
        const uint64_t per_card = graph_count(card_vertices_);
        std::vector<Graph> cards(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            cards[i] = graph_from_index(card_vertices_, index % per_card);
            index /= per_card;
        }
        return deck_set_element(cards);
    }
    SetElement set_sample(RandomTape& tape) const override {
        const uint32_t pairs = static_cast<uint32_t>(Graph::pair_count(card_vertices_));
        std::vector<Graph> cards;
        cards.reserve(n_);
        for (uint8_t i = 0; i < n_; ++i) {
            cards.push_back(graph_from_index(card_vertices_, tape.read_bits(pairs)));
        }
        return deck_set_element(cards);
    }

    SetElement apply(const GroupElement& g, const SetElement& x) const override {
        DeckGroup dg;
        decode_group_or_throw(g.bytes, dg);
        const std::vector<Graph> cards = deck_cards_of(x);
        std::vector<Graph> out;
        out.reserve(n_);
        for (uint8_t i = 0; i < n_; ++i) {
            out.push_back(permute_graph(cards[dg.sigma[i]], dg.relabels[i]));
        }
        return deck_set_element(out);
    }

private:
    uint8_t n_;
    uint8_t card_vertices_;

    GroupElement encode_group(const DeckGroup& dg) const {
        Bytes out = perm_encode(dg.sigma);
        for (const Perm& p : dg.relabels) {
            out += perm_encode(p);
        }
        return GroupElement{out};
    }
    bool decode_group(const Bytes& bytes, DeckGroup& out) const {
        if (bytes.size() != (1u + n_) + n_ * (1u + card_vertices_)) {
            return false;
        }
        size_t offset = 0;
        out.sigma = perm_decode(bytes, offset);
        if (out.sigma.size() != n_ || !is_perm(out.sigma)) {
            return false;
        }
        out.relabels.clear();
        for (uint8_t i = 0; i < n_; ++i) {
            out.relabels.push_back(perm_decode(bytes, offset));
            if (out.relabels.back().size() != card_vertices_ || !is_perm(out.relabels.back())) {
                return false;
            }
        }
        return true;
    }
    void decode_group_or_throw(const Bytes& bytes, DeckGroup& out) const {
        if (!decode_group(bytes, out)) {
            throw MembershipError("deck group element malformed");
        }
    }
};

}  // namespace

GroupElement deck_group_element(const Perm& sigma, const std::vector<Perm>& relabels) {
    Bytes out = perm_encode(sigma);
    for (const Perm& p : relabels) {
        out += perm_encode(p);
    }
    return GroupElement{out};
}

SetElement deck_set_element(const std::vector<Graph>& cards) {
    Bytes out;
    out.push_back(static_cast<char>(cards.size()));
    for (const Graph& c : cards) {
        out += graph_encode(c);
    }
    return SetElement{out};
}

std::vector<Graph> deck_cards_of(const SetElement& x) {
    if (x.bytes.empty()) {
        throw MembershipError("deck encoding truncated");
    }
    const uint8_t n = static_cast<uint8_t>(x.bytes[0]);
    std::vector<Graph> cards;
    cards.reserve(n);
    size_t offset = 1;
    for (uint8_t i = 0; i < n; ++i) {
        cards.push_back(graph_decode(x.bytes, offset));
    }
    return cards;
}

std::vector<Graph> deck_of_graph(const Graph& g) {
    std::vector<Graph> cards;
    cards.reserve(g.n);
    for (uint8_t v = 0; v < g.n; ++v) {
        cards.push_back(delete_vertex(g, v));
    }
    return cards;
}

ActionDescriptor build_graph_iso(uint64_t vertices) {
    if (vertices < 1 || vertices > 16) {
        throw InvalidParameterError("graphiso: vertices must be in [1, 16]");
    }
    return ActionDescriptor(std::make_shared<GraphIsoAction>(static_cast<uint8_t>(vertices)));
}

ActionDescriptor build_deck(uint64_t vertices) {
    if (vertices < 1 || vertices > 16) {
        throw InvalidParameterError("deck: vertices must be in [1, 16]");
    }
    return ActionDescriptor(std::make_shared<DeckAction>(static_cast<uint8_t>(vertices)));
}

}  // namespace gac
