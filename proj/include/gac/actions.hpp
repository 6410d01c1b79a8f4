// Concrete effective group actions.
//
//   modadd-n      (Z_n, +) acting on Z_n by addition; regular.
//   dlog-p-g      (Z_q, +) acting on the cyclic subgroup <g> of Z_p^* by
//                 a star x = g^a * x mod p, q the order of g; regular.
//   graphiso-n    S_n permuting the vertices of the 2^C(n,2) labeled graphs;
//                 non-transitive.
//   codeperm-n-k  GL_k(F2) x S_n acting on [n,k] binary codes, represented
//                 by RREF-canonical generator matrices via
//                 (S,P) star A = rref(S A P); non-transitive.
//   deck-n        S_n x (S_{n-1})^n acting on n-tuples of (n-1)-vertex
//                 graphs: position shuffle plus per-card relabeling;
//                 non-transitive.
//
// Group elements keep exact encodings; only code-action set elements are
// canonicalized (to RREF) so equality is row-space equality.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gac/action.hpp"
#include "gac/f2.hpp"
#include "gac/graph.hpp"
#include "gac/perm.hpp"

namespace gac {

enum class ActionKind {
    mod_add,
    discrete_log,
    graph_iso,
    code_perm,
    deck,
};

struct ActionSpec {
    ActionKind kind = ActionKind::mod_add;
    uint64_t n = 0;          // modulus / vertices / code length
    uint64_t k = 0;          // code dimension
    uint64_t p = 0;          // prime modulus (discrete_log)
    uint64_t generator = 0;  // subgroup generator (discrete_log)

    static ActionSpec mod_add(uint64_t n);
    static ActionSpec discrete_log(uint64_t p, uint64_t generator);
    static ActionSpec graph_iso(uint64_t vertices);
    static ActionSpec code_perm(uint64_t n, uint64_t k);
    static ActionSpec deck(uint64_t vertices);

    // Stable identifier, e.g. "modadd-12", "dlog-11-2", "codeperm-2-1".
    std::string id() const;
    static ActionSpec from_id(const std::string& id);

    // key=value config block (one pair per line).
    std::string to_config() const;
    static ActionSpec from_config(const std::string& text);
};

// Validates the spec and wires the descriptor. InvalidParameterError on bad
// parameters (composite p, k > n, zero modulus, ...).
ActionDescriptor build_action(const ActionSpec& spec);

// The code action without RREF canonicalization: set elements are arbitrary
// full-rank generator matrices, (S,P) star A = S A P exactly, and canonical()
// is unsupported. Exercises the no-unique-representation branch.
ActionDescriptor build_code_perm_raw(uint64_t n, uint64_t k);

// Orbit {g star x : g in G} by full group enumeration (bounded).
std::set<Bytes> orbit_of(const ActionDescriptor& a, const SetElement& x,
                         uint64_t bound = kDefaultEnumBound);

bool same_orbit(const ActionDescriptor& a, const SetElement& x, const SetElement& y,
                uint64_t bound = kDefaultEnumBound);

// Orbit representative partition: canonical bytes -> orbit index, plus sizes.
struct OrbitPartition {
    std::vector<std::set<Bytes>> orbits;
    // index into `orbits` for each enumerated set element
    std::vector<uint32_t> orbit_of_element;
};
OrbitPartition orbit_partition(const ActionDescriptor& a, uint64_t bound = kDefaultEnumBound);

// Restriction of a free action to the orbit of x0; the result is regular.
// NotFreeError when the free flag is not set.
ActionDescriptor restrict_to_orbit(const ActionDescriptor& a, const SetElement& x0,
                                   uint64_t bound = kDefaultEnumBound);

// Diagonal action of G on X^q: same group, tuples act componentwise. Used by
// the multi-pair-to-single-pair problem reductions.
ActionDescriptor power_action(const ActionDescriptor& a, uint32_t q);
// Tuple encoding helpers for the power action.
SetElement tuple_element(const ActionDescriptor& base, const std::vector<SetElement>& parts);
std::vector<SetElement> tuple_parts(const ActionDescriptor& base, uint32_t q, const SetElement& x);

// --- element construction helpers ---
GroupElement residue_group_element(uint64_t value);
SetElement residue_set_element(uint64_t value);
uint64_t residue_value(const Bytes& bytes);

GroupElement perm_group_element(const Perm& p);
SetElement graph_set_element(const Graph& g);
Graph graph_of(const SetElement& x);

GroupElement code_group_element(const F2Matrix& s, const Perm& p);
// RREF-canonicalizes before encoding.
SetElement code_set_element(const F2Matrix& generator);
F2Matrix code_matrix_of(const SetElement& x);

GroupElement deck_group_element(const Perm& sigma, const std::vector<Perm>& relabels);
SetElement deck_set_element(const std::vector<Graph>& cards);
std::vector<Graph> deck_cards_of(const SetElement& x);
// The deck of g: card i is g with vertex i deleted.
std::vector<Graph> deck_of_graph(const Graph& g);

}  // namespace gac
