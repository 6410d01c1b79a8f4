// Blinding maps, recovery maps and the repetition orchestrator. Expected
// values come from direct modular arithmetic or permutation algebra done in
// the test, and every distribution claim is checked by full tape-space
// enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "gac/actions.hpp"
#include "gac/reduce.hpp"
#include "gac/stats.hpp"

using namespace gac;

namespace {

ActionDescriptor modadd12() { return build_action(ActionSpec::mod_add(12)); }

SetElement res(uint64_t v) { return residue_set_element(v); }

// 4-bit big-endian nibbles, the raw tape feeding modadd blinder samples
std::string nibble(uint64_t v) {
    std::string out;
    for (int i = 3; i >= 0; --i) {
        out.push_back(((v >> i) & 1) ? '1' : '0');
    }
    return out;
}

MGaipInstance mod_pairs(std::initializer_list<std::pair<uint64_t, uint64_t>> pairs) {
    MGaipInstance inst;
    for (const auto& [x, y] : pairs) {
        inst.pairs.emplace_back(res(x), res(y));
    }
    return inst;
}

Graph path_with_edges(std::initializer_list<std::pair<int, int>> edges) {
    Graph g(3);
    for (const auto& [u, v] : edges) {
        g.set_edge(static_cast<uint8_t>(u), static_cast<uint8_t>(v), true);
    }
    return g;
}

}  // namespace

TEST_CASE("sigma_gaip blinds with tape-derived elements") {
    auto a = modadd12();
    const GaipInstance inst{res(5), res(2)};

    RandomTape tape = RandomTape::from_bits(nibble(4) + nibble(7));
    const GaipInstance blinded = sigma_gaip(a, 1, inst, tape);
    CHECK(blinded.x == res(9));   // 4 + 5
    CHECK(blinded.y == res(9));   // 7 + 2

    RandomTape id_tape = RandomTape::from_bits(nibble(0) + nibble(0));
    const GaipInstance same = sigma_gaip(a, 1, inst, id_tape);
    CHECK(same == inst);

    RandomTape starved = RandomTape::from_bits(nibble(4));
    CHECK_THROWS_AS(sigma_gaip(a, 1, inst, starved), TapeExhaustedError);
}

TEST_CASE("blinders are a function of (round, tape) alone") {
    auto a = modadd12();
    RandomTape tape = RandomTape::seeded(11);

    RandomTape t1 = tape;
    RandomTape t2 = tape;
    const GaipBlinders b1 = derive_gaip_blinders(a, 1, t1);
    const GaipBlinders b2 = derive_gaip_blinders(a, 1, t2);
    CHECK(b1.gx == b2.gx);
    CHECK(b1.gy == b2.gy);

    // recovering the blinder from sigma outputs on two different instances
    // yields the same element: sigma never looked at the instance
    RandomTape s1 = tape;
    RandomTape s2 = tape;
    const GaipInstance i1{res(5), res(2)};
    const GaipInstance i2{res(0), res(0)};
    const GaipInstance o1 = sigma_gaip(a, 1, i1, s1);
    const GaipInstance o2 = sigma_gaip(a, 1, i2, s2);
    const uint64_t gx_from_1 = (residue_value(o1.x.bytes) + 12 - 5) % 12;
    const uint64_t gx_from_2 = residue_value(o2.x.bytes);
    CHECK(gx_from_1 == gx_from_2);

    // distinct rounds read distinct segments of the same tape
    RandomTape r2 = tape;
    const GaipBlinders second = derive_gaip_blinders(a, 2, r2);
    CHECK((!(second.gx == b1.gx) || !(second.gy == b1.gy)));
}

TEST_CASE("sigma outputs are identically distributed across instances") {
    auto a = modadd12();
    auto histogram_for = [&](const GaipInstance& inst) {
        return exact_distribution(
            [&](RandomTape& tape) { return instance_bytes(sigma_gaip(a, 1, inst, tape)); }, 8);
    };
    const Histogram h1 = histogram_for(GaipInstance{res(5), res(2)});
    const Histogram h2 = histogram_for(GaipInstance{res(0), res(0)});
    CHECK(h1.total == 144);
    CHECK(tv_distance(h1, h2) == Rational(0));
    // and each is exactly uniform over X x X
    CHECK(tv_distance_from_uniform(h1, 144) == Rational(0));
}

TEST_CASE("phi_gaip unblinds the oracle answer") {
    auto a = modadd12();
    const GaipInstance inst{res(5), res(2)};
    const std::string tape_bits = nibble(4) + nibble(7);

    // oracle answer for the blinded pair (9,9) is 0; phi gives -4 + 0 + 7 = 3
    RandomTape tape = RandomTape::from_bits(tape_bits);
    const DeltaSolution recovered =
        phi_gaip(a, inst, tape, DeltaSolution::found(residue_group_element(0)));
    REQUIRE(recovered.is_found());
    CHECK(*recovered.witness == residue_group_element(3));
    CHECK(act(a, *recovered.witness, inst.y) == inst.x);

    // identity blinders pass the answer through
    RandomTape id_tape = RandomTape::from_bits(nibble(0) + nibble(0));
    const DeltaSolution same =
        phi_gaip(a, inst, id_tape, DeltaSolution::found(residue_group_element(3)));
    CHECK(*same.witness == residue_group_element(3));

    // not-in-orbit passes through untouched
    RandomTape nio_tape = RandomTape::from_bits(tape_bits);
    CHECK_FALSE(phi_gaip(a, inst, nio_tape, DeltaSolution::not_in_orbit()).is_found());
}

TEST_CASE("sigma/oracle/phi rounds recover verified graph witnesses") {
    auto g3 = build_action(ActionSpec::graph_iso(3));
    const SetElement p123 = graph_set_element(path_with_edges({{0, 1}, {1, 2}}));
    const SetElement p213 = graph_set_element(path_with_edges({{1, 0}, {0, 2}}));
    const GaipInstance inst{p123, p213};
    Oracle oracle = Oracle::exact(Problem::gaip);

    // all 64 explicit 6-bit tapes; the 36 accepted ones must all verify
    uint64_t verified = 0, rejected = 0;
    for (uint64_t index = 0; index < 64; ++index) {
        RandomTape tape = RandomTape::from_index(index, 6);
        RandomTape replay = tape;
        try {
            const GaipInstance blinded = sigma_gaip(g3, 1, inst, tape);
            const DeltaSolution answer = oracle.query_gaip(g3, blinded);
            const DeltaSolution out = phi_gaip(g3, inst, replay, answer);
            REQUIRE(out.is_found());
            REQUIRE(act(g3, *out.witness, inst.y) == inst.x);
            ++verified;
        } catch (const TapeExhaustedError&) {
            ++rejected;
        }
    }
    CHECK(verified == 36);
    CHECK(rejected == 28);
}

TEST_CASE("sigma_mgaip blinds every pair with one element") {
    auto a = modadd12();
    const MGaipInstance inst = mod_pairs({{5, 2}, {9, 6}});

    RandomTape tape = RandomTape::from_bits(nibble(4));
    const MGaipInstance blinded = sigma_mgaip(a, 1, inst, tape);
    REQUIRE(blinded.pairs.size() == 2);
    CHECK(blinded.pairs[0] == std::pair{res(9), res(6)});
    CHECK(blinded.pairs[1] == std::pair{res(1), res(10)});

    RandomTape id_tape = RandomTape::from_bits(nibble(0));
    CHECK(sigma_mgaip(a, 1, inst, id_tape) == inst);

    // a length-1 instance is the common-blinder variant of sigma_gaip
    RandomTape t1 = RandomTape::from_bits(nibble(7));
    RandomTape t2 = RandomTape::from_bits(nibble(7));
    const MGaipInstance single = sigma_mgaip(a, 1, mod_pairs({{5, 2}}), t1);
    const GroupElement g = derive_instance_blinder(a, 1, t2);
    CHECK(single.pairs[0].first == act(a, g, res(5)));
    CHECK(single.pairs[0].second == act(a, g, res(2)));

    CHECK_THROWS_AS(sigma_mgaip(a, 1, MGaipInstance{}, t1), EmptyInstanceError);
}

TEST_CASE("phi_mgaip conjugates the blinded answer") {
    auto a = modadd12();
    const MGaipInstance inst = mod_pairs({{5, 2}, {9, 6}});
    // abelian case: conjugation is trivial and 3 is the common difference
    RandomTape tape = RandomTape::from_bits(nibble(4));
    const DeltaSolution out =
        phi_mgaip(a, inst, tape, DeltaSolution::found(residue_group_element(3)));
    REQUIRE(out.is_found());
    CHECK(*out.witness == residue_group_element(3));
    CHECK(witness_valid(a, inst, *out.witness));
}

TEST_CASE("conjugation algebra on all S4 pairs") {
    auto g4 = build_action(ActionSpec::graph_iso(4));
    const ActionBackend& b = g4.backend();
    for (uint64_t pi = 0; pi < 24; ++pi) {
        const GroupElement witness = b.group_element_at(pi);
        for (uint64_t rho_i = 0; rho_i < 24; ++rho_i) {
            const GroupElement rho = b.group_element_at(rho_i);
            // blinded witness rho pi rho^-1; recovery rho^-1 (...) rho = pi
            const GroupElement conj =
                b.group_compose(b.group_compose(rho, witness), b.group_inverse(rho));
            const GroupElement back =
                b.group_compose(b.group_compose(b.group_inverse(rho), conj), rho);
            REQUIRE(back == witness);
        }
    }
}

TEST_CASE("mgaip blinding and recovery on a non-abelian action") {
    auto g4 = build_action(ActionSpec::graph_iso(4));
    const ActionBackend& b = g4.backend();
    Oracle oracle = Oracle::exact(Problem::mgaip);
    RandomTape rng = RandomTape::seeded(31);
    for (int trial = 0; trial < 40; ++trial) {
        // instance with a planted common witness
        const GroupElement planted = b.group_sample(rng);
        MGaipInstance inst;
        for (int j = 0; j < 2; ++j) {
            const SetElement y = b.set_sample(rng);
            inst.pairs.emplace_back(act(g4, planted, y), y);
        }
        RandomTape tape = RandomTape::seeded(derive_seed(77, trial));
        RandomTape replay = tape;
        const MGaipInstance blinded = sigma_mgaip(g4, 1, inst, tape);
        const DeltaSolution answer = oracle.query_mgaip(g4, blinded);
        REQUIRE(answer.is_found());
        const DeltaSolution out = phi_mgaip(g4, inst, replay, answer);
        REQUIRE(out.is_found());
        REQUIRE(witness_valid(g4, inst, *out.witness));
    }
}

TEST_CASE("sigma_pgaip preserves the promise branch") {
    auto a = modadd12();

    // structured: witness g becomes h g h^-1 (here abelian, so g itself)
    PGaipInstance structured{{{res(5), res(2)}, {res(9), res(6)}}, PromiseTag::structured};
    RandomTape tape = RandomTape::from_bits(nibble(4));
    const PGaipInstance blinded = sigma_pgaip(a, 1, structured, tape);
    CHECK(blinded.promise_tag == PromiseTag::structured);
    CHECK(decide_pgaip_bruteforce(a, blinded) == 1);
    const DeltaSolution witness = solve_mgaip_bruteforce(a, MGaipInstance{blinded.pairs});
    REQUIRE(witness.is_found());
    CHECK(*witness.witness == residue_group_element(3));

    // no-instance stays a no-instance
    PGaipInstance off{{{res(5), res(2)}, {res(9), res(7)}}, std::nullopt};
    RandomTape tape2 = RandomTape::from_bits(nibble(4));
    CHECK(decide_pgaip_bruteforce(a, sigma_pgaip(a, 1, off, tape2)) == 0);

    // phi is the identity on the oracle bit
    RandomTape t = RandomTape::from_bits(nibble(0));
    CHECK(phi_pgaip(a, off, t, 0) == 0);
    CHECK(phi_pgaip(a, off, t, 1) == 1);
}

TEST_CASE("uniform pairs blind to uniform pairs, exactly") {
    auto a = modadd12();
    // push the uniform distribution on X x X through sigma: enumerate every
    // input pair and every blinder tape; the output law is uniform again
    Histogram pushed;
    for (uint64_t x = 0; x < 12; ++x) {
        for (uint64_t y = 0; y < 12; ++y) {
            const PGaipInstance inst{{{res(x), res(y)}}, PromiseTag::uniform};
            for (uint64_t index = 0; index < 16; ++index) {
                RandomTape tape = RandomTape::from_index(index, 4);
                try {
                    pushed.add(instance_bytes(sigma_pgaip(a, 1, inst, tape)));
                } catch (const TapeExhaustedError&) {
                    ++pushed.rejected;
                }
            }
        }
    }
    CHECK(pushed.total == 144 * 12);
    CHECK(pushed.bins.size() == 144);
    CHECK(tv_distance_from_uniform(pushed, 144) == Rational(0));
}

TEST_CASE("same-shape caveat: unrelated multi-pair instances do not blind alike") {
    // a single shared blinder preserves the witness class, so instances from
    // different diagonal orbits have disjoint blinded supports; this is why
    // the identical-distribution checks pair orbit-equivalent instances
    auto a = modadd12();
    auto histogram_for = [&](const MGaipInstance& inst) {
        return exact_distribution(
            [&](RandomTape& tape) { return instance_bytes(sigma_mgaip(a, 1, inst, tape)); }, 4);
    };
    const MGaipInstance base = mod_pairs({{5, 2}, {9, 6}});
    const MGaipInstance shifted = mod_pairs({{9, 6}, {1, 10}});   // 4 + base
    const MGaipInstance unrelated = mod_pairs({{0, 0}, {1, 1}});  // witness 0, not 3
    CHECK(tv_distance(histogram_for(base), histogram_for(shifted)) == Rational(0));
    CHECK(tv_distance(histogram_for(base), histogram_for(unrelated)) == Rational(1));
}

TEST_CASE("self_reduce with an exact oracle: one round, one query, correct") {
    auto a = modadd12();
    Oracle oracle = Oracle::exact(Problem::gaip);
    const GaipInstance inst{res(7), res(2)};
    const ReductionOutcome out =
        self_reduce_gaip(a, inst, oracle, ReductionConfig{}, RandomTape::seeded(5));
    CHECK(out.verified);
    CHECK(out.winning_round == 1);
    CHECK(oracle.call_count() == 1);
    REQUIRE(out.answer.is_found());
    CHECK(act(a, *out.answer.witness, inst.y) == inst.x);
    CHECK(out.rounds.size() == 1);
    CHECK(out.rounds[0].verified);
}

TEST_CASE("self_reduce correctness for every instance and every tape") {
    // regular built-ins with |G| <= 144: every accepted explicit tape yields
    // a verified witness
    for (const char* id : {"modadd-12", "dlog-11-2"}) {
        auto a = build_action(ActionSpec::from_id(id));
        const ActionBackend& b = a.backend();
        Oracle oracle = Oracle::exact(Problem::gaip);
        const uint32_t bits = 2 * b.group_sample_bits();
        INFO(id);
        for (uint64_t xi = 0; xi < b.set_size(); ++xi) {
            for (uint64_t yi = 0; yi < b.set_size(); ++yi) {
                const GaipInstance inst{b.set_element_at(xi), b.set_element_at(yi)};
                for (uint64_t index = 0; index < (1ull << bits); ++index) {
                    try {
                        const ReductionOutcome out = self_reduce_gaip(
                            a, inst, oracle, ReductionConfig{},
                            RandomTape::from_index(index, bits));
                        REQUIRE(out.verified);
                        REQUIRE(act(a, *out.answer.witness, inst.y) == inst.x);
                    } catch (const TapeExhaustedError&) {
                        // tape rejected by the sampler; outside the space
                    }
                }
            }
        }
    }
}

TEST_CASE("self_reduce_mgaip and self_reduce_pgaip with exact oracles") {
    auto a = modadd12();
    Oracle mg = Oracle::exact(Problem::mgaip);
    const MGaipInstance inst = mod_pairs({{5, 2}, {9, 6}});
    const ReductionOutcome out =
        self_reduce_mgaip(a, inst, mg, ReductionConfig{}, RandomTape::seeded(8));
    CHECK(out.verified);
    CHECK(*out.answer.witness == residue_group_element(3));

    Oracle pg = Oracle::exact(Problem::pgaip);
    const PGaipInstance yes{{{res(5), res(2)}, {res(9), res(6)}}, PromiseTag::structured};
    const PGaipInstance no{{{res(5), res(2)}, {res(9), res(7)}}, std::nullopt};
    CHECK(self_reduce_pgaip(a, yes, pg, ReductionConfig{1, 5}, RandomTape::seeded(9)).bit == 1);
    CHECK(self_reduce_pgaip(a, no, pg, ReductionConfig{1, 5}, RandomTape::seeded(10)).bit == 0);
    CHECK(pg.call_count() == 10);
}

TEST_CASE("worst-case instance against an average-case oracle") {
    auto a = modadd12();
    Oracle avg = wrap_average_case(Oracle::exact(Problem::gaip), [](const GaipInstance& inst) {
        return residue_value(inst.x.bytes) == 0;
    });
    const GaipInstance worst{res(0), res(5)};  // sits inside the bad set

    // exhaustive: 144 accepted tapes, success iff the x-blinder is nonzero
    uint64_t successes = 0, accepted = 0;
    for (uint64_t index = 0; index < 256; ++index) {
        try {
            const ReductionOutcome out = self_reduce_gaip(
                a, worst, avg, ReductionConfig{}, RandomTape::from_index(index, 8));
            ++accepted;
            if (out.verified) {
                ++successes;
            }
        } catch (const TapeExhaustedError&) {
        } catch (const AllRoundsFailedError&) {
            ++accepted;  // completed round, wrong answer
        }
    }
    CHECK(accepted == 144);
    CHECK(successes == 132);  // exactly 11/12

    // verified repetition pushes failure to (1/12)^t
    const RateEstimate t4 = estimate_rate(
        [&](uint64_t, RandomTape& tape) {
            try {
                return self_reduce_gaip(a, worst, avg, ReductionConfig{1, 4}, tape).verified;
            } catch (const AllRoundsFailedError&) {
                return false;
            }
        },
        2000, 13);
    CHECK(t4.rate >= 0.999);
}

TEST_CASE("not-in-orbit consensus and the all-rounds-failed error") {
    auto a = modadd12();
    const GaipInstance inst{res(0), res(5)};

    Oracle silent = wrap_adversarial(
        Oracle::exact(Problem::gaip),
        [](const GaipInstance&, const DeltaSolution&) { return DeltaSolution::not_in_orbit(); });
    const ReductionOutcome out =
        self_reduce_gaip(a, inst, silent, ReductionConfig{1, 3}, RandomTape::seeded(21));
    CHECK_FALSE(out.answer.is_found());
    CHECK_FALSE(out.verified);
    CHECK(out.winning_round == 0);
    CHECK(out.rounds.size() == 3);

    Oracle liar = wrap_adversarial(
        Oracle::exact(Problem::gaip), [&](const GaipInstance&, const DeltaSolution&) {
            return DeltaSolution::found(residue_group_element(0));
        });
    // identity blinders keep the lie unverifiable: -0 + 0 + 0 = 0, but the
    // witness for (0, 5) is 7
    try {
        (void)self_reduce_gaip(a, inst, liar, ReductionConfig{1, 1},
                               RandomTape::from_bits("00000000"));
        FAIL("expected AllRoundsFailedError");
    } catch (const AllRoundsFailedError& err) {
        REQUIRE(err.rounds().size() == 1);
        CHECK_FALSE(err.rounds()[0].verified);
        CHECK(err.rounds()[0].oracle_answer.rfind("found:", 0) == 0);
    }
}

TEST_CASE("diagnostics expose the blinded instance, not the original") {
    auto a = modadd12();
    Oracle oracle = Oracle::exact(Problem::gaip);
    const GaipInstance inst{res(7), res(2)};
    RandomTape tape = RandomTape::from_bits(nibble(4) + nibble(7));
    const ReductionOutcome out = self_reduce_gaip(a, inst, oracle, ReductionConfig{}, tape);
    const GaipInstance blinded{res(11), res(9)};
    CHECK(out.rounds[0].blinded_instance_hash == hash_hex(instance_bytes(blinded)));
    CHECK(out.rounds[0].blinded_instance_hash != hash_hex(instance_bytes(inst)));
}

TEST_CASE("nominal round bits carry the 2x rejection margin") {
    auto a = modadd12();
    CHECK(nominal_round_bits(a, Problem::gaip) == 16);   // 2 samples * 4 bits * 2
    CHECK(nominal_round_bits(a, Problem::mgaip) == 8);   // 1 sample * 4 bits * 2
    CHECK(nominal_round_bits(a, Problem::pgaip) == 8);
}

TEST_CASE("reduction config validation") {
    auto a = modadd12();
    Oracle oracle = Oracle::exact(Problem::gaip);
    const GaipInstance inst{res(1), res(2)};
    CHECK_THROWS_AS(self_reduce_gaip(a, inst, oracle, ReductionConfig{2, 1},
                                     RandomTape::seeded(0)),
                    InvalidParameterError);
    CHECK_THROWS_AS(self_reduce_gaip(a, inst, oracle, ReductionConfig{1, 0},
                                     RandomTape::seeded(0)),
                    InvalidParameterError);
}
