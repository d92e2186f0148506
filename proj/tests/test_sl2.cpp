#include "doctest.h"

#include <algorithm>

#include "ugit/error.hpp"
#include "ugit/sl2.hpp"
#include "testutil.hpp"

using namespace ugit;
namespace tu = ugit::testutil;

TEST_CASE("running example splits into two twisted doublets") {
    GradedUnipotentRep rep = tu::j22();
    Sl2Decomposition dec = decompose_sl2(rep);
    REQUIRE(dec.blocks.size() == 2);
    for (const Sl2Block& b : dec.blocks) {
        CHECK(b.a == 3);
        CHECK(b.l == 1);
        CHECK(b.b0_weight == 1);
    }
    auto exc = exceptional_indices(dec, weight_profile(rep));
    CHECK(exc == std::vector<std::size_t>{0, 1});
}

TEST_CASE("two-dimensional example is one doublet with a = 0") {
    GradedUnipotentRep rep = tu::r1();
    Sl2Decomposition dec = decompose_sl2(rep);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].a == 0);
    CHECK(dec.blocks[0].l == 1);
    CHECK(dec.blocks[0].b0_weight == -1);
    // Chain runs from the weight -1 vector e2 up to e1.
    CHECK(dec.blocks[0].chain[0] == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(dec.blocks[0].chain[1] == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(exceptional_indices(dec, weight_profile(rep)) == std::vector<std::size_t>{0});
}

TEST_CASE("decomposition rejects multi-generator input") {
    GradedUnipotentRep rep = tu::j22();
    rep.lie_basis.push_back(rep.lie_basis[0]);
    rep.lie_basis[1].grade = 1;
    CHECK_THROWS_AS(decompose_sl2(rep), Error);
}

TEST_CASE("conjugation identity and block bookkeeping on random reps") {
    for (int trial = 0; trial < 25; ++trial) {
        tu::PlantedRep planted = tu::rand_single_nilpotent_rep();
        const GradedUnipotentRep& rep = planted.rep;
        Sl2Decomposition dec = decompose_sl2(rep);

        // Planted block data is recovered: the decomposition is basis-change
        // invariant.
        std::vector<std::pair<long long, unsigned>> got;
        for (const Sl2Block& b : dec.blocks) got.push_back({b.a, b.l});
        CHECK(got == planted.blocks);

        std::size_t total = 0;
        for (const Sl2Block& b : dec.blocks) {
            total += b.l + 1;
            CHECK((b.a - dec.grade * static_cast<long long>(b.l)) % 2 == 0);
            CHECK(b.a == 2 * b.b0_weight + dec.grade * static_cast<long long>(b.l));
        }
        CHECK(total == rep.dim_v);

        CHECK(rank(dec.basis_change) == rep.dim_v);
        CHECK(rep.lie_basis[0].op * dec.basis_change == dec.basis_change * chain_form(dec));

        // Chains are weight-homogeneous with the grade-step ladder.
        for (const Sl2Block& b : dec.blocks)
            for (unsigned j = 0; j <= b.l; ++j) {
                long long w = 0;
                bool found = false;
                for (std::size_t i = 0; i < rep.dim_v; ++i) {
                    if (b.chain[j][i].is_zero()) continue;
                    if (!found) { w = rep.torus_weights[i]; found = true; }
                    CHECK(rep.torus_weights[i] == w);
                }
                REQUIRE(found);
                CHECK(Rat(w) == predicted_chain_weight(b.a, b.l, dec.grade, j, dec.grade));
            }
    }
}

TEST_CASE("one-step reading differs once the grade exceeds one") {
    // grade 2 doublet: measured ladder (-1, 1), one-step ladder (-1, 0).
    CHECK(predicted_chain_weight(0, 1, 2, 0, 2) == Rat(-1));
    CHECK(predicted_chain_weight(0, 1, 2, 1, 2) == Rat(1));
    CHECK(predicted_chain_weight(0, 1, 2, 1, 1) == Rat(0));
    // grade 1: the two readings coincide.
    CHECK(predicted_chain_weight(3, 1, 1, 1, 1) == predicted_chain_weight(3, 1, 1, 1, 1));
}
