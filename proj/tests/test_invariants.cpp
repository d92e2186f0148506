#include "doctest.h"

#include <algorithm>

#include "ugit/error.hpp"
#include "ugit/invariants.hpp"
#include "testutil.hpp"

using namespace ugit;
namespace tu = ugit::testutil;

namespace {

MPoly bracket_invariant() {
    // x1*y2 - x2*y1 in the running example's coordinates.
    MPoly w(4);
    w.add_term({1, 0, 0, 1}, Rat(1));
    w.add_term({0, 1, 1, 0}, Rat(-1));
    return w;
}

// Kernel dimension of the stacked derivations on the full degree-d symmetric
// power, computed without weight slicing.
std::size_t brute_invariant_dim(const GradedUnipotentRep& rep, unsigned d) {
    std::vector<Monomial> monos = monomials_of_degree(rep.dim_v, d);
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    QMatrix a(monos.size() * rep.lie_basis.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j)
        for (std::size_t r = 0; r < rep.lie_basis.size(); ++r) {
            MPoly image = apply_derivation(MPoly::term(monos[j], Rat(1)), rep.lie_basis[r].op);
            for (const auto& [m, c] : image.terms())
                a.at(r * monos.size() + idx.at(m), j) += c;
        }
    return monos.size() - rank(a);
}

} // namespace

TEST_CASE("reachable weights of the running example") {
    GradedUnipotentRep rep = tu::j22();
    CHECK(reachable_weights(rep, 0) == std::vector<long long>{0});
    CHECK(reachable_weights(rep, 1) == std::vector<long long>{1, 2});
    CHECK(reachable_weights(rep, 2) == std::vector<long long>{2, 3, 4});
}

TEST_CASE("invariant slices of the running example") {
    GradedUnipotentRep rep = tu::j22();

    auto deg1 = u_invariant_space(rep, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0] == MPoly::variable(4, 0));
    CHECK(deg1[1] == MPoly::variable(4, 1));

    auto deg2 = u_invariant_space(rep, 2);
    REQUIRE(deg2.size() == 4);
    auto w23 = u_invariant_slice(rep, 2, 3);
    REQUIRE(w23.size() == 1);
    CHECK(w23[0] == bracket_invariant());
    CHECK(u_invariant_slice(rep, 2, 2).size() == 3);
    CHECK(u_invariant_slice(rep, 2, 4).empty());
    CHECK(std::count(deg2.begin(), deg2.end(), bracket_invariant()) == 1);
}

TEST_CASE("two-dimensional example has a polynomial ring of invariants") {
    GradedUnipotentRep rep = tu::r1();
    for (unsigned d = 1; d <= 5; ++d) {
        auto basis = u_invariant_space(rep, d);
        REQUIRE(basis.size() == 1);
        Monomial expect = {0, d};
        CHECK(basis[0] == MPoly::term(expect, Rat(1)));
    }
}

TEST_CASE("invariant bases are killed by every derivation and flow-constant") {
    for (int trial = 0; trial < 12; ++trial) {
        tu::PlantedRep planted = tu::rand_single_nilpotent_rep(6, 2);
        const auto& rep = planted.rep;
        for (unsigned d = 1; d <= 3; ++d) {
            auto basis = u_invariant_space(rep, d);
            for (const MPoly& f : basis) {
                for (const LieGenerator& g : rep.lie_basis)
                    CHECK(apply_derivation(f, g.op).is_zero());
                std::vector<Rat> v(rep.dim_v);
                for (auto& x : v) x = tu::rand_rat(3);
                Rat u = tu::rand_rat(2);
                CHECK(f.eval(tu::apply_exp_flow(rep, u, v)) == f.eval(v));
            }
        }
    }
}

TEST_CASE("weight slicing agrees with the unsliced kernel") {
    for (int trial = 0; trial < 10; ++trial) {
        tu::PlantedRep planted = tu::rand_single_nilpotent_rep(6, 3);
        for (unsigned d = 1; d <= 3; ++d)
            CHECK(u_invariant_space(planted.rep, d).size() ==
                  brute_invariant_dim(planted.rep, d));
    }
}

TEST_CASE("twisted slices and the Hilbert function of the running example") {
    GradedUnipotentRep rep = tu::j22();

    TwistedSlice s1 = twisted_invariant_space(rep, CharacterTwist::exact(3, 2), 1);
    CHECK(s1.degree == 2);
    CHECK(s1.weight_reachable);
    REQUIRE(s1.basis.size() == 1);
    CHECK(s1.basis[0] == bracket_invariant());

    auto h = hilbert_function(rep, CharacterTwist::exact(3, 2), 3);
    std::vector<std::pair<unsigned, std::size_t>> expect = {{1, 1}, {2, 1}, {3, 1}};
    CHECK(h == expect);

    auto h76 = hilbert_function(rep, CharacterTwist::exact(7, 6), 3);
    expect = {{1, 5}, {2, 9}, {3, 13}};
    CHECK(h76 == expect);

    TwistedSlice unreachable = twisted_invariant_space(rep, CharacterTwist::exact(3, 1), 1);
    CHECK(!unreachable.weight_reachable);
    CHECK(unreachable.basis.empty());

    CHECK_THROWS_AS(twisted_invariant_space(rep, CharacterTwist::well_adapted(), 1), Error);
    CHECK_THROWS_AS(twisted_invariant_space(rep, CharacterTwist::exact(3, 2), 0), Error);
}

TEST_CASE("generator probe on the running example") {
    GradedUnipotentRep rep = tu::j22();

    GeneratorProbe probe = generator_probe(rep, CharacterTwist::exact(3, 2), 4);
    CHECK(probe.probe_limit == 4);
    CHECK(probe.last_new_level == 1);
    REQUIRE(probe.levels.size() == 4);
    REQUIRE(probe.levels[0].new_generators.size() == 1);
    CHECK(probe.levels[0].new_generators[0] == bracket_invariant());
    CHECK(probe.levels[0].product_dim == 0);
    for (std::size_t k = 1; k < 4; ++k) {
        CHECK(probe.levels[k].new_generators.empty());
        CHECK(probe.levels[k].slice_dim == 1);
        CHECK(probe.levels[k].product_dim == 1);
    }

    GeneratorProbe wide = generator_probe(rep, CharacterTwist::exact(7, 6), 2);
    CHECK(wide.levels[0].new_generators.size() == 5);
    CHECK(wide.levels[1].new_generators.empty());
    CHECK(wide.levels[1].slice_dim == 9);
    CHECK(wide.levels[1].product_dim == 9);
}

TEST_CASE("localization at a lowest-weight section") {
    GradedUnipotentRep rep = tu::j22();
    auto gens = localize_at_min_section(rep, MPoly::variable(4, 0), 4);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].gen == MPoly::variable(4, 1));
    CHECK(gens[0].level == 1);
    CHECK(gens[1].gen == bracket_invariant());
    CHECK(gens[1].level == 2);

    GradedUnipotentRep small = tu::r1();
    CHECK(localize_at_min_section(small, MPoly::variable(2, 1), 4).empty());

    CHECK_THROWS_AS(localize_at_min_section(rep, MPoly::variable(4, 2), 3), Error);
    CHECK_THROWS_AS(localize_at_min_section(rep, bracket_invariant(), 3), Error);
    CHECK_THROWS_AS(localize_at_min_section(rep, MPoly(4), 3), Error);
}

TEST_CASE("monomial cap guards enumeration") {
    GradedUnipotentRep rep = tu::j22();
    CHECK_THROWS_AS(u_invariant_space(rep, 5, 10), Error);
    CHECK_NOTHROW(u_invariant_space(rep, 2, 10));
}
