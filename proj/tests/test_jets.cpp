#include "doctest.h"

#include <vector>

#include "ugit/error.hpp"
#include "ugit/jets.hpp"
#include "testutil.hpp"

using namespace ugit;
namespace tu = ugit::testutil;

namespace {

std::vector<Rat> rand_jet(unsigned k) {
    std::vector<Rat> a(k);
    do {
        a[0] = tu::rand_rat(3);
    } while (a[0].is_zero());
    for (unsigned i = 1; i < k; ++i) a[i] = tu::rand_rat(3);
    return a;
}

} // namespace

TEST_CASE("jet coefficient matrices") {
    Rat u(5, 3);
    QMatrix m = gk_matrix(2, {Rat(1), u});
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(m.at(0, 1) == u);
    CHECK(m.at(1, 0) == Rat(0));
    CHECK(m.at(1, 1) == Rat(1));

    CHECK(gk_matrix(3, {Rat(1), Rat(0), Rat(0)}) == QMatrix::identity(3));

    CHECK_THROWS_AS(gk_matrix(3, {Rat(0), Rat(1), Rat(0)}), Error);
    CHECK_THROWS_AS(gk_matrix(3, {Rat(1), Rat(0)}), Error);

    for (unsigned k = 2; k <= 5; ++k)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> a = rand_jet(k);
            QMatrix g = gk_matrix(k, a);
            Rat diag(1);
            for (unsigned i = 0; i < k; ++i) {
                diag *= a[0];
                CHECK(g.at(i, i) == diag);
                for (unsigned j = 0; j < i; ++j) CHECK(g.at(i, j) == Rat(0));
            }
        }
}

TEST_CASE("symbolic jet matrix entries") {
    auto m = gk_matrix_symbolic(3);
    CHECK(m[1][0].is_zero());
    MPoly a1sq(3);
    a1sq.add_term({2, 0, 0}, Rat(1));
    CHECK(m[1][1] == a1sq);
    MPoly twoa1a2(3);
    twoa1a2.add_term({1, 1, 0}, Rat(2));
    CHECK(m[1][2] == twoa1a2);
    CHECK(m[0][2] == MPoly::variable(3, 2));
}

TEST_CASE("jet composition") {
    std::vector<Rat> phi = {Rat(1), Rat(1), Rat(0)};
    std::vector<Rat> psi = {Rat(1), Rat(0), Rat(1)};
    std::vector<Rat> expect = {Rat(1), Rat(1), Rat(1)};
    CHECK(compose_jets(phi, psi, 3) == expect);

    std::vector<Rat> id = {Rat(1), Rat(0), Rat(0)};
    CHECK(compose_jets(phi, id, 3) == phi);
    CHECK(compose_jets(id, phi, 3) == phi);

    std::vector<Rat> lin_a = {Rat(3)}, lin_b = {Rat(7, 2)};
    CHECK(compose_jets(lin_a, lin_b, 1) == std::vector<Rat>{Rat(21, 2)});
}

TEST_CASE("composition is a matrix homomorphism") {
    for (unsigned k = 2; k <= 5; ++k)
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rat> phi = rand_jet(k), psi = rand_jet(k);
            CHECK(gk_matrix(k, compose_jets(phi, psi, k)) ==
                  gk_matrix(k, phi) * gk_matrix(k, psi));
        }
}

TEST_CASE("jet representations") {
    GradedUnipotentRep j = jet_rep(2, 2);
    GradedUnipotentRep fixture = tu::j22();
    CHECK(j.dim_v == fixture.dim_v);
    CHECK(j.torus_weights == fixture.torus_weights);
    REQUIRE(j.lie_basis.size() == 1);
    CHECK(j.lie_basis[0].grade == fixture.lie_basis[0].grade);
    CHECK(j.lie_basis[0].op == fixture.lie_basis[0].op);
    REQUIRE(j.structure_consts.has_value());
    CHECK(j.structure_consts->empty());

    GradedUnipotentRep line = jet_rep(1, 2);
    CHECK(line.dim_v == 2);
    CHECK(line.torus_weights == std::vector<long long>{1, 2});
    CHECK(line.lie_basis[0].op.at(1, 0) == Rat(1));

    GradedUnipotentRep cubic = jet_rep(1, 3);
    CHECK(cubic.dim_v == 3);
    CHECK(cubic.torus_weights == std::vector<long long>{1, 2, 3});
    REQUIRE(cubic.lie_basis.size() == 2);
    CHECK(cubic.lie_basis[0].grade == 1);
    CHECK(cubic.lie_basis[1].grade == 2);
    CHECK(cubic.lie_basis[0].op.at(1, 0) == Rat(1));
    CHECK(cubic.lie_basis[0].op.at(2, 1) == Rat(2));
    CHECK(cubic.lie_basis[1].op.at(2, 0) == Rat(1));
    CHECK(cubic.structure_consts->empty());

    CHECK_THROWS_AS(jet_rep(2, 1), Error);
    CHECK_THROWS_AS(jet_rep(0, 3), Error);
}

TEST_CASE("jet representations validate across a grid") {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned k = 2; k <= 5; ++k) {
            GradedUnipotentRep rep = jet_rep(n, k);
            CHECK(validate_rep(rep).empty());
            std::vector<long long> grades;
            for (const auto& g : rep.lie_basis) grades.push_back(g.grade);
            std::vector<long long> expect_grades;
            for (unsigned j = 1; j < k; ++j) expect_grades.push_back(j);
            CHECK(grades == expect_grades);
            for (unsigned i = 1; i <= k; ++i)
                CHECK(std::count(rep.torus_weights.begin(), rep.torus_weights.end(), i) == n);
        }
}

TEST_CASE("jet bracket constants appear at order four") {
    GradedUnipotentRep rep = jet_rep(1, 4);
    REQUIRE(rep.structure_consts.has_value());
    // [N_1, N_2] = N_3 in the measured normalization.
    bool found = false;
    for (const StructureConst& sc : *rep.structure_consts)
        if (sc.r == 0 && sc.s == 1 && sc.t == 2 && sc.value == Rat(1)) found = true;
    CHECK(found);
    for (const StructureConst& sc : *rep.structure_consts)
        if (sc.r == 1 && sc.s == 0 && sc.t == 2) CHECK(sc.value == Rat(-1));
}

TEST_CASE("multi-source jet matrices") {
    // p = 1 specializes to the scalar matrix.
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> a = rand_jet(4);
        std::vector<QMatrix> blocks;
        for (unsigned d = 1; d <= 4; ++d) {
            QMatrix b(1, 1);
            b.at(0, 0) = a[d - 1];
            blocks.push_back(b);
        }
        CHECK(gkp_matrix(4, 1, blocks) == gk_matrix(4, a));
    }

    std::vector<QMatrix> id_blocks = {QMatrix::identity(2), QMatrix(2, 3)};
    CHECK(gkp_matrix(2, 2, id_blocks) == QMatrix::identity(5));

    // Generic k=2, p=2: top-right block is the quadratic part verbatim and
    // the bottom-right is the induced action on the quadratic monomials.
    QMatrix phi1(2, 2), phi2(2, 3);
    phi1.at(0, 0) = Rat(1);
    phi1.at(0, 1) = Rat(2);
    phi1.at(1, 0) = Rat(3);
    phi1.at(1, 1) = Rat(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) phi2.at(i, j) = Rat(10 * (i + 1) + j);
    QMatrix g = gkp_matrix(2, 2, {phi1, phi2});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(g.at(i, 2 + j) == phi2.at(i, j));
            CHECK(g.at(2 + j, i) == Rat(0));
        }
    // Rows of Sym^2: u1^2, u1u2, u2^2 built from (u1+2u2) and (3u1+4u2).
    std::vector<std::vector<long long>> sym2 = {{1, 4, 4}, {3, 10, 8}, {9, 24, 16}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(g.at(2 + r, 2 + c) == Rat(sym2[r][c]));

    QMatrix singular(2, 2);
    CHECK_THROWS_AS(gkp_matrix(2, 2, {singular, phi2}), Error);
    CHECK_THROWS_AS(gkp_matrix(2, 2, {phi1, QMatrix(2, 2)}), Error);
    CHECK_THROWS_AS(gkp_matrix(3, 2, {phi1, phi2}), Error);
}

TEST_CASE("weighted invariant dimension tables") {
    auto dims = demailly_semple_dims(2, 2, 6);
    std::vector<std::pair<unsigned, std::size_t>> expect = {{1, 2}, {2, 3}, {3, 5},
                                                            {4, 7}, {5, 9}, {6, 12}};
    CHECK(dims == expect);

    auto line = demailly_semple_dims(1, 2, 5);
    for (const auto& [m, dim] : line) CHECK(dim == 1);

    auto trivial = demailly_semple_dims(1, 1, 4);
    for (const auto& [m, dim] : trivial) CHECK(dim == 1);

    CHECK(demailly_semple_dims(2, 2, 6, 3) == dims);

    auto wide = demailly_semple_dims(3, 2, 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(wide[i].second >= dims[i].second);
}
