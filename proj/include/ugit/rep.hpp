#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ugit/matrix.hpp"
#include "ugit/mpoly.hpp"
#include "ugit/rational.hpp"

namespace ugit {

// One Lie algebra generator of U acting on V: nilpotent operator of positive
// C*-grade. A grade-g generator maps the weight-w subspace into weight w+g.
struct LieGenerator {
    long long grade = 0;
    QMatrix op;
};

// Sparse bracket table entry: [N_r, N_s] = sum_t value * N_t.
struct StructureConst {
    std::size_t r = 0, s = 0, t = 0;
    Rat value;
};

// Linear action of U semidirect C* on V in a fixed torus-diagonal basis.
struct GradedUnipotentRep {
    std::size_t dim_v = 0;
    std::vector<long long> torus_weights; // per basis index
    std::vector<LieGenerator> lie_basis;
    std::optional<std::vector<StructureConst>> structure_consts;
};

struct Diagnostic {
    std::string code;
    std::string message;
};

// Structural checks: positive grades, weight-shift compatibility of every
// generator, nilpotency, bracket table consistency (grade-additivity and the
// bracket identity) when structure constants are present. Empty result means
// the rep is valid.
std::vector<Diagnostic> validate_rep(const GradedUnipotentRep& rep);

// Throws Error("InvalidRep") with the first diagnostic when validation fails.
void require_valid(const GradedUnipotentRep& rep);

struct WeightProfile {
    std::vector<long long> distinct;          // ascending
    std::vector<std::size_t> multiplicity;    // aligned with distinct
    std::vector<std::vector<std::size_t>> indices; // aligned index sets
    long long omega_min = 0;
    long long omega_max = 0;
    std::vector<std::size_t> v_min_indices;
    std::size_t gaps = 0; // distinct count minus one
};

WeightProfile weight_profile(const GradedUnipotentRep& rep);

// Character data for twisting the linearization: either an exact chi/c or the
// symbolic well-adapted choice omega_min + eps.
struct CharacterTwist {
    bool symbolic = false;
    long long chi = 0;
    long long c = 1;

    static CharacterTwist exact(long long chi, long long c);
    static CharacterTwist well_adapted() { CharacterTwist t; t.symbolic = true; return t; }

    EpsRat ratio(long long omega_min) const {
        if (symbolic) return EpsRat(Rat(omega_min), Rat(1));
        return EpsRat(Rat(chi, c));
    }
};

// Dual derivation of generator r on polynomials in the dual coordinates:
// D_r x_t = sum_s (N_r)_{t,s} x_s, extended by Leibniz. Lowers V-weight
// bookkeeping (sum of m_i w_i) by the generator's grade.
MPoly dual_derivation(const GradedUnipotentRep& rep, std::size_t r, const MPoly& f);

// V-weight of a weight-homogeneous polynomial in the dual coordinates.
long long dual_weight(const GradedUnipotentRep& rep, const MPoly& f);

// Representation on V tensor Sym^M(C^2)* for the product with a projective
// line: dimension grows by the factor M+1, torus weights become
// w_i + a*chi1_weight (a = 0..M), U acts trivially on the second factor.
// Index layout: (i, a) -> i*(M+1) + a.
GradedUnipotentRep product_with_p1(const GradedUnipotentRep& rep, unsigned M,
                                   long long chi1_weight);

} // namespace ugit
