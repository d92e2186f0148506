#pragma once

#include <cstddef>
#include <vector>

#include "ugit/matrix.hpp"
#include "ugit/rep.hpp"

namespace ugit {

// One irreducible block: a copy of Sym^l(C^2) twisted so its lowest chain
// vector b_0 sits at torus weight (a - grade*l)/2. Chain satisfies
// N b_j = b_{j+1}, N b_l = 0.
struct Sl2Block {
    long long a = 0;
    unsigned l = 0;
    std::vector<std::vector<Rat>> chain; // b_0..b_l in V coordinates
    long long b0_weight = 0;
};

struct Sl2Decomposition {
    long long grade = 0;            // common grade of the acting nilpotent
    std::vector<Sl2Block> blocks;   // sorted by (a, l) lexicographically
    QMatrix basis_change;           // columns: chain vectors, block by block
};

// Splits V into weight-twisted irreducible SL(2) blocks along the single
// nilpotent generator. Chains are weight-homogeneous; a = 2*weight(b_0) +
// grade*l, so a and grade*l always share parity.
// Requires exactly one generator (Error("UnsupportedDimension") otherwise).
Sl2Decomposition decompose_sl2(const GradedUnipotentRep& rep);

// Blocks whose lowest chain weight equals omega_min, i.e. (a - grade*l)/2 ==
// omega_min. These contribute the fixed points that decide stability.
std::vector<std::size_t> exceptional_indices(const Sl2Decomposition& dec,
                                             const WeightProfile& profile);

// Matrix of the nilpotent in the chain basis: 1 on the subdiagonal inside each
// block. Conjugation check: N * basis_change == basis_change * chain_form.
QMatrix chain_form(const Sl2Decomposition& dec);

// Chain weight predicted from (a, l) at position j with the given step in j;
// step == grade reproduces the measured weights, step == 1 is the literal
// one-step reading kept for comparison output.
Rat predicted_chain_weight(long long a, unsigned l, long long grade, unsigned j,
                           long long step);

} // namespace ugit
