#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ugit/invariants.hpp"
#include "ugit/matrix.hpp"
#include "ugit/mpoly.hpp"
#include "ugit/rep.hpp"

namespace ugit {

// k x k matrix of the reparametrization t -> alpha_1 t + ... + alpha_k t^k on
// jet coefficients: entry (i,j) is the coefficient of t^j in the i-th power.
// Upper triangular with diagonal alpha_1^i. Requires alpha_1 != 0 and exactly
// k coefficients (Error("BadJet") / Error("ShapeMismatch")).
QMatrix gk_matrix(unsigned k, const std::vector<Rat>& alpha);

// The same matrix with symbolic entries, polynomials in alpha_1..alpha_k.
std::vector<std::vector<MPoly>> gk_matrix_symbolic(unsigned k);

// Truncated composition phi(psi(t)) mod t^(k+1); both jets carry k
// coefficients.
std::vector<Rat> compose_jets(const std::vector<Rat>& phi, const std::vector<Rat>& psi,
                              unsigned k);

// Graded rep of the order-k reparametrization group on n-tuples of jets:
// dimension n*k, torus weight i with multiplicity n for i = 1..k, and k-1
// nilpotent generators of grades 1..k-1 obtained by differentiating the
// transposed matrix action at the identity along each alpha_(j+1). Structure
// constants are solved exactly from the brackets. Requires k >= 2
// (Error("BadJetSpec")).
GradedUnipotentRep jet_rep(unsigned n, unsigned k);

// Block matrix of a jet of a self-map of (C^p, 0) on the coefficient spaces
// Sym^1 + ... + Sym^k: blocks[i] is the p x dim(Sym^(i+1)) coefficient matrix
// of the degree-(i+1) component, rows per output component and columns over
// the degree-(i+1) monomials in descending lex order. Block (l,j) of the
// result maps degree-j coefficients to degree-l ones via coefficient
// extraction from products of the component polynomials. The degree-one block
// must be invertible (Error("BadJet")); shapes are checked
// (Error("ShapeMismatch")).
QMatrix gkp_matrix(unsigned k, unsigned p, const std::vector<QMatrix>& blocks);

// (m, dimension) of the space of weighted-degree-m polynomials killed by all
// jet-group derivations, for m = 1..m_max. Weighted degree gives coordinate
// group i weight i. k = 1 means a trivial group: the dimension is the full
// monomial count. Slices parallelize over m.
std::vector<std::pair<unsigned, std::size_t>> demailly_semple_dims(
    unsigned n, unsigned k, unsigned m_max, unsigned threads = 1,
    unsigned long monomial_cap = kDefaultMonomialCap);

} // namespace ugit
