#pragma once

#include <vector>

#include "ugit/matrix.hpp"

namespace ugit {

// One chain: b_0, ..., b_l with n*b_j = b_{j+1} and n*b_l = 0. The generator
// b_0 comes first; chain length l+1 is the Jordan block size.
using JordanChain = std::vector<std::vector<Rat>>;

// Chains of a nilpotent matrix, block sizes weakly decreasing, vectors jointly
// a basis. Candidate generators are drawn from `pool`, which must contain a
// spanning set of ker(n^s) for every s; an empty pool defaults to the
// kernel-basis vectors of the powers of n. A pool of weight vectors yields
// weight-homogeneous chains.
// Throws Error("NotNilpotent") when n^dim != 0.
std::vector<JordanChain> jordan_chains(const QMatrix& n,
                                       const std::vector<std::vector<Rat>>& pool = {});

} // namespace ugit
