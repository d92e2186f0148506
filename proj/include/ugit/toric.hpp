#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace ugit {

// Grading data of a polynomial Cox ring: one free-abelian degree vector per
// variable. Fan combinatorics are the caller's responsibility; only the
// grading enters the computation.
struct ToricGradingSpec {
    std::vector<std::vector<long long>> degrees;
    unsigned factor_cap = 64; // enumeration guard for non-positive gradings
};

struct ToricAlphaReport {
    std::vector<long long> alpha;
    std::vector<std::size_t> sprime_vars;          // variables of degree alpha
    std::size_t sprime_dim = 0;
    std::size_t sdouble_dim = 0;                   // monomials with >= 2 factors
    std::map<unsigned, std::size_t> factor_histogram; // factor count -> monomials
};

struct ToricAutReport {
    std::vector<ToricAlphaReport> per_alpha;       // only alpha with S'_alpha != 0
    std::size_t dim_u = 0;                         // sum of dim S' * dim S''
    std::vector<long long> weights;                // Lie(U) weight multiset, ascending
    std::vector<std::size_t> reductive_dims;       // one GL(S'_alpha) rank per alpha
};

// Unipotent-radical structure of the automorphism group determined by the
// grading: per degree alpha carried by a variable, the monomials of degree
// alpha with at least two factors give Hom(S'_alpha, S''_alpha) inside Lie(U),
// a map of weight j-1 per j-factor monomial. Throws Error("BadGrading") for
// malformed input and Error("UnboundedDegree") when the enumeration cannot be
// certified finite under the factor cap.
ToricAutReport toric_aut_structure(const ToricGradingSpec& spec);

} // namespace ugit
