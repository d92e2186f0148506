#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ugit/mpoly.hpp"
#include "ugit/rep.hpp"

namespace ugit {

// Guard against runaway monomial enumeration; overridable per call.
inline constexpr unsigned long kDefaultMonomialCap = 2000000UL;

// V-weights attainable by monomials of total degree d.
std::vector<long long> reachable_weights(const GradedUnipotentRep& rep, unsigned d);

// Basis of the joint kernel of all dual derivations on the (degree d,
// V-weight w) slice of Sym^d(V*). The coefficient rows are echelon-reduced
// over the slice monomials in descending graded-lex order, so the basis is
// canonical. Throws Error("MonomialCapExceeded") when the degree-d monomial
// count passes the cap.
std::vector<MPoly> u_invariant_slice(const GradedUnipotentRep& rep, unsigned d, long long w,
                                     unsigned long monomial_cap = kDefaultMonomialCap);

// Degree-d slice of the full invariant ring: all weight slices merged, sorted
// by leading monomial in descending graded-lex order.
std::vector<MPoly> u_invariant_space(const GradedUnipotentRep& rep, unsigned d,
                                     unsigned long monomial_cap = kDefaultMonomialCap);

struct TwistedSlice {
    unsigned level = 0;           // k
    unsigned degree = 0;          // c * k
    bool weight_reachable = false;
    std::vector<MPoly> basis;
};

// Level-k slice of the chi-twisted invariant ring: polynomials of degree c*k
// and V-weight k*chi killed by every dual derivation. Requires an exact twist
// (Error("BadTwist") for the symbolic one) and level >= 1.
TwistedSlice twisted_invariant_space(const GradedUnipotentRep& rep, const CharacterTwist& twist,
                                     unsigned level,
                                     unsigned long monomial_cap = kDefaultMonomialCap);

// (level, slice dimension) for levels 1..probe_limit.
std::vector<std::pair<unsigned, std::size_t>> hilbert_function(
    const GradedUnipotentRep& rep, const CharacterTwist& twist, unsigned probe_limit,
    unsigned long monomial_cap = kDefaultMonomialCap);

struct ProbeLevel {
    unsigned level = 0;
    unsigned degree = 0;              // c * level
    std::size_t slice_dim = 0;
    std::size_t product_dim = 0;      // span of products of earlier generators
    std::vector<MPoly> new_generators;
};

struct GeneratorProbe {
    unsigned probe_limit = 0;
    unsigned last_new_level = 0;      // 0 when no generator was ever added
    std::vector<ProbeLevel> levels;
};

// Greedy minimal generators of the twisted invariant ring: at each level the
// slice basis is completed over the span of all products of generators chosen
// at lower levels whose levels sum to the current one.
GeneratorProbe generator_probe(const GradedUnipotentRep& rep, const CharacterTwist& twist,
                               unsigned probe_limit,
                               unsigned long monomial_cap = kDefaultMonomialCap);

struct LocalGenerator {
    MPoly gen;
    unsigned level = 0;               // degree of the representing invariant
};

// Generators of the invariant ring localized at a degree-one section sigma
// supported on the lowest-weight dual coordinates (Error("BadSectionWeight")
// otherwise), probed through degree max_degree. A degree-m invariant is a new
// generator when it is not a combination of sigma^(m-s) times products of
// earlier generators of total degree s. sigma itself is never reported; it is
// a unit after localization.
std::vector<LocalGenerator> localize_at_min_section(const GradedUnipotentRep& rep,
                                                    const MPoly& sigma, unsigned max_degree,
                                                    unsigned long monomial_cap = kDefaultMonomialCap);

} // namespace ugit
