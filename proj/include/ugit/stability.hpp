#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ugit/poly.hpp"
#include "ugit/rep.hpp"
#include "ugit/sl2.hpp"

namespace ugit {

// Open interval of adapted character ratios (lowest and second-lowest distinct
// weight). Throws Error("TrivialAction") when only one weight occurs.
std::pair<long long, long long> adapted_interval(const WeightProfile& profile);

bool is_adapted(const CharacterTwist& twist, const WeightProfile& profile);

// Throws Error("NotAdapted") unless the twist is symbolic or strictly inside
// the adapted interval.
void require_adapted(const CharacterTwist& twist, const WeightProfile& profile);

// Twisted linearization weights, order preserved: (omega_j - ratio) scaled by
// the twist's own tensor power in exact mode, by c_power in symbolic mode.
std::vector<EpsRat> twist_weights(const WeightProfile& profile, const CharacterTwist& twist,
                                  long long c_power);

struct LimitPoint {
    long long lowest_weight = 0;        // lowest weight with a nonzero entry
    std::vector<Rat> limit;             // projection onto that weight space
    bool in_x0min = false;              // lowest weight == omega_min
};

LimitPoint limit_point(const GradedUnipotentRep& rep, const std::vector<Rat>& v);

// One-parameter sweep exp(-u N) v for the single generator N. The coordinates
// outside V_min become polynomials in u; the sweep reaches V_min exactly when
// they share a root.
struct SweepResult {
    bool in_sweep = false;
    bool already_in_vmin = false;       // v itself lies in V_min
    std::vector<QPoly> outside_polys;   // per coordinate outside V_min
    QPoly gcd;                          // monic gcd of the nonzero ones
    bool witness_found = false;         // gcd has a rational root
    Rat witness;                        // a rational sweep parameter when found
};

SweepResult u_sweep(const GradedUnipotentRep& rep, const std::vector<Rat>& v);

struct StabilityVerdict {
    enum class Status { Stable, Unstable };
    enum class Certificate { StableSweepGcd, NotInX0min, InZmin, InUSweep };

    Status status = Status::Unstable;
    Certificate certificate = Certificate::NotInX0min;
    long long lowest_weight = 0;        // set for NotInX0min
    SweepResult sweep;                  // set for sweep-based certificates
};

// Exact stability classification for dim U = 1 under the ss=s condition
// (Error("SsNeqS") when it fails, Error("UnsupportedDimension") for larger U,
// Error("BadPoint") for the zero vector). The verdict does not depend on the
// adapted character choice.
StabilityVerdict classify_point(const GradedUnipotentRep& rep, const std::vector<Rat>& v);

std::vector<StabilityVerdict> classify_points(const GradedUnipotentRep& rep,
                                              const std::vector<std::vector<Rat>>& points,
                                              unsigned threads = 1);

struct SsEqSReport {
    bool holds = false;
    std::vector<Rat> kernel_witness;    // nonzero vector of ker N in V_min when it fails
};

// ker N cap V_min = 0, checked against the dual formulation (the lowest-weight
// dual coordinates lie in the image of the degree-1 derivation). The two are
// computed independently and must agree.
SsEqSReport check_ss_eq_s_dim1(const GradedUnipotentRep& rep);

struct SsGeneralStep {
    std::vector<std::size_t> subalgebra; // generator indices spanning U'
    std::size_t xi = 0;                  // generator checked against U'
    bool holds = false;
};

struct SsGeneralReport {
    bool holds = false;
    bool enumerated_all = false;        // all graded subalgebras were enumerated
    std::vector<SsGeneralStep> steps;
};

// Subgroup-chain form of the ss=s condition: for each chain entry U' and each
// generator outside it, the lowest-weight dual coordinates must lie in
// D_xi((V*)^{U'}). When all grades are distinct, additionally enumerates every
// bracket-closed subset of the generator basis. Requires structure constants
// (Error("MissingStructureConsts")).
SsGeneralReport check_ss_eq_s_general(const GradedUnipotentRep& rep,
                                      const std::vector<std::vector<std::size_t>>& chain);

// Point of P^2 x P(V) in the fixed-chart coordinates used by the fixed-point
// analysis: w = (w0, w1, w2), v = chain coordinates per block.
struct HMPoint {
    std::vector<Rat> w;                  // size 3
    std::vector<std::vector<Rat>> v;     // per block, size l_i + 1
};

struct WeightTableRow {
    std::string fixed_point;             // "P0" | "P1" | "P2"
    std::size_t block = 0;
    unsigned position = 0;               // chain position j
    EpsRat w1, w2;
};

// Fixed-point weight table. P0 rows are (2j - l_i, a_i - 2*omega_min - 2eps)
// with 2eps realized as 2(chi/c - omega_min) for exact twists; P1/P2 add
// (+n_param, -grade*n_param) resp. (-n_param, -grade*n_param). n_param must
// exceed max_i(a_i - 2*omega_min) (Error("NParamTooSmall")).
std::vector<WeightTableRow> hm_table(const Sl2Decomposition& dec, const WeightProfile& profile,
                                     const CharacterTwist& twist, long long n_param);

struct TorusVerdict {
    bool torus_stable = false;
    std::string reason;                  // destabilizing clause when unstable
};

// Verbatim case analysis for torus (in)stability of an HMPoint; verdicts agree
// across all adapted exact twists and the symbolic twist.
TorusVerdict hm_classify_torus(const HMPoint& p, const Sl2Decomposition& dec,
                               const WeightProfile& profile, const CharacterTwist& twist,
                               long long n_param);

// Chain-coordinate transport: coordinates along the chain basis, grouped per
// block, and back.
std::vector<std::vector<Rat>> to_chain_coords(const Sl2Decomposition& dec,
                                              const std::vector<Rat>& v);
std::vector<Rat> from_chain_coords(const Sl2Decomposition& dec,
                                   const std::vector<std::vector<Rat>>& chain_coords);

// Element of SL(2, Q); determinant is enforced on use.
struct SL2 {
    Rat a, b, c, d;
    static SL2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }
};

// Action on the product point: w transforms in the chart, each block
// transforms as the binary form of degree l_i carried by its chain.
HMPoint apply_sl2(const Sl2Decomposition& dec, const SL2& g, const HMPoint& p);

struct CrossValidationReport {
    StabilityVerdict verdict;
    std::size_t samples_checked = 0;
    std::vector<std::size_t> stable_violations; // sample indices flagged unstable
    bool identity_destabilizes = false;
    bool destabilizer_found = false;
    std::size_t destabilizer_sample = 0;        // valid when found via a sample
};

// Exact cross-check of classify_point against the fixed-point analysis over
// the group sweep p = g * ([1:1:0], [v]).
CrossValidationReport cross_validate(const GradedUnipotentRep& rep, const std::vector<Rat>& v,
                                     const std::vector<SL2>& samples);

} // namespace ugit
