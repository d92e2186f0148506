#include "ugit/toric.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ugit/error.hpp"

namespace ugit {

namespace {

std::string degree_str(const std::vector<long long>& alpha) {
    std::string s = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s + ")";
}

// DFS over exponent vectors with total factor count <= budget; calls fn with
// each exponent vector (including zero) whose accumulated degree matches the
// running target check inside fn.
template <typename Fn>
void enumerate_exponents(const std::vector<std::vector<long long>>& degrees, std::size_t var,
                         unsigned budget, std::vector<unsigned>& expo,
                         std::vector<long long>& partial, const Fn& fn) {
    if (var == degrees.size()) {
        fn(expo, partial);
        return;
    }
    enumerate_exponents(degrees, var + 1, budget, expo, partial, fn);
    for (unsigned e = 1; e <= budget; ++e) {
        expo[var] = e;
        for (std::size_t i = 0; i < partial.size(); ++i)
            partial[i] += e * degrees[var][i];
        enumerate_exponents(degrees, var + 1, budget - e, expo, partial, fn);
        for (std::size_t i = 0; i < partial.size(); ++i)
            partial[i] -= e * degrees[var][i];
        expo[var] = 0;
    }
}

// Exact enumeration for componentwise nonnegative gradings: every variable
// adds at least one unit somewhere, so factor counts are bounded by the
// component sum of the target and branches exceeding it die early.
template <typename Fn>
void enumerate_nonneg(const std::vector<std::vector<long long>>& degrees,
                      const std::vector<long long>& target, std::size_t var,
                      std::vector<unsigned>& expo, std::vector<long long>& partial,
                      const Fn& fn) {
    for (std::size_t i = 0; i < partial.size(); ++i)
        if (partial[i] > target[i]) return;
    if (var == degrees.size()) {
        if (partial == target) fn(expo);
        return;
    }
    long long headroom = 0;
    for (std::size_t i = 0; i < target.size(); ++i) headroom += target[i] - partial[i];
    for (long long e = 0; e <= headroom; ++e) {
        expo[var] = static_cast<unsigned>(e);
        enumerate_nonneg(degrees, target, var + 1, expo, partial, fn);
        for (std::size_t i = 0; i < partial.size(); ++i)
            partial[i] += degrees[var][i];
    }
    for (std::size_t i = 0; i < partial.size(); ++i)
        partial[i] -= (headroom + 1) * degrees[var][i];
    expo[var] = 0;
}

} // namespace

ToricAutReport toric_aut_structure(const ToricGradingSpec& spec) {
    const std::size_t d = spec.degrees.size();
    if (d == 0) fail("BadGrading", "at least one variable is required");
    const std::size_t m = spec.degrees[0].size();
    if (m == 0) fail("BadGrading", "degree vectors must have at least one component");
    for (const auto& deg : spec.degrees)
        if (deg.size() != m) fail("BadGrading", "degree vectors must share one length");

    bool effective = true; // componentwise nonnegative and no zero vector
    for (const auto& deg : spec.degrees) {
        bool positive = false;
        for (long long x : deg) {
            if (x < 0) effective = false;
            if (x > 0) positive = true;
        }
        if (!positive) effective = false;
    }

    std::set<std::vector<long long>> alphas(spec.degrees.begin(), spec.degrees.end());

    ToricAutReport report;
    for (const auto& alpha : alphas) {
        ToricAlphaReport ar;
        ar.alpha = alpha;
        for (std::size_t v = 0; v < d; ++v)
            if (spec.degrees[v] == alpha) ar.sprime_vars.push_back(v);
        ar.sprime_dim = ar.sprime_vars.size();

        auto record = [&](const std::vector<unsigned>& expo) {
            unsigned factors = 0;
            for (unsigned e : expo) factors += e;
            if (factors < 2) return;
            ar.sdouble_dim++;
            ar.factor_histogram[factors]++;
        };

        std::vector<unsigned> expo(d, 0);
        std::vector<long long> partial(m, 0);
        if (effective) {
            enumerate_nonneg(spec.degrees, alpha, 0, expo, partial, record);
        } else {
            // A degree-zero monomial pumps any solution to arbitrarily many
            // factors; a solution at the cap leaves completeness uncertified.
            bool saw_kernel = false, saw_capped = false;
            const std::vector<long long> zero(m, 0);
            enumerate_exponents(spec.degrees, 0, spec.factor_cap, expo, partial,
                                [&](const std::vector<unsigned>& e,
                                    const std::vector<long long>& degree) {
                                    unsigned factors = 0;
                                    for (unsigned x : e) factors += x;
                                    if (factors > 0 && degree == zero) saw_kernel = true;
                                    if (degree == alpha) {
                                        if (factors == spec.factor_cap) saw_capped = true;
                                        record(e);
                                    }
                                });
            if (saw_kernel || saw_capped)
                fail("UnboundedDegree", "enumeration of S'' at degree " + degree_str(alpha) +
                                            " is not certified finite under the factor cap");
        }

        for (auto [factors, count] : ar.factor_histogram)
            for (std::size_t i = 0; i < ar.sprime_dim * count; ++i)
                report.weights.push_back(static_cast<long long>(factors) - 1);
        report.dim_u += ar.sprime_dim * ar.sdouble_dim;
        report.reductive_dims.push_back(ar.sprime_dim);
        report.per_alpha.push_back(std::move(ar));
    }
    std::sort(report.weights.begin(), report.weights.end());
    return report;
}

} // namespace ugit
