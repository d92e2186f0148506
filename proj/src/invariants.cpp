#include "ugit/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ugit/error.hpp"
#include "ugit/matrix.hpp"

namespace ugit {

namespace {

void check_cap(std::size_t nvars, unsigned d, unsigned long cap) {
    if (count_monomials(nvars, d) > mpz_class(cap))
        fail("MonomialCapExceeded",
             "degree " + std::to_string(d) + " monomial count exceeds the cap of " +
                 std::to_string(cap));
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& monos) {
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    return idx;
}

std::vector<Rat> coeff_vector(const MPoly& f, const std::map<Monomial, std::size_t>& idx,
                              std::size_t dim) {
    std::vector<Rat> v(dim);
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.find(m);
        if (it == idx.end()) fail("Internal", "polynomial leaves the monomial slice");
        v[it->second] = c;
    }
    return v;
}

MPoly from_coeffs(const std::vector<Monomial>& monos, const std::vector<Rat>& v,
                  std::size_t nvars) {
    MPoly f(nvars);
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (!v[i].is_zero()) f.add_term(monos[i], v[i]);
    return f;
}

// Kernel vectors re-reduced as rows for a canonical echelon basis.
std::vector<std::vector<Rat>> echelonize(std::vector<std::vector<Rat>> vecs, std::size_t dim) {
    if (vecs.empty()) return vecs;
    QMatrix m(vecs.size(), dim);
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vecs[r][c];
    RrefResult red = rref(m);
    std::vector<std::vector<Rat>> out;
    for (std::size_t r = 0; r < red.rank; ++r) {
        std::vector<Rat> row(dim);
        for (std::size_t c = 0; c < dim; ++c) row[c] = red.mat.at(r, c);
        out.push_back(std::move(row));
    }
    return out;
}

bool leading_grlex_greater(const MPoly& a, const MPoly& b) {
    return grlex_less(b.leading_monomial(), a.leading_monomial());
}

} // namespace

std::vector<long long> reachable_weights(const GradedUnipotentRep& rep, unsigned d) {
    std::set<long long> distinct(rep.torus_weights.begin(), rep.torus_weights.end());
    std::set<long long> current = {0};
    for (unsigned j = 0; j < d; ++j) {
        std::set<long long> next;
        for (long long w : current)
            for (long long u : distinct) next.insert(w + u);
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

std::vector<MPoly> u_invariant_slice(const GradedUnipotentRep& rep, unsigned d, long long w,
                                     unsigned long monomial_cap) {
    require_valid(rep);
    check_cap(rep.dim_v, d, monomial_cap);
    const std::size_t n = rep.dim_v;
    std::vector<Monomial> cols = monomials_of_degree_weight(n, d, rep.torus_weights, w);
    if (cols.empty()) return {};

    // Rows: target monomials of each derivation, which lowers the V-weight by
    // the generator grade. Stack one block per generator.
    std::vector<std::size_t> row_offset;
    std::vector<std::map<Monomial, std::size_t>> row_idx;
    std::size_t total_rows = 0;
    for (const LieGenerator& g : rep.lie_basis) {
        std::vector<Monomial> rows = monomials_of_degree_weight(n, d, rep.torus_weights,
                                                                w - g.grade);
        row_offset.push_back(total_rows);
        row_idx.push_back(index_of(rows));
        total_rows += rows.size();
    }

    std::vector<std::vector<Rat>> kernel;
    if (total_rows == 0) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<Rat> e(cols.size());
            e[j] = Rat(1);
            kernel.push_back(std::move(e));
        }
    } else {
        QMatrix a(total_rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            MPoly mono = MPoly::term(cols[j], Rat(1));
            for (std::size_t r = 0; r < rep.lie_basis.size(); ++r) {
                MPoly image = apply_derivation(mono, rep.lie_basis[r].op);
                for (const auto& [m, c] : image.terms()) {
                    auto it = row_idx[r].find(m);
                    if (it == row_idx[r].end())
                        fail("Internal", "derivation image leaves the expected weight slice");
                    a.at(row_offset[r] + it->second, j) += c;
                }
            }
        }
        kernel = kernel_basis(a);
    }

    kernel = echelonize(std::move(kernel), cols.size());
    std::vector<MPoly> basis;
    for (const auto& v : kernel) basis.push_back(from_coeffs(cols, v, n));
    std::sort(basis.begin(), basis.end(), leading_grlex_greater);
    return basis;
}

std::vector<MPoly> u_invariant_space(const GradedUnipotentRep& rep, unsigned d,
                                     unsigned long monomial_cap) {
    std::vector<MPoly> basis;
    for (long long w : reachable_weights(rep, d)) {
        std::vector<MPoly> slice = u_invariant_slice(rep, d, w, monomial_cap);
        basis.insert(basis.end(), slice.begin(), slice.end());
    }
    std::sort(basis.begin(), basis.end(), leading_grlex_greater);
    return basis;
}

TwistedSlice twisted_invariant_space(const GradedUnipotentRep& rep, const CharacterTwist& twist,
                                     unsigned level, unsigned long monomial_cap) {
    if (twist.symbolic) fail("BadTwist", "twisted sections require an exact character");
    if (level == 0) fail("BadTwist", "level must be positive");
    TwistedSlice slice;
    slice.level = level;
    slice.degree = static_cast<unsigned>(twist.c * level);
    const long long target = twist.chi * level;
    auto reachable = reachable_weights(rep, slice.degree);
    slice.weight_reachable =
        std::binary_search(reachable.begin(), reachable.end(), target);
    if (slice.weight_reachable)
        slice.basis = u_invariant_slice(rep, slice.degree, target, monomial_cap);
    return slice;
}

std::vector<std::pair<unsigned, std::size_t>> hilbert_function(const GradedUnipotentRep& rep,
                                                               const CharacterTwist& twist,
                                                               unsigned probe_limit,
                                                               unsigned long monomial_cap) {
    std::vector<std::pair<unsigned, std::size_t>> dims;
    for (unsigned k = 1; k <= probe_limit; ++k)
        dims.push_back({k, twisted_invariant_space(rep, twist, k, monomial_cap).basis.size()});
    return dims;
}

namespace {

// Inserts every product of `gens` whose levels sum to `target` (at least two
// factors when sigma_part is empty) into the tracker. Factors recurse in list
// order; `acc` carries the running product.
void insert_products(const std::vector<std::pair<MPoly, unsigned>>& gens, std::size_t from,
                     unsigned remaining, unsigned factors, const MPoly& acc,
                     const std::map<Monomial, std::size_t>& idx, std::size_t dim,
                     unsigned min_factors, SpanTracker& tracker) {
    if (remaining == 0) {
        if (factors >= min_factors) tracker.insert(coeff_vector(acc, idx, dim));
        return;
    }
    if (from == gens.size()) return;
    insert_products(gens, from + 1, remaining, factors, acc, idx, dim, min_factors, tracker);
    if (gens[from].second <= remaining)
        insert_products(gens, from, remaining - gens[from].second, factors + 1,
                        acc * gens[from].first, idx, dim, min_factors, tracker);
}

} // namespace

GeneratorProbe generator_probe(const GradedUnipotentRep& rep, const CharacterTwist& twist,
                               unsigned probe_limit, unsigned long monomial_cap) {
    GeneratorProbe probe;
    probe.probe_limit = probe_limit;
    std::vector<std::pair<MPoly, unsigned>> gens;

    for (unsigned k = 1; k <= probe_limit; ++k) {
        TwistedSlice slice = twisted_invariant_space(rep, twist, k, monomial_cap);
        ProbeLevel lvl;
        lvl.level = k;
        lvl.degree = slice.degree;
        lvl.slice_dim = slice.basis.size();

        std::vector<Monomial> cols =
            monomials_of_degree_weight(rep.dim_v, slice.degree, rep.torus_weights,
                                       twist.chi * k);
        auto idx = index_of(cols);
        SpanTracker tracker(cols.size());
        if (!cols.empty())
            insert_products(gens, 0, k, 0, MPoly::constant(rep.dim_v, Rat(1)), idx,
                            cols.size(), 2, tracker);
        lvl.product_dim = tracker.rank();

        for (const MPoly& f : slice.basis)
            if (tracker.insert(coeff_vector(f, idx, cols.size()))) {
                lvl.new_generators.push_back(f);
                gens.push_back({f, k});
            }
        if (!lvl.new_generators.empty()) probe.last_new_level = k;
        probe.levels.push_back(std::move(lvl));
    }
    return probe;
}

std::vector<LocalGenerator> localize_at_min_section(const GradedUnipotentRep& rep,
                                                    const MPoly& sigma, unsigned max_degree,
                                                    unsigned long monomial_cap) {
    require_valid(rep);
    WeightProfile profile = weight_profile(rep);
    if (sigma.is_zero() || sigma.total_degree() != 1)
        fail("BadSectionWeight", "section must be a nonzero degree-one form");
    for (const auto& [m, c] : sigma.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && rep.torus_weights[i] != profile.omega_min)
                fail("BadSectionWeight",
                     "section must be supported on the lowest-weight dual coordinates");

    std::vector<LocalGenerator> out;
    std::vector<std::pair<MPoly, unsigned>> gens; // found generators, by degree
    for (unsigned m = 1; m <= max_degree; ++m) {
        check_cap(rep.dim_v, m, monomial_cap);
        std::vector<Monomial> cols = monomials_of_degree(rep.dim_v, m);
        auto idx = index_of(cols);
        SpanTracker tracker(cols.size());

        // Available combinations: sigma^(m-s) times a product of earlier
        // generators of total degree s, any factor count.
        std::vector<MPoly> sigma_pow(m + 1);
        sigma_pow[0] = MPoly::constant(rep.dim_v, Rat(1));
        for (unsigned i = 1; i <= m; ++i) sigma_pow[i] = sigma_pow[i - 1] * sigma;
        for (unsigned s = 0; s <= m; ++s)
            insert_products(gens, 0, s, 0, sigma_pow[m - s], idx, cols.size(), 0, tracker);

        for (const MPoly& f : u_invariant_space(rep, m, monomial_cap))
            if (tracker.insert(coeff_vector(f, idx, cols.size()))) {
                out.push_back({f, m});
                gens.push_back({f, m});
            }
    }
    return out;
}

} // namespace ugit
