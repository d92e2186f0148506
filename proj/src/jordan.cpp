#include "ugit/jordan.hpp"

#include <algorithm>

#include "ugit/error.hpp"

namespace ugit {

namespace {

bool vec_is_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

} // namespace

std::vector<JordanChain> jordan_chains(const QMatrix& n,
                                       const std::vector<std::vector<Rat>>& pool) {
    if (n.rows() != n.cols()) fail("ShapeMismatch", "jordan_chains needs a square matrix");
    const std::size_t dim = n.rows();
    if (dim == 0) return {};

    // powers[s] = n^s; d = nilpotency index.
    std::vector<QMatrix> powers;
    powers.push_back(QMatrix::identity(dim));
    std::size_t d = 0;
    while (!powers.back().is_zero()) {
        if (d == dim) fail("NotNilpotent", "matrix is not nilpotent");
        powers.push_back(powers.back() * n);
        ++d;
    }
    // Candidate vectors for chain generators, tried in order at every stage.
    std::vector<std::vector<Rat>> candidates = pool;
    if (candidates.empty())
        for (std::size_t s = d; s >= 1; --s)
            for (auto& v : kernel_basis(powers[std::min(s, powers.size() - 1)]))
                candidates.push_back(std::move(v));

    struct Raw { std::vector<Rat> gen; std::size_t len; };
    std::vector<Raw> raw;

    for (std::size_t s = d; s >= 1; --s) {
        // Span to extend: ker n^{s-1} plus the stage-s vectors of taller chains.
        SpanTracker span(dim);
        for (const auto& v : kernel_basis(powers[s - 1])) span.insert(v);
        for (const Raw& ch : raw) span.insert(powers[ch.len - s].apply(ch.gen));
        for (const auto& cand : candidates) {
            // Generators at stage s live in ker n^s.
            if (!vec_is_zero(powers[s].apply(cand))) continue;
            if (span.insert(cand)) raw.push_back({cand, s});
        }
        if (s == 1) break;
    }

    std::stable_sort(raw.begin(), raw.end(),
                     [](const Raw& a, const Raw& b) { return a.len > b.len; });

    std::vector<JordanChain> chains;
    chains.reserve(raw.size());
    for (const Raw& ch : raw) {
        JordanChain c;
        c.reserve(ch.len);
        std::vector<Rat> v = ch.gen;
        for (std::size_t j = 0; j < ch.len; ++j) {
            c.push_back(v);
            v = n.apply(v);
        }
        chains.push_back(std::move(c));
    }
    return chains;
}

} // namespace ugit
