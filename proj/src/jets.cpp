#include "ugit/jets.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

#include "ugit/error.hpp"

namespace ugit {

namespace {

void check_jet(unsigned k, const std::vector<Rat>& alpha) {
    if (alpha.size() != k)
        fail("ShapeMismatch", "expected " + std::to_string(k) + " jet coefficients, got " +
                                  std::to_string(alpha.size()));
    if (k == 0) fail("BadJet", "jet order must be positive");
    if (alpha[0].is_zero()) fail("BadJet", "leading jet coefficient must be nonzero");
}

// Coefficient lists of polynomials in t without constant term, truncated at
// degree k: index d-1 holds the coefficient of t^d.
template <typename T>
std::vector<T> mul_t(const std::vector<T>& a, const std::vector<T>& b, unsigned k, T zero) {
    std::vector<T> out(k, zero);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; i + j <= k; ++j)
            out[i + j - 1] += a[i - 1] * b[j - 1];
    return out;
}

// Sum over terms carrying alpha_(dir+1) exactly once and otherwise only
// alpha_1; the directional derivative at the identity jet.
Rat derivative_at_identity(const MPoly& f, std::size_t dir) {
    Rat out(0);
    for (const auto& [m, c] : f.terms()) {
        if (m[dir] != 1) continue;
        bool clean = true;
        for (std::size_t v = 1; v < m.size(); ++v)
            if (v != dir && m[v] != 0) clean = false;
        if (clean) out += c;
    }
    return out;
}

} // namespace

QMatrix gk_matrix(unsigned k, const std::vector<Rat>& alpha) {
    check_jet(k, alpha);
    QMatrix m(k, k);
    std::vector<Rat> power(alpha);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) m.at(i - 1, j - 1) = power[j - 1];
        if (i < k) power = mul_t(power, alpha, k, Rat(0));
    }
    return m;
}

std::vector<std::vector<MPoly>> gk_matrix_symbolic(unsigned k) {
    if (k == 0) fail("BadJet", "jet order must be positive");
    std::vector<MPoly> alpha;
    for (unsigned i = 0; i < k; ++i) alpha.push_back(MPoly::variable(k, i));
    std::vector<std::vector<MPoly>> m(k, std::vector<MPoly>(k, MPoly(k)));
    std::vector<MPoly> power(alpha);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) m[i - 1][j - 1] = power[j - 1];
        if (i < k) power = mul_t(power, alpha, k, MPoly(k));
    }
    return m;
}

std::vector<Rat> compose_jets(const std::vector<Rat>& phi, const std::vector<Rat>& psi,
                              unsigned k) {
    check_jet(k, phi);
    check_jet(k, psi);
    std::vector<Rat> out(k, Rat(0));
    std::vector<Rat> power(psi); // psi^s, truncated
    for (unsigned s = 1; s <= k; ++s) {
        for (unsigned d = 1; d <= k; ++d) out[d - 1] += phi[s - 1] * power[d - 1];
        if (s < k) power = mul_t(power, psi, k, Rat(0));
    }
    return out;
}

GradedUnipotentRep jet_rep(unsigned n, unsigned k) {
    if (n < 1 || k < 2) fail("BadJetSpec", "need n >= 1 and jet order k >= 2");
    const std::size_t dim = static_cast<std::size_t>(n) * k;

    GradedUnipotentRep rep;
    rep.dim_v = dim;
    rep.torus_weights.resize(dim);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned a = 0; a < n; ++a)
            rep.torus_weights[(i - 1) * n + a] = i;

    auto sym = gk_matrix_symbolic(k);
    for (unsigned j = 1; j < k; ++j) {
        // Scalar part: transpose of the matrix differentiated along alpha_(j+1).
        QMatrix scalar(k, k);
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = 0; c < k; ++c)
                scalar.at(c, r) = derivative_at_identity(sym[r][c], j);
        LieGenerator g;
        g.grade = j;
        g.op = QMatrix(dim, dim);
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = 0; c < k; ++c)
                if (!scalar.at(r, c).is_zero())
                    for (unsigned a = 0; a < n; ++a)
                        g.op.at(r * n + a, c * n + a) = scalar.at(r, c);
        rep.lie_basis.push_back(std::move(g));
    }

    // Structure constants from the brackets: grades are distinct, so each
    // bracket is a multiple of the generator of the summed grade or zero.
    std::vector<StructureConst> consts;
    const std::size_t ng = rep.lie_basis.size();
    for (std::size_t r = 0; r < ng; ++r)
        for (std::size_t s = 0; s < ng; ++s) {
            if (r == s) continue;
            const QMatrix& nr = rep.lie_basis[r].op;
            const QMatrix& ns = rep.lie_basis[s].op;
            QMatrix bracket = nr * ns - ns * nr;
            long long grade = rep.lie_basis[r].grade + rep.lie_basis[s].grade;
            std::size_t t = ng;
            for (std::size_t i = 0; i < ng; ++i)
                if (rep.lie_basis[i].grade == grade) t = i;
            if (t == ng) {
                if (!(bracket == QMatrix(dim, dim)))
                    fail("Internal", "bracket escapes the graded basis");
                continue;
            }
            Rat c(0);
            const QMatrix& nt = rep.lie_basis[t].op;
            for (std::size_t i = 0; i < dim && c.is_zero(); ++i)
                for (std::size_t jj = 0; jj < dim && c.is_zero(); ++jj)
                    if (!nt.at(i, jj).is_zero()) c = bracket.at(i, jj) / nt.at(i, jj);
            if (!(bracket == nt.scaled(c))) fail("Internal", "bracket is not a multiple");
            if (!c.is_zero()) consts.push_back({r, s, t, c});
        }
    rep.structure_consts = std::move(consts);
    require_valid(rep);
    return rep;
}

QMatrix gkp_matrix(unsigned k, unsigned p, const std::vector<QMatrix>& blocks) {
    if (k < 1 || p < 1) fail("BadJetSpec", "need k >= 1 and p >= 1");
    if (blocks.size() != k)
        fail("ShapeMismatch", "expected " + std::to_string(k) + " coefficient blocks");

    std::vector<std::vector<Monomial>> basis(k + 1);
    std::vector<std::size_t> offset(k + 2, 0);
    for (unsigned d = 1; d <= k; ++d) {
        basis[d] = monomials_of_degree(p, d);
        offset[d + 1] = offset[d] + basis[d].size();
    }
    for (unsigned d = 1; d <= k; ++d)
        if (blocks[d - 1].rows() != p || blocks[d - 1].cols() != basis[d].size())
            fail("ShapeMismatch", "degree " + std::to_string(d) + " block must be " +
                                      std::to_string(p) + " x " +
                                      std::to_string(basis[d].size()));
    if (determinant(blocks[0]).is_zero())
        fail("BadJet", "degree-one block must be invertible");

    // Component polynomials phi_a(u), a = 0..p-1.
    std::vector<MPoly> comp(p, MPoly(p));
    for (unsigned d = 1; d <= k; ++d)
        for (unsigned a = 0; a < p; ++a)
            for (std::size_t c = 0; c < basis[d].size(); ++c)
                if (!blocks[d - 1].at(a, c).is_zero())
                    comp[a].add_term(basis[d][c], blocks[d - 1].at(a, c));

    std::vector<std::map<Monomial, std::size_t>> idx(k + 1);
    for (unsigned d = 1; d <= k; ++d)
        for (std::size_t c = 0; c < basis[d].size(); ++c) idx[d][basis[d][c]] = c;

    const std::size_t total = offset[k + 1];
    QMatrix m(total, total);
    for (unsigned l = 1; l <= k; ++l) {
        for (std::size_t r = 0; r < basis[l].size(); ++r) {
            // Product of the component polynomials per the row monomial.
            MPoly prod = MPoly::constant(p, Rat(1));
            for (unsigned a = 0; a < p; ++a)
                for (unsigned e = 0; e < basis[l][r][a]; ++e)
                    prod = mul_truncated(prod, comp[a], k);
            for (const auto& [mono, coeff] : prod.terms()) {
                long long d = monomial_degree(mono);
                if (d < 1 || d > k) continue;
                m.at(offset[l] + r, offset[d] + idx[d].at(mono)) = coeff;
            }
        }
    }
    return m;
}

std::vector<std::pair<unsigned, std::size_t>> demailly_semple_dims(unsigned n, unsigned k,
                                                                   unsigned m_max,
                                                                   unsigned threads,
                                                                   unsigned long monomial_cap) {
    if (n < 1 || k < 1) fail("BadJetSpec", "need n >= 1 and k >= 1");
    std::vector<std::pair<unsigned, std::size_t>> out(m_max);

    if (k == 1) {
        for (unsigned m = 1; m <= m_max; ++m) {
            if (count_monomials(n, m) > mpz_class(monomial_cap))
                fail("MonomialCapExceeded", "weighted degree " + std::to_string(m) +
                                                " exceeds the monomial cap");
            out[m - 1] = {m, count_monomials(n, m).get_ui()};
        }
        return out;
    }

    GradedUnipotentRep rep = jet_rep(n, k);
    auto work = [&](unsigned start, unsigned stride) {
        for (unsigned m = start; m <= m_max; m += stride) {
            std::size_t dim = 0;
            for (unsigned d = (m + k - 1) / k; d <= m; ++d)
                dim += u_invariant_slice(rep, d, m, monomial_cap).size();
            out[m - 1] = {m, dim};
        }
    };
    if (threads <= 1 || m_max <= 1) {
        work(1, 1);
        return out;
    }
    unsigned used = std::min(threads, m_max);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(used);
    for (unsigned t = 0; t < used; ++t)
        pool.emplace_back([&, t]() {
            try {
                work(t + 1, used);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace ugit
