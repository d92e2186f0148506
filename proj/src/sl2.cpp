#include "ugit/sl2.hpp"

#include <algorithm>

#include "ugit/error.hpp"
#include "ugit/jordan.hpp"

namespace ugit {

namespace {

long long vector_weight(const std::vector<Rat>& v, const std::vector<long long>& weights) {
    long long w = 0;
    bool found = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!found) {
            w = weights[i];
            found = true;
        } else if (weights[i] != w) {
            fail("Internal", "chain vector is not weight-homogeneous");
        }
    }
    if (!found) fail("Internal", "zero chain vector");
    return w;
}

} // namespace

Sl2Decomposition decompose_sl2(const GradedUnipotentRep& rep) {
    require_valid(rep);
    if (rep.lie_basis.size() != 1)
        fail("UnsupportedDimension",
             "block decomposition requires a single nilpotent generator");
    const QMatrix& n = rep.lie_basis[0].op;
    const long long grade = rep.lie_basis[0].grade;

    WeightProfile profile = weight_profile(rep);

    // Weight-pure candidate pool: weight components of the kernel bases of the
    // powers of n. Kernels of a graded operator are graded, so the components
    // stay inside the kernels and jointly span each of them.
    std::vector<std::vector<Rat>> pool;
    QMatrix power = QMatrix::identity(rep.dim_v);
    std::vector<QMatrix> powers{power};
    do {
        power = power * n;
        powers.push_back(power);
    } while (!powers.back().is_zero());
    for (std::size_t s = powers.size() - 1; s >= 1; --s) {
        for (const auto& v : kernel_basis(powers[s])) {
            for (const auto& idx : profile.indices) {
                std::vector<Rat> comp(rep.dim_v);
                bool nonzero = false;
                for (std::size_t i : idx) {
                    comp[i] = v[i];
                    if (!v[i].is_zero()) nonzero = true;
                }
                if (nonzero) pool.push_back(std::move(comp));
            }
        }
    }

    Sl2Decomposition dec;
    dec.grade = grade;
    for (const JordanChain& chain : jordan_chains(n, pool)) {
        Sl2Block b;
        b.l = static_cast<unsigned>(chain.size() - 1);
        b.chain = chain;
        b.b0_weight = vector_weight(chain.front(), rep.torus_weights);
        b.a = 2 * b.b0_weight + grade * b.l;
        for (unsigned j = 0; j <= b.l; ++j) {
            long long measured = vector_weight(chain[j], rep.torus_weights);
            Rat predicted = predicted_chain_weight(b.a, b.l, grade, j, grade);
            if (Rat(measured) != predicted)
                fail("Internal", "chain weight disagrees with block data");
        }
        dec.blocks.push_back(std::move(b));
    }

    std::stable_sort(dec.blocks.begin(), dec.blocks.end(),
                     [](const Sl2Block& x, const Sl2Block& y) {
                         if (x.a != y.a) return x.a < y.a;
                         return x.l < y.l;
                     });

    dec.basis_change = QMatrix(rep.dim_v, rep.dim_v);
    std::size_t col = 0;
    for (const Sl2Block& b : dec.blocks)
        for (const auto& v : b.chain) {
            for (std::size_t i = 0; i < rep.dim_v; ++i) dec.basis_change.at(i, col) = v[i];
            ++col;
        }
    if (col != rep.dim_v) fail("Internal", "chain vectors do not fill the space");

    return dec;
}

std::vector<std::size_t> exceptional_indices(const Sl2Decomposition& dec,
                                             const WeightProfile& profile) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i)
        if (dec.blocks[i].b0_weight == profile.omega_min) out.push_back(i);
    return out;
}

QMatrix chain_form(const Sl2Decomposition& dec) {
    std::size_t dim = 0;
    for (const Sl2Block& b : dec.blocks) dim += b.l + 1;
    QMatrix c(dim, dim);
    std::size_t base = 0;
    for (const Sl2Block& b : dec.blocks) {
        for (unsigned j = 0; j < b.l; ++j) c.at(base + j + 1, base + j) = Rat(1);
        base += b.l + 1;
    }
    return c;
}

Rat predicted_chain_weight(long long a, unsigned l, long long grade, unsigned j,
                           long long step) {
    return Rat(a - grade * static_cast<long long>(l) + 2 * step * static_cast<long long>(j), 2);
}

} // namespace ugit
