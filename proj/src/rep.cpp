#include "ugit/rep.hpp"

#include <algorithm>
#include <map>

#include "ugit/error.hpp"

namespace ugit {

std::vector<Diagnostic> validate_rep(const GradedUnipotentRep& rep) {
    std::vector<Diagnostic> out;
    auto add = [&](const std::string& code, const std::string& msg) {
        out.push_back({code, msg});
    };

    if (rep.dim_v == 0) add("BadDimension", "dim_v must be positive");
    if (rep.torus_weights.size() != rep.dim_v)
        add("BadDimension", "torus_weights length differs from dim_v");
    if (rep.lie_basis.empty()) add("NoGenerators", "lie_basis must be nonempty");

    bool shapes_ok = rep.torus_weights.size() == rep.dim_v;
    for (std::size_t r = 0; r < rep.lie_basis.size(); ++r) {
        const LieGenerator& g = rep.lie_basis[r];
        if (g.grade <= 0)
            add("NonPositiveGrade",
                "generator " + std::to_string(r) + " has grade " + std::to_string(g.grade));
        if (g.op.rows() != rep.dim_v || g.op.cols() != rep.dim_v) {
            add("BadDimension", "generator " + std::to_string(r) + " operator shape mismatch");
            shapes_ok = false;
        }
    }
    if (!shapes_ok) return out;

    for (std::size_t r = 0; r < rep.lie_basis.size(); ++r) {
        const LieGenerator& g = rep.lie_basis[r];
        for (std::size_t t = 0; t < rep.dim_v; ++t)
            for (std::size_t s = 0; s < rep.dim_v; ++s)
                if (!g.op.at(t, s).is_zero() &&
                    rep.torus_weights[t] != rep.torus_weights[s] + g.grade) {
                    add("WeightShiftMismatch",
                        "generator " + std::to_string(r) + " entry (" + std::to_string(t) +
                            "," + std::to_string(s) + ") breaks the weight shift");
                    goto next_gen;
                }
    next_gen:;
    }

    for (std::size_t r = 0; r < rep.lie_basis.size(); ++r) {
        QMatrix p = QMatrix::identity(rep.dim_v);
        for (std::size_t k = 0; k < rep.dim_v; ++k) p = p * rep.lie_basis[r].op;
        if (!p.is_zero())
            add("NotNilpotent", "generator " + std::to_string(r) + " is not nilpotent");
    }

    if (rep.structure_consts) {
        const std::size_t n = rep.lie_basis.size();
        for (const StructureConst& sc : *rep.structure_consts) {
            if (sc.r >= n || sc.s >= n || sc.t >= n) {
                add("StructureConstsInvalid", "structure constant index out of range");
                return out;
            }
            if (!sc.value.is_zero() &&
                rep.lie_basis[sc.t].grade !=
                    rep.lie_basis[sc.r].grade + rep.lie_basis[sc.s].grade)
                add("StructureConstsInvalid",
                    "bracket coefficient breaks grade additivity at (" + std::to_string(sc.r) +
                        "," + std::to_string(sc.s) + "," + std::to_string(sc.t) + ")");
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                QMatrix lhs = rep.lie_basis[r].op * rep.lie_basis[s].op -
                              rep.lie_basis[s].op * rep.lie_basis[r].op;
                QMatrix rhs(rep.dim_v, rep.dim_v);
                for (const StructureConst& sc : *rep.structure_consts)
                    if (sc.r == r && sc.s == s)
                        rhs = rhs + rep.lie_basis[sc.t].op.scaled(sc.value);
                if (!(lhs == rhs)) {
                    add("StructureConstsInvalid",
                        "bracket identity fails at (" + std::to_string(r) + "," +
                            std::to_string(s) + ")");
                    return out;
                }
            }
    }

    return out;
}

void require_valid(const GradedUnipotentRep& rep) {
    auto diags = validate_rep(rep);
    if (!diags.empty()) fail("InvalidRep", diags.front().code + ": " + diags.front().message);
}

WeightProfile weight_profile(const GradedUnipotentRep& rep) {
    WeightProfile p;
    std::map<long long, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < rep.torus_weights.size(); ++i)
        by_weight[rep.torus_weights[i]].push_back(i);
    for (auto& [w, idx] : by_weight) {
        p.distinct.push_back(w);
        p.multiplicity.push_back(idx.size());
        p.indices.push_back(idx);
    }
    if (p.distinct.empty()) fail("InvalidRep", "weight profile of empty representation");
    p.omega_min = p.distinct.front();
    p.omega_max = p.distinct.back();
    p.v_min_indices = p.indices.front();
    p.gaps = p.distinct.size() - 1;
    return p;
}

CharacterTwist CharacterTwist::exact(long long chi, long long c) {
    if (c <= 0) fail("BadTwist", "tensor power c must be positive");
    CharacterTwist t;
    t.symbolic = false;
    t.chi = chi;
    t.c = c;
    return t;
}

MPoly dual_derivation(const GradedUnipotentRep& rep, std::size_t r, const MPoly& f) {
    if (r >= rep.lie_basis.size()) fail("BadIndex", "generator index out of range");
    return apply_derivation(f, rep.lie_basis[r].op);
}

long long dual_weight(const GradedUnipotentRep& rep, const MPoly& f) {
    return f.weight(rep.torus_weights);
}

GradedUnipotentRep product_with_p1(const GradedUnipotentRep& rep, unsigned M,
                                   long long chi1_weight) {
    GradedUnipotentRep out;
    const std::size_t stride = M + 1;
    out.dim_v = rep.dim_v * stride;
    out.torus_weights.resize(out.dim_v);
    for (std::size_t i = 0; i < rep.dim_v; ++i)
        for (unsigned a = 0; a <= M; ++a)
            out.torus_weights[i * stride + a] = rep.torus_weights[i] + a * chi1_weight;
    for (const LieGenerator& g : rep.lie_basis) {
        LieGenerator ng;
        ng.grade = g.grade;
        ng.op = QMatrix(out.dim_v, out.dim_v);
        for (std::size_t t = 0; t < rep.dim_v; ++t)
            for (std::size_t s = 0; s < rep.dim_v; ++s) {
                const Rat& v = g.op.at(t, s);
                if (v.is_zero()) continue;
                for (unsigned a = 0; a <= M; ++a)
                    ng.op.at(t * stride + a, s * stride + a) = v;
            }
        out.lie_basis.push_back(std::move(ng));
    }
    out.structure_consts = rep.structure_consts;
    return out;
}

} // namespace ugit
