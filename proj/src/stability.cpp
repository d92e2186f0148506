#include "ugit/stability.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "ugit/error.hpp"

namespace ugit {

namespace {

bool vec_is_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

Rat factorial(unsigned n) {
    Rat f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rat(i);
    return f;
}

Rat binomial(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

long long max_a_minus_2omega(const Sl2Decomposition& dec, const WeightProfile& profile) {
    long long best = 0;
    for (const Sl2Block& b : dec.blocks)
        best = std::max(best, b.a - 2 * profile.omega_min);
    return best;
}

void require_n_param(const Sl2Decomposition& dec, const WeightProfile& profile,
                     long long n_param) {
    if (n_param <= max_a_minus_2omega(dec, profile))
        fail("NParamTooSmall",
             "n_param must exceed max(a_i - 2*omega_min) = " +
                 std::to_string(max_a_minus_2omega(dec, profile)));
}

} // namespace

std::pair<long long, long long> adapted_interval(const WeightProfile& profile) {
    if (profile.gaps == 0)
        fail("TrivialAction", "all torus weights coincide; no adapted characters exist");
    return {profile.distinct[0], profile.distinct[1]};
}

bool is_adapted(const CharacterTwist& twist, const WeightProfile& profile) {
    if (twist.symbolic) return profile.gaps >= 1;
    auto [lo, hi] = adapted_interval(profile);
    Rat ratio(twist.chi, twist.c);
    return Rat(lo) < ratio && ratio < Rat(hi);
}

void require_adapted(const CharacterTwist& twist, const WeightProfile& profile) {
    if (!is_adapted(twist, profile))
        fail("NotAdapted", "character ratio chi/c lies outside the adapted interval");
}

std::vector<EpsRat> twist_weights(const WeightProfile& profile, const CharacterTwist& twist,
                                  long long c_power) {
    if (c_power <= 0) fail("BadTwist", "c_power must be positive");
    const long long c_eff = twist.symbolic ? c_power : twist.c;
    const EpsRat ratio = twist.ratio(profile.omega_min);
    std::vector<EpsRat> out;
    out.reserve(profile.distinct.size());
    for (long long w : profile.distinct)
        out.push_back((EpsRat(Rat(w)) - ratio) * EpsRat(Rat(c_eff)));
    return out;
}

LimitPoint limit_point(const GradedUnipotentRep& rep, const std::vector<Rat>& v) {
    if (v.size() != rep.dim_v) fail("BadPoint", "point dimension mismatch");
    if (vec_is_zero(v)) fail("BadPoint", "projective point cannot be the zero vector");
    WeightProfile profile = weight_profile(rep);
    LimitPoint lp;
    bool found = false;
    for (std::size_t k = 0; k < profile.distinct.size() && !found; ++k)
        for (std::size_t i : profile.indices[k])
            if (!v[i].is_zero()) {
                lp.lowest_weight = profile.distinct[k];
                found = true;
                break;
            }
    lp.limit.assign(rep.dim_v, Rat(0));
    for (std::size_t i = 0; i < rep.dim_v; ++i)
        if (rep.torus_weights[i] == lp.lowest_weight) lp.limit[i] = v[i];
    lp.in_x0min = lp.lowest_weight == profile.omega_min;
    return lp;
}

SweepResult u_sweep(const GradedUnipotentRep& rep, const std::vector<Rat>& v) {
    if (rep.lie_basis.size() != 1)
        fail("UnsupportedDimension", "the sweep test handles one-parameter U only");
    if (v.size() != rep.dim_v) fail("BadPoint", "point dimension mismatch");
    if (vec_is_zero(v)) fail("BadPoint", "projective point cannot be the zero vector");

    WeightProfile profile = weight_profile(rep);
    std::set<std::size_t> vmin(profile.v_min_indices.begin(), profile.v_min_indices.end());
    const QMatrix& n = rep.lie_basis[0].op;

    // exp(-u N) v: coefficient of u^j is (-1)^j N^j v / j!.
    std::vector<std::vector<Rat>> terms{v};
    while (!vec_is_zero(terms.back())) {
        if (terms.size() > rep.dim_v) fail("NotNilpotent", "generator is not nilpotent");
        terms.push_back(n.apply(terms.back()));
    }
    std::vector<std::vector<Rat>> poly_coeffs(rep.dim_v);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        Rat scale = (j % 2 == 0 ? Rat(1) : Rat(-1)) / factorial(static_cast<unsigned>(j));
        for (std::size_t i = 0; i < rep.dim_v; ++i)
            poly_coeffs[i].push_back(terms[j][i] * scale);
    }

    SweepResult res;
    res.already_in_vmin = true;
    for (std::size_t i = 0; i < rep.dim_v; ++i) {
        if (vmin.count(i)) continue;
        if (!v[i].is_zero()) res.already_in_vmin = false;
        res.outside_polys.emplace_back(poly_coeffs[i]);
    }
    res.in_sweep = poly_common_root_exists(res.outside_polys);
    QPoly g;
    for (const QPoly& p : res.outside_polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : poly_gcd(std::move(g), p);
    }
    res.gcd = g;
    if (res.in_sweep) {
        if (g.is_zero()) {
            res.witness_found = true;
            res.witness = Rat(0); // every parameter works
        } else {
            Rat root;
            if (rational_root(g, root)) {
                res.witness_found = true;
                res.witness = root;
            }
        }
    }
    return res;
}

StabilityVerdict classify_point(const GradedUnipotentRep& rep, const std::vector<Rat>& v) {
    if (rep.lie_basis.size() != 1)
        fail("UnsupportedDimension", "classification handles one-parameter U only");
    require_valid(rep);
    SsEqSReport ss = check_ss_eq_s_dim1(rep);
    if (!ss.holds)
        fail("SsNeqS", "semistability differs from stability for this action");

    StabilityVerdict verdict;
    LimitPoint lp = limit_point(rep, v);
    if (!lp.in_x0min) {
        verdict.status = StabilityVerdict::Status::Unstable;
        verdict.certificate = StabilityVerdict::Certificate::NotInX0min;
        verdict.lowest_weight = lp.lowest_weight;
        return verdict;
    }
    verdict.lowest_weight = lp.lowest_weight;
    verdict.sweep = u_sweep(rep, v);
    if (verdict.sweep.already_in_vmin) {
        verdict.status = StabilityVerdict::Status::Unstable;
        verdict.certificate = StabilityVerdict::Certificate::InZmin;
    } else if (verdict.sweep.in_sweep) {
        verdict.status = StabilityVerdict::Status::Unstable;
        verdict.certificate = StabilityVerdict::Certificate::InUSweep;
    } else {
        verdict.status = StabilityVerdict::Status::Stable;
        verdict.certificate = StabilityVerdict::Certificate::StableSweepGcd;
    }
    return verdict;
}

std::vector<StabilityVerdict> classify_points(const GradedUnipotentRep& rep,
                                              const std::vector<std::vector<Rat>>& points,
                                              unsigned threads) {
    std::vector<StabilityVerdict> out(points.size());
    if (points.empty()) return out;
    threads = std::max(1u, std::min<unsigned>(threads, points.size()));
    if (threads == 1) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = classify_point(rep, points[i]);
        return out;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < points.size(); i += threads)
                    out[i] = classify_point(rep, points[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

SsEqSReport check_ss_eq_s_dim1(const GradedUnipotentRep& rep) {
    if (rep.lie_basis.size() != 1)
        fail("UnsupportedDimension", "dim-1 check needs a single generator");
    const QMatrix& n = rep.lie_basis[0].op;
    WeightProfile profile = weight_profile(rep);

    // Kernel side: ker N restricted to V_min.
    QMatrix restricted(rep.dim_v, profile.v_min_indices.size());
    for (std::size_t c = 0; c < profile.v_min_indices.size(); ++c)
        for (std::size_t r = 0; r < rep.dim_v; ++r)
            restricted.at(r, c) = n.at(r, profile.v_min_indices[c]);
    auto kernel = kernel_basis(restricted);
    bool kernel_trivial = kernel.empty();

    // Dual side: lowest-weight dual coordinates inside im(N^T).
    QMatrix nt = n.transpose();
    std::size_t base_rank = rank(nt);
    QMatrix augmented(rep.dim_v, rep.dim_v + profile.v_min_indices.size());
    for (std::size_t r = 0; r < rep.dim_v; ++r)
        for (std::size_t c = 0; c < rep.dim_v; ++c) augmented.at(r, c) = nt.at(r, c);
    for (std::size_t k = 0; k < profile.v_min_indices.size(); ++k)
        augmented.at(profile.v_min_indices[k], rep.dim_v + k) = Rat(1);
    bool dual_holds = rank(augmented) == base_rank;

    if (kernel_trivial != dual_holds)
        fail("Internal", "primal and dual ss=s formulations disagree");

    SsEqSReport report;
    report.holds = kernel_trivial;
    if (!kernel_trivial) {
        report.kernel_witness.assign(rep.dim_v, Rat(0));
        for (std::size_t c = 0; c < profile.v_min_indices.size(); ++c)
            report.kernel_witness[profile.v_min_indices[c]] = kernel.front()[c];
    }
    return report;
}

namespace {

// Bracket closure of a generator subset under the sparse table.
bool subset_closed(const GradedUnipotentRep& rep, const std::set<std::size_t>& s) {
    for (const StructureConst& sc : *rep.structure_consts) {
        if (sc.value.is_zero()) continue;
        if (s.count(sc.r) && s.count(sc.s) && !s.count(sc.t)) return false;
    }
    return true;
}

// Lowest-weight dual coordinates inside D_xi(joint kernel of U' derivations).
bool ss_step_holds(const GradedUnipotentRep& rep, const WeightProfile& profile,
                   const std::set<std::size_t>& subalg, std::size_t xi) {
    const std::size_t dim = rep.dim_v;
    std::vector<std::vector<Rat>> kernel;
    if (subalg.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Rat> e(dim);
            e[i] = Rat(1);
            kernel.push_back(std::move(e));
        }
    } else {
        QMatrix stacked(subalg.size() * dim, dim);
        std::size_t row = 0;
        for (std::size_t r : subalg) {
            QMatrix nt = rep.lie_basis[r].op.transpose();
            for (std::size_t i = 0; i < dim; ++i, ++row)
                for (std::size_t j = 0; j < dim; ++j) stacked.at(row, j) = nt.at(i, j);
        }
        kernel = kernel_basis(stacked);
    }

    SpanTracker image(dim);
    QMatrix nt = rep.lie_basis[xi].op.transpose();
    for (const auto& k : kernel) image.insert(nt.apply(k));

    for (std::size_t i : profile.v_min_indices) {
        std::vector<Rat> e(dim);
        e[i] = Rat(1);
        if (!image.contains(e)) return false;
    }
    return true;
}

} // namespace

SsGeneralReport check_ss_eq_s_general(const GradedUnipotentRep& rep,
                                      const std::vector<std::vector<std::size_t>>& chain) {
    if (!rep.structure_consts)
        fail("MissingStructureConsts", "general ss=s check needs the bracket table");
    require_valid(rep);
    WeightProfile profile = weight_profile(rep);
    const std::size_t k = rep.lie_basis.size();

    SsGeneralReport report;
    report.holds = true;

    auto run_checks = [&](const std::set<std::size_t>& subalg) {
        for (std::size_t xi = 0; xi < k; ++xi) {
            if (subalg.count(xi)) continue;
            SsGeneralStep step;
            step.subalgebra.assign(subalg.begin(), subalg.end());
            step.xi = xi;
            step.holds = ss_step_holds(rep, profile, subalg, xi);
            if (!step.holds) report.holds = false;
            report.steps.push_back(std::move(step));
        }
    };

    for (const auto& entry : chain) {
        std::set<std::size_t> subalg(entry.begin(), entry.end());
        for (std::size_t idx : subalg)
            if (idx >= k) fail("BadChain", "chain entry references a missing generator");
        if (!subset_closed(rep, subalg))
            fail("BadChain", "chain entry is not closed under the bracket");
        run_checks(subalg);
    }

    std::set<long long> grades;
    for (const auto& g : rep.lie_basis) grades.insert(g.grade);
    if (grades.size() == k) {
        report.enumerated_all = true;
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::set<std::size_t> subalg;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) subalg.insert(i);
            if (subalg.size() == k) continue;
            if (!subset_closed(rep, subalg)) continue;
            run_checks(subalg);
        }
    }

    return report;
}

std::vector<WeightTableRow> hm_table(const Sl2Decomposition& dec, const WeightProfile& profile,
                                     const CharacterTwist& twist, long long n_param) {
    require_adapted(twist, profile);
    require_n_param(dec, profile, n_param);

    // 2eps stands for 2(chi/c - omega_min); symbolically that is literally 2eps.
    const EpsRat two_eps =
        (twist.ratio(profile.omega_min) - EpsRat(Rat(profile.omega_min))) * EpsRat(Rat(2));

    std::vector<WeightTableRow> rows;
    struct Shift { const char* name; long long dw1; long long factor; };
    const Shift shifts[3] = {{"P0", 0, 0}, {"P1", n_param, 1}, {"P2", -n_param, 1}};
    for (const Shift& sh : shifts)
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            const Sl2Block& b = dec.blocks[i];
            for (unsigned j = 0; j <= b.l; ++j) {
                WeightTableRow row;
                row.fixed_point = sh.name;
                row.block = i;
                row.position = j;
                row.w1 = EpsRat(Rat(2 * static_cast<long long>(j) -
                                    static_cast<long long>(b.l) + sh.dw1));
                row.w2 = EpsRat(Rat(b.a - 2 * profile.omega_min -
                                    sh.factor * dec.grade * n_param)) -
                         two_eps;
                rows.push_back(std::move(row));
            }
        }
    return rows;
}

TorusVerdict hm_classify_torus(const HMPoint& p, const Sl2Decomposition& dec,
                               const WeightProfile& profile, const CharacterTwist& twist,
                               long long n_param) {
    require_adapted(twist, profile);
    require_n_param(dec, profile, n_param);
    if (p.w.size() != 3) fail("BadPoint", "chart coordinates must have three entries");
    if (p.v.size() != dec.blocks.size())
        fail("BadPoint", "chain coordinate blocks do not match the decomposition");
    for (std::size_t i = 0; i < p.v.size(); ++i)
        if (p.v[i].size() != dec.blocks[i].l + 1)
            fail("BadPoint", "chain coordinate length mismatch in block " + std::to_string(i));
    bool v_zero = true;
    for (const auto& blk : p.v)
        if (!vec_is_zero(blk)) v_zero = false;
    if (v_zero || vec_is_zero(p.w))
        fail("BadPoint", "projective coordinates cannot be identically zero");

    std::vector<std::size_t> exc = exceptional_indices(dec, profile);
    std::set<std::size_t> exceptional(exc.begin(), exc.end());

    const bool w0 = !p.w[0].is_zero(), w1 = !p.w[1].is_zero(), w2 = !p.w[2].is_zero();

    TorusVerdict verdict;
    verdict.torus_stable = false;
    if (!w0) {
        verdict.reason = "w0_vanishes";
        return verdict;
    }
    if (!w1 && !w2) {
        verdict.reason = "w1_and_w2_vanish";
        return verdict;
    }

    auto support_only_exceptional_bottom = [&]() {
        for (std::size_t i = 0; i < p.v.size(); ++i)
            for (std::size_t j = 0; j < p.v[i].size(); ++j)
                if (!p.v[i][j].is_zero() && !(exceptional.count(i) && j == 0)) return false;
        return true;
    };
    auto support_only_exceptional_top = [&]() {
        for (std::size_t i = 0; i < p.v.size(); ++i)
            for (std::size_t j = 0; j < p.v[i].size(); ++j)
                if (!p.v[i][j].is_zero() &&
                    !(exceptional.count(i) && j == dec.blocks[i].l))
                    return false;
        return true;
    };
    auto exceptional_bottom_vanishes = [&]() {
        for (std::size_t i : exceptional)
            if (!p.v[i].front().is_zero()) return false;
        return true;
    };
    auto exceptional_top_vanishes = [&]() {
        for (std::size_t i : exceptional)
            if (!p.v[i].back().is_zero()) return false;
        return true;
    };

    if (w1 && w2) {
        if (support_only_exceptional_bottom())
            verdict.reason = "support_confined_to_exceptional_bottom";
        else if (support_only_exceptional_top())
            verdict.reason = "support_confined_to_exceptional_top";
        else
            verdict.torus_stable = true;
    } else if (w1) { // w2 == 0
        if (exceptional_bottom_vanishes())
            verdict.reason = "w2_zero_exceptional_bottom_vanishes";
        else if (support_only_exceptional_bottom())
            verdict.reason = "w2_zero_support_confined_to_exceptional_bottom";
        else
            verdict.torus_stable = true;
    } else { // w1 == 0, w2 != 0
        if (exceptional_top_vanishes())
            verdict.reason = "w1_zero_exceptional_top_vanishes";
        else if (support_only_exceptional_top())
            verdict.reason = "w1_zero_support_confined_to_exceptional_top";
        else
            verdict.torus_stable = true;
    }
    return verdict;
}

std::vector<std::vector<Rat>> to_chain_coords(const Sl2Decomposition& dec,
                                              const std::vector<Rat>& v) {
    std::vector<Rat> flat;
    if (!solve(dec.basis_change, v, flat) )
        fail("Internal", "chain basis does not span the space");
    std::vector<std::vector<Rat>> out;
    std::size_t pos = 0;
    for (const Sl2Block& b : dec.blocks) {
        out.emplace_back(flat.begin() + pos, flat.begin() + pos + b.l + 1);
        pos += b.l + 1;
    }
    return out;
}

std::vector<Rat> from_chain_coords(const Sl2Decomposition& dec,
                                   const std::vector<std::vector<Rat>>& chain_coords) {
    std::vector<Rat> flat;
    for (const auto& blk : chain_coords) flat.insert(flat.end(), blk.begin(), blk.end());
    return dec.basis_change.apply(flat);
}

HMPoint apply_sl2(const Sl2Decomposition& dec, const SL2& g, const HMPoint& p) {
    if (g.a * g.d - g.b * g.c != Rat(1))
        fail("BadGroupElement", "determinant must be one");
    HMPoint out;
    out.w = {p.w[0], g.a * p.w[1] + g.b * p.w[2], g.c * p.w[1] + g.d * p.w[2]};

    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const unsigned l = dec.blocks[i].l;
        // Chain coordinates scale to binary-form coefficients by
        // c_j = l!/(l-j)!: with that normalization N matches the raising
        // operator of the standard Sym^l action.
        std::vector<Rat> s(l + 1);
        Rat cj(1);
        for (unsigned j = 0; j <= l; ++j) {
            s[j] = p.v[i][j] * cj;
            cj *= Rat(static_cast<long long>(l) - j);
        }
        std::vector<Rat> sp(l + 1, Rat(0));
        for (unsigned j = 0; j <= l; ++j) {
            if (s[j].is_zero()) continue;
            // (a e1 + c e2)^j (b e1 + d e2)^(l-j), coefficient on e1^m e2^(l-m).
            for (unsigned pdeg = 0; pdeg <= j; ++pdeg)
                for (unsigned q = 0; q <= l - j; ++q) {
                    Rat coeff = binomial(j, pdeg) * binomial(l - j, q);
                    for (unsigned t = 0; t < pdeg; ++t) coeff *= g.a;
                    for (unsigned t = 0; t < j - pdeg; ++t) coeff *= g.c;
                    for (unsigned t = 0; t < q; ++t) coeff *= g.b;
                    for (unsigned t = 0; t < l - j - q; ++t) coeff *= g.d;
                    sp[pdeg + q] += s[j] * coeff;
                }
        }
        std::vector<Rat> vp(l + 1);
        cj = Rat(1);
        for (unsigned j = 0; j <= l; ++j) {
            vp[j] = sp[j] / cj;
            cj *= Rat(static_cast<long long>(l) - j);
        }
        out.v.push_back(std::move(vp));
    }
    return out;
}

CrossValidationReport cross_validate(const GradedUnipotentRep& rep, const std::vector<Rat>& v,
                                     const std::vector<SL2>& samples) {
    CrossValidationReport report;
    report.verdict = classify_point(rep, v);

    Sl2Decomposition dec = decompose_sl2(rep);
    WeightProfile profile = weight_profile(rep);
    CharacterTwist twist = CharacterTwist::well_adapted();
    const long long n_param = std::max<long long>(10, max_a_minus_2omega(dec, profile) + 1);

    HMPoint base;
    base.w = {Rat(1), Rat(1), Rat(0)};
    base.v = to_chain_coords(dec, v);

    auto torus_stable_at = [&](const SL2& g) {
        HMPoint moved = apply_sl2(dec, g, base);
        return hm_classify_torus(moved, dec, profile, twist, n_param).torus_stable;
    };

    report.samples_checked = samples.size();
    report.identity_destabilizes = !torus_stable_at(SL2::identity());

    if (report.verdict.status == StabilityVerdict::Status::Stable) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (!torus_stable_at(samples[i])) report.stable_violations.push_back(i);
    } else {
        if (report.identity_destabilizes) {
            report.destabilizer_found = true;
            report.destabilizer_sample = samples.size(); // sentinel: identity
        } else {
            for (std::size_t i = 0; i < samples.size(); ++i)
                if (!torus_stable_at(samples[i])) {
                    report.destabilizer_found = true;
                    report.destabilizer_sample = i;
                    break;
                }
        }
    }
    return report;
}

} // namespace ugit
