#include "ugit/mpoly.hpp"

#include <algorithm>

#include "ugit/error.hpp"

namespace ugit {

long long monomial_degree(const Monomial& m) {
    long long d = 0;
    for (unsigned e : m) d += e;
    return d;
}

long long monomial_weight(const Monomial& m, const std::vector<long long>& weights) {
    long long w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<long long>(m[i]) * weights[i];
    return w;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    long long da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b; // lex on exponent vectors
}

static void enumerate_rec(std::size_t nvars, std::size_t i, unsigned rem, Monomial& cur,
                          std::vector<Monomial>& out) {
    if (i + 1 == nvars) {
        cur[i] = rem;
        out.push_back(cur);
        return;
    }
    for (unsigned e = rem + 1; e-- > 0;) {
        cur[i] = e;
        enumerate_rec(nvars, i + 1, rem - e, cur, out);
    }
    cur[i] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Monomial cur(nvars, 0);
    enumerate_rec(nvars, 0, d, cur, out);
    return out; // descending lex within fixed degree
}

std::vector<Monomial> monomials_of_degree_weight(std::size_t nvars, unsigned d,
                                                 const std::vector<long long>& weights,
                                                 long long w) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(nvars, d))
        if (monomial_weight(m, weights) == w) out.push_back(std::move(m));
    return out;
}

mpz_class count_monomials(std::size_t nvars, unsigned d) {
    if (nvars == 0) return d == 0 ? 1 : 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), d + static_cast<unsigned>(nvars) - 1,
                 static_cast<unsigned>(nvars) - 1);
    return r;
}

MPoly MPoly::constant(std::size_t nvars, Rat c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars, 0), std::move(c));
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_.emplace_back(std::move(m), Rat(1));
    return p;
}

MPoly MPoly::term(Monomial m, Rat c) {
    MPoly p(m.size());
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) fail("ZeroPolynomial", "leading monomial of zero polynomial");
    return terms_.front().first;
}

long long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.front().first); // grlex-descending order
}

bool MPoly::is_weight_homogeneous(const std::vector<long long>& weights) const {
    if (terms_.empty()) return true;
    long long w = monomial_weight(terms_.front().first, weights);
    for (const auto& t : terms_)
        if (monomial_weight(t.first, weights) != w) return false;
    return true;
}

long long MPoly::weight(const std::vector<long long>& weights) const {
    if (terms_.empty()) fail("ZeroPolynomial", "weight of zero polynomial");
    if (!is_weight_homogeneous(weights))
        fail("NotWeightHomogeneous", "polynomial mixes V-weights");
    return monomial_weight(terms_.front().first, weights);
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto cmp = [](const std::pair<Monomial, Rat>& t, const Monomial& key) {
        return grlex_less(key, t.first); // descending order
    };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, cmp);
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) fail("ShapeMismatch", "eval point arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    return mul_truncated(a, b, -1);
}

MPoly mul_truncated(const MPoly& a, const MPoly& b, long long maxdeg) {
    MPoly out(std::max(a.nvars(), b.nvars()));
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            if (maxdeg >= 0 && monomial_degree(m) > maxdeg) continue;
            out.add_term(m, ca * cb);
        }
    return out;
}

MPoly MPoly::scaled(const Rat& s) const {
    MPoly out(nvars_);
    if (s.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = t.second * s;
    return out;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t i) {
        if (i < names.size()) return names[i];
        return "x" + std::to_string(i + 1);
    };
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rat coeff = c;
        if (out.empty()) {
            if (coeff.sign() < 0) { out += "-"; coeff = -coeff; }
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
            if (coeff.sign() < 0) coeff = -coeff;
        }
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(i);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += coeff.str();
        } else {
            if (coeff != Rat(1)) out += coeff.str() + "*";
            out += vars;
        }
    }
    return out;
}

MPoly apply_derivation(const MPoly& f, const QMatrix& n) {
    MPoly out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t t = 0; t < m.size(); ++t) {
            if (m[t] == 0) continue;
            for (std::size_t s = 0; s < n.cols(); ++s) {
                const Rat& coef = n.at(t, s);
                if (coef.is_zero()) continue;
                Monomial mm = m;
                --mm[t];
                ++mm[s];
                out.add_term(mm, c * Rat(static_cast<long long>(m[t])) * coef);
            }
        }
    }
    return out;
}

} // namespace ugit
