#include "ugit/poly.hpp"

#include <algorithm>

#include "ugit/error.hpp"

namespace ugit {

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::constant(Rat v) {
    QPoly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

QPoly QPoly::variable() {
    QPoly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

Rat QPoly::leading() const {
    if (c_.empty()) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
    return c_.back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / c_.back());
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rat& s) const {
    QPoly out = *this;
    for (Rat& x : out.c_) x *= s;
    out.trim();
    return out;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rat coeff = c_[i];
        if (out.empty()) {
            if (coeff.sign() < 0) { out += "-"; coeff = -coeff; }
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
            if (coeff.sign() < 0) coeff = -coeff;
        }
        bool unit = coeff == Rat(1);
        if (i == 0) {
            out += coeff.str();
        } else {
            if (!unit) out += coeff.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

QPoly poly_rem(QPoly a, const QPoly& b) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial remainder by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat f = a.leading() / b.leading();
        std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        std::vector<Rat> sub(shift + b.coeffs().size());
        for (std::size_t i = 0; i < b.coeffs().size(); ++i) sub[shift + i] = b.coeffs()[i] * f;
        a = a - QPoly(std::move(sub));
    }
    return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool poly_common_root_exists(const std::vector<QPoly>& polys) {
    QPoly g;
    bool all_zero = true;
    for (const QPoly& p : polys) {
        if (p.is_zero()) continue;
        all_zero = false;
        g = g.is_zero() ? p.monic() : poly_gcd(std::move(g), p);
        if (g.is_constant()) return false;
    }
    if (all_zero) return true;
    return g.degree() >= 1;
}

bool rational_root(const QPoly& p, Rat& root) {
    if (p.is_zero()) { root = Rat(0); return true; }
    if (p.is_constant()) return false;
    if (p.coeff(0).is_zero()) { root = Rat(0); return true; }

    // Scale to integer coefficients: multiply by lcm of denominators.
    mpz_class lcm = 1;
    for (const Rat& c : p.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> ic;
    ic.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs())
        ic.push_back(mpz_class(c.numerator() * (lcm / c.denominator())));

    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        n = abs(n);
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        }
        return out;
    };
    std::vector<mpz_class> nums = divisors(ic.front());
    std::vector<mpz_class> dens = divisors(ic.back());

    bool found = false;
    Rat best;
    auto consider = [&](const Rat& cand) {
        if (!p.eval(cand).is_zero()) return;
        if (!found) { best = cand; found = true; return; }
        mpz_class sb = abs(best.numerator()) + best.denominator();
        mpz_class sc = abs(cand.numerator()) + cand.denominator();
        if (sc < sb || (sc == sb && cand < best)) best = cand;
    };
    for (const mpz_class& n : nums)
        for (const mpz_class& d : dens) {
            Rat cand(mpq_class(n, d));
            consider(cand);
            consider(-cand);
        }
    if (found) root = best;
    return found;
}

} // namespace ugit
