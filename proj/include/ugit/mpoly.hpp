#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ugit/matrix.hpp"
#include "ugit/rational.hpp"

namespace ugit {

// Exponent vector; index = variable. Dense, fixed arity per context.
using Monomial = std::vector<unsigned>;

long long monomial_degree(const Monomial& m);
long long monomial_weight(const Monomial& m, const std::vector<long long>& weights);

// Graded lexicographic: first total degree, then lex on exponents.
bool grlex_less(const Monomial& a, const Monomial& b);

// All monomials in `nvars` variables of total degree d, descending graded-lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

// The subset with prescribed weight under per-variable weights; same order.
std::vector<Monomial> monomials_of_degree_weight(std::size_t nvars, unsigned d,
                                                 const std::vector<long long>& weights,
                                                 long long w);

// C(d + nvars - 1, nvars - 1), exact.
mpz_class count_monomials(std::size_t nvars, unsigned d);

// Multivariate polynomial over Q. Terms are kept sorted descending graded-lex
// with nonzero coefficients; the zero polynomial has no terms.
class MPoly {
public:
    MPoly() : nvars_(0) {}
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, Rat c);
    static MPoly variable(std::size_t nvars, std::size_t i);
    static MPoly term(Monomial m, Rat c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    long long total_degree() const; // max over terms; -1 for zero

    // Weight of all terms under per-variable weights; requires the polynomial
    // to be weight-homogeneous (throws Error("NotWeightHomogeneous") else).
    long long weight(const std::vector<long long>& weights) const;
    bool is_weight_homogeneous(const std::vector<long long>& weights) const;

    void add_term(const Monomial& m, const Rat& c);

    Rat eval(const std::vector<Rat>& point) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const Rat& s) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Default variable names x1..xn.
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    std::vector<std::pair<Monomial, Rat>> terms_;
};

// Product with all terms of total degree > maxdeg dropped.
MPoly mul_truncated(const MPoly& a, const MPoly& b, long long maxdeg);

// Derivation determined by D x_t = sum_s n(t,s) x_s, extended by Leibniz.
MPoly apply_derivation(const MPoly& f, const QMatrix& n);

} // namespace ugit
