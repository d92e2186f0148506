#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ugit/rational.hpp"

namespace ugit {

// Univariate polynomial over Q, coefficients ascending by degree, no trailing
// zero coefficients (zero polynomial has an empty coefficient list).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(Rat v);
    static QPoly variable(); // u

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const;

    Rat eval(const Rat& x) const;
    QPoly monic() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly scaled(const Rat& s) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Euclidean remainder of a by b; b nonzero.
QPoly poly_rem(QPoly a, const QPoly& b);

// Monic gcd; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

// Whether the system {p_i(u) = 0} has a common complex root. All polynomials
// zero: every u works. Otherwise: the monic gcd has positive degree.
bool poly_common_root_exists(const std::vector<QPoly>& polys);

// Smallest-magnitude rational root ordered by (|num| + |den|, value), if any.
// Search is exact via the rational root theorem on the integer-scaled poly.
bool rational_root(const QPoly& p, Rat& root);

} // namespace ugit
