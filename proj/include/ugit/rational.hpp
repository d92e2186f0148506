#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ugit/error.hpp"

namespace ugit {

// Exact rational scalar. Canonical form is maintained by GMP: lowest terms,
// denominator > 0, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) { v_.canonicalize(); }
    Rat(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) fail("DivisionByZero", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional whitespace; q > 0 not required on
    // input, canonicalized on construction.
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) fail("DivisionByZero", "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // Only for SVG pixel coordinates; exact paths never call this.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Rational with an infinitesimal part: std + inf*eps, 0 < eps smaller than any
// positive rational. Total order is lexicographic. Products of two nonzero
// infinitesimal parts are rejected: eps^2 never arises in the supported
// computations.
class EpsRat {
public:
    EpsRat() = default;
    EpsRat(Rat std_part) : std_(std::move(std_part)) {}
    EpsRat(Rat std_part, Rat inf_part) : std_(std::move(std_part)), inf_(std::move(inf_part)) {}
    EpsRat(long long n) : std_(n) {}

    static EpsRat eps() { return EpsRat(Rat(0), Rat(1)); }

    const Rat& std_part() const { return std_; }
    const Rat& inf_part() const { return inf_; }
    bool is_pure_rational() const { return inf_.is_zero(); }

    // "p/q" when the infinitesimal part vanishes, else "p/q + r/s*eps" with a
    // sign-aware separator ("1 - 2*eps").
    std::string str() const;

    EpsRat operator-() const { return EpsRat(-std_, -inf_); }
    EpsRat& operator+=(const EpsRat& o) { std_ += o.std_; inf_ += o.inf_; return *this; }
    EpsRat& operator-=(const EpsRat& o) { std_ -= o.std_; inf_ -= o.inf_; return *this; }

    friend EpsRat operator+(EpsRat a, const EpsRat& b) { a += b; return a; }
    friend EpsRat operator-(EpsRat a, const EpsRat& b) { a -= b; return a; }

    friend EpsRat operator*(const EpsRat& a, const EpsRat& b) {
        if (!a.inf_.is_zero() && !b.inf_.is_zero())
            fail("EpsSquare", "product of two infinitesimals is outside the value domain");
        return EpsRat(a.std_ * b.std_, a.std_ * b.inf_ + a.inf_ * b.std_);
    }

    friend bool operator==(const EpsRat& a, const EpsRat& b) {
        return a.std_ == b.std_ && a.inf_ == b.inf_;
    }
    friend bool operator!=(const EpsRat& a, const EpsRat& b) { return !(a == b); }
    friend bool operator<(const EpsRat& a, const EpsRat& b) {
        if (a.std_ != b.std_) return a.std_ < b.std_;
        return a.inf_ < b.inf_;
    }
    friend bool operator>(const EpsRat& a, const EpsRat& b) { return b < a; }
    friend bool operator<=(const EpsRat& a, const EpsRat& b) { return !(b < a); }
    friend bool operator>=(const EpsRat& a, const EpsRat& b) { return !(a < b); }

    int sign() const {
        if (int s = std_.sign()) return s;
        return inf_.sign();
    }

private:
    Rat std_;
    Rat inf_;
};

std::ostream& operator<<(std::ostream& os, const EpsRat& r);

} // namespace ugit
