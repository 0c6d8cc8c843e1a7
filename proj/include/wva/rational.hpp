// Exact rational arithmetic (arbitrary precision), the ground coefficient
// domain for everything in the engine.  Thin value wrapper around GMP's
// mpq_class so the rest of the code never touches GMP types directly.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace wva {

class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    // Parses "n" or "n/d" with arbitrary-precision integers.
    static Rational parse(const std::string& text);

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    // Integer value if this is an integer that fits a long.
    std::optional<long> as_long() const;
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // "n" or "n/d", canonical (gcd-reduced, positive denominator).
    std::string str() const;
    std::size_t hash() const;

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n-choose-k for small arguments, exact.
Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace wva
