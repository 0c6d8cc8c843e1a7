// Exact arithmetic in the rational-function field Q(k): the coefficient
// domain for all field expressions and exponent vectors.  Canonical form is
// numerator/denominator with gcd 1 and monic denominator, so equality is
// syntactic and values hash consistently.
#pragma once

#include "wva/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wva {

// Dense univariate polynomial in k over Q; coefficient i is the k^i term.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).
class Poly {
  public:
    Poly() = default;
    Poly(Rational constant);
    Poly(std::vector<Rational> coeffs);
    static Poly k();  // the monomial k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly scaled(const Rational& s) const;
    Poly monic() const;
    Rational eval(const Rational& k0) const;

    std::string str() const;  // e.g. "2*k^2+3*k-1", "k+4", "-3", "0"

  private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

// Element of Q(k) in canonical form.
class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(long n) : num_(Rational(n)), den_(Rational(1)) {}
    Scalar(Rational r) : num_(r), den_(Rational(1)) {}
    // Canonicalizing constructor; throws on zero denominator.
    Scalar(Poly num, Poly den);
    static Scalar k() { return Scalar(Poly::k(), Poly(Rational(1))); }
    // Parses the textual grammar: integers, `k`, + - * / ( ) ^.
    static Scalar parse(const std::string& text);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    bool operator<(const Scalar& o) const;  // arbitrary total order (for map keys)

    Scalar inverse() const;

    // Exact evaluation at k = k0; throws std::domain_error("pole ...") when
    // the denominator vanishes there.
    Rational eval(const Rational& k0) const;
    // The integer value when this scalar is a constant integer.
    std::optional<long> integer_part() const;
    // The rational value when this scalar is constant.
    std::optional<Rational> rational_part() const;

    std::string str() const;
    std::size_t hash() const;

  private:
    Poly num_, den_;
};

// Convenience free functions (thin wrappers over the canonical ctor).
Scalar scalar_normalize(const Poly& num, const Poly& den);
Rational scalar_eval(const Scalar& s, const Rational& k0);
std::optional<long> integer_part(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wva
