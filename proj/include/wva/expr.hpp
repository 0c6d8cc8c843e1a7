// Canonical field expressions: normally ordered monomials in derivatives of
// generators, optionally dressed by one innermost lattice vertex-operator
// exponent, with Scalar coefficients.  Generators and exponent directions are
// referenced by indices into an AlgebraPresentation (see presentation.hpp),
// which fixes the canonical ordering; two FieldExprs over the same
// presentation are equal as values iff they are structurally identical.
#pragma once

#include "wva/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wva {

// Exponent vector of a lattice vertex operator e^v: finitely supported map
// direction id -> Scalar.  Invariant: no zero entries.
class ExponentVector {
  public:
    ExponentVector() = default;

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Scalar>& coeffs() const { return c_; }
    Scalar coeff(int dir) const;
    void set(int dir, const Scalar& s);
    void add(int dir, const Scalar& s);

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    ExponentVector scaled(const Scalar& s) const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }
    bool operator<(const ExponentVector& o) const;

  private:
    std::map<int, Scalar> c_;
};

// One factor of a normally ordered monomial: the der-th derivative of a
// generator.
struct Factor {
    int gen = 0;
    int der = 0;
    friend bool operator==(const Factor& a, const Factor& b) {
        return a.gen == b.gen && a.der == b.der;
    }
    friend bool operator<(const Factor& a, const Factor& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.der < b.der;
    }
};

// Right-nested normally ordered monomial :f1 (f2 (... (fr e^v))):.
// Canonical form keeps the factors sorted; the exponential is always the
// innermost factor.  The empty monomial with zero exponent is the identity.
struct Monomial {
    std::vector<Factor> factors;
    ExponentVector exponent;

    bool is_identity() const { return factors.empty() && exponent.is_zero(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors == b.factors && a.exponent == b.exponent;
    }
    bool operator<(const Monomial& o) const {
        if (factors != o.factors)
            return std::lexicographical_compare(factors.begin(), factors.end(),
                                                o.factors.begin(), o.factors.end());
        return exponent < o.exponent;
    }
};

// Canonical linear combination of monomials.  Invariant: no zero
// coefficients.
class FieldExpr {
  public:
    FieldExpr() = default;
    static FieldExpr identity() { return single(Monomial{}, Scalar(1)); }
    static FieldExpr single(Monomial m, Scalar s);
    static FieldExpr generator(int gen, int der = 0);

    bool is_zero() const { return t_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }

    void add_term(const Monomial& m, const Scalar& s);
    FieldExpr& operator+=(const FieldExpr& o);
    FieldExpr& operator-=(const FieldExpr& o);
    friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
    friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
    FieldExpr scaled(const Scalar& s) const;
    FieldExpr operator-() const { return scaled(Scalar(-1)); }

    friend bool operator==(const FieldExpr& a, const FieldExpr& b) { return a.t_ == b.t_; }
    friend bool operator!=(const FieldExpr& a, const FieldExpr& b) { return !(a == b); }
    bool operator<(const FieldExpr& o) const { return t_ < o.t_; }

  private:
    std::map<Monomial, Scalar> t_;
};

// A lambda-bracket [a_lambda b] = sum_j lambda^j / j! * c_{j+1}; coefficient
// at degree j is the pole-(j+1) field of the OPE.  Invariant: no zero
// coefficient fields.
class LambdaPoly {
  public:
    LambdaPoly() = default;

    bool is_zero() const { return c_.empty(); }
    const std::map<int, FieldExpr>& coeffs() const { return c_; }
    FieldExpr coeff(int degree) const;
    int max_degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    void add(int degree, const FieldExpr& f);
    LambdaPoly& operator+=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    LambdaPoly scaled(const Scalar& s) const;

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

  private:
    std::map<int, FieldExpr> c_;
};

// OPE in pole form: poles[n] is the coefficient of (z-w)^{-n}.  For
// vertex-operator products, `regular` carries the leading regular part (the
// (-1)-product) and `shift` the overall integer (z-w)-power that was
// absorbed.
struct OPEResult {
    std::map<int, FieldExpr> poles;
    std::optional<FieldExpr> regular;
    std::optional<long> shift;

    bool is_zero() const { return poles.empty(); }
    FieldExpr pole(int n) const;
};

// A field with exactly one exponential, all monomials sharing the same
// nonzero exponent; used for zero-mode (screening) actions.
struct ScreeningField {
    FieldExpr body;
    ExponentVector exponent;  // the shared exponent (redundant, for checking)
};

OPEResult to_ope(const LambdaPoly& p);

}  // namespace wva
