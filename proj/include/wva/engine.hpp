// The lambda-bracket / OPE engine: canonicalization of raw expression trees,
// normally ordered products with quasi-commutativity/quasi-associativity
// corrections, the non-commutative Wick calculus, lattice vertex-operator
// products, and zero-mode (screening) actions.  All operations are exact
// over Q(k) and produce canonical FieldExprs.
#pragma once

#include "wva/presentation.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wva {

// Raw (un-normalized) expression tree, as produced by the parser or by
// builders; canonicalize() turns it into a canonical FieldExpr.
struct RawExpr {
    enum class Kind { Gen, Der, NO, Vop, Lin };
    Kind kind = Kind::Lin;
    std::string name;                                 // Gen
    int order = 0;                                    // Der
    std::shared_ptr<RawExpr> a, b;                    // Der: a;  NO: a, b
    std::map<std::string, Scalar> exponent;           // Vop (by direction name)
    std::vector<std::pair<Scalar, std::shared_ptr<RawExpr>>> terms;  // Lin
};
using RawPtr = std::shared_ptr<RawExpr>;

RawPtr raw_gen(const std::string& name);
RawPtr raw_der(int order, RawPtr x);
RawPtr raw_no(RawPtr a, RawPtr b);
RawPtr raw_vop(std::map<std::string, Scalar> exponent);
RawPtr raw_lin(std::vector<std::pair<Scalar, RawPtr>> terms);
RawPtr raw_scaled(const Scalar& s, RawPtr x);
RawPtr raw_sum(RawPtr a, RawPtr b);

class Engine {
  public:
    explicit Engine(const AlgebraPresentation& p, std::size_t budget = 1000000)
        : p_(p), budget_(budget) {}

    const AlgebraPresentation& presentation() const { return p_; }

    // Canonicalizes a raw tree (unique normal form, value preserving).
    FieldExpr canonicalize(const RawExpr& t) const;
    FieldExpr canonicalize(const RawPtr& t) const { return canonicalize(*t); }

    // Field derivative (Leibniz; d(e^v) = :v' e^v:).
    FieldExpr derivative(const FieldExpr& a) const;
    FieldExpr derivative(const FieldExpr& a, int times) const;

    // Normally ordered product (the (-1)-product), canonical.
    FieldExpr nop(const FieldExpr& a, const FieldExpr& b) const;

    // [a_lambda b] extended to composites by sesquilinearity, the
    // non-commutative Wick formulas and skew-symmetry.
    LambdaPoly bracket(const FieldExpr& a, const FieldExpr& b) const;

    OPEResult ope(const FieldExpr& a, const FieldExpr& b) const;

    // Product of exponential-dressed fields with the (z-w)^{<v,w>} shift
    // absorbed: singular part in `poles`, the (-1)-product in `regular`,
    // and for single pure exponentials the absorbed shift.  Throws
    // std::domain_error("generalized exponent unsupported...") on
    // non-integer pairings.
    OPEResult vop_product(const FieldExpr& a, const FieldExpr& b) const;

    // s_(0) x = sum_{j>=0} (-1)^{j+1} d^j (x_(j) s) / j!; x is annihilated by
    // the screening operator iff the result is zero.
    FieldExpr zero_mode_action(const ScreeningField& s, const FieldExpr& x) const;

    // The skew-symmetry transform: given [a_lambda b] and the parities of a
    // and b, returns [b_lambda a] = -(-1)^{|a||b|} [a_{-lambda-d} b].
    LambdaPoly skew(const LambdaPoly& x, bool a_odd, bool b_odd) const;

    std::size_t work() const { return work_; }

  private:
    FieldExpr nop_mono(const Monomial& a, const Monomial& b) const;
    FieldExpr insert_factor(const Factor& u, const Monomial& m) const;
    FieldExpr insert_factor_expr(const Factor& u, const FieldExpr& x) const;
    FieldExpr insert_exp(const ExponentVector& v, const Monomial& m) const;
    FieldExpr insert_exp_expr(const ExponentVector& v, const FieldExpr& x) const;
    // Canonical form of the nested product :f_1 (f_2 (... (f_r e^v))): for an
    // arbitrary (possibly unsorted) factor sequence.
    FieldExpr assemble(const std::vector<Factor>& factors, const ExponentVector& exp) const;
    FieldExpr derivative_mono(const Monomial& m) const;
    // Quasi-commutativity correction sum_j (-1)^j d^{j+1}(a_(j) b) / (j+1)!.
    FieldExpr qcomm_correction(const LambdaPoly& ab) const;
    // Merge of two pure exponentials: the (-1)-product.
    FieldExpr merge_exponentials(const ExponentVector& v, const ExponentVector& w) const;
    // j-th dressing field S_j(v) e^{v+w} of the lattice product expansion.
    FieldExpr lattice_dressing(const ExponentVector& v, const ExponentVector& w, int j) const;

    LambdaPoly bracket_mono(const Monomial& a, const Monomial& b) const;
    LambdaPoly bracket_atomic(const Monomial& a, const Monomial& b) const;
    LambdaPoly mul_lambda(const LambdaPoly& x) const;
    LambdaPoly lambda_plus_d(const LambdaPoly& x) const;  // (lambda + d) X
    LambdaPoly derivative_coeffs(const LambdaPoly& x) const;

    long integer_pairing(const ExponentVector& v, const ExponentVector& w) const;
    void charge() const;

    const AlgebraPresentation& p_;
    std::size_t budget_;
    mutable std::size_t work_ = 0;
    mutable std::map<std::pair<Monomial, Monomial>, LambdaPoly> bracket_cache_;
    mutable std::map<std::pair<Monomial, Monomial>, FieldExpr> nop_cache_;
};

}  // namespace wva
