// Brute-force mode-expansion oracle, independent of the OPE engine: expands
// exponential-free fields over a free presentation into modes acting on the
// vacuum module, re-derives OPE pole coefficients as states, and checks
// commutator tables.  Used only by tests, as the ground truth for the
// engine's Wick calculus.
#pragma once

#include "wva/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace wva {

// Basis monomial in negative modes: sorted list of (generator id, n) meaning
// g_{(-n)} with n >= 1; odd generators appear at most once per (g, n).
using OracleBasis = std::vector<std::pair<int, int>>;
// Linear combination of basis states.
using OracleState = std::map<OracleBasis, Scalar>;

class ModeOracle {
  public:
    // Throws std::domain_error when the presentation is not free.
    ModeOracle(const AlgebraPresentation& p, int truncation);

    const AlgebraPresentation& presentation() const { return p_; }
    int truncation() const { return n_; }

    OracleState vacuum() const { return {{OracleBasis{}, Scalar(1)}}; }
    // Applies the mode a_{(m)} of an exponential-free field to a state.
    OracleState apply(const FieldExpr& a, int m, const OracleState& v) const;
    // The state of a field: a_{(-1)} |0>.
    OracleState state_of(const FieldExpr& a) const { return apply(a, -1, vacuum()); }

    // Pole-(j+1) coefficients of the a,b OPE as states: a_{(j)} (state of b)
    // for 0 <= j <= truncation.
    std::map<int, OracleState> pole_states(const FieldExpr& a, const FieldExpr& b) const;

    // Full verification of an engine claim [a_lambda b]:
    //  (1) the claimed coefficient fields match the oracle pole states, and
    //      no nonzero pole exists beyond the claimed ones (up to truncation);
    //  (2) commutators [a_{(m)}, b_{(l)}] for |m|, |l| <= truncation equal
    //      sum_j C(m,j) (c_j)_{(m+l-j)} on a spanning set of low-grade states
    //      (skipped when commutator_table is false; part (1) alone already
    //      pins every pole coefficient, the table re-derives them mode by
    //      mode at a much higher cost on deeply nested products).
    // On failure returns false and, when diag is non-null, a description.
    bool verify_ope(const FieldExpr& a, const FieldExpr& b, const LambdaPoly& claimed,
                    std::string* diag = nullptr, bool commutator_table = true) const;

  private:
    OracleState apply_mono(const Monomial& m, int idx, const OracleState& v) const;
    OracleState apply_gen(int gen, int m, const OracleState& v) const;
    // Grading bound: m_(q) annihilates every state of grade G once
    // q > G + weight_of(m) - 1.
    int weight_of(const Monomial& m) const;
    // Scalar s_j with g_{(j)} h = s_j * identity (free bracket table).
    Scalar contraction(int g, int h, int j) const;
    bool field_odd(const FieldExpr& a) const;
    static void add_to(OracleState& acc, const OracleState& x, const Scalar& s);
    std::vector<OracleState> test_states() const;

    const AlgebraPresentation& p_;
    int n_;
    int dmax_ = 0;  // max lambda-degree over the presentation's brackets
};

}  // namespace wva
