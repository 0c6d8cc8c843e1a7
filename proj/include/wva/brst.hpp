// The homological-reduction complex for hook-type gradings of sl(n+1):
// affine currents at level k tensored with one fermionic ghost pair per
// positive-degree root vector, the odd differential field d(z), the
// energy-momentum field L(z), and the closed-form central charges.
#pragma once

#include "wva/engine.hpp"
#include "wva/rootdata.hpp"

#include <map>
#include <string>
#include <vector>

namespace wva {

// Generator names used by the complex presentation.
std::string current_name(const LieElem& e);  // "Je[i,j]", "Jf[i,j]", "Jh[i]"
std::string phi_name(const LieElem& e);      // "phi[i,j]" (charge +1 ghost)
std::string psi_name(const LieElem& e);      // "psi[i,j]" (charge -1 ghost)

struct ReductionDatum {
    int n = 0;
    int m = 0;
    Matrix x;                         // diagonal grading element, trace 0
    NilpotentRep f;                   // hook representative, degree -1
    std::vector<LieElem> basis;       // Cartan-Weyl basis of sl(n+1)
    std::map<LieElem, Rational> grade;  // eigenvalue m_a of ad x
    std::vector<LieElem> splus;       // basis of the positive-degree part
    std::vector<LieElem> sneutral;    // basis of the degree-1/2 part (empty
                                      // for the even gradings built here)
    AlgebraPresentation presentation;  // currents + fermionic ghost pairs
};

// Builds the reduction complex for the hook grading (1 <= m <= n+1).
// Throws std::logic_error if the grading is not even (never for hooks).
ReductionDatum make_reduction(int n, int m);

// d(z) = sum_{a} :J^a psi^a: - 1/2 sum_{a,b,c} C^{a,b}_c :phi^c psi^a psi^b:
//        + sum_{a} <f, J^a> psi^a   (+ the neutral term when g_{1/2} != 0).
FieldExpr brst_differential(const ReductionDatum& r);

// L = T^Sug + d(x-current) - sum_a m_a :psi^a d(phi^a):
//     + sum_a (1-m_a) :d(psi^a) phi^a:   (+ the neutral term).
FieldExpr brst_em_field(const ReductionDatum& r);

// Central charge of brst_em_field:
// k dim(g)/(k+n+1) - 12k<x,x> - sum_a (12 m_a^2 - 12 m_a + 2) - dim(g_{1/2})/2.
Scalar central_charge(const ReductionDatum& r);

// Closed form for the hook W-algebra central charge.
Scalar hook_central_charge(int n, int m);

// The same charge formula evaluated on the sl(2)-triple grading of the hook
// nilpotent (half-integer in general, with a nonempty degree-1/2 block).
// This is the normalization of hook_central_charge; the even grading used by
// make_reduction shifts the conformal vector by a multiple of the derivative
// of the weight-one Heisenberg field whenever the two gradings differ.
Scalar dynkin_central_charge(int n, int m);

// Pole-2 coefficient of the normalized Heisenberg field J for m >= 2:
// -(m-1)(1 + n - (k+n+1)(n-m+2)) / (n+1).  Throws for m < 2.
Scalar j_level(int n, int m);

}  // namespace wva
