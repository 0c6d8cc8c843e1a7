// sl(n+1) root-system data: Cartan/inverse-Cartan pairings, positive roots
// alpha_{i,j}, fundamental weights, structure constants computed from
// elementary matrices, the trace form, hook-type nilpotent representatives,
// good gradings (verified by rank computations), and the internal/exposed
// root classification.
#pragma once

#include "wva/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wva {

// Dense matrix over Q.
using Matrix = std::vector<std::vector<Rational>>;

Matrix mat_zero(int rows, int cols);
Matrix elem_matrix(int size, int r, int c);  // 1-based indices
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scaled(const Matrix& a, const Rational& s);
bool mat_is_zero(const Matrix& a);
int mat_rank(Matrix a);

// Cartan-Weyl basis element of sl(n+1): E(i,j) spans root alpha_{i,j}
// (1 <= i <= j <= n), F(i,j) the opposite root, H(i) = h_i (1 <= i <= n).
struct LieElem {
    enum class Kind { E, F, H };
    Kind kind = Kind::H;
    int i = 1;
    int j = 1;  // ignored for H

    static LieElem E(int i, int j) { return {Kind::E, i, j}; }
    static LieElem F(int i, int j) { return {Kind::F, i, j}; }
    static LieElem H(int i) { return {Kind::H, i, i}; }

    friend bool operator==(const LieElem& a, const LieElem& b) {
        return a.kind == b.kind && a.i == b.i && (a.kind == Kind::H || a.j == b.j);
    }
    friend bool operator<(const LieElem& a, const LieElem& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        if (a.kind == Kind::H) return false;
        return a.j < b.j;
    }
    std::string str() const;
};

// The defining-representation matrix of a basis element (identification
// e_{i,j} = M_{i,j+1}: the root alpha_{i,j} raises column j+1 to row i).
Matrix lie_matrix(int n, const LieElem& e);

// Full Cartan-Weyl basis of sl(n+1) in a fixed order.
std::vector<LieElem> lie_basis(int n);

// Exact commutator [a, b] expanded in the Cartan-Weyl basis.
std::map<LieElem, Rational> structure_constants(int n, const LieElem& a, const LieElem& b);

// Expands a traceless matrix in the Cartan-Weyl basis (throws on trace != 0).
std::map<LieElem, Rational> decompose(int n, const Matrix& x);

// Normalized invariant form: the trace form of the defining representation.
Rational inner(int n, const LieElem& a, const LieElem& b);

// Weight/root vectors in the simple-root basis with Rational coefficients.
using WeightVec = std::vector<Rational>;

class RootDatum {
  public:
    explicit RootDatum(int n);

    int n() const { return n_; }
    long cartan(int i, int j) const;          // <alpha_i, alpha_j>
    Rational inv_cartan(int i, int j) const;  // <omega_i, omega_j>
    WeightVec simple_root(int i) const;
    WeightVec root(int i, int j) const;  // alpha_{i,j} = alpha_i + ... + alpha_j
    WeightVec theta() const { return root(1, n_); }
    WeightVec fundamental_weight(int i) const;  // omega_i in the root basis
    // Pairing of two vectors written in the simple-root basis.
    Rational pair(const WeightVec& v, const WeightVec& w) const;
    std::vector<std::pair<int, int>> positive_roots() const;

  private:
    int n_;
    std::vector<std::vector<Rational>> inv_;  // inverse Cartan matrix
};

// internal iff alpha_{i,j} omits both alpha_1 and alpha_n; alpha = theta
// is excluded (throws).
enum class RootClass { Internal, Exposed };
RootClass classify_root(int n, int i, int j);
// The Delta_0 analogue for the grading cut at m: roots of sl(m) spanned by
// alpha_1..alpha_{m-1}, with theta_0 = alpha_{1,m-1} excluded.
RootClass classify_root_delta0(int m, int i, int j);

// grade[i-1] in {0,1} is the degree of alpha_i: 0 for i <= m-1, 1 for i >= m.
struct GoodGrading {
    int n = 0;
    int m = 0;
    std::vector<int> grade;

    int root_degree(int i, int j) const;  // degree of alpha_{i,j}
    std::vector<std::pair<int, int>> delta0_plus() const;
};
GoodGrading good_grading(int n, int m);

struct NilpotentRep {
    int n = 0;
    int m = 0;
    bool bar = false;
    Matrix matrix;
};

// Hook-type representative (partition (n-m+2, 1^{m-1})).  standard:
// sum_{i=m}^{n} f_i; bar: f_{1,m} + sum_{i=m+1}^{n} f_i.  Verifies that the
// m-grading is good for the representative (ad f injective from degree >= 1,
// surjective onto degree <= -1 targets) and throws std::logic_error if not.
NilpotentRep hook_nilpotent(int n, int m, bool bar);

// Rank-based goodness test for an even grading, exposed for tests.
bool grading_is_good(const GoodGrading& g, const Matrix& f);

}  // namespace wva
