#include "wva/rootdata.hpp"

#include <algorithm>
#include <stdexcept>

namespace wva {

// ---------------------------------------------------------------------------
// Matrices

Matrix mat_zero(int rows, int cols) {
    return Matrix(static_cast<std::size_t>(rows),
                  std::vector<Rational>(static_cast<std::size_t>(cols)));
}

Matrix elem_matrix(int size, int r, int c) {
    Matrix m = mat_zero(size, size);
    m.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(c - 1)) = Rational(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
    Matrix r = mat_zero(static_cast<int>(n), static_cast<int>(q));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < p; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < q; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Matrix mat_scaled(const Matrix& a, const Rational& s) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

int mat_rank(Matrix a) {
    if (a.empty() || a[0].empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        const Rational inv = a[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Cartan-Weyl basis

std::string LieElem::str() const {
    switch (kind) {
        case Kind::E:
            return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
        case Kind::F:
            return "f[" + std::to_string(i) + "," + std::to_string(j) + "]";
        case Kind::H:
            return "h[" + std::to_string(i) + "]";
    }
    return "?";
}

Matrix lie_matrix(int n, const LieElem& e) {
    const int size = n + 1;
    switch (e.kind) {
        case LieElem::Kind::E:
            return elem_matrix(size, e.i, e.j + 1);
        case LieElem::Kind::F:
            return elem_matrix(size, e.j + 1, e.i);
        case LieElem::Kind::H:
            return mat_sub(elem_matrix(size, e.i, e.i), elem_matrix(size, e.i + 1, e.i + 1));
    }
    throw std::logic_error("unreachable");
}

std::vector<LieElem> lie_basis(int n) {
    std::vector<LieElem> r;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) r.push_back(LieElem::E(i, j));
    for (int i = 1; i <= n; ++i) r.push_back(LieElem::H(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) r.push_back(LieElem::F(i, j));
    return r;
}

std::map<LieElem, Rational> decompose(int n, const Matrix& x) {
    std::map<LieElem, Rational> r;
    Rational trace;
    for (int t = 1; t <= n + 1; ++t)
        trace += x[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(t - 1)];
    if (!trace.is_zero()) throw std::invalid_argument("decompose: matrix has nonzero trace");
    for (int a = 1; a <= n + 1; ++a) {
        for (int b = 1; b <= n + 1; ++b) {
            const Rational& v = x[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            if (v.is_zero() || a == b) continue;
            if (a < b)
                r[LieElem::E(a, b - 1)] = v;
            else
                r[LieElem::F(b, a - 1)] = v;
        }
    }
    // Diagonal: coefficients of h_i are the partial sums of the diagonal.
    Rational partial;
    for (int i = 1; i <= n; ++i) {
        partial += x[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
        if (!partial.is_zero()) r[LieElem::H(i)] = partial;
    }
    return r;
}

std::map<LieElem, Rational> structure_constants(int n, const LieElem& a, const LieElem& b) {
    const Matrix ma = lie_matrix(n, a), mb = lie_matrix(n, b);
    return decompose(n, mat_sub(mat_mul(ma, mb), mat_mul(mb, ma)));
}

Rational inner(int n, const LieElem& a, const LieElem& b) {
    const Matrix p = mat_mul(lie_matrix(n, a), lie_matrix(n, b));
    Rational t;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
    return t;
}

// ---------------------------------------------------------------------------
// Root datum

RootDatum::RootDatum(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("RootDatum: n must be >= 1");
    inv_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    // (C^{-1})_{ij} = min(i,j) (n+1-max(i,j)) / (n+1)
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Rational(std::min(i, j)) * Rational(n + 1 - std::max(i, j)) / Rational(n + 1);
}

long RootDatum::cartan(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("cartan: index range");
    return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
}

Rational RootDatum::inv_cartan(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("inv_cartan: index range");
    return inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

WeightVec RootDatum::simple_root(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("simple_root: index range");
    WeightVec v(static_cast<std::size_t>(n_));
    v[static_cast<std::size_t>(i - 1)] = Rational(1);
    return v;
}

WeightVec RootDatum::root(int i, int j) const {
    if (i < 1 || j < i || j > n_) throw std::invalid_argument("root: index range");
    WeightVec v(static_cast<std::size_t>(n_));
    for (int t = i; t <= j; ++t) v[static_cast<std::size_t>(t - 1)] = Rational(1);
    return v;
}

WeightVec RootDatum::fundamental_weight(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("fundamental_weight: index range");
    WeightVec v(static_cast<std::size_t>(n_));
    for (int j = 1; j <= n_; ++j) v[static_cast<std::size_t>(j - 1)] = inv_cartan(i, j);
    return v;
}

Rational RootDatum::pair(const WeightVec& v, const WeightVec& w) const {
    if (v.size() != static_cast<std::size_t>(n_) || w.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("pair: vector length");
    Rational r;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            r += v[static_cast<std::size_t>(i - 1)] * Rational(cartan(i, j)) *
                 w[static_cast<std::size_t>(j - 1)];
    return r;
}

std::vector<std::pair<int, int>> RootDatum::positive_roots() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j) r.emplace_back(i, j);
    return r;
}

RootClass classify_root(int n, int i, int j) {
    if (i < 1 || j < i || j > n) throw std::invalid_argument("classify_root: not a positive root");
    if (i == 1 && j == n)
        throw std::invalid_argument("classify_root: the highest root is excluded");
    return (i > 1 && j < n) ? RootClass::Internal : RootClass::Exposed;
}

RootClass classify_root_delta0(int m, int i, int j) { return classify_root(m - 1, i, j); }

// ---------------------------------------------------------------------------
// Gradings and hook nilpotents

int GoodGrading::root_degree(int i, int j) const {
    if (i < 1 || j < i || j > n) throw std::invalid_argument("root_degree: index range");
    int d = 0;
    for (int t = i; t <= j; ++t) d += grade[static_cast<std::size_t>(t - 1)];
    return d;
}

std::vector<std::pair<int, int>> GoodGrading::delta0_plus() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (root_degree(i, j) == 0) r.emplace_back(i, j);
    return r;
}

GoodGrading good_grading(int n, int m) {
    if (m < 1 || m > n + 1) throw std::invalid_argument("good_grading: require 1 <= m <= n+1");
    GoodGrading g;
    g.n = n;
    g.m = m;
    g.grade.assign(static_cast<std::size_t>(n), 0);
    for (int i = m; i <= n; ++i) g.grade[static_cast<std::size_t>(i - 1)] = 1;
    return g;
}

bool grading_is_good(const GoodGrading& g, const Matrix& f) {
    const int n = g.n;
    const std::vector<LieElem> basis = lie_basis(n);
    auto degree_of = [&](const LieElem& e) -> int {
        switch (e.kind) {
            case LieElem::Kind::E:
                return g.root_degree(e.i, e.j);
            case LieElem::Kind::F:
                return -g.root_degree(e.i, e.j);
            case LieElem::Kind::H:
                return 0;
        }
        return 0;
    };
    std::map<int, std::vector<LieElem>> graded;
    for (const LieElem& e : basis) graded[degree_of(e)].push_back(e);

    // f must be homogeneous of degree -1 (or zero).
    {
        auto parts = decompose(n, f);
        for (const auto& [e, c] : parts)
            if (degree_of(e) != -1) return false;
    }

    // ad f : g_d -> g_{d-1}; injective for d >= 1, surjective for d - 1 <= -1.
    const int min_deg = graded.begin()->first, max_deg = graded.rbegin()->first;
    for (int d = min_deg; d <= max_deg; ++d) {
        const auto src = graded.find(d);
        const std::vector<LieElem> empty;
        const std::vector<LieElem>& sb = src == graded.end() ? empty : src->second;
        const auto tgt = graded.find(d - 1);
        const std::vector<LieElem>& tb = tgt == graded.end() ? empty : tgt->second;
        Matrix a = mat_zero(static_cast<int>(tb.size()), static_cast<int>(sb.size()));
        std::map<LieElem, std::size_t> tindex;
        for (std::size_t t = 0; t < tb.size(); ++t) tindex[tb[t]] = t;
        for (std::size_t s = 0; s < sb.size(); ++s) {
            const Matrix x = lie_matrix(n, sb[s]);
            const auto img = decompose(n, mat_sub(mat_mul(f, x), mat_mul(x, f)));
            for (const auto& [e, c] : img) {
                auto it = tindex.find(e);
                if (it == tindex.end()) return false;  // not homogeneous
                a[it->second][s] = c;
            }
        }
        const int rank = mat_rank(a);
        if (d >= 1 && rank != static_cast<int>(sb.size())) return false;
        if (d - 1 <= -1 && rank != static_cast<int>(tb.size())) return false;
    }
    return true;
}

NilpotentRep hook_nilpotent(int n, int m, bool bar) {
    if (m < 1 || m > n + 1) throw std::invalid_argument("hook_nilpotent: require 1 <= m <= n+1");
    const int size = n + 1;
    Matrix f = mat_zero(size, size);
    if (bar && m <= n) {
        f = elem_matrix(size, m + 1, 1);  // f_{1,m}
        for (int i = m + 1; i <= n; ++i) f = mat_add(f, elem_matrix(size, i + 1, i));
    } else {
        for (int i = m; i <= n; ++i) f = mat_add(f, elem_matrix(size, i + 1, i));
    }
    if (!grading_is_good(good_grading(n, m), f))
        throw std::logic_error("hook_nilpotent: grading is not good for the representative");
    NilpotentRep r;
    r.n = n;
    r.m = m;
    r.bar = bar;
    r.matrix = std::move(f);
    return r;
}

}  // namespace wva
