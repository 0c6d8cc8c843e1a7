#include "wva/expr.hpp"

namespace wva {

Scalar ExponentVector::coeff(int dir) const {
    auto it = c_.find(dir);
    return it == c_.end() ? Scalar(0) : it->second;
}

void ExponentVector::set(int dir, const Scalar& s) {
    if (s.is_zero())
        c_.erase(dir);
    else
        c_[dir] = s;
}

void ExponentVector::add(int dir, const Scalar& s) { set(dir, coeff(dir) + s); }

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (const auto& [dir, s] : b.c_) r.add(dir, s);
    return r;
}

ExponentVector ExponentVector::scaled(const Scalar& s) const {
    ExponentVector r;
    if (s.is_zero()) return r;
    for (const auto& [dir, x] : c_) r.set(dir, x * s);
    return r;
}

bool ExponentVector::operator<(const ExponentVector& o) const {
    return std::lexicographical_compare(
        c_.begin(), c_.end(), o.c_.begin(), o.c_.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

FieldExpr FieldExpr::single(Monomial m, Scalar s) {
    FieldExpr f;
    if (!s.is_zero()) f.t_.emplace(std::move(m), std::move(s));
    return f;
}

FieldExpr FieldExpr::generator(int gen, int der) {
    Monomial m;
    m.factors.push_back({gen, der});
    return single(std::move(m), Scalar(1));
}

void FieldExpr::add_term(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& o) {
    for (const auto& [m, s] : o.t_) add_term(m, s);
    return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& o) {
    for (const auto& [m, s] : o.t_) add_term(m, -s);
    return *this;
}

FieldExpr FieldExpr::scaled(const Scalar& s) const {
    FieldExpr r;
    if (s.is_zero()) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, x * s);
    return r;
}

FieldExpr LambdaPoly::coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? FieldExpr() : it->second;
}

void LambdaPoly::add(int degree, const FieldExpr& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = c_.emplace(degree, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    for (const auto& [d, f] : o.c_) add(d, f);
    return *this;
}

LambdaPoly LambdaPoly::scaled(const Scalar& s) const {
    LambdaPoly r;
    if (s.is_zero()) return r;
    for (const auto& [d, f] : c_) r.c_.emplace(d, f.scaled(s));
    return r;
}

FieldExpr OPEResult::pole(int n) const {
    auto it = poles.find(n);
    return it == poles.end() ? FieldExpr() : it->second;
}

OPEResult to_ope(const LambdaPoly& p) {
    OPEResult r;
    for (const auto& [d, f] : p.coeffs()) r.poles.emplace(d + 1, f);
    return r;
}

}  // namespace wva
