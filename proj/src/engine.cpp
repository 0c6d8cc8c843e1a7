#include "wva/engine.hpp"

#include <functional>
#include <stdexcept>

namespace wva {

// ---------------------------------------------------------------------------
// Raw-tree helpers

RawPtr raw_gen(const std::string& name) {
    auto r = std::make_shared<RawExpr>();
    r->kind = RawExpr::Kind::Gen;
    r->name = name;
    return r;
}

RawPtr raw_der(int order, RawPtr x) {
    auto r = std::make_shared<RawExpr>();
    r->kind = RawExpr::Kind::Der;
    r->order = order;
    r->a = std::move(x);
    return r;
}

RawPtr raw_no(RawPtr a, RawPtr b) {
    auto r = std::make_shared<RawExpr>();
    r->kind = RawExpr::Kind::NO;
    r->a = std::move(a);
    r->b = std::move(b);
    return r;
}

RawPtr raw_vop(std::map<std::string, Scalar> exponent) {
    auto r = std::make_shared<RawExpr>();
    r->kind = RawExpr::Kind::Vop;
    r->exponent = std::move(exponent);
    return r;
}

RawPtr raw_lin(std::vector<std::pair<Scalar, RawPtr>> terms) {
    auto r = std::make_shared<RawExpr>();
    r->kind = RawExpr::Kind::Lin;
    r->terms = std::move(terms);
    return r;
}

RawPtr raw_scaled(const Scalar& s, RawPtr x) { return raw_lin({{s, std::move(x)}}); }

RawPtr raw_sum(RawPtr a, RawPtr b) {
    return raw_lin({{Scalar(1), std::move(a)}, {Scalar(1), std::move(b)}});
}

// ---------------------------------------------------------------------------
// Small helpers

namespace {

bool is_atomic(const Monomial& m) {
    return (m.factors.size() == 1 && m.exponent.is_zero()) ||
           (m.factors.empty() && !m.exponent.is_zero());
}

Monomial rest_of(const Monomial& m) {
    Monomial r;
    r.factors.assign(m.factors.begin() + 1, m.factors.end());
    r.exponent = m.exponent;
    return r;
}

Monomial factor_mono(const Factor& f) {
    Monomial m;
    m.factors.push_back(f);
    return m;
}

Monomial exp_mono(const ExponentVector& v) {
    Monomial m;
    m.exponent = v;
    return m;
}

// Enumerates partitions of j as multiplicity maps part -> count.
void partitions(int j, int max_part, std::map<int, int>& current,
                const std::function<void(const std::map<int, int>&)>& emit) {
    if (j == 0) {
        emit(current);
        return;
    }
    for (int n = std::min(j, max_part); n >= 1; --n) {
        ++current[n];
        partitions(j - n, n, current, emit);
        if (--current[n] == 0) current.erase(n);
    }
}

}  // namespace

void Engine::charge() const {
    if (++work_ > budget_)
        throw std::runtime_error("expansion budget exceeded (budget=" + std::to_string(budget_) +
                                 " term operations); raise the budget if the computation is "
                                 "expected to be this large");
}

// ---------------------------------------------------------------------------
// Derivatives

FieldExpr Engine::derivative(const FieldExpr& a) const {
    FieldExpr r;
    for (const auto& [m, s] : a.terms()) r += derivative_mono(m).scaled(s);
    return r;
}

FieldExpr Engine::derivative(const FieldExpr& a, int times) const {
    FieldExpr r = a;
    for (int i = 0; i < times; ++i) r = derivative(r);
    return r;
}

FieldExpr Engine::derivative_mono(const Monomial& m) const {
    FieldExpr r;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        std::vector<Factor> fs = m.factors;
        ++fs[i].der;
        r += assemble(fs, m.exponent);
    }
    if (!m.exponent.is_zero()) {
        // d(e^v) = :v' e^v: with v' the weight-1 current of v.
        FieldExpr cur = p_.current_of(m.exponent);
        for (const auto& [cm, cs] : cur.terms()) {
            std::vector<Factor> fs = m.factors;
            fs.push_back(cm.factors.at(0));
            r += assemble(fs, m.exponent).scaled(cs);
        }
    }
    return r;
}

FieldExpr Engine::assemble(const std::vector<Factor>& factors, const ExponentVector& exp) const {
    FieldExpr e = FieldExpr::single(exp_mono(exp), Scalar(1));
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) e = insert_factor_expr(*it, e);
    return e;
}

// ---------------------------------------------------------------------------
// Normally ordered products

FieldExpr Engine::nop(const FieldExpr& a, const FieldExpr& b) const {
    FieldExpr r;
    for (const auto& [ma, sa] : a.terms())
        for (const auto& [mb, sb] : b.terms()) r += nop_mono(ma, mb).scaled(sa * sb);
    return r;
}

FieldExpr Engine::insert_factor_expr(const Factor& u, const FieldExpr& x) const {
    FieldExpr r;
    for (const auto& [m, s] : x.terms()) r += insert_factor(u, m).scaled(s);
    return r;
}

FieldExpr Engine::insert_exp_expr(const ExponentVector& v, const FieldExpr& x) const {
    FieldExpr r;
    for (const auto& [m, s] : x.terms()) r += insert_exp(v, m).scaled(s);
    return r;
}

FieldExpr Engine::qcomm_correction(const LambdaPoly& ab) const {
    // sum_j (-1)^j d^{j+1}(a_(j) b) / (j+1)!
    FieldExpr r;
    for (const auto& [j, c] : ab.coeffs()) {
        Scalar coef = Scalar(j % 2 == 0 ? 1 : -1) / Scalar(factorial(j + 1));
        r += derivative(c, j + 1).scaled(coef);
    }
    return r;
}

FieldExpr Engine::insert_factor(const Factor& u, const Monomial& m) const {
    charge();
    if (m.factors.empty()) {
        Monomial r = m;
        r.factors.push_back(u);
        return FieldExpr::single(r, Scalar(1));
    }
    const Factor g = m.factors.front();
    const bool u_odd = p_.odd(u.gen), g_odd = p_.odd(g.gen);
    if (u < g || (u == g && !u_odd)) {
        Monomial r = m;
        r.factors.insert(r.factors.begin(), u);
        return FieldExpr::single(r, Scalar(1));
    }
    const Monomial r = rest_of(m);
    const FieldExpr rexp = FieldExpr::single(r, Scalar(1));
    const FieldExpr k = qcomm_correction(bracket_mono(factor_mono(u), factor_mono(g)));
    if (u == g) {
        // :pp R: with p odd: 2 :p (p R): = :K R:.
        return nop(k, rexp).scaled(Scalar(Rational(1, 2)));
    }
    // :u (g R): = (-1)^{|u||g|} :g (u R): + :K R:
    FieldExpr res = insert_factor_expr(g, insert_factor(u, r));
    if (u_odd && g_odd) res = -res;
    res += nop(k, rexp);
    return res;
}

FieldExpr Engine::insert_exp(const ExponentVector& v, const Monomial& m) const {
    charge();
    if (v.is_zero()) return FieldExpr::single(m, Scalar(1));
    if (m.factors.empty()) return merge_exponentials(v, m.exponent);
    const Factor g = m.factors.front();
    const Monomial r = rest_of(m);
    // :e^v (g R): = :g (e^v R): + :K R:  (exponentials are even)
    FieldExpr res = insert_factor_expr(g, insert_exp(v, r));
    const FieldExpr k = qcomm_correction(bracket_mono(exp_mono(v), factor_mono(g)));
    res += nop(k, FieldExpr::single(r, Scalar(1)));
    return res;
}

long Engine::integer_pairing(const ExponentVector& v, const ExponentVector& w) const {
    Scalar g = p_.gram(v, w);
    auto ip = g.integer_part();
    if (!ip)
        throw std::domain_error("generalized exponent unsupported: exponent pairing " + g.str() +
                                " is not a constant integer");
    return *ip;
}

FieldExpr Engine::merge_exponentials(const ExponentVector& v, const ExponentVector& w) const {
    const long p = integer_pairing(v, w);
    if (p > 0) return FieldExpr();
    return lattice_dressing(v, w, static_cast<int>(-p));
}

FieldExpr Engine::lattice_dressing(const ExponentVector& v, const ExponentVector& w, int j) const {
    // Y(e^v, x) e^w = x^{<v,w>} exp(sum_{n>=1} v_{(-n)} x^n / n) e^{v+w}:
    // the x^{<v,w>+j} coefficient is the partition sum below, with
    // v_{(-n)} acting as the normally ordered insertion of d^{n-1}v'/(n-1)!.
    FieldExpr result;
    const FieldExpr base = FieldExpr::single(exp_mono(v + w), Scalar(1));
    std::map<int, int> current;
    partitions(j, j, current, [&](const std::map<int, int>& parts) {
        Scalar coef(1);
        FieldExpr e = base;
        // Insert larger modes (deeper derivatives) innermost; the modes
        // commute, so the nesting order is a free choice.
        for (const auto& [n, mult] : parts) {
            for (int t = 0; t < mult; ++t) {
                e = nop(derivative(p_.current_of(v), n - 1), e)
                        .scaled(Scalar(1) / Scalar(factorial(n - 1)));
                coef *= Scalar(1) / Scalar(n);
            }
            coef *= Scalar(1) / Scalar(factorial(mult));
        }
        result += e.scaled(coef);
    });
    return result;
}

FieldExpr Engine::nop_mono(const Monomial& a, const Monomial& b) const {
    charge();
    if (a.is_identity()) return FieldExpr::single(b, Scalar(1));
    if (b.is_identity()) return FieldExpr::single(a, Scalar(1));
    auto key = std::make_pair(a, b);
    if (auto it = nop_cache_.find(key); it != nop_cache_.end()) return it->second;

    FieldExpr res;
    if (a.factors.empty()) {
        res = insert_exp(a.exponent, b);
    } else if (a.factors.size() == 1 && a.exponent.is_zero()) {
        res = insert_factor(a.factors.front(), b);
    } else {
        // Quasi-associativity: a = :u rest:, so
        // :(:u rest:) b: = :u (:rest b:): + sum_j 1/(j+1)! (
        //     :(d^{j+1}u)(rest_(j) b): + (-1)^{|u||rest|} :(d^{j+1}rest)(u_(j) b): )
        const Factor u = a.factors.front();
        const Monomial rest = rest_of(a);
        res = insert_factor_expr(u, nop_mono(rest, b));
        const LambdaPoly lrest = bracket_mono(rest, b);
        const LambdaPoly lu = bracket_mono(factor_mono(u), b);
        const bool sgn = p_.odd(u.gen) && p_.monomial_odd(rest);
        for (const auto& [j, c] : lrest.coeffs()) {
            Scalar coef = Scalar(1) / Scalar(factorial(j + 1));
            res += insert_factor_expr(Factor{u.gen, u.der + j + 1}, c).scaled(coef);
        }
        const FieldExpr rest_expr = FieldExpr::single(rest, Scalar(1));
        for (const auto& [j, c] : lu.coeffs()) {
            Scalar coef = Scalar(sgn ? -1 : 1) / Scalar(factorial(j + 1));
            res += nop(derivative(rest_expr, j + 1), c).scaled(coef);
        }
    }
    nop_cache_.emplace(std::move(key), res);
    return res;
}

// ---------------------------------------------------------------------------
// Lambda brackets

LambdaPoly Engine::mul_lambda(const LambdaPoly& x) const {
    LambdaPoly r;
    for (const auto& [i, c] : x.coeffs()) r.add(i + 1, c.scaled(Scalar(i + 1)));
    return r;
}

LambdaPoly Engine::derivative_coeffs(const LambdaPoly& x) const {
    LambdaPoly r;
    for (const auto& [i, c] : x.coeffs()) r.add(i, derivative(c));
    return r;
}

LambdaPoly Engine::lambda_plus_d(const LambdaPoly& x) const {
    LambdaPoly r = mul_lambda(x);
    r += derivative_coeffs(x);
    return r;
}

LambdaPoly Engine::skew(const LambdaPoly& x, bool a_odd, bool b_odd) const {
    // [b_lambda a] = -(-1)^{|a||b|} [a_{-lambda-d} b]
    const Scalar outer(a_odd && b_odd ? 1 : -1);
    LambdaPoly r;
    for (const auto& [j, c] : x.coeffs()) {
        for (int i = 0; i <= j; ++i) {
            const int m = j - i;
            Scalar coef = outer * Scalar(j % 2 == 0 ? 1 : -1) / Scalar(factorial(i));
            r.add(m, derivative(c, i).scaled(coef));
        }
    }
    return r;
}

LambdaPoly Engine::bracket(const FieldExpr& a, const FieldExpr& b) const {
    LambdaPoly r;
    for (const auto& [ma, sa] : a.terms())
        for (const auto& [mb, sb] : b.terms()) r += bracket_mono(ma, mb).scaled(sa * sb);
    return r;
}

LambdaPoly Engine::bracket_mono(const Monomial& a, const Monomial& b) const {
    charge();
    if (a.is_identity() || b.is_identity()) return LambdaPoly();
    auto key = std::make_pair(a, b);
    if (auto it = bracket_cache_.find(key); it != bracket_cache_.end()) return it->second;

    LambdaPoly res;
    if (!is_atomic(a)) {
        // Left Wick formula, peeling a = :u rest::
        // [:u rest:_l c] = :(e^{Td_l}u)[rest_l c]: + s :(e^{Td_l}rest)[u_l c]:
        //                 + s Int_0^l [rest_m [u_{l-m} c]] dm,  s = (-1)^{|u||rest|}.
        const Factor u = a.factors.front();
        const Monomial rest = rest_of(a);
        const bool sgn = p_.odd(u.gen) && p_.monomial_odd(rest);
        const Scalar s(sgn ? -1 : 1);
        const LambdaPoly x = bracket_mono(rest, b);
        const LambdaPoly y = bracket_mono(factor_mono(u), b);
        for (const auto& [i, ci] : x.coeffs())
            for (int j = 0; j <= i; ++j)
                res.add(i - j, insert_factor_expr(Factor{u.gen, u.der + j}, ci)
                                   .scaled(Scalar(1) / Scalar(factorial(j))));
        const FieldExpr rest_expr = FieldExpr::single(rest, Scalar(1));
        for (const auto& [i, ci] : y.coeffs())
            for (int j = 0; j <= i; ++j)
                res.add(i - j,
                        nop(derivative(rest_expr, j), ci).scaled(s / Scalar(factorial(j))));
        for (const auto& [i, ci] : y.coeffs()) {
            const LambdaPoly z = bracket(rest_expr, ci);
            for (const auto& [j, cij] : z.coeffs()) res.add(i + j + 1, cij.scaled(s));
        }
    } else if (b.factors.size() + (b.exponent.is_zero() ? 0 : 1) >= 2) {
        // Right (non-commutative) Wick formula, peeling b = :u rest::
        // [a_l :u rest:] = :[a_l u] rest: + s :u [a_l rest]:
        //                 + Int_0^l [[a_l u]_m rest] dm,  s = (-1)^{|a||u|}.
        const Factor u = b.factors.front();
        const Monomial rest = rest_of(b);
        const bool sgn = p_.monomial_odd(a) && p_.odd(u.gen);
        const Scalar s(sgn ? -1 : 1);
        const LambdaPoly x = bracket_mono(a, factor_mono(u));
        const LambdaPoly y = bracket_mono(a, rest);
        const FieldExpr rest_expr = FieldExpr::single(rest, Scalar(1));
        for (const auto& [i, ci] : x.coeffs()) res.add(i, nop(ci, rest_expr));
        for (const auto& [i, ci] : y.coeffs())
            res.add(i, insert_factor_expr(u, ci).scaled(s));
        for (const auto& [i, ci] : x.coeffs()) {
            const LambdaPoly z = bracket(ci, rest_expr);
            for (const auto& [j, cij] : z.coeffs())
                res.add(i + j + 1, cij.scaled(Scalar(binomial(i + j + 1, i))));
        }
    } else {
        res = bracket_atomic(a, b);
    }
    bracket_cache_.emplace(std::move(key), res);
    return res;
}

LambdaPoly Engine::bracket_atomic(const Monomial& a, const Monomial& b) const {
    // Both a and b are atomic: a single (derivative of a) generator, or a
    // pure exponential.
    if (!a.factors.empty()) {
        const Factor fa = a.factors.front();
        if (fa.der > 0) {
            // Sesquilinearity: [da_l b] = -l [a_l b].
            LambdaPoly base = bracket_atomic(factor_mono(Factor{fa.gen, 0}), b);
            LambdaPoly r = base;
            for (int t = 0; t < fa.der; ++t) r = mul_lambda(r).scaled(Scalar(-1));
            return r;
        }
        if (!b.factors.empty()) {
            const Factor fb = b.factors.front();
            if (fb.der > 0) {
                // [a_l db] = (l + d)[a_l b].
                LambdaPoly base = bracket_atomic(a, factor_mono(Factor{fb.gen, 0}));
                LambdaPoly r = base;
                for (int t = 0; t < fb.der; ++t) r = lambda_plus_d(r);
                return r;
            }
            bool flipped = false;
            const LambdaPoly* stored = p_.find_bracket(fa.gen, fb.gen, flipped);
            if (!stored) return LambdaPoly();
            if (!flipped) return *stored;
            return skew(*stored, p_.odd(fb.gen), p_.odd(fa.gen));
        }
        // [g_l e^w] = <g, w> e^w (pole 1 only).
        LambdaPoly r;
        r.add(0, FieldExpr::single(exp_mono(b.exponent), p_.pairing(fa.gen, b.exponent)));
        return r;
    }
    // a is a pure exponential e^v.
    if (!b.factors.empty()) {
        // Flip: [e^v_l g] via skew-symmetry from [g_l e^v].
        const LambdaPoly x = bracket_mono(b, a);
        return skew(x, p_.monomial_odd(b), false);
    }
    // [e^v_l e^w]: integer pairing required; singular iff <v,w> < 0.
    const long p = integer_pairing(a.exponent, b.exponent);
    LambdaPoly r;
    if (p >= 0) return r;
    for (long n = 1; n <= -p; ++n)
        r.add(static_cast<int>(n - 1),
              lattice_dressing(a.exponent, b.exponent, static_cast<int>(-p - n)));
    return r;
}

// ---------------------------------------------------------------------------
// Public-surface operations

FieldExpr Engine::canonicalize(const RawExpr& t) const {
    switch (t.kind) {
        case RawExpr::Kind::Gen:
            return FieldExpr::generator(p_.gen_id(t.name));
        case RawExpr::Kind::Der:
            return derivative(canonicalize(*t.a), t.order);
        case RawExpr::Kind::NO:
            return nop(canonicalize(*t.a), canonicalize(*t.b));
        case RawExpr::Kind::Vop: {
            ExponentVector v;
            for (const auto& [name, s] : t.exponent) v.set(p_.dir_id(name), s);
            return FieldExpr::single(exp_mono(v), Scalar(1));
        }
        case RawExpr::Kind::Lin: {
            FieldExpr r;
            for (const auto& [s, sub] : t.terms) r += canonicalize(*sub).scaled(s);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

OPEResult Engine::ope(const FieldExpr& a, const FieldExpr& b) const {
    return to_ope(bracket(a, b));
}

OPEResult Engine::vop_product(const FieldExpr& a, const FieldExpr& b) const {
    // Validate all exponent pairings up front.
    for (const auto& [ma, sa] : a.terms())
        for (const auto& [mb, sb] : b.terms()) integer_pairing(ma.exponent, mb.exponent);
    OPEResult r = to_ope(bracket(a, b));
    r.regular = nop(a, b);
    if (a.size() == 1 && b.size() == 1) {
        const Monomial& ma = a.terms().begin()->first;
        const Monomial& mb = b.terms().begin()->first;
        if (ma.factors.empty() && mb.factors.empty())
            r.shift = integer_pairing(ma.exponent, mb.exponent);
    }
    return r;
}

FieldExpr Engine::zero_mode_action(const ScreeningField& s, const FieldExpr& x) const {
    // s_(0) x = sum_{j>=0} (-1)^{j+1} d^j (x_(j) s) / j!
    const LambdaPoly l = bracket(x, s.body);
    FieldExpr r;
    for (const auto& [j, c] : l.coeffs()) {
        Scalar coef = Scalar(j % 2 == 0 ? -1 : 1) / Scalar(factorial(j));
        r += derivative(c, j).scaled(coef);
    }
    return r;
}

}  // namespace wva
