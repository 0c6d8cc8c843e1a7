#include "wva/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wva/parser.hpp"

namespace wva {

namespace {

// Generalized binomial C(m, j) for possibly negative m, j >= 0.
Rational gen_binomial(long m, long j) {
    Rational r(1);
    for (long t = 0; t < j; ++t) r *= Rational(m - t);
    return r / factorial(j);
}

int span_of(const Monomial& m) {
    int s = 0;
    for (const Factor& f : m.factors) s += f.der + 1;
    return s;
}

int span_of(const FieldExpr& a) {
    int s = 0;
    for (const auto& [m, c] : a.terms()) s = std::max(s, span_of(m));
    return s;
}

int grade_of(const OracleBasis& b) {
    int g = 0;
    for (const auto& [gen, n] : b) g += n;
    return g;
}

int max_grade(const OracleState& v) {
    int g = 0;
    for (const auto& [b, s] : v) g = std::max(g, grade_of(b));
    return g;
}

}  // namespace

ModeOracle::ModeOracle(const AlgebraPresentation& p, int truncation) : p_(p), n_(truncation) {
    if (!p.is_free())
        throw std::domain_error("mode oracle requires a free presentation "
                                "(brackets valued in multiples of the identity)");
    if (truncation < 1) throw std::domain_error("mode oracle: truncation must be >= 1");
    for (int g = 0; g < p.num_generators(); ++g)
        for (int h = g; h < p.num_generators(); ++h) {
            bool flipped = false;
            if (const LambdaPoly* b = p.find_bracket(g, h, flipped))
                dmax_ = std::max(dmax_, b->max_degree());
        }
}

// Mode-grading weight: m_(q) maps a state of grade G into grades >= G - q - 1
// and annihilates it outright once q > G + weight - 1 (each contraction
// removes a mode (h, nh) with nh = q' - j + 1 and j bounded by the maximal
// bracket lambda-degree, each derivative shifts the mode index down).
int ModeOracle::weight_of(const Monomial& m) const {
    int w = 0;
    for (const Factor& f : m.factors) w += f.der + dmax_;
    return w;
}

void ModeOracle::add_to(OracleState& acc, const OracleState& x, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [b, c] : x) {
        Scalar v = c * s;
        if (v.is_zero()) continue;
        auto [it, inserted] = acc.emplace(b, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

Scalar ModeOracle::contraction(int g, int h, int j) const {
    bool flipped = false;
    const LambdaPoly* stored = p_.find_bracket(g, h, flipped);
    if (!stored) return Scalar(0);
    FieldExpr c = stored->coeff(j);
    if (c.is_zero()) return Scalar(0);
    if (c.size() != 1 || !c.terms().begin()->first.is_identity())
        throw std::domain_error("mode oracle: non-scalar bracket coefficient");
    Scalar s = c.terms().begin()->second;
    if (flipped) {
        // [g_l h] = -(-1)^{|g||h|} (-l-d)-transform of [h_l g]; on scalar
        // coefficients the derivative part vanishes.
        bool both_odd = p_.odd(g) && p_.odd(h);
        Scalar outer(both_odd ? 1 : -1);
        s = s * outer * Scalar(j % 2 == 0 ? 1 : -1);
    }
    return s;
}

OracleState ModeOracle::apply_gen(int gen, int m, const OracleState& v) const {
    OracleState acc;
    const bool g_odd = p_.odd(gen);
    for (const auto& [basis, coef] : v) {
        if (m < 0) {
            // Creation: insert (gen, -m) in sorted position with Koszul sign.
            const std::pair<int, int> mode{gen, -m};
            int sign = 1;
            std::size_t pos = 0;
            bool dead = false;
            for (; pos < basis.size() && basis[pos] < mode; ++pos)
                if (g_odd && p_.odd(basis[pos].first)) sign = -sign;
            if (g_odd && pos < basis.size() && basis[pos] == mode) dead = true;  // square zero
            if (dead) continue;
            OracleBasis nb = basis;
            nb.insert(nb.begin() + static_cast<long>(pos), mode);
            add_to(acc, {{nb, Scalar(1)}}, coef * Scalar(sign));
        } else {
            // Annihilation: contract against each mode, then kill the vacuum.
            int sign = 1;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto& [h, nh] = basis[i];
                const int j = m - nh + 1;
                if (j >= 0 && j <= m) {
                    Scalar s = contraction(gen, h, j);
                    if (!s.is_zero()) {
                        OracleBasis nb = basis;
                        nb.erase(nb.begin() + static_cast<long>(i));
                        Scalar factor = s * Scalar(binomial(m, j)) * Scalar(sign) * coef;
                        add_to(acc, {{nb, Scalar(1)}}, factor);
                    }
                }
                if (g_odd && p_.odd(h)) sign = -sign;
            }
        }
    }
    return acc;
}

OracleState ModeOracle::apply_mono(const Monomial& m, int idx, const OracleState& v) const {
    if (!m.exponent.is_zero())
        throw std::domain_error("mode oracle requires exponential-free fields");
    if (v.empty()) return {};
    if (m.factors.empty()) return idx == -1 ? v : OracleState{};
    if (idx > max_grade(v) + weight_of(m) - 1) return {};
    if (m.factors.size() == 1) {
        const Factor& f = m.factors.front();
        // (d^d g)_{(idx)} = prod_{t<d} (-(idx - t)) * g_{(idx-d)}
        Scalar pre(1);
        for (int t = 0; t < f.der; ++t) pre *= Scalar(-(idx - t));
        if (pre.is_zero()) return {};
        OracleState r = apply_gen(f.gen, idx - f.der, v);
        OracleState out;
        add_to(out, r, pre);
        return out;
    }
    // m = :u rest:, the (-1)-product mode expansion:
    // (u_(-1) r)_(idx) = sum_{j>=0} u_(-1-j) r_(idx+j) + s r_(idx-1-j) u_(j),
    // s = (-1)^{|u||rest|}.
    Monomial u;
    u.factors.push_back(m.factors.front());
    Monomial rest;
    rest.factors.assign(m.factors.begin() + 1, m.factors.end());
    const bool sgn = p_.odd(u.factors[0].gen) && p_.monomial_odd(rest);
    const Scalar s(sgn ? -1 : 1);

    // Exact grading cutoffs: rest_(idx+j) v vanishes past the first bound,
    // u_(j) v (an annihilator for j >= 0) past the second.
    const int g = max_grade(v);
    const int bound1 = g + weight_of(rest) - 1 - idx;
    const int bound2 = g + weight_of(u) - 1;

    OracleState acc;
    for (int j = 0; j <= std::max(bound1, bound2); ++j) {
        if (j <= bound1) {
            OracleState t1 = apply_mono(rest, idx + j, v);
            if (!t1.empty()) add_to(acc, apply_mono(u, -1 - j, t1), Scalar(1));
        }
        if (j <= bound2) {
            OracleState t2 = apply_mono(u, j, v);
            if (!t2.empty()) add_to(acc, apply_mono(rest, idx - 1 - j, t2), s);
        }
    }
    return acc;
}

OracleState ModeOracle::apply(const FieldExpr& a, int m, const OracleState& v) const {
    OracleState acc;
    for (const auto& [mono, s] : a.terms()) add_to(acc, apply_mono(mono, m, v), s);
    return acc;
}

std::map<int, OracleState> ModeOracle::pole_states(const FieldExpr& a,
                                                   const FieldExpr& b) const {
    std::map<int, OracleState> r;
    const OracleState bs = state_of(b);
    const int jmax = std::min(n_, span_of(a) + span_of(b) + 2);
    for (int j = 0; j <= jmax; ++j) {
        OracleState s = apply(a, j, bs);
        if (!s.empty()) r[j] = std::move(s);
    }
    return r;
}

bool ModeOracle::field_odd(const FieldExpr& a) const {
    bool any = false, odd = false;
    bool first = true;
    for (const auto& [m, s] : a.terms()) {
        bool o = p_.monomial_odd(m);
        if (first) {
            odd = o;
            first = false;
            any = true;
        } else if (o != odd) {
            throw std::domain_error("mode oracle: field of mixed parity");
        }
    }
    return any && odd;
}

std::vector<OracleState> ModeOracle::test_states() const {
    std::vector<OracleState> r;
    r.push_back(vacuum());
    for (int g = 0; g < p_.num_generators(); ++g)
        for (int n = 1; n <= 2; ++n) r.push_back({{OracleBasis{{g, n}}, Scalar(1)}});
    return r;
}

bool ModeOracle::verify_ope(const FieldExpr& a, const FieldExpr& b, const LambdaPoly& claimed,
                            std::string* diag, bool commutator_table) const {
    auto report = [&](const std::string& msg) {
        if (diag) *diag = msg;
        return false;
    };
    // (1) pole coefficients as states
    const auto poles = pole_states(a, b);
    const int jmax = std::min(n_, std::max(claimed.max_degree() + 2, span_of(a) + span_of(b)));
    if (claimed.max_degree() + 1 > n_)
        throw std::domain_error("mode oracle: truncation too small for claimed pole order");
    for (int j = 0; j <= jmax; ++j) {
        OracleState want;
        if (auto it = poles.find(j); it != poles.end()) want = it->second;
        OracleState got = state_of(claimed.coeff(j));
        if (want != got)
            return report("pole coefficient mismatch at lambda-degree " + std::to_string(j));
    }
    // (2) commutator table on low-grade test states; the single-mode images
    // a_(m) v and b_(l) v are shared across the (m, l) grid.
    if (!commutator_table) return true;
    const bool pa = field_odd(a), pb = field_odd(b);
    const Scalar flip(pa && pb ? -1 : 1);
    const auto states = test_states();
    for (const auto& v : states) {
        std::map<int, OracleState> av, bv;
        for (int m = -n_; m <= n_; ++m) {
            av[m] = apply(a, m, v);
            bv[m] = apply(b, m, v);
        }
        for (int m = -n_; m <= n_; ++m) {
            for (int l = -n_; l <= n_; ++l) {
                OracleState lhs = apply(a, m, bv[l]);
                add_to(lhs, apply(b, l, av[m]), -flip);
                OracleState rhs;
                for (const auto& [j, cj] : claimed.coeffs())
                    add_to(rhs, apply(cj, m + l - j, v), Scalar(gen_binomial(m, j)));
                if (lhs != rhs)
                    return report("commutator mismatch at (m, l) = (" + std::to_string(m) + ", " +
                                  std::to_string(l) + ")");
            }
        }
    }
    return true;
}

}  // namespace wva
