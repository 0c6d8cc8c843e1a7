#include "wva/invred.hpp"

#include "wva/brst.hpp"
#include "wva/oracle.hpp"
#include "wva/parser.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wva {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void push_check(VerificationReport& r, std::string id, bool pass, std::string witness,
                Clock::time_point t0) {
    r.checks.push_back({std::move(id), pass, pass ? std::string() : std::move(witness),
                        ms_since(t0)});
}

// Simple-root coefficient vector of alpha_{i,j} in the rank-`rank` subsystem.
std::vector<int> rvec(int rank, int i, int j) {
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    for (int t = i; t <= j; ++t) v[static_cast<std::size_t>(t - 1)] = 1;
    return v;
}

std::vector<int> vadd(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<int> vsub(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

// Degree-0 positive roots with theta_0 = alpha_{1,m-1} removed.
std::vector<std::pair<int, int>> delta0_minus_theta(int m) {
    std::vector<std::pair<int, int>> delta;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j)
            if (!(i == 1 && j == m - 1)) delta.emplace_back(i, j);
    return delta;
}

std::string lie_label(const LieElem& e) {
    switch (e.kind) {
        case LieElem::Kind::H: return "h" + std::to_string(e.i);
        case LieElem::Kind::E:
            if (e.i == e.j) return "e" + std::to_string(e.i);
            return "E[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
        default:
            if (e.i == e.j) return "f" + std::to_string(e.i);
            return "F[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
    }
}

}  // namespace

VerificationReport kernel_check(const Engine& eng,
                                const std::vector<ScreeningField>& screenings,
                                const EmbeddingTable& table) {
    VerificationReport r;
    r.campaign = "kernel-check";
    for (std::size_t s = 0; s < screenings.size(); ++s)
        for (const auto& [name, v] : table) {
            const Clock::time_point t0 = Clock::now();
            const FieldExpr act = eng.zero_mode_action(screenings[s], v);
            push_check(r, "kernel/" + name + "/S" + std::to_string(s + 1), act.is_zero(),
                       print_field(eng.presentation(), act), t0);
        }
    return r;
}

PipelineResult pipeline_bosonize_retilde(const Engine& src, const Engine& dst, int n, int m,
                                         const EmbeddingTable& table) {
    if (table.empty())
        throw std::invalid_argument("pipeline_bosonize_retilde: missing source table");
    PipelineResult out;
    out.report.campaign = "pipeline-bosonize-retilde";
    const TildeFamily tf = tilde_family(dst, n, m);
    for (const auto& [name, x] : table) {
        const Clock::time_point t0 = Clock::now();
        const FieldExpr bos = fms_bosonize(src, dst, {1, m - 1}, x);
        const FieldExpr ret = substitute(dst, tf.inverse, bos);
        const FieldExpr back = substitute(dst, tf.definitions, ret);
        out.retilded[name] = ret;
        push_check(out.report, "roundtrip/" + name, back == bos,
                   print_field(dst.presentation(), back - bos), t0);
    }
    if (n == 3 && m == 4 && table.count("e1") != 0) {
        Clock::time_point t0 = Clock::now();
        const FieldExpr e1_expect = parse_canonical(dst, "no(G[2,3], vop{c: 1})");
        push_check(out.report, "appendix/e1-tilded", out.retilded.at("e1") == e1_expect,
                   print_field(dst.presentation(), out.retilded.at("e1") - e1_expect), t0);
        t0 = Clock::now();
        const FieldExpr first = parse_canonical(
            dst, "G[1,2] + no(B[3,3], vop{c: -1}) + no(G[2,2], no(B[2,3], vop{c: -1}))");
        push_check(out.report, "first-tilded-gamma", tf.definitions.at("G[1,2]") == first,
                   print_field(dst.presentation(), tf.definitions.at("G[1,2]") - first), t0);
    }
    return out;
}

VerificationReport pipeline_bosonize_retilde(int n, int m) {
    if (n != 3 || m != 4)
        throw std::invalid_argument(
            "pipeline_bosonize_retilde: no built-in source table for this (n, m)");
    const FreeFieldStack src_stack = wakimoto_stack(3);
    const FreeFieldStack dst_stack = retilde_stack(3, 4);
    const Engine src(src_stack.presentation, 1ull << 40);
    const Engine dst(dst_stack.presentation, 1ull << 40);
    const EmbeddingTable table = wakimoto_sl4_table(src);
    return pipeline_bosonize_retilde(src, dst, 3, 4, table).report;
}

VerificationReport verify_appendix_embedding() {
    VerificationReport r;
    r.campaign = "appendix-sl4";

    AlgebraPresentation p;
    add_minimal_sl4(p);
    add_ghost(p, 2, 3);
    add_ghost(p, 3, 3);
    add_pi(p);
    p.finalize();
    wire_minimal_sl4(p);
    wire_ghost(p, 2, 3);
    wire_ghost(p, 3, 3);
    wire_pi(p);
    const Engine eng(p, 1ull << 40);
    const Scalar k = Scalar::k();
    auto pc = [&](const std::string& text) { return parse_canonical(eng, text); };

    std::map<LieElem, FieldExpr> img;
    img[LieElem::E(1, 1)] = pc("no(G[2,3], vop{c: 1})");
    img[LieElem::E(2, 2)] = pc("E + no(B[2,3], G[3,3])");
    img[LieElem::E(3, 3)] = pc("B[3,3]");
    img[LieElem::H(1)] = pc("3/2*J - 1/2*H + 1/2*d - no(B[2,3], G[2,3])") -
                         pc("c").scaled(Scalar::parse("(3*k+16)/8"));
    img[LieElem::H(2)] = pc("H + no(B[2,3], G[2,3]) - no(B[3,3], G[3,3])");
    img[LieElem::H(3)] =
        pc("-1/2*J - 1/2*H + 1/2*d + no(B[2,3], G[2,3]) + 2*no(B[3,3], G[3,3])") +
        pc("c").scaled(Scalar::parse("(5*k+16)/8"));
    img[LieElem::F(1, 1)] =
        pc("P1m - no(E, no(B[3,3], vop{c: -1}))"
           " + 3/2*no(J, no(B[2,3], vop{c: -1})) - 1/2*no(H, no(B[2,3], vop{c: -1}))"
           " + 1/2*no(B[2,3], no(d, vop{c: -1}))") -
        pc("no(B[2,3], no(c, vop{c: -1}))").scaled(Scalar::parse("(11*k+16)/8")) +
        pc("no(der(1, B[2,3]), vop{c: -1})").scaled(k + Scalar(1));
    img[LieElem::F(2, 2)] = pc("F + no(B[3,3], G[2,3])");
    img[LieElem::F(3, 3)] =
        pc("-no(P1p, vop{c: -1}) - no(E, G[2,3])"
           " + 1/2*no(J, G[3,3]) + 1/2*no(H, G[3,3])"
           " - no(B[3,3], no(G[3,3], G[3,3])) - 1/2*no(G[3,3], d)"
           " - no(B[2,3], no(G[3,3], G[2,3]))") -
        pc("no(G[3,3], c)").scaled(Scalar::parse("(5*k+16)/8")) -
        // The derivative term carries -k: the pairwise bracket checks below
        // (e.g. the level term of the e3/f3 pair) pin this sign.
        pc("der(1, G[3,3])").scaled(k);

    // Images of the non-simple root vectors from brackets of the displayed
    // ones, normalized by the matching structure constant.
    for (int len = 2; len <= 3; ++len)
        for (int i = 1; i + len - 1 <= 3; ++i) {
            const int j = i + len - 1;
            {
                const LieElem a = LieElem::E(i, i), b = LieElem::E(i + 1, j);
                const Rational c = structure_constants(3, a, b).at(LieElem::E(i, j));
                const LambdaPoly lp = eng.bracket(img.at(a), img.at(b));
                img[LieElem::E(i, j)] = lp.coeff(0).scaled(Scalar(1) / Scalar(c));
            }
            {
                const LieElem a = LieElem::F(i, i), b = LieElem::F(i + 1, j);
                const Rational c = structure_constants(3, a, b).at(LieElem::F(i, j));
                const LambdaPoly lp = eng.bracket(img.at(a), img.at(b));
                img[LieElem::F(i, j)] = lp.coeff(0).scaled(Scalar(1) / Scalar(c));
            }
        }

    const std::vector<LieElem> basis = lie_basis(3);
    for (std::size_t ia = 0; ia < basis.size(); ++ia)
        for (std::size_t ib = ia; ib < basis.size(); ++ib) {
            const LieElem& a = basis[ia];
            const LieElem& b = basis[ib];
            const Clock::time_point t0 = Clock::now();
            const LambdaPoly got = eng.bracket(img.at(a), img.at(b));
            LambdaPoly want;
            const Scalar lvl = k * Scalar(inner(3, a, b));
            if (!lvl.is_zero()) want.add(1, FieldExpr::single(Monomial{}, lvl));
            FieldExpr comm;
            const std::map<LieElem, Rational> sc = structure_constants(3, a, b);
            for (const auto& [c, v] : sc) comm += img.at(c).scaled(Scalar(v));
            if (!comm.is_zero()) want.add(0, comm);
            const LambdaPoly diff = got + want.scaled(Scalar(-1));
            push_check(r, "pair/" + lie_label(a) + "/" + lie_label(b), diff.is_zero(),
                       print_lambda(p, diff), t0);
        }
    return r;
}

CompositeScreeningDatum screening_exponent(const Engine& eng, int n, int m) {
    if (m < 2 || m > n + 1)
        throw std::invalid_argument("screening_exponent: m out of range");
    const AlgebraPresentation& p = eng.presentation();
    const Scalar half(Rational(1, 2));
    const Scalar shift = Scalar::k() + Scalar(n + 1);
    RootDatum rd(n);
    const Scalar w2(rd.inv_cartan(m - 1, m - 1));

    CompositeScreeningDatum out;
    out.linear = FieldExpr::generator(p.gen_id("c")).scaled(half * (Scalar(1) - shift * w2)) +
                 FieldExpr::generator(p.gen_id("d")).scaled(half) -
                 omega_field(eng, n, m - 1);

    const std::vector<std::pair<int, int>> delta = delta0_minus_theta(m);
    const std::vector<int> theta0 = rvec(m - 1, 1, m - 1);
    auto vec = [&](const std::pair<int, int>& r) { return rvec(m - 1, r.first, r.second); };
    auto beta = [&](const std::pair<int, int>& r) {
        return FieldExpr::generator(p.gen_id(beta_name(r.first, r.second)));
    };
    auto gamma = [&](const std::pair<int, int>& r) {
        return FieldExpr::generator(p.gen_id(gamma_name(r.first, r.second)));
    };
    const FieldExpr emc = parse_canonical(eng, "vop{c: -1}");
    for (const auto& r1 : delta)
        for (const auto& r2 : delta)
            if (vadd(vec(r1), vec(r2)) == theta0)
                out.ghost += eng.nop(beta(r1), eng.nop(beta(r2), emc)).scaled(half);
    for (const auto& r1 : delta)
        for (const auto& r2 : delta)
            for (const auto& r3 : delta)
                if (vsub(vadd(vec(r2), vec(r3)), vec(r1)) == theta0)
                    out.ghost +=
                        eng.nop(gamma(r1), eng.nop(beta(r2), eng.nop(beta(r3), emc)))
                            .scaled(half);

    for (const auto& [mono, s] : out.linear.terms()) {
        if (mono.factors.size() != 1) continue;
        const std::string& name = p.generator(mono.factors[0].gen).name;
        if (!p.has_direction(name)) continue;
        out.mc_pairing += s * p.gram(p.dir_id(name), p.dir_id("c")) * Scalar(m);
    }
    return out;
}

VerificationReport specialization_check(const Engine& eng, int n, const EmbeddingTable& table) {
    VerificationReport r;
    r.campaign = "specialization";
    const Poly crit(std::vector<Rational>{Rational(n + 1), Rational(1)});  // k + n + 1
    for (const auto& [name, x] : table) {
        const Clock::time_point t0 = Clock::now();
        bool pole_ok = true;
        std::string bad;
        bool has_kfree = false;
        for (const auto& [mono, s] : x.terms()) {
            Poly den = s.den();
            while (den.degree() > 0) {
                const auto [q, rem] = den.divmod(crit);
                if (!rem.is_zero()) {
                    pole_ok = false;
                    bad = s.str();
                    break;
                }
                den = q;
            }
            if (s.den().degree() == 0 && s.num().degree() == 0) has_kfree = true;
        }
        push_check(r, name + "/no-pole", pole_ok, bad, t0);
        push_check(r, name + "/k-free-leading", has_kfree,
                   print_field(eng.presentation(), x), t0);
    }
    return r;
}

ChainSignature chain_signature(int n, int m_target) {
    if (m_target < 1 || m_target > n + 1)
        throw std::invalid_argument("chain_signature: m_target out of range");
    return {n + 1 - m_target, (n + m_target - 2) * (n + 1 - m_target) / 2};
}

VerificationReport chain_report(int n, int m_target) {
    const ChainSignature sig = chain_signature(n, m_target);
    VerificationReport r;
    r.campaign = "chain";
    int pi_total = 0;
    int ghost_total = 0;
    for (int m = n + 1; m >= m_target + 1; --m) {
        const Clock::time_point t0 = Clock::now();
        const FreeFieldStack smaller = hook_stack(n, m - 1);
        const FreeFieldStack rt = retilde_stack(n, m);
        const int added = static_cast<int>(rt.ghosts.size() - smaller.ghosts.size());
        push_check(r, "step/" + std::to_string(m), added == m - 2 && rt.pi,
                   "added " + std::to_string(added) + " ghost pairs", t0);
        pi_total += 1;
        ghost_total += added;
    }
    const Clock::time_point t0 = Clock::now();
    push_check(r, "total/pi", pi_total == sig.pi, std::to_string(pi_total), t0);
    push_check(r, "total/ghosts", ghost_total == sig.ghosts, std::to_string(ghost_total), t0);
    return r;
}

VerificationReport screening_tilde_invariance(const Engine& eng, int n, int m) {
    VerificationReport r;
    r.campaign = "s-equals-stilde";
    const TildeFamily tf = tilde_family(eng, n, m);
    for (int i = 1; i <= m - 2; ++i) {
        const Clock::time_point t0 = Clock::now();
        const ScreeningField s = wakimoto_screening(eng, n, i);
        const FieldExpr tilded = substitute(eng, tf.definitions, s.body);
        push_check(r, "stilde/S" + std::to_string(i), tilded == s.body,
                   print_field(eng.presentation(), tilded - s.body), t0);
    }
    return r;
}

namespace {

FieldExpr scalar_field(const Scalar& s) { return FieldExpr::single(Monomial{}, s); }

// Re-ids a sub-report for merging into a multi-shape campaign.
VerificationReport with_prefix(VerificationReport r, const std::string& prefix) {
    for (CheckResult& c : r.checks) c.id = prefix + c.id;
    return r;
}

std::string shape_prefix(int n, int m) {
    return "n" + std::to_string(n) + "m" + std::to_string(m) + "/";
}

bool field_odd(const AlgebraPresentation& p, const FieldExpr& f) {
    return !f.is_zero() && p.monomial_odd(f.terms().begin()->first);
}

bool mixed_parity(const AlgebraPresentation& p, const FieldExpr& f) {
    bool first = true, odd = false;
    for (const auto& [m, s] : f.terms()) {
        if (first) {
            odd = p.monomial_odd(m);
            first = false;
        } else if (p.monomial_odd(m) != odd) {
            return true;
        }
    }
    return false;
}

// Largest factor span (derivatives included) over the terms of f.
int field_span(const FieldExpr& f) {
    int s = 0;
    for (const auto& [mono, c] : f.terms()) {
        int t = 0;
        for (const Factor& fac : mono.factors) t += fac.der + 1;
        s = std::max(s, t);
    }
    return s;
}

bool weight_at_most(const AlgebraPresentation& p, const FieldExpr& f, int cap) {
    for (const auto& [mono, s] : f.terms()) {
        const Scalar w = p.monomial_weight(mono);
        bool small = false;
        for (int j = 0; j <= cap; ++j)
            if (w == Scalar(j)) small = true;
        if (!small) return false;
    }
    return true;
}

// Bivariate lambda/mu polynomial with 1/(i! j!) normalization, for the
// Jacobi identity check.
using BiPoly = std::map<std::pair<int, int>, FieldExpr>;

void bi_add(BiPoly& acc, int i, int j, const FieldExpr& f, const Scalar& s) {
    if (f.is_zero() || s.is_zero()) return;
    auto [it, inserted] = acc.emplace(std::make_pair(i, j), f.scaled(s));
    if (!inserted) {
        it->second += f.scaled(s);
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Checks [a_l [b_m c]] - (-1)^{|a||b|} [b_m [a_l c]] = [[a_l b]_{l+m} c].
bool jacobi_holds(const Engine& eng, const FieldExpr& a, const FieldExpr& b,
                  const FieldExpr& c) {
    const AlgebraPresentation& p = eng.presentation();
    const Scalar koszul(field_odd(p, a) && field_odd(p, b) ? -1 : 1);
    BiPoly lhs;
    const LambdaPoly bc = eng.bracket(b, c);
    for (const auto& [j, cj] : bc.coeffs()) {
        const LambdaPoly abc = eng.bracket(a, cj);
        for (const auto& [i, dij] : abc.coeffs()) bi_add(lhs, i, j, dij, Scalar(1));
    }
    const LambdaPoly ac = eng.bracket(a, c);
    for (const auto& [i, ei] : ac.coeffs()) {
        const LambdaPoly bac = eng.bracket(b, ei);
        for (const auto& [j, fij] : bac.coeffs()) bi_add(lhs, i, j, fij, -koszul);
    }
    BiPoly rhs;
    const LambdaPoly ab = eng.bracket(a, b);
    for (const auto& [m, xm] : ab.coeffs()) {
        const LambdaPoly abz = eng.bracket(xm, c);
        for (const auto& [q, ymq] : abz.coeffs()) {
            // (l+m)^q expands over l^{q-t} m^t; total term l^{m+q-t} m^t
            // carries i!j!/(m! q!) C(q, t) in the 1/(i!j!) normalization.
            for (int t = 0; t <= q; ++t) {
                const int i = m + q - t, j = t;
                Scalar coef = Scalar(factorial(i)) * Scalar(factorial(j)) /
                              (Scalar(factorial(m)) * Scalar(factorial(q))) *
                              Scalar(binomial(q, t));
                bi_add(rhs, i, j, ymq, coef);
            }
        }
    }
    return lhs == rhs;
}

}  // namespace

VerificationReport brst_complex_check(int n, int m) {
    VerificationReport r;
    r.campaign = "brst";
    const ReductionDatum red = make_reduction(n, m);
    const Engine eng(red.presentation, 1ull << 40);
    const AlgebraPresentation& p = red.presentation;
    const FieldExpr d = brst_differential(red);
    const FieldExpr l = brst_em_field(red);

    Clock::time_point t0 = Clock::now();
    const LambdaPoly dd = eng.bracket(d, d);
    push_check(r, "dd-zero", dd.is_zero(), print_lambda(p, dd), t0);

    t0 = Clock::now();
    const LambdaPoly ll = eng.bracket(l, l);
    push_check(r, "em/pole4", ll.coeff(3) == scalar_field(central_charge(red) / Scalar(2)),
               print_field(p, ll.coeff(3)), t0);
    push_check(r, "em/pole3", ll.coeff(2).is_zero(), print_field(p, ll.coeff(2)), t0);
    push_check(r, "em/pole2", ll.coeff(1) == l.scaled(Scalar(2)),
               print_field(p, ll.coeff(1)), t0);
    push_check(r, "em/pole1", ll.coeff(0) == eng.derivative(l),
               print_field(p, ll.coeff(0)), t0);
    push_check(r, "em/no-higher-pole", ll.coeff(4).is_zero() && ll.max_degree() <= 3,
               print_lambda(p, ll), t0);

    t0 = Clock::now();
    const LambdaPoly ld = eng.bracket(l, d);
    push_check(r, "primary/pole3", ld.coeff(2).is_zero(), print_field(p, ld.coeff(2)), t0);
    push_check(r, "primary/pole2", ld.coeff(1) == d, print_field(p, ld.coeff(1)), t0);
    push_check(r, "primary/pole1", ld.coeff(0) == eng.derivative(d),
               print_field(p, ld.coeff(0)), t0);
    return r;
}

VerificationReport brst_campaign() {
    VerificationReport r;
    r.campaign = "brst";
    for (const auto& [n, m] :
         std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 1}, {3, 3}})
        r.append(with_prefix(brst_complex_check(n, m), shape_prefix(n, m)));
    return r;
}

VerificationReport central_charge_check() {
    VerificationReport r;
    r.campaign = "central-charges";
    const Scalar k = Scalar::k();

    Clock::time_point t0 = Clock::now();
    push_check(r, "closed-form/minimal-sl4",
               hook_central_charge(3, 3) ==
                   Scalar(-3) * k * (Scalar(2) * k + Scalar(3)) / (k + Scalar(4)),
               hook_central_charge(3, 3).str(), t0);
    for (int n = 1; n <= 6; ++n) {
        t0 = Clock::now();
        push_check(r, "closed-form/trivial/n" + std::to_string(n),
                   hook_central_charge(n, n + 1) ==
                       k * Scalar(n) * Scalar(n + 2) / (k + Scalar(n + 1)),
                   hook_central_charge(n, n + 1).str(), t0);
    }
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n + 1; ++m) {
            t0 = Clock::now();
            push_check(r, "grading-agreement/" + shape_prefix(n, m) + "charge",
                       dynkin_central_charge(n, m) == hook_central_charge(n, m),
                       dynkin_central_charge(n, m).str(), t0);
        }
    for (const auto& [n, m] :
         std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 4}}) {
        t0 = Clock::now();
        const ReductionDatum red = make_reduction(n, m);
        push_check(r, "complex/" + shape_prefix(n, m) + "charge",
                   central_charge(red) == hook_central_charge(n, m),
                   central_charge(red).str(), t0);
    }
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
        t0 = Clock::now();
        // The even grading redefines the conformal vector by half the
        // derivative of the weight-one current, shifting c by -3 times the
        // current's level.
        const ReductionDatum red = make_reduction(n, m);
        push_check(r, "complex-shift/" + shape_prefix(n, m) + "charge",
                   central_charge(red) ==
                       hook_central_charge(n, m) - Scalar(3) * j_level(n, m),
                   central_charge(red).str(), t0);
    }

    t0 = Clock::now();
    push_check(r, "j-level/closed-form", j_level(3, 3) == k + Scalar(2),
               j_level(3, 3).str(), t0);
    t0 = Clock::now();
    const AlgebraPresentation msl4 = minimal_sl4_presentation();
    const Engine eng(msl4, 1ull << 40);
    const FieldExpr J = FieldExpr::generator(msl4.gen_id("J"));
    const LambdaPoly jj = eng.bracket(J, J);
    push_check(r, "j-level/bracket-table",
               jj.coeff(1) == scalar_field(k + Scalar(2)) && jj.coeff(0).is_zero(),
               print_lambda(msl4, jj), t0);
    return r;
}

VerificationReport tilde_family_check(const Engine& eng, int n, int m) {
    VerificationReport r;
    r.campaign = "tilde";
    const AlgebraPresentation& p = eng.presentation();
    const TildeFamily tf = tilde_family(eng, n, m);
    std::vector<std::string> names;
    for (const auto& [name, f] : tf.definitions) names.push_back(name);

    for (const std::string& name : names) {
        const FieldExpr plain = FieldExpr::generator(p.gen_id(name));
        Clock::time_point t0 = Clock::now();
        const FieldExpr untilded = substitute(eng, tf.definitions, tf.inverse.at(name));
        push_check(r, "roundtrip/untilde/" + name, untilded == plain,
                   print_field(p, untilded - plain), t0);
        t0 = Clock::now();
        const FieldExpr retilded = substitute(eng, tf.inverse, tf.definitions.at(name));
        push_check(r, "roundtrip/tilde/" + name, retilded == plain,
                   print_field(p, retilded - plain), t0);
    }
    for (std::size_t ia = 0; ia < names.size(); ++ia)
        for (std::size_t ib = ia; ib < names.size(); ++ib) {
            const Clock::time_point t0 = Clock::now();
            const FieldExpr a = FieldExpr::generator(p.gen_id(names[ia]));
            const FieldExpr b = FieldExpr::generator(p.gen_id(names[ib]));
            const LambdaPoly got =
                eng.bracket(tf.definitions.at(names[ia]), tf.definitions.at(names[ib]));
            const LambdaPoly want = eng.bracket(a, b);
            const LambdaPoly diff = got + want.scaled(Scalar(-1));
            push_check(r, "pair/" + names[ia] + "/" + names[ib], diff.is_zero(),
                       print_lambda(p, diff), t0);
        }
    return r;
}

VerificationReport tilde_campaign() {
    VerificationReport r;
    r.campaign = "tilde";
    for (const auto& [n, m] :
         std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {4, 4}}) {
        const FreeFieldStack st = retilde_stack(n, m);
        const Engine eng(st.presentation, 1ull << 40);
        r.append(with_prefix(tilde_family_check(eng, n, m), shape_prefix(n, m)));
    }
    return r;
}

VerificationReport stilde_campaign() {
    VerificationReport r;
    r.campaign = "s-equals-stilde";
    for (const auto& [n, m] :
         std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {4, 4}}) {
        const FreeFieldStack st = retilde_stack(n, m);
        const Engine eng(st.presentation, 1ull << 40);
        r.append(with_prefix(screening_tilde_invariance(eng, n, m), shape_prefix(n, m)));
    }
    return r;
}

VerificationReport kernel_campaign() {
    VerificationReport r;
    r.campaign = "kernels";
    {
        const FreeFieldStack st = wakimoto_stack(3);
        const Engine eng(st.presentation, 1ull << 40);
        r.append(with_prefix(
            kernel_check(eng, wakimoto_screenings(eng, 3), wakimoto_sl4_table(eng)),
            "wakimoto-sl4/"));
    }
    {
        const FreeFieldStack st = hook_stack(3, 3);
        const Engine eng(st.presentation, 1ull << 40);
        r.append(with_prefix(
            kernel_check(eng, hook_screenings(eng, 3, 3, true), minimal_sl4_wakimoto_table(eng)),
            "minimal-sl4/"));
    }
    {
        const FreeFieldStack st = make_stack(0, {}, true);
        const Engine eng(st.presentation, 1ull << 40);
        EmbeddingTable t;
        t["beta"] = parse_canonical(eng, "vop{c: 1}");
        t["gamma"] = parse_canonical(eng, "1/2*no(c, vop{c: -1}) + 1/2*no(d, vop{c: -1})");
        r.append(with_prefix(kernel_check(eng, {fms_screening(eng)}, t), "fms/"));
    }
    return r;
}

VerificationReport engine_axiom_check(std::uint64_t seed, int composites, int trees) {
    VerificationReport r;
    r.campaign = "engine-axioms";
    const FreeFieldStack st = make_stack(2, {{1, 1}}, false);
    const AlgebraPresentation& p = st.presentation;
    const Engine eng(p, 1ull << 40);
    const ModeOracle oracle(p, 6);

    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_int_distribution<int> pick_gen(0, p.num_generators() - 1);
    std::uniform_int_distribution<int> pick_kind(0, 9);
    std::uniform_int_distribution<int> pick_der(0, 2);
    std::function<RawPtr(int)> rand_tree = [&](int depth) -> RawPtr {
        const int kind = depth <= 0 ? 0 : pick_kind(rng);
        if (kind < 4) return raw_gen(p.generator(pick_gen(rng)).name);
        if (kind < 6) return raw_der(pick_der(rng), rand_tree(depth - 1));
        if (kind < 9) return raw_no(rand_tree(depth - 1), rand_tree(depth - 1));
        return raw_lin({{Scalar(2), rand_tree(depth - 1)},
                        {Scalar(-1) / (Scalar::k() + Scalar(3)), rand_tree(depth - 1)}});
    };

    // Pool of homogeneous-parity composites of conformal weight <= 3.
    std::vector<FieldExpr> pool;
    while (static_cast<int>(pool.size()) < composites) {
        const FieldExpr f = eng.canonicalize(rand_tree(2));
        if (f.is_zero() || mixed_parity(p, f) || !weight_at_most(p, f, 3)) continue;
        pool.push_back(f);
    }

    bool skew_ok = true, oracle_ok = true, table_ok = true, jacobi_ok = true;
    std::string skew_w, oracle_w, table_w, jacobi_w;
    int tabled = 0;
    Clock::time_point t0 = Clock::now();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const FieldExpr& a = pool[i];
        const FieldExpr& b = pool[(i + 1) % pool.size()];
        const LambdaPoly ab = eng.bracket(a, b);
        const LambdaPoly ba = eng.bracket(b, a);
        if (skew_ok && ba != eng.skew(ab, field_odd(p, a), field_odd(p, b))) {
            skew_ok = false;
            skew_w = print_field(p, a) + " ; " + print_field(p, b);
        }
        std::string diag;
        if (oracle_ok && !oracle.verify_ope(a, b, ab, &diag, false)) {
            oracle_ok = false;
            oracle_w = print_field(p, a) + " ; " + print_field(p, b) + " : " + diag;
        }
        // The full mode-by-mode commutator table scales steeply with factor
        // depth; run it on the shallow pairs of the sample.
        if (table_ok && tabled < 40 && field_span(a) + field_span(b) <= 3) {
            ++tabled;
            if (!oracle.verify_ope(a, b, ab, &diag, true)) {
                table_ok = false;
                table_w = print_field(p, a) + " ; " + print_field(p, b) + " : " + diag;
            }
        }
    }
    push_check(r, "skew-symmetry", skew_ok, skew_w, t0);
    push_check(r, "mode-oracle-poles", oracle_ok, oracle_w, t0);
    push_check(r, "mode-oracle-commutators", table_ok && tabled > 0, table_w, t0);

    t0 = Clock::now();
    for (std::size_t i = 0; i + 2 < pool.size(); i += 3) {
        if (!jacobi_holds(eng, pool[i], pool[i + 1], pool[i + 2])) {
            jacobi_ok = false;
            jacobi_w = print_field(p, pool[i]) + " ; " + print_field(p, pool[i + 1]) +
                       " ; " + print_field(p, pool[i + 2]);
            break;
        }
    }
    push_check(r, "jacobi", jacobi_ok, jacobi_w, t0);

    bool idem_ok = true, der_ok = true, lin_ok = true;
    std::string idem_w, der_w, lin_w;
    t0 = Clock::now();
    for (int trial = 0; trial < trees; ++trial) {
        const RawPtr t = rand_tree(3);
        const FieldExpr f = eng.canonicalize(t);
        if (idem_ok && parse_canonical(eng, print_field(p, f)) != f) {
            idem_ok = false;
            idem_w = print_field(p, f);
        }
        if (der_ok && eng.canonicalize(raw_der(1, t)) != eng.derivative(f)) {
            der_ok = false;
            der_w = print_field(p, f);
        }
        if (lin_ok &&
            eng.canonicalize(raw_lin({{Scalar(3), t}, {Scalar(-2), t}})) != f) {
            lin_ok = false;
            lin_w = print_field(p, f);
        }
    }
    push_check(r, "confluence/print-reparse", idem_ok, idem_w, t0);
    push_check(r, "confluence/derivative-wrapper", der_ok, der_w, t0);
    push_check(r, "confluence/linear-redistribution", lin_ok, lin_w, t0);
    return r;
}

VerificationReport minimal_sl4_jacobi_check(std::uint64_t seed, int triples) {
    VerificationReport r;
    r.campaign = "jacobi-sl4";
    const AlgebraPresentation p = minimal_sl4_presentation();
    const Engine eng(p, 1ull << 40);
    const std::vector<std::string> pool = {"L",   "H",   "E",   "F",  "J",
                                           "P1p", "P1m", "P2p", "P2m"};
    std::vector<std::array<std::string, 3>> picks = {{"P1m", "P2p", "E"},
                                                     {"P1p", "P2m", "F"}};
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    while (static_cast<int>(picks.size()) < triples)
        picks.push_back({pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]});

    for (std::size_t i = 0; i < picks.size(); ++i) {
        const auto& [na, nb, nc] = picks[i];
        const Clock::time_point t0 = Clock::now();
        const FieldExpr a = FieldExpr::generator(p.gen_id(na));
        const FieldExpr b = FieldExpr::generator(p.gen_id(nb));
        const FieldExpr c = FieldExpr::generator(p.gen_id(nc));
        std::ostringstream id;
        id << "triple/" << i << "/" << na << "/" << nb << "/" << nc;
        push_check(r, id.str(), jacobi_holds(eng, a, b, c), na + "," + nb + "," + nc, t0);
    }
    return r;
}

VerificationReport rho_oracle_check(int max_n) {
    VerificationReport r;
    r.campaign = "rho-oracle";
    for (int n = 1; n <= max_n; ++n)
        for (int i = 1; i <= n; ++i) {
            const Clock::time_point t0 = Clock::now();
            const DiffOpPoly closed = rho_R(n, i);
            const DiffOpPoly brute = rho_R_matrix(n, i);
            push_check(r, "rho/n" + std::to_string(n) + "/i" + std::to_string(i),
                       closed == brute, closed.str() + " vs " + brute.str(), t0);
        }
    return r;
}

}  // namespace wva
