#include "wva/brst.hpp"

#include <stdexcept>

namespace wva {

namespace {

std::string root_suffix(const LieElem& e) {
    return "[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
}

// <f, J^a> under the trace form.
Rational pair_with_f(int n, const Matrix& f, const LieElem& a) {
    Rational r;
    const std::map<LieElem, Rational> fx = decompose(n, f);
    for (const auto& [e, c] : fx) r += c * inner(n, e, a);
    return r;
}

FieldExpr current_of_matrix(const AlgebraPresentation& p, int n, const Matrix& x) {
    FieldExpr r;
    const std::map<LieElem, Rational> xs = decompose(n, x);
    for (const auto& [e, c] : xs)
        r += FieldExpr::generator(p.gen_id(current_name(e))).scaled(Scalar(c));
    return r;
}

}  // namespace

std::string current_name(const LieElem& e) {
    switch (e.kind) {
        case LieElem::Kind::E: return "Je" + root_suffix(e);
        case LieElem::Kind::F: return "Jf" + root_suffix(e);
        default: return "Jh[" + std::to_string(e.i) + "]";
    }
}

std::string phi_name(const LieElem& e) { return "phi" + root_suffix(e); }
std::string psi_name(const LieElem& e) { return "psi" + root_suffix(e); }

ReductionDatum make_reduction(int n, int m) {
    ReductionDatum r;
    r.n = n;
    r.m = m;
    const GoodGrading g = good_grading(n, m);
    r.f = hook_nilpotent(n, m, false);

    // Diagonal grading element with d_i - d_{i+1} = grade of alpha_i and
    // zero trace.
    std::vector<Rational> diag(static_cast<std::size_t>(n + 1));
    Rational total;
    for (int j = 1; j <= n + 1; ++j) {
        Rational d;
        for (int i = j; i <= n; ++i) d += Rational(g.grade[static_cast<std::size_t>(i - 1)]);
        diag[static_cast<std::size_t>(j - 1)] = d;
        total += d;
    }
    const Rational t = -total / Rational(n + 1);
    r.x = mat_zero(n + 1, n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        diag[static_cast<std::size_t>(j - 1)] += t;
        r.x[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j - 1)] =
            diag[static_cast<std::size_t>(j - 1)];
    }

    r.basis = lie_basis(n);
    for (const LieElem& e : r.basis) {
        Rational deg;
        if (e.kind == LieElem::Kind::E)
            deg = diag[static_cast<std::size_t>(e.i - 1)] - diag[static_cast<std::size_t>(e.j)];
        else if (e.kind == LieElem::Kind::F)
            deg = diag[static_cast<std::size_t>(e.j)] - diag[static_cast<std::size_t>(e.i - 1)];
        r.grade[e] = deg;
        if (deg == Rational(1, 2) || deg == Rational(-1, 2))
            throw std::logic_error("make_reduction: grading is not even");
        if (deg.sign() > 0) r.splus.push_back(e);
    }

    AlgebraPresentation& p = r.presentation;
    for (const LieElem& e : r.basis) p.add_generator(current_name(e), false, Scalar(1));
    for (const LieElem& a : r.splus) {
        p.add_generator(phi_name(a), true);
        p.add_generator(psi_name(a), true);
    }
    p.finalize();

    const Scalar k = Scalar::k();
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        for (std::size_t j = i; j < r.basis.size(); ++j) {
            const LieElem& a = r.basis[i];
            const LieElem& b = r.basis[j];
            LambdaPoly l;
            const Scalar lvl = k * Scalar(inner(n, a, b));
            if (!lvl.is_zero()) l.add(1, FieldExpr::single(Monomial{}, lvl));
            FieldExpr comm;
            const std::map<LieElem, Rational> sc = structure_constants(n, a, b);
            for (const auto& [c, v] : sc)
                comm += FieldExpr::generator(p.gen_id(current_name(c))).scaled(Scalar(v));
            if (!comm.is_zero()) l.add(0, comm);
            if (!l.is_zero()) p.set_bracket(current_name(a), current_name(b), l);
        }
    for (const LieElem& a : r.splus) {
        LambdaPoly l;
        l.add(0, FieldExpr::identity());
        p.set_bracket(phi_name(a), psi_name(a), l);
    }
    return r;
}

FieldExpr brst_differential(const ReductionDatum& r) {
    const Engine eng(r.presentation);
    std::vector<std::pair<Scalar, RawPtr>> terms;
    for (const LieElem& a : r.splus) {
        terms.emplace_back(Scalar(1),
                           raw_no(raw_gen(current_name(a)), raw_gen(psi_name(a))));
        const Rational fa = pair_with_f(r.n, r.f.matrix, a);
        if (!fa.is_zero()) terms.emplace_back(Scalar(fa), raw_gen(psi_name(a)));
    }
    for (const LieElem& a : r.splus)
        for (const LieElem& b : r.splus) {
            const std::map<LieElem, Rational> sc = structure_constants(r.n, a, b);
            for (const auto& [c, v] : sc) {
                if (v.is_zero()) continue;
                terms.emplace_back(
                    Scalar(v) * Scalar(Rational(-1, 2)),
                    raw_no(raw_gen(phi_name(c)),
                           raw_no(raw_gen(psi_name(a)), raw_gen(psi_name(b)))));
            }
        }
    // Neutral block of the differential: empty for even gradings.
    for (const LieElem& a : r.sneutral) (void)a;
    return eng.canonicalize(raw_lin(std::move(terms)));
}

FieldExpr brst_em_field(const ReductionDatum& r) {
    const Engine eng(r.presentation);
    const AlgebraPresentation& p = r.presentation;
    RootDatum rd(r.n);

    // Sugawara field over the dual bases: E(i,j) <-> F(i,j), and the Cartan
    // block contracted with the inverse Cartan matrix.
    std::vector<std::pair<Scalar, RawPtr>> sug;
    for (const LieElem& e : r.basis) {
        if (e.kind == LieElem::Kind::E) {
            const LieElem f = LieElem::F(e.i, e.j);
            sug.emplace_back(Scalar(1),
                             raw_no(raw_gen(current_name(e)), raw_gen(current_name(f))));
            sug.emplace_back(Scalar(1),
                             raw_no(raw_gen(current_name(f)), raw_gen(current_name(e))));
        } else if (e.kind == LieElem::Kind::H) {
            for (int j = 1; j <= r.n; ++j) {
                const Rational c = rd.inv_cartan(e.i, j);
                if (c.is_zero()) continue;
                sug.emplace_back(Scalar(c), raw_no(raw_gen(current_name(e)),
                                                   raw_gen(current_name(LieElem::H(j)))));
            }
        }
    }
    const Scalar norm = Scalar(1) / (Scalar(2) * (Scalar::k() + Scalar(r.n + 1)));
    FieldExpr l = eng.canonicalize(raw_lin(std::move(sug))).scaled(norm);

    l += eng.derivative(current_of_matrix(p, r.n, r.x));

    std::vector<std::pair<Scalar, RawPtr>> ghost;
    for (const LieElem& a : r.splus) {
        const Scalar ma(r.grade.at(a));
        ghost.emplace_back(-ma, raw_no(raw_gen(psi_name(a)),
                                       raw_der(1, raw_gen(phi_name(a)))));
        ghost.emplace_back(Scalar(1) - ma, raw_no(raw_der(1, raw_gen(psi_name(a))),
                                                  raw_gen(phi_name(a))));
    }
    l += eng.canonicalize(raw_lin(std::move(ghost)));

    // Neutral block of L: empty for even gradings.
    for (const LieElem& a : r.sneutral) (void)a;
    return l;
}

Scalar central_charge(const ReductionDatum& r) {
    const Scalar k = Scalar::k();
    const long dim = (r.n + 1) * (r.n + 1) - 1;
    Rational xx;
    for (int i = 0; i <= r.n; ++i) {
        const Rational& d = r.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        xx += d * d;
    }
    Scalar c = k * Scalar(dim) / (k + Scalar(r.n + 1)) - Scalar(12) * k * Scalar(xx);
    for (const LieElem& a : r.splus) {
        const Scalar ma(r.grade.at(a));
        c -= Scalar(12) * ma * ma - Scalar(12) * ma + Scalar(2);
    }
    c -= Scalar(Rational(static_cast<long>(r.sneutral.size()), 2));
    return c;
}

Scalar hook_central_charge(int n, int m) {
    if (m < 1 || m > n + 1) throw std::invalid_argument("hook_central_charge: m out of range");
    const Scalar k = Scalar::k();
    const Scalar nn(n), mm(m);
    const Scalar r = nn - mm + Scalar(2);  // n - m + 2
    return k * nn * (nn + Scalar(2)) / (k + nn + Scalar(1)) - k * r * (r * r - Scalar(1)) +
           (mm - nn - Scalar(1)) *
               (mm * mm * (nn + Scalar(2)) -
                Scalar(2) * mm * (nn * nn + Scalar(3) * nn + Scalar(3)) +
                nn * nn * nn + Scalar(4) * nn * nn + Scalar(5) * nn + Scalar(3));
}

Scalar dynkin_central_charge(int n, int m) {
    if (m < 1 || m > n + 1)
        throw std::invalid_argument("dynkin_central_charge: m out of range");
    const Scalar k = Scalar::k();
    // Half of the sl(2)-triple coweight: zero on the 1-string coordinates,
    // the staircase (L-1)/2, (L-3)/2, ... on the Jordan-block coordinates.
    const int big = n - m + 2;
    std::vector<Rational> d(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < big; ++j)
        d[static_cast<std::size_t>(m - 1 + j)] = Rational(big - 1 - 2 * j, 2);
    Rational xx;
    for (const Rational& v : d) xx += v * v;
    Scalar c = k * Scalar((n + 1) * (n + 1) - 1) / (k + Scalar(n + 1)) -
               Scalar(12) * k * Scalar(xx);
    long half_dim = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const Rational deg = d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)];
            if (deg == Rational(1, 2)) ++half_dim;
            if (deg.sign() > 0) {
                const Scalar ma(deg);
                c -= Scalar(12) * ma * ma - Scalar(12) * ma + Scalar(2);
            }
        }
    c -= Scalar(Rational(half_dim, 2));
    return c;
}

Scalar j_level(int n, int m) {
    if (m < 2) throw std::invalid_argument("j_level: requires m >= 2");
    if (m > n + 1) throw std::invalid_argument("j_level: m out of range");
    const Scalar k = Scalar::k();
    const Scalar nn(n), mm(m);
    return Scalar(-1) * (mm - Scalar(1)) *
           (Scalar(1) + nn - (k + nn + Scalar(1)) * (nn - mm + Scalar(2))) /
           (nn + Scalar(1));
}

}  // namespace wva
