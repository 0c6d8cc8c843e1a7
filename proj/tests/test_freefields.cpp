#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wva/freefields.hpp"
#include "wva/parser.hpp"

using namespace wva;

namespace {

FieldExpr gen(const Engine& eng, const std::string& name) {
    return FieldExpr::generator(eng.presentation().gen_id(name));
}

LambdaPoly lp(int degree, const FieldExpr& f) {
    LambdaPoly l;
    l.add(degree, f);
    return l;
}

FieldExpr scalar_field(const Scalar& s) { return FieldExpr::single(Monomial{}, s); }

bool field_odd(const AlgebraPresentation& p, const FieldExpr& f) {
    return !f.is_zero() && p.monomial_odd(f.terms().begin()->first);
}

using BiPoly = std::map<std::pair<int, int>, FieldExpr>;

void bi_add(BiPoly& acc, int i, int j, const FieldExpr& f, const Scalar& s) {
    if (f.is_zero() || s.is_zero()) return;
    auto [it, inserted] = acc.emplace(std::make_pair(i, j), f.scaled(s));
    if (!inserted) {
        it->second += f.scaled(s);
        if (it->second.is_zero()) acc.erase(it);
    }
}

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

TEST_CASE("right-action vector fields: closed form matches the matrix oracle") {
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) CHECK(rho_R(n, i) == rho_R_matrix(n, i));
    CHECK_THROWS_AS(rho_R(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(rho_R(3, 4), std::invalid_argument);

    SUBCASE("spot values") {
        DiffOpPoly r1 = rho_R(3, 1);
        CHECK(r1.terms.size() == 1);
        CHECK(r1.terms.count({1, 1}) == 1);
        DiffOpPoly r3 = rho_R(3, 3);
        CHECK(r3.terms.size() == 3);
        CHECK(r3.terms.at({3, 3}) == CoordPoly{{{}, Rational(1)}});
        CHECK(r3.terms.at({2, 3}) == CoordPoly{{{{2, 2}}, Rational(1)}});
        CHECK(r3.terms.at({1, 3}) == CoordPoly{{{{1, 2}}, Rational(1)}});
    }
}

TEST_CASE("stack builders wire the expected brackets") {
    FreeFieldStack wk = wakimoto_stack(3);
    CHECK(wk.presentation.num_generators() == 3 + 2 * 6);
    Engine eng(wk.presentation);
    const Scalar shift = Scalar::k() + Scalar(4);

    LambdaPoly a11 = eng.bracket(gen(eng, "a1"), gen(eng, "a1"));
    CHECK(a11 == lp(1, scalar_field(Scalar(2) * shift)));
    LambdaPoly a12 = eng.bracket(gen(eng, "a1"), gen(eng, "a2"));
    CHECK(a12 == lp(1, scalar_field(-shift)));
    LambdaPoly a13 = eng.bracket(gen(eng, "a1"), gen(eng, "a3"));
    CHECK(a13.is_zero());
    LambdaPoly bg = eng.bracket(gen(eng, "B[1,2]"), gen(eng, "G[1,2]"));
    CHECK(bg == lp(0, scalar_field(Scalar(-1))));
    LambdaPoly gb = eng.bracket(gen(eng, "G[1,2]"), gen(eng, "B[1,2]"));
    CHECK(gb == lp(0, scalar_field(Scalar(1))));
    LambdaPoly cross = eng.bracket(gen(eng, "B[1,2]"), gen(eng, "G[1,1]"));
    CHECK(cross.is_zero());

    SUBCASE("hook and retilde stacks") {
        FreeFieldStack hk = hook_stack(3, 3);
        CHECK(hk.ghosts == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
        CHECK_FALSE(hk.presentation.has_direction("c"));
        FreeFieldStack rt = retilde_stack(3, 4);
        CHECK(rt.ghosts ==
              std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});
        CHECK(rt.presentation.has_generator("c"));
        CHECK(rt.presentation.has_direction("d"));
        Engine e2(rt.presentation);
        LambdaPoly cd = e2.bracket(gen(e2, "c"), gen(e2, "d"));
        CHECK(cd == lp(1, scalar_field(Scalar(2))));
        CHECK_THROWS_AS(hook_stack(3, 5), std::invalid_argument);
        CHECK_THROWS_AS(retilde_stack(3, 1), std::invalid_argument);
    }
}

TEST_CASE("fundamental-weight fields pair diagonally with the currents") {
    FreeFieldStack st = wakimoto_stack(3);
    Engine eng(st.presentation);
    const Scalar shift = Scalar::k() + Scalar(4);
    for (int j = 1; j <= 3; ++j) {
        FieldExpr om = omega_field(eng, 3, j);
        for (int i = 1; i <= 3; ++i) {
            LambdaPoly b = eng.bracket(om, gen(eng, heis_name(i)));
            if (i == j) CHECK(b == lp(1, scalar_field(shift)));
            else CHECK(b.is_zero());
        }
    }
}

TEST_CASE("Wakimoto screenings match the explicit formulas") {
    FreeFieldStack st = wakimoto_stack(3);
    Engine eng(st.presentation);

    ScreeningField s1 = wakimoto_screening(eng, 3, 1);
    CHECK(s1.body == parse_canonical(eng, "no(B[1,1], vop{a1: -1/(k+4)})"));
    ScreeningField s2 = wakimoto_screening(eng, 3, 2);
    CHECK(s2.body == parse_canonical(eng,
                                     "no(B[2,2], vop{a2: -1/(k+4)})"
                                     " + no(G[1,1], no(B[1,2], vop{a2: -1/(k+4)}))"));
    ScreeningField s3 = wakimoto_screening(eng, 3, 3);
    CHECK(s3.body == parse_canonical(eng,
                                     "no(B[3,3], vop{a3: -1/(k+4)})"
                                     " + no(G[2,2], no(B[2,3], vop{a3: -1/(k+4)}))"
                                     " + no(G[1,2], no(B[1,3], vop{a3: -1/(k+4)}))"));
    CHECK(wakimoto_screenings(eng, 3).size() == 3);
    CHECK(s2.exponent == parse_canonical(eng, "vop{a2: -1/(k+4)}").terms().begin()->first.exponent);
}

TEST_CASE("hook screenings") {
    SUBCASE("(n,m)=(3,3), standard and bar") {
        FreeFieldStack st = hook_stack(3, 3);
        Engine eng(st.presentation);
        std::vector<ScreeningField> q = hook_screenings(eng, 3, 3, false);
        REQUIRE(q.size() == 3);
        CHECK(q[0].body == parse_canonical(eng, "no(B[1,1], vop{a1: -1/(k+4)})"));
        CHECK(q[1].body == parse_canonical(eng,
                                           "no(B[2,2], vop{a2: -1/(k+4)})"
                                           " + no(G[1,1], no(B[1,2], vop{a2: -1/(k+4)}))"));
        CHECK(q[2].body == parse_canonical(eng, "vop{a3: -1/(k+4)}"));

        std::vector<ScreeningField> qb = hook_screenings(eng, 3, 3, true);
        CHECK(qb[0].body == q[0].body);
        CHECK(qb[1].body == q[1].body);
        CHECK(qb[2].body == parse_canonical(eng, "no(G[1,2], vop{a3: -1/(k+4)})"));
    }
    SUBCASE("(n,m)=(4,2)") {
        FreeFieldStack st = hook_stack(4, 2);
        Engine eng(st.presentation);
        std::vector<ScreeningField> q = hook_screenings(eng, 4, 2, false);
        REQUIRE(q.size() == 4);
        CHECK(q[0].body == parse_canonical(eng, "no(B[1,1], vop{a1: -1/(k+5)})"));
        for (int i = 2; i <= 4; ++i)
            CHECK(q[static_cast<std::size_t>(i - 1)].body ==
                  parse_canonical(eng, "vop{a" + std::to_string(i) + ": -1/(k+5)}"));
        std::vector<ScreeningField> qb = hook_screenings(eng, 4, 2, true);
        CHECK(qb[1].body == parse_canonical(eng, "no(G[1,1], vop{a2: -1/(k+5)})"));
        CHECK(qb[3].body == q[3].body);
    }
    SUBCASE("range checks") {
        FreeFieldStack st = hook_stack(3, 3);
        Engine eng(st.presentation);
        CHECK_THROWS_AS(hook_screenings(eng, 3, 1, false), std::invalid_argument);
        CHECK_THROWS_AS(hook_screenings(eng, 3, 5, false), std::invalid_argument);
    }
    SUBCASE("m = n+1 gives all Wakimoto screenings") {
        FreeFieldStack st = wakimoto_stack(3);
        Engine eng(st.presentation);
        std::vector<ScreeningField> q = hook_screenings(eng, 3, 4, false);
        std::vector<ScreeningField> s = wakimoto_screenings(eng, 3);
        for (int i = 0; i < 3; ++i) CHECK(q[static_cast<std::size_t>(i)].body == s[static_cast<std::size_t>(i)].body);
    }
}

TEST_CASE("ghost bosonization into the half-lattice") {
    FreeFieldStack src = make_stack(0, {{1, 1}}, false);
    FreeFieldStack dst = make_stack(0, {}, true);
    Engine es(src.presentation);
    Engine ed(dst.presentation);

    const FieldExpr ib = fms_bosonize(es, ed, {1, 1}, gen(es, "B[1,1]"));
    const FieldExpr ig = fms_bosonize(es, ed, {1, 1}, gen(es, "G[1,1]"));
    CHECK(ib == parse_canonical(ed, "vop{c: 1}"));
    CHECK(ig == parse_canonical(ed, "1/2*no(c, vop{c: -1}) + 1/2*no(d, vop{c: -1})"));

    SUBCASE("the images satisfy the ghost relations") {
        LambdaPoly bb = ed.bracket(ib, ib);
        CHECK(bb.is_zero());
        LambdaPoly gg = ed.bracket(ig, ig);
        CHECK(gg.is_zero());
        LambdaPoly bg = ed.bracket(ib, ig);
        CHECK(bg == lp(0, scalar_field(Scalar(-1))));
    }
    SUBCASE("the map commutes with derivatives and normal ordering") {
        const FieldExpr x = parse_canonical(es, "no(B[1,1], G[1,1]) + 3*der(2, G[1,1])");
        const FieldExpr want = ed.nop(ib, ig) + ed.derivative(ig, 2).scaled(Scalar(3));
        CHECK(fms_bosonize(es, ed, {1, 1}, x) == want);
    }
    SUBCASE("the images are annihilated by the screening e^{c/2 + d/2}") {
        ScreeningField fms = fms_screening(ed);
        CHECK(ed.zero_mode_action(fms, ib).is_zero());
        CHECK(ed.zero_mode_action(fms, ig).is_zero());
    }
    SUBCASE("rejects sources that already use the half-lattice") {
        CHECK_THROWS_AS(fms_bosonize(ed, ed, {1, 1}, FieldExpr::identity()), std::domain_error);
        CHECK_THROWS_AS(fms_bosonize(es, ed, {2, 2}, FieldExpr::identity()),
                        std::invalid_argument);
    }
}

TEST_CASE("tilded families") {
    SUBCASE("(n,m)=(3,4) explicit entries") {
        FreeFieldStack st = retilde_stack(3, 4);
        Engine eng(st.presentation);
        TildeFamily tf = tilde_family(eng, 3, 4);
        const Scalar shift = Scalar::k() + Scalar(4);

        CHECK(tf.definitions.at("c") == gen(eng, "c"));
        CHECK(tf.definitions.at("a1") == gen(eng, "a1"));
        CHECK(tf.definitions.at("a3") ==
              gen(eng, "a3") - gen(eng, "c").scaled(shift));
        // internal gamma is untouched; internal beta picks up one pair term
        CHECK(tf.definitions.at("G[2,2]") == gen(eng, "G[2,2]"));
        CHECK(tf.definitions.at("B[2,2]") ==
              parse_canonical(eng, "B[2,2] - no(B[1,2], no(B[2,3], vop{c: -1}))"));
        // exposed beta is untouched too (the pair sum is empty)
        CHECK(tf.definitions.at("B[1,2]") == gen(eng, "B[1,2]"));
        // exposed gamma picks up the single-beta and gamma-beta corrections
        CHECK(tf.definitions.at("G[1,2]") ==
              parse_canonical(eng,
                              "G[1,2] + no(B[3,3], vop{c: -1})"
                              " + no(G[2,2], no(B[2,3], vop{c: -1}))"));
        CHECK(tf.definitions.at("G[1,1]") ==
              parse_canonical(eng, "G[1,1] + no(B[2,3], vop{c: -1})"));
        CHECK(tf.definitions.count("d") == 1);
        CHECK(tf.definitions.size() == 3 + 2 + 2 * 5);
    }
    SUBCASE("(n,m)=(4,5) internal beta correction") {
        FreeFieldStack st = retilde_stack(4, 5);
        Engine eng(st.presentation);
        TildeFamily tf = tilde_family(eng, 4, 5);
        CHECK(tf.definitions.at("B[2,2]") ==
              parse_canonical(eng, "B[2,2] - no(B[1,2], no(B[2,4], vop{c: -1}))"));
        CHECK(tf.definitions.at("B[2,4]") == gen(eng, "B[2,4]"));
        CHECK(tf.definitions.at("G[2,4]") ==
              parse_canonical(eng,
                              "G[2,4] + no(B[1,1], vop{c: -1})"
                              " + no(G[2,2], no(B[1,2], vop{c: -1}))"
                              " + no(G[2,3], no(B[1,3], vop{c: -1}))"));
    }
    SUBCASE("m = 2 keeps only the bosons") {
        FreeFieldStack st = retilde_stack(3, 2);
        Engine eng(st.presentation);
        TildeFamily tf = tilde_family(eng, 3, 2);
        CHECK(tf.definitions.size() == 5);  // a1..a3, c, d
        const Scalar shift = Scalar::k() + Scalar(4);
        CHECK(tf.definitions.at("a1") == gen(eng, "a1") - gen(eng, "c").scaled(shift));
        // W = <omega_1, omega_1> = 3/4 for sl(4)
        FieldExpr want = gen(eng, "d") -
                         gen(eng, "c").scaled(shift * Scalar(Rational(3, 4))) +
                         omega_field(eng, 3, 1).scaled(Scalar(2));
        CHECK(tf.definitions.at("d") == want);
        CHECK_THROWS_AS(tilde_family(eng, 3, 1), std::invalid_argument);
    }
    SUBCASE("round trips") {
        for (const auto& [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
            FreeFieldStack st = retilde_stack(n, m);
            Engine eng(st.presentation);
            TildeFamily tf = tilde_family(eng, n, m);
            for (const auto& [name, inv] : tf.inverse) {
                CHECK(substitute(eng, tf.definitions, inv) == gen(eng, name));
                CHECK(substitute(eng, tf.inverse, tf.definitions.at(name)) == gen(eng, name));
            }
        }
    }
    SUBCASE("tilded fields reproduce the free-field brackets, (n,m)=(3,4)") {
        FreeFieldStack st = retilde_stack(3, 4);
        Engine eng(st.presentation);
        TildeFamily tf = tilde_family(eng, 3, 4);
        const Scalar shift = Scalar::k() + Scalar(4);
        const FieldExpr td = tf.definitions.at("d");
        const FieldExpr tc = tf.definitions.at("c");

        LambdaPoly cd = eng.bracket(tc, td);
        CHECK(cd == lp(1, scalar_field(Scalar(2))));
        LambdaPoly dd = eng.bracket(td, td);
        CHECK(dd.is_zero());
        for (int i = 1; i <= 3; ++i) {
            LambdaPoly da = eng.bracket(td, tf.definitions.at(heis_name(i)));
            CHECK(da.is_zero());
            LambdaPoly ca = eng.bracket(tc, tf.definitions.at(heis_name(i)));
            CHECK(ca.is_zero());
        }
        LambdaPoly a33 = eng.bracket(tf.definitions.at("a3"), tf.definitions.at("a3"));
        CHECK(a33 == lp(1, scalar_field(Scalar(2) * shift)));
        LambdaPoly a23 = eng.bracket(tf.definitions.at("a2"), tf.definitions.at("a3"));
        CHECK(a23 == lp(1, scalar_field(-shift)));

        // ghost sector: exposed pair (1,2) against everything nearby
        const FieldExpr b12 = tf.definitions.at("B[1,2]");
        const FieldExpr g12 = tf.definitions.at("G[1,2]");
        const FieldExpr g11 = tf.definitions.at("G[1,1]");
        LambdaPoly bg = eng.bracket(b12, g12);
        CHECK(bg == lp(0, scalar_field(Scalar(-1))));
        LambdaPoly bg2 = eng.bracket(b12, g11);
        CHECK(bg2.is_zero());
        LambdaPoly gg = eng.bracket(g12, g11);
        CHECK(gg.is_zero());
        LambdaPoly dg = eng.bracket(td, g12);
        CHECK(dg.is_zero());
        LambdaPoly db = eng.bracket(td, b12);
        CHECK(db.is_zero());
    }
}

TEST_CASE("sl(4) Wakimoto table satisfies affine relations and kernels") {
    FreeFieldStack st = wakimoto_stack(3);
    Engine eng(st.presentation);
    EmbeddingTable t = wakimoto_sl4_table(eng);
    REQUIRE(t.size() == 9);

    SUBCASE("Chevalley relations") {
        const Scalar k = Scalar::k();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const std::string si = std::to_string(i), sj = std::to_string(j);
                LambdaPoly ef = eng.bracket(t.at("e" + si), t.at("f" + sj));
                if (i == j) {
                    LambdaPoly want = lp(1, scalar_field(k));
                    want.add(0, t.at("h" + si));
                    CHECK(ef == want);
                } else {
                    CHECK(ef.is_zero());
                }
                LambdaPoly hh = eng.bracket(t.at("h" + si), t.at("h" + sj));
                const long c = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
                if (c != 0) CHECK(hh == lp(1, scalar_field(k * Scalar(c))));
                else CHECK(hh.is_zero());
                LambdaPoly he = eng.bracket(t.at("h" + si), t.at("e" + sj));
                CHECK(he == lp(0, t.at("e" + sj).scaled(Scalar(c))));
            }
    }
    SUBCASE("screening kernels (spot checks)") {
        std::vector<ScreeningField> s = wakimoto_screenings(eng, 3);
        CHECK(eng.zero_mode_action(s[0], t.at("e1")).is_zero());
        CHECK(eng.zero_mode_action(s[1], t.at("h2")).is_zero());
        CHECK(eng.zero_mode_action(s[2], t.at("f3")).is_zero());
    }
}

TEST_CASE("minimal sl(4) W-algebra presentation") {
    AlgebraPresentation p = minimal_sl4_presentation();
    CHECK(p.num_generators() == 9);
    CHECK_FALSE(p.is_free());
    Engine eng(p);
    auto g = [&](const std::string& name) { return gen(eng, name); };
    const Scalar k = Scalar::k();

    SUBCASE("conformal structure") {
        const Scalar cc = Scalar(-3) * k * (Scalar(2) * k + Scalar(3)) / (k + Scalar(4));
        LambdaPoly ll = eng.bracket(g("L"), g("L"));
        CHECK(ll.coeff(3) == scalar_field(cc / Scalar(2)));
        CHECK(ll.coeff(2).is_zero());
        CHECK(ll.coeff(1) == g("L").scaled(Scalar(2)));
        CHECK(ll.coeff(0) == eng.derivative(g("L")));
        LambdaPoly lp1 = eng.bracket(g("L"), g("P1p"));
        CHECK(lp1.coeff(1) == g("P1p").scaled(Scalar(Rational(3, 2))));
        CHECK(lp1.coeff(0) == eng.derivative(g("P1p")));
    }
    SUBCASE("spot brackets") {
        LambdaPoly jj = eng.bracket(g("J"), g("J"));
        CHECK(jj == lp(1, scalar_field(k + Scalar(2))));
        LambdaPoly pp = eng.bracket(g("P1m"), g("P2p"));
        CHECK(pp.coeff(2) ==
              scalar_field(Scalar(-2) * (k + Scalar(1)) * (k + Scalar(2))));
        CHECK(pp.coeff(1) ==
              g("J").scaled(Scalar(2) * (k + Scalar(1))) - g("H").scaled(k + Scalar(2)));
        // skew consistency of a stored one-sided pair
        LambdaPoly ep = eng.bracket(g("P2m"), g("E"));
        CHECK(ep == lp(0, -g("P1m")));
        LambdaPoly zero = eng.bracket(g("P1p"), g("P1p"));
        CHECK(zero.is_zero());
    }
    SUBCASE("Jacobi spot checks") {
        CHECK(jacobi_holds(eng, g("P1m"), g("P2p"), g("E")));
        CHECK(jacobi_holds(eng, g("P1p"), g("P2m"), g("F")));
        CHECK(jacobi_holds(eng, g("H"), g("E"), g("F")));
        CHECK(jacobi_holds(eng, g("L"), g("P1m"), g("P2p")));
        CHECK(jacobi_holds(eng, g("J"), g("P1m"), g("P1p")));
    }
}

TEST_CASE("minimal sl(4) Wakimoto realization table") {
    FreeFieldStack st = hook_stack(3, 3);
    Engine eng(st.presentation);
    EmbeddingTable t = minimal_sl4_wakimoto_table(eng);
    REQUIRE(t.size() == 4);
    const Scalar k = Scalar::k();

    CHECK(t.at("E") == gen(eng, "B[2,2]"));
    LambdaPoly jj = eng.bracket(t.at("J"), t.at("J"));
    CHECK(jj == lp(1, scalar_field(k + Scalar(2))));
    LambdaPoly hh = eng.bracket(t.at("H"), t.at("H"));
    CHECK(hh == lp(1, scalar_field(Scalar(2) * (k + Scalar(1)))));
    LambdaPoly hj = eng.bracket(t.at("H"), t.at("J"));
    CHECK(hj.is_zero());
    LambdaPoly he = eng.bracket(t.at("H"), t.at("E"));
    CHECK(he == lp(0, t.at("E").scaled(Scalar(2))));
    LambdaPoly jp = eng.bracket(t.at("J"), t.at("P1p"));
    CHECK(jp == lp(0, t.at("P1p")));
    LambdaPoly hp = eng.bracket(t.at("H"), t.at("P1p"));
    CHECK(hp == lp(0, t.at("P1p")));
    LambdaPoly ee = eng.bracket(t.at("E"), t.at("E"));
    CHECK(ee.is_zero());
    LambdaPoly ep = eng.bracket(t.at("E"), t.at("P1p"));
    CHECK(ep.is_zero());

    SUBCASE("kernel spot checks with the bar screenings") {
        std::vector<ScreeningField> q = hook_screenings(eng, 3, 3, true);
        for (const auto& s : q) {
            CHECK(eng.zero_mode_action(s, t.at("E")).is_zero());
            CHECK(eng.zero_mode_action(s, t.at("J")).is_zero());
        }
    }
}
