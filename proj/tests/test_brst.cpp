#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wva/brst.hpp"
#include "wva/parser.hpp"

using namespace wva;

namespace {

FieldExpr scalar_field(const Scalar& s) { return FieldExpr::single(Monomial{}, s); }

// Runs the full energy-momentum axioms and the nilpotency/primary checks for
// one reduction.
void check_complex(int n, int m) {
    CAPTURE(n);
    CAPTURE(m);
    ReductionDatum r = make_reduction(n, m);
    Engine eng(r.presentation);
    const FieldExpr d = brst_differential(r);
    const FieldExpr l = brst_em_field(r);

    LambdaPoly dd = eng.bracket(d, d);
    CHECK(dd.is_zero());

    LambdaPoly ll = eng.bracket(l, l);
    CHECK(ll.coeff(4).is_zero());
    CHECK(ll.coeff(3) == scalar_field(central_charge(r) / Scalar(2)));
    CHECK(ll.coeff(2).is_zero());
    CHECK(ll.coeff(1) == l.scaled(Scalar(2)));
    CHECK(ll.coeff(0) == eng.derivative(l));

    LambdaPoly ld = eng.bracket(l, d);
    CHECK(ld.coeff(2).is_zero());
    CHECK(ld.coeff(1) == d);
    CHECK(ld.coeff(0) == eng.derivative(d));
}

}  // namespace

TEST_CASE("reduction data for hook gradings") {
    SUBCASE("sl(2) principal") {
        ReductionDatum r = make_reduction(1, 1);
        CHECK(r.splus == std::vector<LieElem>{LieElem::E(1, 1)});
        CHECK(r.sneutral.empty());
        CHECK(r.grade.at(LieElem::E(1, 1)) == Rational(1));
        CHECK(r.x[0][0] == Rational(1, 2));
        CHECK(r.x[1][1] == Rational(-1, 2));
        CHECK(r.presentation.num_generators() == 3 + 2);
        CHECK(r.presentation.odd(r.presentation.gen_id("psi[1,1]")));
    }
    SUBCASE("sl(4) minimal") {
        ReductionDatum r = make_reduction(3, 3);
        CHECK(r.splus ==
              std::vector<LieElem>{LieElem::E(1, 3), LieElem::E(2, 3), LieElem::E(3, 3)});
        for (const LieElem& a : r.splus) CHECK(r.grade.at(a) == Rational(1));
        CHECK(r.f.matrix == elem_matrix(4, 4, 3));
        CHECK(r.presentation.num_generators() == 15 + 6);
    }
    SUBCASE("m = n+1 is the trivial reduction") {
        ReductionDatum r = make_reduction(2, 3);
        CHECK(r.splus.empty());
        CHECK(mat_is_zero(r.f.matrix));
        CHECK(brst_differential(r).is_zero());
        CHECK(central_charge(r) ==
              Scalar::k() * Scalar(8) / (Scalar::k() + Scalar(3)));
    }
}

TEST_CASE("differential fields") {
    SUBCASE("sl(2) principal: d = :J^e psi: + psi") {
        ReductionDatum r = make_reduction(1, 1);
        Engine eng(r.presentation);
        CHECK(brst_differential(r) ==
              parse_canonical(eng, "no(Je[1,1], psi[1,1]) + psi[1,1]"));
    }
    SUBCASE("sl(3) principal: the trilinear term is present") {
        ReductionDatum r = make_reduction(2, 1);
        Engine eng(r.presentation);
        FieldExpr want = parse_canonical(
            eng,
            "no(Je[1,1], psi[1,1]) + no(Je[2,2], psi[2,2]) + no(Je[1,2], psi[1,2])"
            " + psi[1,1] + psi[2,2]"
            " - no(phi[1,2], no(psi[1,1], psi[2,2]))");
        CHECK(brst_differential(r) == want);
    }
    SUBCASE("sl(3) minimal: abelian positive part, no trilinear term") {
        ReductionDatum r = make_reduction(2, 2);
        Engine eng(r.presentation);
        CHECK(brst_differential(r) ==
              parse_canonical(eng,
                              "no(Je[1,2], psi[1,2]) + no(Je[2,2], psi[2,2]) + psi[2,2]"));
        bool has_trilinear = false;
        const FieldExpr d = brst_differential(r);
        for (const auto& [mono, s] : d.terms())
            if (mono.factors.size() >= 3) has_trilinear = true;
        CHECK_FALSE(has_trilinear);
    }
}

TEST_CASE("nilpotency, energy-momentum axioms, and d primary of weight 1") {
    SUBCASE("sl(2) principal") { check_complex(1, 1); }
    SUBCASE("sl(3) minimal") { check_complex(2, 2); }
    SUBCASE("sl(3) principal") { check_complex(2, 1); }
    SUBCASE("sl(4) minimal") { check_complex(3, 3); }
}

TEST_CASE("central charges") {
    const Scalar k = Scalar::k();
    SUBCASE("closed forms") {
        CHECK(hook_central_charge(3, 3) ==
              Scalar(-3) * k * (Scalar(2) * k + Scalar(3)) / (k + Scalar(4)));
        CHECK(hook_central_charge(1, 1) ==
              Scalar(1) - Scalar(6) * (k + Scalar(1)) * (k + Scalar(1)) / (k + Scalar(2)));
        for (int n = 1; n <= 6; ++n)
            CHECK(hook_central_charge(n, n + 1) ==
                  k * Scalar(n) * Scalar(n + 2) / (k + Scalar(n + 1)));
        CHECK_THROWS_AS(hook_central_charge(3, 5), std::invalid_argument);
    }
    SUBCASE("charge formula on the sl(2)-triple grading matches the closed form") {
        for (int n = 1; n <= 6; ++n)
            for (int m = 1; m <= n + 1; ++m)
                CHECK(dynkin_central_charge(n, m) == hook_central_charge(n, m));
    }
    SUBCASE("complex charge agrees with the closed form when the even grading is triple-induced") {
        for (const auto& [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 4}}) {
            ReductionDatum r = make_reduction(n, m);
            CHECK(central_charge(r) == hook_central_charge(n, m));
        }
    }
    SUBCASE("otherwise it is shifted by the Heisenberg-current redefinition") {
        // L_even = L_canonical + 1/2 d(J), so c_even = c - 12 (1/2)^2 <J,J>.
        for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
            ReductionDatum r = make_reduction(n, m);
            CHECK(central_charge(r) ==
                  hook_central_charge(n, m) - Scalar(3) * j_level(n, m));
        }
    }
}

TEST_CASE("Heisenberg level of the hook W-algebras") {
    const Scalar k = Scalar::k();
    CHECK(j_level(3, 3) == k + Scalar(2));
    CHECK(j_level(1, 2) == k / Scalar(2));
    CHECK(j_level(4, 2) ==
          Scalar(-1) * (Scalar(5) - (k + Scalar(5)) * Scalar(4)) / Scalar(5));
    CHECK_THROWS_AS(j_level(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(j_level(3, 5), std::invalid_argument);
}
