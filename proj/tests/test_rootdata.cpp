#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wva/rootdata.hpp"

#include <random>

using namespace wva;

namespace {

using Expansion = std::map<LieElem, Rational>;

Expansion single(const LieElem& e, long c = 1) { return {{e, Rational(c)}}; }

// Commutator of expansions via structure constants.
Expansion comm(int n, const Expansion& a, const Expansion& b) {
    Expansion r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            for (const auto& [e, c] : structure_constants(n, ea, eb)) {
                Rational v = ca * cb * c;
                auto [it, inserted] = r.emplace(e, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
    return r;
}

Rational inner_exp(int n, const Expansion& a, const Expansion& b) {
    Rational r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r += ca * cb * inner(n, ea, eb);
    return r;
}

}  // namespace

TEST_CASE("structure constants from elementary matrices") {
    CHECK(structure_constants(3, LieElem::E(1, 1), LieElem::F(1, 1)) == single(LieElem::H(1)));
    CHECK(structure_constants(3, LieElem::E(1, 1), LieElem::E(2, 2)) == single(LieElem::E(1, 2)));
    CHECK(structure_constants(3, LieElem::H(1), LieElem::E(1, 1)) ==
          single(LieElem::E(1, 1), 2));
    CHECK(structure_constants(3, LieElem::H(1), LieElem::E(2, 2)) ==
          single(LieElem::E(2, 2), -1));
    CHECK(structure_constants(3, LieElem::E(1, 1), LieElem::E(3, 3)).empty());
    // [e_{1,2}, f_{1,2}] diagonal part
    CHECK(structure_constants(3, LieElem::E(1, 2), LieElem::F(1, 2)) ==
          Expansion{{LieElem::H(1), Rational(1)}, {LieElem::H(2), Rational(1)}});
}

TEST_CASE("structure constants satisfy the Jacobi identity (n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const auto basis = lie_basis(n);
        std::mt19937 rng(42 + n);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        const int trials = n <= 2 ? 400 : 800;
        for (int t = 0; t < trials; ++t) {
            const Expansion a = single(basis[pick(rng)]);
            const Expansion b = single(basis[pick(rng)]);
            const Expansion c = single(basis[pick(rng)]);
            Expansion lhs = comm(n, a, comm(n, b, c));
            for (const auto& [e, v] : comm(n, b, comm(n, a, c))) {
                auto [it, ins] = lhs.emplace(e, -v);
                if (!ins) {
                    it->second -= v;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
            CHECK(lhs == comm(n, comm(n, a, b), c));
        }
    }
}

TEST_CASE("normalized invariant form") {
    CHECK(inner(3, LieElem::E(1, 1), LieElem::F(1, 1)) == Rational(1));
    CHECK(inner(3, LieElem::H(1), LieElem::H(1)) == Rational(2));
    CHECK(inner(3, LieElem::H(1), LieElem::H(2)) == Rational(-1));
    CHECK(inner(3, LieElem::E(1, 1), LieElem::E(1, 1)) == Rational(0));

    SUBCASE("invariance <[a,b],c> + <b,[a,c]> = 0") {
        const int n = 3;
        const auto basis = lie_basis(n);
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int t = 0; t < 500; ++t) {
            const Expansion a = single(basis[pick(rng)]);
            const Expansion b = single(basis[pick(rng)]);
            const Expansion c = single(basis[pick(rng)]);
            CHECK(inner_exp(n, comm(n, a, b), c) + inner_exp(n, b, comm(n, a, c)) ==
                  Rational(0));
        }
    }
}

TEST_CASE("root datum pairings") {
    RootDatum rd(3);
    CHECK(rd.pair(rd.theta(), rd.theta()) == Rational(2));
    CHECK(rd.pair(rd.fundamental_weight(3), rd.fundamental_weight(3)) == Rational(3, 4));
    CHECK(rd.inv_cartan(3, 3) == Rational(3, 4));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(rd.pair(rd.fundamental_weight(i), rd.simple_root(j)) ==
                  Rational(i == j ? 1 : 0));
    CHECK(rd.pair(rd.simple_root(1), rd.simple_root(2)) == Rational(-1));
    CHECK(rd.positive_roots().size() == 6);

    SUBCASE("weight pairing matches the trace form on the Cartan") {
        // <alpha_i, alpha_j> as weights equals <h_i, h_j> as matrices
        RootDatum rd4(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                CHECK(rd4.pair(rd4.simple_root(i), rd4.simple_root(j)) ==
                      inner(4, LieElem::H(i), LieElem::H(j)));
    }
}

TEST_CASE("internal/exposed classification") {
    CHECK(classify_root(3, 2, 2) == RootClass::Internal);
    CHECK(classify_root(3, 1, 2) == RootClass::Exposed);
    CHECK(classify_root(3, 2, 3) == RootClass::Exposed);
    CHECK_THROWS_AS(classify_root(3, 1, 3), std::invalid_argument);

    SUBCASE("partition of the positive roots minus theta") {
        for (int n = 2; n <= 5; ++n) {
            int internal = 0, exposed = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    if (i == 1 && j == n) continue;
                    (classify_root(n, i, j) == RootClass::Internal ? internal : exposed)++;
                }
            CHECK(internal == (n - 1) * (n - 2) / 2);
            CHECK(internal + exposed == n * (n + 1) / 2 - 1);
        }
    }

    SUBCASE("Delta_0 analogue") {
        // m = 4: Delta_0 is the sl(4) root system on alpha_1..alpha_3
        CHECK(classify_root_delta0(4, 2, 2) == RootClass::Internal);
        CHECK(classify_root_delta0(4, 1, 2) == RootClass::Exposed);
        CHECK_THROWS_AS(classify_root_delta0(4, 1, 3), std::invalid_argument);
    }
}

TEST_CASE("good gradings") {
    SUBCASE("(n,m)=(3,3)") {
        GoodGrading g = good_grading(3, 3);
        CHECK(g.grade == std::vector<int>{0, 0, 1});
        CHECK(g.delta0_plus() ==
              std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
        CHECK(g.root_degree(1, 3) == 1);
    }
    SUBCASE("(n,m)=(3,4): zero nilpotent, everything in degree 0") {
        GoodGrading g = good_grading(3, 4);
        CHECK(g.delta0_plus().size() == 6);
        NilpotentRep f = hook_nilpotent(3, 4, false);
        CHECK(mat_is_zero(f.matrix));
    }
    SUBCASE("|Delta_0^+| = m(m-1)/2") {
        for (int n = 1; n <= 6; ++n)
            for (int m = 1; m <= n + 1; ++m)
                CHECK(static_cast<int>(good_grading(n, m).delta0_plus().size()) ==
                      m * (m - 1) / 2);
    }
}

TEST_CASE("hook nilpotent representatives and goodness") {
    SUBCASE("standard representative structure") {
        NilpotentRep f = hook_nilpotent(3, 2, false);
        Matrix want = mat_add(elem_matrix(4, 3, 2), elem_matrix(4, 4, 3));
        CHECK(f.matrix == want);
    }
    SUBCASE("bar representative at (3,3) is the single hook entry") {
        NilpotentRep f = hook_nilpotent(3, 3, true);
        CHECK(f.matrix == elem_matrix(4, 4, 1));
    }
    SUBCASE("goodness holds for all (n,m), n <= 5, both variants") {
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= n + 1; ++m) {
                CHECK_NOTHROW(hook_nilpotent(n, m, false));
                CHECK_NOTHROW(hook_nilpotent(n, m, true));
            }
    }
    SUBCASE("a bad pairing is rejected") {
        // alpha_1-grading with f supported in degree 0 is not good
        GoodGrading g = good_grading(2, 2);
        CHECK_FALSE(grading_is_good(g, elem_matrix(3, 2, 1)));  // f_1 has degree 0
        CHECK(grading_is_good(g, elem_matrix(3, 3, 2)));        // f_2 has degree -1
        CHECK_THROWS_AS(hook_nilpotent(3, 0, false), std::invalid_argument);
        CHECK_THROWS_AS(hook_nilpotent(3, 5, false), std::invalid_argument);
    }
}
