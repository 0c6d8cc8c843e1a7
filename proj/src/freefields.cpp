#include "wva/freefields.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wva/parser.hpp"

namespace wva {

namespace {

void coord_check(int n, const Coord& c) {
    if (!(1 <= c.first && c.first <= c.second && c.second <= n))
        throw std::invalid_argument("coordinate index out of range");
}

void poly_add(CoordPoly& acc, const CoordMonomial& m, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

CoordPoly poly_const(const Rational& v) {
    CoordPoly r;
    poly_add(r, {}, v);
    return r;
}

CoordPoly poly_coord(const Coord& c) {
    CoordPoly r;
    poly_add(r, {c}, Rational(1));
    return r;
}

using PolyMatrix = std::vector<std::vector<CoordPoly>>;

// The unipotent coordinate matrix X = I + sum_{i<j} x_{i,j-1} M_{i,j}.
PolyMatrix coordinate_matrix(int n) {
    PolyMatrix X(static_cast<std::size_t>(n + 1),
                 std::vector<CoordPoly>(static_cast<std::size_t>(n + 1)));
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            auto& e = X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (i == j) e = poly_const(Rational(1));
            else if (i < j) e = poly_coord({i, j - 1});
        }
    return X;
}

std::string coord_str(const Coord& c) {
    return "x[" + std::to_string(c.first) + "," + std::to_string(c.second) + "]";
}

// The simple-root coefficient vector of alpha_{i,j} in sl(m') conventions.
std::vector<int> root_vec(int rank, int i, int j) {
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    for (int l = i; l <= j; ++l) v[static_cast<std::size_t>(l - 1)] = 1;
    return v;
}

std::vector<int> vec_add(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<int> vec_sub(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

long cartan_entry(int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); }

FieldExpr gen_field(const AlgebraPresentation& p, const std::string& name) {
    return FieldExpr::generator(p.gen_id(name));
}

}  // namespace

std::string DiffOpPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, poly] : terms) {
        for (const auto& [mono, v] : poly) {
            if (!first) os << " + ";
            first = false;
            os << v.str();
            for (const Coord& x : mono) os << "*" << coord_str(x);
            os << "*d/d" << coord_str(c);
        }
    }
    return first ? "0" : os.str();
}

DiffOpPoly rho_R(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("rho_R: index out of range");
    DiffOpPoly r;
    r.n = n;
    r.terms[{i, i}] = poly_const(Rational(1));
    for (int j = 1; j <= i - 1; ++j)
        r.terms[{i - j, i}] = poly_coord({i - j, i - 1});
    return r;
}

DiffOpPoly rho_R_matrix(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("rho_R_matrix: index out of range");
    const PolyMatrix X = coordinate_matrix(n);
    const Matrix E = lie_matrix(n, LieElem::E(i, i));
    DiffOpPoly r;
    r.n = n;
    // (X * E)_{j,k}: the vector-field coefficient of d/dx_{j,k-1}.
    for (int j = 1; j <= n + 1; ++j)
        for (int k = 1; k <= n + 1; ++k) {
            CoordPoly entry;
            for (int l = 1; l <= n + 1; ++l) {
                const Rational& e = E[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k - 1)];
                if (e.is_zero()) continue;
                const CoordPoly& x =
                    X[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)];
                for (const auto& [m, v] : x) poly_add(entry, m, v * e);
            }
            if (entry.empty()) continue;
            if (j >= k)
                throw std::logic_error("rho_R_matrix: tangent vector leaves the chart");
            const Coord c{j, k - 1};
            coord_check(n, c);
            for (const auto& [m, v] : entry) poly_add(r.terms[c], m, v);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Stack builders.
// ---------------------------------------------------------------------------

std::string heis_name(int i) { return "a" + std::to_string(i); }

std::string beta_name(int i, int j) {
    return "B[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string gamma_name(int i, int j) {
    return "G[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void add_heisenberg(AlgebraPresentation& p, int n) {
    for (int i = 1; i <= n; ++i) {
        p.add_generator(heis_name(i), false, Scalar(1));
        p.add_direction(heis_name(i));
    }
}

void wire_heisenberg(AlgebraPresentation& p, int n) {
    const Scalar shift = Scalar::k() + Scalar(n + 1);
    for (int i = 1; i <= n; ++i) {
        const std::string ai = heis_name(i);
        for (int j = 1; j <= n; ++j) {
            const std::string aj = heis_name(j);
            const Scalar g = shift * Scalar(cartan_entry(i, j));
            if (j >= i && !g.is_zero()) {
                LambdaPoly l;
                l.add(1, FieldExpr::single(Monomial{}, g));
                p.set_bracket(ai, aj, l);
                p.set_gram(ai, aj, g);
            }
            if (!g.is_zero()) p.set_pairing(ai, aj, g);
        }
        p.set_current(ai, ai);
    }
}

void add_ghost(AlgebraPresentation& p, int i, int j) {
    p.add_generator(beta_name(i, j), false);
    p.add_generator(gamma_name(i, j), false);
}

void wire_ghost(AlgebraPresentation& p, int i, int j) {
    LambdaPoly l;
    l.add(0, FieldExpr::single(Monomial{}, Scalar(-1)));
    p.set_bracket(beta_name(i, j), gamma_name(i, j), l);
}

void add_pi(AlgebraPresentation& p) {
    p.add_generator("c", false, Scalar(1));
    p.add_generator("d", false, Scalar(1));
    p.add_direction("c");
    p.add_direction("d");
}

void wire_pi(AlgebraPresentation& p) {
    LambdaPoly l;
    l.add(1, FieldExpr::single(Monomial{}, Scalar(2)));
    p.set_bracket("c", "d", l);
    p.set_gram("c", "d", Scalar(2));
    p.set_pairing("c", "d", Scalar(2));
    p.set_pairing("d", "c", Scalar(2));
    p.set_current("c", "c");
    p.set_current("d", "d");
}

FreeFieldStack make_stack(int n, std::vector<std::pair<int, int>> ghosts, bool pi) {
    FreeFieldStack s;
    s.n = n;
    s.ghosts = std::move(ghosts);
    s.pi = pi;
    if (n > 0) add_heisenberg(s.presentation, n);
    for (const auto& [i, j] : s.ghosts) add_ghost(s.presentation, i, j);
    if (pi) add_pi(s.presentation);
    s.presentation.finalize();
    if (n > 0) wire_heisenberg(s.presentation, n);
    for (const auto& [i, j] : s.ghosts) wire_ghost(s.presentation, i, j);
    if (pi) wire_pi(s.presentation);
    return s;
}

FreeFieldStack wakimoto_stack(int n) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) roots.emplace_back(i, j);
    return make_stack(n, std::move(roots), false);
}

FreeFieldStack hook_stack(int n, int m) {
    if (m < 1 || m > n + 1) throw std::invalid_argument("hook_stack: m out of range");
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j) roots.emplace_back(i, j);
    return make_stack(n, std::move(roots), false);
}

FreeFieldStack retilde_stack(int n, int m) {
    if (m < 2 || m > n + 1) throw std::invalid_argument("retilde_stack: m out of range");
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j)
            if (!(i == 1 && j == m - 1)) roots.emplace_back(i, j);
    return make_stack(n, std::move(roots), true);
}

FieldExpr omega_field(const Engine& eng, int n, int j) {
    RootDatum rd(n);
    FieldExpr r;
    for (int i = 1; i <= n; ++i) {
        const Scalar c(rd.inv_cartan(j, i));
        if (!c.is_zero()) r += gen_field(eng.presentation(), heis_name(i)).scaled(c);
    }
    return r;
}

ScreeningField make_screening(const FieldExpr& body) {
    if (body.is_zero()) throw std::invalid_argument("screening field must be nonzero");
    ScreeningField s;
    s.body = body;
    s.exponent = body.terms().begin()->first.exponent;
    if (s.exponent.is_zero())
        throw std::invalid_argument("screening field must carry an exponential");
    for (const auto& [m, v] : body.terms())
        if (m.exponent != s.exponent)
            throw std::invalid_argument("screening field has mixed exponents");
    return s;
}

// ---------------------------------------------------------------------------
// Screening fields.
// ---------------------------------------------------------------------------

ScreeningField wakimoto_screening(const Engine& eng, int n, int i) {
    const DiffOpPoly op = rho_R(n, i);
    std::map<std::string, Scalar> exp;
    exp[heis_name(i)] = Scalar(-1) / (Scalar::k() + Scalar(n + 1));
    std::vector<std::pair<Scalar, RawPtr>> terms;
    for (const auto& [coord, poly] : op.terms)
        for (const auto& [mono, v] : poly) {
            RawPtr t = raw_no(raw_gen(beta_name(coord.first, coord.second)), raw_vop(exp));
            for (auto it = mono.rbegin(); it != mono.rend(); ++it)
                t = raw_no(raw_gen(gamma_name(it->first, it->second)), t);
            terms.emplace_back(Scalar(v), t);
        }
    return make_screening(eng.canonicalize(raw_lin(std::move(terms))));
}

std::vector<ScreeningField> wakimoto_screenings(const Engine& eng, int n) {
    std::vector<ScreeningField> r;
    for (int i = 1; i <= n; ++i) r.push_back(wakimoto_screening(eng, n, i));
    return r;
}

std::vector<ScreeningField> hook_screenings(const Engine& eng, int n, int m, bool bar) {
    if (m < 2 || m > n + 1) throw std::invalid_argument("hook_screenings: m out of range");
    const AlgebraPresentation& p = eng.presentation();
    std::vector<ScreeningField> r;
    for (int i = 1; i <= n; ++i) {
        if (i <= m - 1) {
            ScreeningField s = wakimoto_screening(eng, n, i);
            // The ghost content must stay inside the degree-0 block.
            for (const auto& [mono, v] : s.body.terms())
                for (const Factor& f : mono.factors) {
                    const std::string& name = p.generator(f.gen).name;
                    if (name.empty() || (name[0] != 'B' && name[0] != 'G')) continue;
                    const auto comma = name.find(',');
                    const int top = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
                    if (top > m - 1)
                        throw std::logic_error("hook screening leaves the degree-0 ghosts");
                }
            r.push_back(std::move(s));
            continue;
        }
        std::map<std::string, Scalar> exp;
        exp[heis_name(i)] = Scalar(-1) / (Scalar::k() + Scalar(n + 1));
        RawPtr t = raw_vop(exp);
        if (bar && i == m && m <= n) t = raw_no(raw_gen(gamma_name(1, m - 1)), t);
        r.push_back(make_screening(eng.canonicalize(t)));
    }
    return r;
}

ScreeningField fms_screening(const Engine& eng) {
    std::map<std::string, Scalar> exp;
    exp["c"] = Scalar(Rational(1, 2));
    exp["d"] = Scalar(Rational(1, 2));
    return make_screening(eng.canonicalize(raw_vop(exp)));
}

// ---------------------------------------------------------------------------
// Bosonization and substitution.
// ---------------------------------------------------------------------------

namespace {

// Rebuilds x over dst, replacing generator occurrences by `images` (missing
// names map to the same-named dst generator) and transporting exponents by
// direction name.
FieldExpr map_expr(const AlgebraPresentation& src, const Engine& dst,
                   const std::map<std::string, FieldExpr>& images, const FieldExpr& x) {
    const AlgebraPresentation& q = dst.presentation();
    FieldExpr out;
    for (const auto& [mono, s] : x.terms()) {
        Monomial base;
        for (const auto& [dir, coef] : mono.exponent.coeffs())
            base.exponent.set(q.dir_id(src.direction_name(dir)), coef);
        FieldExpr cur = FieldExpr::single(base, Scalar(1));
        for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it) {
            const std::string& name = src.generator(it->gen).name;
            auto im = images.find(name);
            FieldExpr g = im != images.end() ? im->second : gen_field(q, name);
            if (it->der > 0) g = dst.derivative(g, it->der);
            cur = dst.nop(g, cur);
        }
        out += cur.scaled(s);
    }
    return out;
}

}  // namespace

FieldExpr fms_bosonize(const Engine& src, const Engine& dst, std::pair<int, int> root,
                       const FieldExpr& x) {
    const AlgebraPresentation& sp = src.presentation();
    if (sp.has_direction("c") || sp.has_direction("d"))
        throw std::domain_error("fms_bosonize: the half-lattice directions are already in use");
    const std::string b = beta_name(root.first, root.second);
    const std::string g = gamma_name(root.first, root.second);
    if (!sp.has_generator(b) || !sp.has_generator(g))
        throw std::invalid_argument("fms_bosonize: missing ghost pair at the requested root");
    std::map<std::string, FieldExpr> images;
    images[b] = parse_canonical(dst, "vop{c: 1}");
    images[g] = parse_canonical(dst, "1/2*no(c, vop{c: -1}) + 1/2*no(d, vop{c: -1})");
    return map_expr(sp, dst, images, x);
}

FieldExpr substitute(const Engine& eng, const std::map<std::string, FieldExpr>& images,
                     const FieldExpr& x) {
    return map_expr(eng.presentation(), eng, images, x);
}

// ---------------------------------------------------------------------------
// Tilded families.
// ---------------------------------------------------------------------------

TildeFamily tilde_family(const Engine& eng, int n, int m) {
    if (m < 2 || m > n + 1) throw std::invalid_argument("tilde_family: m out of range");
    const AlgebraPresentation& p = eng.presentation();
    TildeFamily tf;
    tf.n = n;
    tf.m = m;

    const Scalar shift = Scalar::k() + Scalar(n + 1);
    const FieldExpr c = gen_field(p, "c");
    const FieldExpr d = gen_field(p, "d");
    const FieldExpr emc = parse_canonical(eng, "vop{c: -1}");

    // The degree-0 roots minus the highest one, with their coefficient
    // vectors in the rank-(m-1) subsystem.
    std::vector<std::pair<int, int>> delta;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j)
            if (!(i == 1 && j == m - 1)) delta.emplace_back(i, j);
    const std::vector<int> theta0 = root_vec(m - 1, 1, m - 1);
    auto vec = [&](const std::pair<int, int>& r) { return root_vec(m - 1, r.first, r.second); };
    auto beta = [&](const std::pair<int, int>& r) {
        return gen_field(p, beta_name(r.first, r.second));
    };
    auto gamma = [&](const std::pair<int, int>& r) {
        return gen_field(p, gamma_name(r.first, r.second));
    };

    // Heisenberg and half-lattice entries.
    for (int i = 1; i <= n; ++i) {
        const FieldExpr ai = gen_field(p, heis_name(i));
        FieldExpr corr;
        if (i == m - 1) corr = c.scaled(shift);
        tf.definitions[heis_name(i)] = ai - corr;
        tf.inverse[heis_name(i)] = ai + corr;
    }
    tf.definitions["c"] = c;
    tf.inverse["c"] = c;

    RootDatum rd(n);
    const Scalar w2(rd.inv_cartan(m - 1, m - 1));  // <omega_{m-1}, omega_{m-1}>
    const FieldExpr omega = omega_field(eng, n, m - 1);

    FieldExpr corr_d;  // ordered-pair and ordered-triple ghost sums
    for (const auto& r1 : delta)
        for (const auto& r2 : delta)
            if (vec_add(vec(r1), vec(r2)) == theta0)
                corr_d += eng.nop(beta(r1), eng.nop(beta(r2), emc));
    for (const auto& r1 : delta)
        for (const auto& r2 : delta)
            for (const auto& r3 : delta)
                if (vec_sub(vec_add(vec(r2), vec(r3)), vec(r1)) == theta0)
                    corr_d += eng.nop(gamma(r1), eng.nop(beta(r2), eng.nop(beta(r3), emc)));
    tf.definitions["d"] = d - c.scaled(shift * w2) + omega.scaled(Scalar(2)) - corr_d;
    tf.inverse["d"] = d - c.scaled(shift * w2) - omega.scaled(Scalar(2)) + corr_d;

    // Ghost entries.
    for (const auto& r : delta) {
        const std::vector<int> vr = vec(r);
        FieldExpr corr_b;
        const std::vector<int> btarget = vec_add(theta0, vr);
        for (const auto& r1 : delta)
            for (const auto& r2 : delta)
                if (vec_add(vec(r1), vec(r2)) == btarget)
                    corr_b +=
                        eng.nop(beta(r1), eng.nop(beta(r2), emc)).scaled(Scalar(Rational(1, 2)));
        tf.definitions[beta_name(r.first, r.second)] = beta(r) - corr_b;
        tf.inverse[beta_name(r.first, r.second)] = beta(r) + corr_b;

        FieldExpr corr_g;
        const std::vector<int> gtarget = vec_sub(theta0, vr);
        for (const auto& r1 : delta)
            if (vec(r1) == gtarget) corr_g += eng.nop(beta(r1), emc);
        for (const auto& r1 : delta)
            for (const auto& r2 : delta)
                if (vec_sub(vec(r2), vec(r1)) == gtarget)
                    corr_g += eng.nop(gamma(r1), eng.nop(beta(r2), emc));
        tf.definitions[gamma_name(r.first, r.second)] = gamma(r) + corr_g;
        tf.inverse[gamma_name(r.first, r.second)] = gamma(r) - corr_g;
    }
    return tf;
}

// ---------------------------------------------------------------------------
// Explicit sl(4) tables.
// ---------------------------------------------------------------------------

EmbeddingTable wakimoto_sl4_table(const Engine& eng) {
    EmbeddingTable t;
    auto set = [&](const std::string& name, const std::string& text) {
        t[name] = parse_canonical(eng, text);
    };
    set("e1", "B[1,1] + no(B[1,2], G[2,2]) + no(B[1,3], G[2,3])");
    set("e2", "B[2,2] + no(B[2,3], G[3,3])");
    set("e3", "B[3,3]");
    set("h1",
        "a1 + 2*no(B[1,1], G[1,1]) - no(B[2,2], G[2,2]) + no(B[1,2], G[1,2])"
        " - no(B[2,3], G[2,3]) + no(B[1,3], G[1,3])");
    set("h2",
        "a2 - no(B[1,1], G[1,1]) + 2*no(B[2,2], G[2,2]) - no(B[3,3], G[3,3])"
        " + no(B[1,2], G[1,2]) + no(B[2,3], G[2,3])");
    set("h3",
        "a3 - no(B[2,2], G[2,2]) + 2*no(B[3,3], G[3,3]) - no(B[1,2], G[1,2])"
        " + no(B[2,3], G[2,3]) + no(B[1,3], G[1,3])");
    set("f1",
        "-no(a1, G[1,1]) - no(B[1,1], no(G[1,1], G[1,1])) + no(B[2,2], G[1,2])"
        " + no(B[2,3], G[1,3]) - (k+2)*der(1, G[1,1])");
    set("f2",
        "-no(a2, G[2,2]) - no(B[2,2], no(G[2,2], G[2,2])) + no(B[1,1], no(G[1,1], G[2,2]))"
        " - no(B[1,2], no(G[2,2], G[1,2])) - no(B[1,1], G[1,2]) + no(B[3,3], G[2,3])"
        " - (k+1)*der(1, G[2,2])");
    set("f3",
        "-no(a3, G[3,3]) - no(B[3,3], no(G[3,3], G[3,3])) + no(B[2,2], no(G[2,2], G[3,3]))"
        " + no(B[1,2], no(G[3,3], G[1,2])) - no(B[2,3], no(G[3,3], G[2,3]))"
        " - no(B[1,3], no(G[3,3], G[1,3])) - no(B[2,2], G[2,3]) - no(B[1,2], G[1,3])"
        " - k*der(1, G[3,3])");
    return t;
}

void add_minimal_sl4(AlgebraPresentation& p) {
    p.add_generator("L", false, Scalar(2));
    p.add_generator("H", false, Scalar(1));
    p.add_generator("E", false, Scalar(1));
    p.add_generator("F", false, Scalar(1));
    p.add_generator("J", false, Scalar(1));
    for (const char* name : {"P1p", "P1m", "P2p", "P2m"})
        p.add_generator(name, false, Scalar(Rational(3, 2)));
}

void wire_minimal_sl4(AlgebraPresentation& p) {
    Engine eng(p);
    const Scalar k = Scalar::k();
    auto f = [&](const std::string& text) { return parse_canonical(eng, text); };
    auto set = [&](const std::string& a, const std::string& b, const LambdaPoly& l) {
        p.set_bracket(a, b, l);
    };
    auto lp = [](std::vector<std::pair<int, FieldExpr>> cs) {
        LambdaPoly l;
        for (const auto& [deg, fe] : cs) l.add(deg, fe);
        return l;
    };
    const FieldExpr one = FieldExpr::identity();

    // Conformal structure: central charge -3k(2k+3)/(k+4).
    const Scalar cc = Scalar(-3) * k * (Scalar(2) * k + Scalar(3)) / (k + Scalar(4));
    set("L", "L", lp({{3, one.scaled(cc / Scalar(2))}, {1, f("2*L")}, {0, f("der(1, L)")}}));
    for (const char* x : {"H", "E", "F", "J"})
        set("L", x, lp({{1, f(x)}, {0, f(std::string("der(1, ") + x + ")")}}));
    for (const char* x : {"P1p", "P1m", "P2p", "P2m"})
        set("L", x,
            lp({{1, f(x).scaled(Scalar(Rational(3, 2)))}, {0, f(std::string("der(1, ") + x + ")")}}));

    // The level-(k+1) sl(2) block and the rank-one Heisenberg J.
    set("H", "H", lp({{1, one.scaled(Scalar(2) * (k + Scalar(1)))}}));
    set("H", "E", lp({{0, f("2*E")}}));
    set("H", "F", lp({{0, f("-2*F")}}));
    set("E", "F", lp({{1, one.scaled(k + Scalar(1))}, {0, f("H")}}));
    set("J", "J", lp({{1, one.scaled(k + Scalar(2))}}));

    // Charges of the weight-3/2 fields.
    set("H", "P1p", lp({{0, f("P1p")}}));
    set("H", "P1m", lp({{0, f("P1m")}}));
    set("H", "P2p", lp({{0, f("-P2p")}}));
    set("H", "P2m", lp({{0, f("-P2m")}}));
    set("J", "P1p", lp({{0, f("P1p")}}));
    set("J", "P2p", lp({{0, f("P2p")}}));
    set("J", "P1m", lp({{0, f("-P1m")}}));
    set("J", "P2m", lp({{0, f("-P2m")}}));
    set("E", "P2m", lp({{0, f("P1m")}}));
    set("E", "P2p", lp({{0, f("-P1p")}}));
    set("F", "P1m", lp({{0, f("P2m")}}));
    set("F", "P1p", lp({{0, f("-P2p")}}));

    // The singular P-P products.
    set("P1m", "P1p",
        lp({{1, f("E").scaled(Scalar(-2) * (k + Scalar(2)))},
            {0, f("2*no(J, E) - (k+2)*der(1, E)")}}));
    set("P2m", "P2p",
        lp({{1, f("F").scaled(Scalar(-2) * (k + Scalar(2)))},
            {0, f("2*no(J, F) - (k+2)*der(1, F)")}}));
    set("P1m", "P2p",
        lp({{2, one.scaled(Scalar(-2) * (k + Scalar(1)) * (k + Scalar(2)))},
            {1, f("J").scaled(Scalar(2) * (k + Scalar(1))) - f("H").scaled(k + Scalar(2))},
            {0, f("L").scaled(k + Scalar(4)) +
                    f("-2*no(E, F) - 1/2*no(H, H) + no(H, J) - 3/2*no(J, J)") +
                    f("der(1, H)").scaled(Scalar(-1) * k / Scalar(2)) +
                    f("der(1, J)").scaled(k + Scalar(1))}}));
    set("P1p", "P2m",
        lp({{2, one.scaled(Scalar(2) * (k + Scalar(1)) * (k + Scalar(2)))},
            {1, f("J").scaled(Scalar(2) * (k + Scalar(1))) + f("H").scaled(k + Scalar(2))},
            {0, f("L").scaled(Scalar(-1) * (k + Scalar(4))) +
                    f("2*no(E, F) + 1/2*no(H, H) + no(H, J) + 3/2*no(J, J)") +
                    f("der(1, H)").scaled(k / Scalar(2)) +
                    f("der(1, J)").scaled(k + Scalar(1))}}));
}

AlgebraPresentation minimal_sl4_presentation() {
    AlgebraPresentation p;
    add_minimal_sl4(p);
    p.finalize();
    wire_minimal_sl4(p);
    return p;
}

EmbeddingTable minimal_sl4_wakimoto_table(const Engine& eng) {
    EmbeddingTable t;
    auto set = [&](const std::string& name, const std::string& text) {
        t[name] = parse_canonical(eng, text);
    };
    set("E", "B[2,2]");
    set("J", "1/2*a1 - 1/2*a3 + no(B[1,1], G[1,1]) + no(B[1,2], G[1,2])");
    set("H", "a2 - no(B[1,1], G[1,1]) + no(B[1,2], G[1,2]) + 2*no(B[2,2], G[2,2])");
    set("P1p",
        "-no(B[1,1], B[2,2]) + no(B[1,2], no(B[1,2], G[1,2])) - no(B[1,2], a3)"
        " - (k+2)*der(1, B[1,2])");
    return t;
}

}  // namespace wva
