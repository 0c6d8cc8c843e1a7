// Builders for the free-field algebras used throughout: rank-n Heisenberg
// stacks at shifted level k+n+1, beta/gamma ghost pairs indexed by positive
// roots, the half-lattice Pi block, right-action differential operators with
// a brute-force matrix oracle, Wakimoto/hook screening fields, ghost
// bosonization into Pi, tilded-generator substitution families with their
// inverses, and the explicit sl(4) embedding tables.
#pragma once

#include "wva/engine.hpp"
#include "wva/rootdata.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wva {

// ---------------------------------------------------------------------------
// Right-action differential operators on the unipotent coordinates x_{j,k}
// (1 <= j <= k <= n), as polynomial vector fields.
// ---------------------------------------------------------------------------

using Coord = std::pair<int, int>;           // the coordinate x_{j,k}
using CoordMonomial = std::vector<Coord>;    // sorted multiset of coordinates
using CoordPoly = std::map<CoordMonomial, Rational>;

struct DiffOpPoly {
    int n = 0;
    std::map<Coord, CoordPoly> terms;  // coefficient polynomial of d/dx_{j,k}

    friend bool operator==(const DiffOpPoly& a, const DiffOpPoly& b) {
        return a.n == b.n && a.terms == b.terms;
    }
    std::string str() const;
};

// Closed form: d/dx_{i,i} + sum_{j=1}^{i-1} x_{i-j,i-1} d/dx_{i-j,i}.
DiffOpPoly rho_R(int n, int i);
// Independent oracle: right multiplication of the unipotent coordinate
// matrix X = I + sum_{i<j} x_{i,j-1} M_{i,j} by the simple root vector,
// read off entry-wise as a vector field.
DiffOpPoly rho_R_matrix(int n, int i);

// ---------------------------------------------------------------------------
// Stack builders and the naming scheme shared by all presentations.
// ---------------------------------------------------------------------------

std::string heis_name(int i);                // "a<i>"
std::string beta_name(int i, int j);         // "B[i,j]"
std::string gamma_name(int i, int j);        // "G[i,j]"

// Rank-n Heisenberg with exponent directions; brackets/Gram/pairings all
// carry the shifted level (k+n+1) times the Cartan matrix.
void add_heisenberg(AlgebraPresentation& p, int n);
void wire_heisenberg(AlgebraPresentation& p, int n);
// One bosonic ghost pair at root alpha_{i,j} with [B_lambda G] = -1.
void add_ghost(AlgebraPresentation& p, int i, int j);
void wire_ghost(AlgebraPresentation& p, int i, int j);
// Half-lattice block: currents c, d with <c,d> = 2, <c,c> = <d,d> = 0.
void add_pi(AlgebraPresentation& p);
void wire_pi(AlgebraPresentation& p);

struct FreeFieldStack {
    int n = 0;  // Heisenberg rank (0 = no bosons)
    std::vector<std::pair<int, int>> ghosts;
    bool pi = false;
    AlgebraPresentation presentation;
};

FreeFieldStack make_stack(int n, std::vector<std::pair<int, int>> ghosts, bool pi);
// Heisenberg + ghosts at every positive root alpha_{i,j}, 1 <= i <= j <= n.
FreeFieldStack wakimoto_stack(int n);
// Heisenberg + ghosts at the degree-0 roots alpha_{i,j}, j <= m-1.
FreeFieldStack hook_stack(int n, int m);
// hook_stack(n, m) with the ghost pair at theta_0 = alpha_{1,m-1} replaced
// by the Pi block (the target of bosonization).
FreeFieldStack retilde_stack(int n, int m);

// Fundamental-weight Heisenberg field: the inverse-Cartan combination of the
// a_i, so its bracket with a_i has pole-2 coefficient (k+n+1) delta_{ij}.
FieldExpr omega_field(const Engine& eng, int n, int j);

// Wraps a single-exponential field as a screening datum (throws if the
// monomials do not all share one nonzero exponent).
ScreeningField make_screening(const FieldExpr& body);

// ---------------------------------------------------------------------------
// Screening fields.  All builders operate over the caller's presentation,
// which must contain the referenced generator/direction names.
// ---------------------------------------------------------------------------

// S_i = :(beta_i + sum_{j<i} gamma_{i-j,i-1} beta_{i-j,i}) e^{-a_i/(k+n+1)}:,
// assembled from rho_R(n, i) with coordinates read as ghosts.
ScreeningField wakimoto_screening(const Engine& eng, int n, int i);
std::vector<ScreeningField> wakimoto_screenings(const Engine& eng, int n);
// Q_i = S_i for i <= m-1; pure vertex operators e^{-a_i/(k+n+1)} for i >= m;
// with the bar variant replacing Q_m by :gamma_{1,m-1} e^{-a_m/(k+n+1)}:.
std::vector<ScreeningField> hook_screenings(const Engine& eng, int n, int m, bool bar);
// e^{c/2 + d/2}, the kernel characterization of the bosonized ghost pair.
ScreeningField fms_screening(const Engine& eng);

// ---------------------------------------------------------------------------
// Bosonization and generator substitution.
// ---------------------------------------------------------------------------

// Image of x under the ghost-pair bosonization at `root`:
// beta -> e^c, gamma -> 1/2 :(c+d) e^{-c}:, all other generators and
// exponent directions fixed.  `src` must contain the pair and no Pi block;
// `dst` is the same stack with the pair replaced by Pi.
FieldExpr fms_bosonize(const Engine& src, const Engine& dst, std::pair<int, int> root,
                       const FieldExpr& x);

// Replaces each generator occurrence by the mapped field (missing names map
// to themselves); exponents are kept as-is, so mapped images must not be
// needed for exponent directions.
FieldExpr substitute(const Engine& eng, const std::map<std::string, FieldExpr>& images,
                     const FieldExpr& x);

// ---------------------------------------------------------------------------
// Tilded generator families over retilde_stack(n, m).
// ---------------------------------------------------------------------------

struct TildeFamily {
    int n = 0;
    int m = 0;
    // name -> the tilded version of that generator, as a field in the
    // untilded generators (c-tilde = c is included; e^{mc} is unchanged).
    std::map<std::string, FieldExpr> definitions;
    // name -> the untilded generator written in the tilded generators
    // (tilded fields referenced by their plain names).  Substituting
    // `definitions` into an entry returns the plain generator.
    std::map<std::string, FieldExpr> inverse;
};

TildeFamily tilde_family(const Engine& eng, int n, int m);

// ---------------------------------------------------------------------------
// Explicit sl(4) tables.
// ---------------------------------------------------------------------------

using EmbeddingTable = std::map<std::string, FieldExpr>;

// Images of e_i, h_i, f_i (i = 1..3) over wakimoto_stack(3).
EmbeddingTable wakimoto_sl4_table(const Engine& eng);

// The nine strong generators L, H, E, F, J, P1p, P1m, P2p, P2m of the
// minimal sl(4) W-algebra with their bracket table.
void add_minimal_sl4(AlgebraPresentation& p);
void wire_minimal_sl4(AlgebraPresentation& p);
AlgebraPresentation minimal_sl4_presentation();

// Images of E, J, H, P1p over hook_stack(3, 3).
EmbeddingTable minimal_sl4_wakimoto_table(const Engine& eng);

}  // namespace wva
