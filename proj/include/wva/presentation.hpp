// An algebra presentation: generator declarations, pairwise lambda-brackets,
// and the lattice data for vertex-operator exponents (Gram matrix on
// exponent directions, generator-direction pairings, and the weight-1
// current attached to each direction).  Covers free-field stacks and
// abstract presentations alike.
//
// Two-phase construction: declare generators and exponent directions first,
// then finalize() sorts the generators into the global canonical order
// (Heisenberg directions by index, then ghosts by root (i,j) with beta
// before gamma, then the half-lattice currents c before d, then everything
// else in declaration order) and freezes the id assignment used by
// Monomial/FieldExpr.  Brackets, Gram entries, pairings and currents are
// declared after finalize().
#pragma once

#include "wva/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace wva {

struct GeneratorDecl {
    std::string name;
    bool odd = false;
    std::optional<Scalar> weight;  // conformal weight, when meaningful
};

class AlgebraPresentation {
  public:
    // --- phase 1: declarations ---
    void add_generator(const std::string& name, bool odd = false,
                       std::optional<Scalar> weight = std::nullopt);
    void add_direction(const std::string& name);
    void finalize();

    // --- phase 2: structure data (after finalize) ---
    void set_gram(const std::string& dir_a, const std::string& dir_b, const Scalar& value);
    void set_pairing(const std::string& gen, const std::string& dir, const Scalar& value);
    // Declares `gen` as the weight-1 current of `dir` (used by d(e^v)).
    void set_current(const std::string& dir, const std::string& gen);
    // Declares [a_lambda b]; the flipped bracket is derived by skew-symmetry.
    void set_bracket(const std::string& a, const std::string& b, const LambdaPoly& p);

    // --- queries ---
    bool finalized() const { return finalized_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    int num_directions() const { return static_cast<int>(dirs_.size()); }
    const GeneratorDecl& generator(int id) const { return gens_.at(static_cast<std::size_t>(id)); }
    const std::string& direction_name(int dir) const {
        return dirs_.at(static_cast<std::size_t>(dir));
    }
    int gen_id(const std::string& name) const;  // throws on unknown name
    int dir_id(const std::string& name) const;  // throws on unknown name
    bool has_generator(const std::string& name) const { return gen_ids_.count(name) != 0; }
    bool has_direction(const std::string& name) const { return dir_ids_.count(name) != 0; }

    bool odd(int gen) const { return generator(gen).odd; }
    bool monomial_odd(const Monomial& m) const;
    // Conformal weight of a monomial (derivatives add 1 each; exponents
    // contribute 0 for all lattices used here).  Unset generator weights
    // count as 0.
    Scalar monomial_weight(const Monomial& m) const;

    Scalar gram(int dir_a, int dir_b) const;
    Scalar gram(const ExponentVector& v, const ExponentVector& w) const;
    Scalar pairing(int gen, int dir) const;
    Scalar pairing(int gen, const ExponentVector& v) const;
    // Weight-1 current field of an exponent vector: sum over directions of
    // coefficient * current generator; throws if a direction with a nonzero
    // coefficient has no declared current.
    FieldExpr current_of(const ExponentVector& v) const;

    // Stored generator bracket [a_lambda b]; `flipped` reports whether the
    // value returned is actually the stored [b_lambda a] (the caller must
    // apply skew-symmetry).  Returns nullptr when neither order is stored.
    const LambdaPoly* find_bracket(int a, int b, bool& flipped) const;

    // A presentation is free when every stored bracket coefficient is a
    // multiple of the identity (required by the mode oracle).
    bool is_free() const;

  private:
    bool finalized_ = false;
    std::vector<GeneratorDecl> gens_;
    std::vector<std::string> dirs_;
    std::map<std::string, int> gen_ids_;
    std::map<std::string, int> dir_ids_;
    std::map<std::pair<int, int>, Scalar> gram_;
    std::map<std::pair<int, int>, Scalar> pairing_;
    std::map<int, int> currents_;  // dir -> gen
    std::map<std::pair<int, int>, LambdaPoly> brackets_;
};

}  // namespace wva
