#include "wva/presentation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wva {

namespace {

// Canonical sort key for the global generator order.  Heisenberg currents
// `a<i>` come first by index, then ghost pairs `B[i,j]`/`G[i,j]` by root
// (i,j) with beta before gamma, then the half-lattice currents `c`, `d`,
// then everything else in declaration order.
std::array<long, 5> sort_key(const std::string& name, long decl_index) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (name.size() >= 2 && name[0] == 'a' && all_digits(name.substr(1)))
        return {0, std::stol(name.substr(1)), 0, 0, 0};
    if ((name[0] == 'B' || name[0] == 'G') && name.size() >= 4 && name[1] == '[' &&
        name.back() == ']') {
        auto comma = name.find(',');
        if (comma != std::string::npos) {
            std::string i = name.substr(2, comma - 2);
            std::string j = name.substr(comma + 1, name.size() - comma - 2);
            if (all_digits(i) && all_digits(j))
                return {1, std::stol(i), std::stol(j), name[0] == 'G' ? 1 : 0, 0};
        }
    }
    if (name == "c") return {2, 0, 0, 0, 0};
    if (name == "d") return {2, 1, 0, 0, 0};
    return {3, decl_index, 0, 0, 0};
}

}  // namespace

void AlgebraPresentation::add_generator(const std::string& name, bool odd,
                                        std::optional<Scalar> weight) {
    if (finalized_) throw std::logic_error("presentation already finalized");
    if (gen_ids_.count(name)) throw std::invalid_argument("duplicate generator: " + name);
    gen_ids_[name] = -1;  // placeholder until finalize
    gens_.push_back(GeneratorDecl{name, odd, std::move(weight)});
}

void AlgebraPresentation::add_direction(const std::string& name) {
    if (finalized_) throw std::logic_error("presentation already finalized");
    if (dir_ids_.count(name)) throw std::invalid_argument("duplicate direction: " + name);
    dir_ids_[name] = static_cast<int>(dirs_.size());
    dirs_.push_back(name);
}

void AlgebraPresentation::finalize() {
    if (finalized_) throw std::logic_error("presentation already finalized");
    std::vector<std::pair<std::array<long, 5>, std::size_t>> keys;
    keys.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        keys.emplace_back(sort_key(gens_[i].name, static_cast<long>(i)), i);
    std::sort(keys.begin(), keys.end());
    std::vector<GeneratorDecl> sorted;
    sorted.reserve(gens_.size());
    for (auto& [key, i] : keys) sorted.push_back(std::move(gens_[i]));
    gens_ = std::move(sorted);
    for (std::size_t i = 0; i < gens_.size(); ++i) gen_ids_[gens_[i].name] = static_cast<int>(i);
    finalized_ = true;
}

int AlgebraPresentation::gen_id(const std::string& name) const {
    auto it = gen_ids_.find(name);
    if (it == gen_ids_.end() || it->second < 0)
        throw std::invalid_argument("unknown generator: " + name);
    return it->second;
}

int AlgebraPresentation::dir_id(const std::string& name) const {
    auto it = dir_ids_.find(name);
    if (it == dir_ids_.end()) throw std::invalid_argument("unknown direction: " + name);
    return it->second;
}

void AlgebraPresentation::set_gram(const std::string& dir_a, const std::string& dir_b,
                                   const Scalar& value) {
    int a = dir_id(dir_a), b = dir_id(dir_b);
    gram_[{std::min(a, b), std::max(a, b)}] = value;
}

void AlgebraPresentation::set_pairing(const std::string& gen, const std::string& dir,
                                      const Scalar& value) {
    pairing_[{gen_id(gen), dir_id(dir)}] = value;
}

void AlgebraPresentation::set_current(const std::string& dir, const std::string& gen) {
    currents_[dir_id(dir)] = gen_id(gen);
}

void AlgebraPresentation::set_bracket(const std::string& a, const std::string& b,
                                      const LambdaPoly& p) {
    int ia = gen_id(a), ib = gen_id(b);
    if (p.is_zero()) return;
    brackets_[{ia, ib}] = p;
}

bool AlgebraPresentation::monomial_odd(const Monomial& m) const {
    bool r = false;
    for (const Factor& f : m.factors) r ^= odd(f.gen);
    return r;
}

Scalar AlgebraPresentation::monomial_weight(const Monomial& m) const {
    Scalar w(0);
    for (const Factor& f : m.factors) {
        const auto& g = generator(f.gen);
        if (g.weight) w += *g.weight;
        w += Scalar(f.der);
    }
    return w;
}

Scalar AlgebraPresentation::gram(int dir_a, int dir_b) const {
    auto it = gram_.find({std::min(dir_a, dir_b), std::max(dir_a, dir_b)});
    return it == gram_.end() ? Scalar(0) : it->second;
}

Scalar AlgebraPresentation::gram(const ExponentVector& v, const ExponentVector& w) const {
    Scalar r(0);
    for (const auto& [dv, sv] : v.coeffs())
        for (const auto& [dw, sw] : w.coeffs()) r += sv * sw * gram(dv, dw);
    return r;
}

Scalar AlgebraPresentation::pairing(int gen, int dir) const {
    auto it = pairing_.find({gen, dir});
    return it == pairing_.end() ? Scalar(0) : it->second;
}

Scalar AlgebraPresentation::pairing(int gen, const ExponentVector& v) const {
    Scalar r(0);
    for (const auto& [dir, s] : v.coeffs()) r += s * pairing(gen, dir);
    return r;
}

FieldExpr AlgebraPresentation::current_of(const ExponentVector& v) const {
    FieldExpr r;
    for (const auto& [dir, s] : v.coeffs()) {
        auto it = currents_.find(dir);
        if (it == currents_.end())
            throw std::domain_error("direction '" + direction_name(dir) +
                                    "' has no declared current");
        r += FieldExpr::generator(it->second).scaled(s);
    }
    return r;
}

const LambdaPoly* AlgebraPresentation::find_bracket(int a, int b, bool& flipped) const {
    auto it = brackets_.find({a, b});
    if (it != brackets_.end()) {
        flipped = false;
        return &it->second;
    }
    it = brackets_.find({b, a});
    if (it != brackets_.end()) {
        flipped = true;
        return &it->second;
    }
    return nullptr;
}

bool AlgebraPresentation::is_free() const {
    for (const auto& [key, p] : brackets_)
        for (const auto& [deg, f] : p.coeffs())
            for (const auto& [m, s] : f.terms())
                if (!m.is_identity()) return false;
    return true;
}

}  // namespace wva
