#include "wva/parser.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wva {

namespace {

class FieldParser {
  public:
    explicit FieldParser(const std::string& text) : s_(text) {}

    RawPtr parse() {
        RawPtr r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("field parse error at offset " + std::to_string(pos_) + ": " +
                                    msg + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    // expr := ['-'] term (('+'|'-') term)*
    RawPtr expr() {
        std::vector<std::pair<Scalar, RawPtr>> terms;
        bool neg = eat('-');
        terms.push_back(term(neg));
        for (;;) {
            if (eat('+'))
                terms.push_back(term(false));
            else if (eat('-'))
                terms.push_back(term(true));
            else
                break;
        }
        if (terms.size() == 1 && terms[0].first.is_one()) return terms[0].second;
        return raw_lin(std::move(terms));
    }

    // term := factor ('*' factor)*, where factors are scalar atoms and at
    // most one field primary.
    std::pair<Scalar, RawPtr> term(bool negated) {
        Scalar coef(negated ? -1 : 1);
        RawPtr field;
        for (;;) {
            skip_ws();
            if (is_field_start()) {
                if (field) fail("two field factors in one term (use no(X, Y))");
                field = primary();
            } else {
                coef *= scalar_atom();
            }
            while (eat('/')) coef /= scalar_atom();
            if (!eat('*')) break;
        }
        if (!field) field = raw_vop({});  // scalar multiple of the identity
        return {coef, std::move(field)};
    }

    // A field primary starts with an identifier (generator name, possibly
    // with a [i,j] suffix) or one of the keywords der/no/vop.  Everything
    // else (digits, 'k' as a bare symbol, parentheses) is scalar territory;
    // 'k' never names a generator.
    bool is_field_start() {
        char c = peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) return false;
        std::size_t p = pos_;
        std::string id = peek_ident(p);
        return id != "k";
    }

    std::string peek_ident(std::size_t& p) const {
        std::size_t q = p;
        while (q < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_'))
            ++q;
        std::string id = s_.substr(p, q - p);
        p = q;
        return id;
    }

    RawPtr primary() {
        skip_ws();
        std::size_t p = pos_;
        std::string id = peek_ident(p);
        if (id.empty()) fail("expected field primary");
        if (id == "der") {
            pos_ = p;
            expect('(');
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected derivative order");
            int n = std::stoi(s_.substr(start, pos_ - start));
            expect(',');
            RawPtr x = expr();
            expect(')');
            return raw_der(n, std::move(x));
        }
        if (id == "no") {
            pos_ = p;
            expect('(');
            RawPtr a = expr();
            expect(',');
            RawPtr b = expr();
            expect(')');
            return raw_no(std::move(a), std::move(b));
        }
        if (id == "vop") {
            pos_ = p;
            expect('{');
            std::map<std::string, Scalar> exponent;
            if (!eat('}')) {
                for (;;) {
                    skip_ws();
                    std::size_t q = pos_;
                    std::string dir = peek_ident(q);
                    if (dir.empty()) fail("expected direction name in vop{...}");
                    pos_ = q;
                    expect(':');
                    exponent[dir] = exponent.count(dir) ? exponent[dir] + scalar_until(",}")
                                                        : scalar_until(",}");
                    if (eat('}')) break;
                    expect(',');
                }
            }
            return raw_vop(std::move(exponent));
        }
        // Generator name, optionally with a [i,j] suffix.
        pos_ = p;
        if (pos_ < s_.size() && s_[pos_] == '[') {
            std::size_t close = s_.find(']', pos_);
            if (close == std::string::npos) fail("unterminated '[' in generator name");
            id += s_.substr(pos_, close - pos_ + 1);
            pos_ = close + 1;
        }
        return raw_gen(id);
    }

    // Scalar atom: number, k, or parenthesized scalar expression (with
    // balanced parentheses), handed to the Scalar parser verbatim.
    Scalar scalar_atom() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            int depth = 0;
            do {
                if (pos_ >= s_.size()) fail("unbalanced '('");
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            } while (depth > 0);
            return Scalar::parse(s_.substr(start, pos_ - start));
        }
        if (pos_ < s_.size() && s_[pos_] == 'k') {
            ++pos_;
            Scalar v = Scalar::k();
            return maybe_pow(v);
        }
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected scalar atom");
        return maybe_pow(Scalar::parse(s_.substr(start, pos_ - start)));
    }

    Scalar maybe_pow(Scalar base) {
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            long e = std::stol(s_.substr(start, pos_ - start));
            Scalar v(1);
            for (long i = 0; i < e; ++i) v *= base;
            return v;
        }
        return base;
    }

    // Reads a scalar expression up to (not including) any of the stop
    // characters at parenthesis depth 0.
    Scalar scalar_until(const std::string& stops) {
        skip_ws();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            ++pos_;
        }
        return Scalar::parse(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

bool scalar_is_simple(const Scalar& s) {
    // Safe to print unparenthesized as a multiplicative factor.
    auto r = s.rational_part();
    return r.has_value() && r->sign() > 0 && r->is_integer();
}

}  // namespace

RawPtr parse_field(const std::string& text) { return FieldParser(text).parse(); }

FieldExpr parse_canonical(const Engine& eng, const std::string& text) {
    return eng.canonicalize(parse_field(text));
}

std::string print_monomial(const AlgebraPresentation& p, const Monomial& m) {
    std::vector<std::string> parts;
    for (const Factor& f : m.factors) {
        const std::string& name = p.generator(f.gen).name;
        parts.push_back(f.der == 0 ? name : "der(" + std::to_string(f.der) + ", " + name + ")");
    }
    if (!m.exponent.is_zero()) {
        std::ostringstream os;
        os << "vop{";
        bool first = true;
        for (const auto& [dir, s] : m.exponent.coeffs()) {
            if (!first) os << ", ";
            first = false;
            os << p.direction_name(dir) << ": " << s.str();
        }
        os << "}";
        parts.push_back(os.str());
    }
    if (parts.empty()) return "1";
    std::string acc = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        acc = "no(" + *it + ", " + acc + ")";
    return acc;
}

std::string print_field(const AlgebraPresentation& p, const FieldExpr& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, s] : f.terms()) {
        std::string ms = print_monomial(p, m);
        Scalar coef = s;
        bool neg = false;
        if (auto r = s.rational_part(); r && r->sign() < 0) {
            neg = true;
            coef = -s;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.is_identity()) {
            os << (scalar_is_simple(coef) ? coef.str() : "(" + coef.str() + ")");
        } else if (coef.is_one()) {
            os << ms;
        } else if (scalar_is_simple(coef)) {
            os << coef.str() << "*" << ms;
        } else {
            os << "(" << coef.str() << ")*" << ms;
        }
    }
    return os.str();
}

std::string print_poles(const AlgebraPresentation& p, const OPEResult& r) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [n, f] : r.poles) {
        if (!first) os << ", ";
        first = false;
        os << n << ": " << print_field(p, f);
    }
    os << "}";
    return os.str();
}

std::string print_lambda(const AlgebraPresentation& p, const LambdaPoly& l) {
    return print_poles(p, to_ope(l));
}

}  // namespace wva
