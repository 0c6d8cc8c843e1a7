#include "wva/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wva {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::k() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = *this;
    std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational f = r.leading() / d.leading();
        int shift = r.degree() - d.degree();
        q[static_cast<std::size_t>(shift)] = f;
        std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
        for (const auto& x : d.c_) sub.push_back(x * f);
        r = r - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Rational Poly::eval(const Rational& k0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k0 + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = coeff(i);
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? "-" : "+");
        }
        bool unit = mag.is_one() && i > 0;
        if (!unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "k";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rational lead = den.leading();
    num_ = num.scaled(lead.inverse());
    den_ = den.monic();
}

bool Scalar::is_one() const {
    return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one() &&
           den_.coeff(0).is_one();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    return *this = Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Scalar& Scalar::operator-=(const Scalar& o) {
    return *this = Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Scalar& Scalar::operator*=(const Scalar& o) {
    return *this = Scalar(num_ * o.num_, den_ * o.den_);
}
Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return *this = Scalar(num_ * o.den_, den_ * o.num_);
}

bool Scalar::operator<(const Scalar& o) const {
    auto cmp_poly = [](const Poly& a, const Poly& b) -> int {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp_poly(den_, o.den_) < 0;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Rational Scalar::eval(const Rational& k0) const {
    Rational d = den_.eval(k0);
    if (d.is_zero()) throw std::domain_error("pole at k = " + k0.str());
    return num_.eval(k0) / d;
}

std::optional<long> Scalar::integer_part() const {
    auto r = rational_part();
    if (!r) return std::nullopt;
    return r->as_long();
}

std::optional<Rational> Scalar::rational_part() const {
    if (den_.degree() != 0 || num_.degree() > 0) return std::nullopt;
    return num_.coeff(0) / den_.coeff(0);
}

std::string Scalar::str() const {
    if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::size_t Scalar::hash() const { return std::hash<std::string>()(str()); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// Parser for the scalar grammar: integers, `k`, + - * / ( ) ^.

namespace {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos_) +
                                    ": " + msg + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = power();
        for (;;) {
            if (eat('*'))
                v *= power();
            else if (eat('/'))
                v /= power();
            else
                return v;
        }
    }

    Scalar power() {
        Scalar base = atom();
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

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (c == 'k') {
            ++pos_;
            return Scalar::k();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).parse(); }

Scalar scalar_normalize(const Poly& num, const Poly& den) { return Scalar(num, den); }

Rational scalar_eval(const Scalar& s, const Rational& k0) { return s.eval(k0); }

std::optional<long> integer_part(const Scalar& s) { return s.integer_part(); }

}  // namespace wva
