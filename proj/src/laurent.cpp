#include "cfg/laurent.hpp"

#include <cctype>
#include <sstream>

namespace cfg {

Rational rational_pow(const Rational& base, long k) {
    if (k == 0) return 1;
    if (k < 0) {
        if (base == 0) throw std::domain_error("pole at evaluation point");
        return rational_pow(Rational(1) / base, -k);
    }
    Rational r = 1, b = base;
    long e = k;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Monomial::Monomial(std::map<std::string, long> e) : exps(std::move(e)) {
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->second == 0)
            it = exps.erase(it);
        else
            ++it;
    }
}

Monomial Monomial::var(const std::string& name, long exp) {
    Monomial m;
    if (exp != 0) m.exps[name] = exp;
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (const auto& [name, e] : exps) d += e;
    return d;
}

long Monomial::exponent(const std::string& name) const {
    auto it = exps.find(name);
    return it == exps.end() ? 0 : it->second;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [name, e] : other.exps) {
        long ne = r.exponent(name) + e;
        if (ne == 0)
            r.exps.erase(name);
        else
            r.exps[name] = ne;
    }
    return r;
}

Monomial Monomial::pow(long k) const {
    Monomial r;
    if (k == 0) return r;
    for (const auto& [name, e] : exps) r.exps[name] = e * k;
    return r;
}

bool Monomial::operator<(const Monomial& other) const {
    long da = degree(), db = other.degree();
    if (da != db) return da < db;
    // merge walk over variable names in ascending order; missing exponent is 0
    auto a = exps.begin();
    auto b = other.exps.begin();
    while (a != exps.end() || b != other.exps.end()) {
        long ea, eb;
        if (b == other.exps.end() || (a != exps.end() && a->first < b->first)) {
            ea = a->second, eb = 0;
            ++a;
        } else if (a == exps.end() || b->first < a->first) {
            ea = 0, eb = b->second;
            ++b;
        } else {
            ea = a->second, eb = b->second;
            ++a, ++b;
        }
        if (ea != eb) return ea < eb;
    }
    return false;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
    if (c != 0) terms_[m] = c;
}

LaurentPoly LaurentPoly::var(const std::string& name, long exp) {
    return LaurentPoly(Monomial::var(name, exp));
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
    return *this + (-q);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) {
        if (!is_monomial()) throw std::domain_error("not invertible");
        const auto& [m, c] = *terms_.begin();
        return LaurentPoly(m.pow(k), rational_pow(c, k));
    }
    LaurentPoly r(Rational(1)), b = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& image) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        LaurentPoly term{c};
        for (const auto& [name, e] : m.exps) {
            auto it = image.find(name);
            LaurentPoly img = it == image.end() ? var(name) : it->second;
            term = term * img.pow(e);
        }
        r += term;
    }
    return r;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& point) const {
    Rational r = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [name, e] : m.exps) {
            auto it = point.find(name);
            if (it == point.end())
                throw std::invalid_argument("unassigned variable: " + name);
            if (it->second == 0 && e < 0) throw std::domain_error("pole at evaluation point");
            v *= rational_pow(it->second, e);
        }
        r += v;
    }
    return r;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        bool coef_one = (c == 1) && !m.is_unit();
        bool coef_neg_one = (c == -1) && !m.is_unit();
        if (coef_neg_one) out += "-";
        std::string factors;
        for (const auto& [name, e] : m.exps) {
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (coef_one || coef_neg_one) {
            out += factors;
        } else {
            out += rational_str(c);
            if (!factors.empty()) out += "*" + factors;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i) + ": " + msg);
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return Integer(s.substr(start, i - start));
    }

    long parse_exponent() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i;
        } else if (peek() == '+') {
            ++i;
        }
        Integer v = parse_integer();
        long e = v.convert_to<long>();
        return neg ? -e : e;
    }

    std::string parse_name() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || !std::islower(static_cast<unsigned char>(s[i])))
            fail("expected variable name");
        ++i;
        while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                                std::isdigit(static_cast<unsigned char>(s[i]))))
            ++i;
        return s.substr(start, i - start);
    }

    // one term: [rational] {'*' var['^'exp] | var['^'exp]}...
    LaurentPoly parse_term() {
        Rational coef = 1;
        Monomial mono;
        bool saw_factor = false;
        while (peek() == '-' || peek() == '+') {
            if (s[i] == '-') coef = -coef;
            ++i;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = parse_integer();
            Integer den = 1;
            if (peek() == '/') {
                ++i;
                den = parse_integer();
                if (den == 0) fail("zero denominator");
            }
            coef *= Rational(num, den);
            saw_factor = true;
        }
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i;
                c = peek();
            } else if (!std::islower(static_cast<unsigned char>(c))) {
                break;
            }
            if (!std::islower(static_cast<unsigned char>(c))) fail("expected variable after '*'");
            std::string name = parse_name();
            long e = 1;
            if (peek() == '^') {
                ++i;
                e = parse_exponent();
            }
            mono = mono.times(Monomial::var(name, e));
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        return LaurentPoly(mono, coef);
    }

    LaurentPoly parse_poly() {
        LaurentPoly r;
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++i;
        } else if (peek() == '+') {
            ++i;
        }
        for (;;) {
            LaurentPoly t = parse_term();
            r += sign < 0 ? -t : t;
            if (eof()) break;
            char c = peek();
            if (c == '+')
                sign = 1;
            else if (c == '-')
                sign = -1;
            else
                fail("expected '+' or '-'");
            ++i;
        }
        return r;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    return p.parse_poly();
}

}  // namespace cfg
