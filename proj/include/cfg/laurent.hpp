#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace cfg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, long k);
Integer factorial(int n);
Integer binomial(int n, int k);

/// A variable exponent map in canonical form: no stored exponent is zero.
/// Ordering is graded lexicographic (total degree first, then exponents by
/// variable name), which fixes the display order of polynomial terms.
struct Monomial {
    std::map<std::string, long> exps;

    Monomial() = default;
    explicit Monomial(std::map<std::string, long> e);

    static Monomial var(const std::string& name, long exp = 1);

    long degree() const;
    long exponent(const std::string& name) const;
    Monomial times(const Monomial& other) const;
    Monomial pow(long k) const;
    bool is_unit() const { return exps.empty(); }

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator<(const Monomial& other) const;
};

/// Exact multivariate Laurent polynomial over arbitrary-precision rationals.
/// Canonical form: no zero coefficients; the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);          // constant
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Monomial& m, const Rational& c = 1);

    static LaurentPoly var(const std::string& name, long exp = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& q) const;
    LaurentPoly operator-(const LaurentPoly& q) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& q) const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    bool operator==(const LaurentPoly& q) const { return terms_ == q.terms_; }
    bool operator!=(const LaurentPoly& q) const { return !(*this == q); }

    /// p^k; k may be negative only when p is a single monomial.
    LaurentPoly pow(long k) const;

    /// Replace each variable by its image polynomial; unmapped variables map
    /// to themselves.  Variables occurring with a negative exponent must map
    /// to single monomials.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& image) const;

    /// Full evaluation at a rational point; every variable must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::map<Monomial, Rational> terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    return LaurentPoly(c) * p;
}

}  // namespace cfg
