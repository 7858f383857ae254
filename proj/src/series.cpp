#include "cfg/series.hpp"

namespace cfg {

LaurentPoly TruncatedSeries::scaled_coeff(int n) const {
    return Rational(factorial(n)) * coeff(n);
}

TruncatedSeries egf(const Grammar& g, const LaurentPoly& w, int N) {
    TruncatedSeries s(N);
    LaurentPoly d = w;
    for (int n = 0; n <= N; ++n) {
        s.set_coeff(n, Rational(1, factorial(n)) * d);
        if (n < N) d = formal_derivative(g, d);
    }
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) {
        LaurentPoly c;
        for (int k = 0; k <= n; ++k) c += a.coeff(k) * b.coeff(n - k);
        r.set_coeff(n, c);
    }
    return r;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    const LaurentPoly& b0 = b.coeff(0);
    if (b0.is_zero() || !b0.is_monomial())
        throw std::domain_error("leading coefficient not a unit");
    LaurentPoly b0_inv = b0.pow(-1);
    int N = std::min(a.order(), b.order());
    TruncatedSeries q(N);
    for (int n = 0; n <= N; ++n) {
        LaurentPoly acc = a.coeff(n);
        for (int k = 1; k <= n; ++k) acc = acc - b.coeff(k) * q.coeff(n - k);
        q.set_coeff(n, b0_inv * acc);
    }
    return q;
}

TruncatedSeries series_ddt(const TruncatedSeries& a) {
    if (a.order() < 1) throw std::invalid_argument("cannot differentiate an order-0 series");
    TruncatedSeries r(a.order() - 1);
    for (int n = 0; n < a.order(); ++n) r.set_coeff(n, Rational(n + 1) * a.coeff(n + 1));
    return r;
}

std::pair<TruncatedSeries, TruncatedSeries> sqrtfree_pair(SqrtFreeKind kind,
                                                          const LaurentPoly& A, int N) {
    TruncatedSeries S(N), C(N);
    LaurentPoly apow{Rational(1)};  // A^n
    for (int n = 0; 2 * n <= N; ++n) {
        Rational sign = (kind == SqrtFreeKind::trig && (n & 1)) ? -1 : 1;
        C.set_coeff(2 * n, sign / Rational(factorial(2 * n)) * apow);
        if (2 * n + 1 <= N)
            S.set_coeff(2 * n + 1, sign / Rational(factorial(2 * n + 1)) * apow);
        apow = apow * A;
    }
    return {std::move(S), std::move(C)};
}

TruncatedSeries andre_gf_rhs(int N) {
    LaurentPoly x = LaurentPoly::var("x"), y = LaurentPoly::var("y");
    LaurentPoly A = Rational(2) * x - y * y;
    auto [S, C] = sqrtfree_pair(SqrtFreeKind::trig, A, N);
    TruncatedSeries num(N), den(N);
    LaurentPoly xmy2 = x - y * y;
    for (int n = 0; n <= N; ++n) {
        num.set_coeff(n, y * A * S.coeff(n) - xmy2 * C.coeff(n));
        den.set_coeff(n, xmy2 * S.coeff(n) + y * C.coeff(n));
    }
    num.set_coeff(0, num.coeff(0) + x);
    return series_div(num, den);
}

TruncatedSeries gessel_gf_rhs(int N) {
    LaurentPoly B = LaurentPoly(Rational(1)) - LaurentPoly::var("x");
    auto [Sh, Ch] = sqrtfree_pair(SqrtFreeKind::hyperbolic, B, N);
    TruncatedSeries one(N), den(N);
    one.set_coeff(0, LaurentPoly(Rational(1)));
    for (int n = 0; n <= N; ++n) den.set_coeff(n, Ch.coeff(n) - Sh.coeff(n));
    return series_div(one, den);
}

TruncatedSeries aux_gf_rhs(int N) {
    LaurentPoly u = LaurentPoly::var("u"), v = LaurentPoly::var("v");
    auto [Sh, Ch] = sqrtfree_pair(SqrtFreeKind::hyperbolic, LaurentPoly(Rational(1)), N);
    TruncatedSeries num(N), den(N);
    num.set_coeff(0, v);
    LaurentPoly v2mu = v * v - u;
    for (int n = 0; n <= N; ++n) den.set_coeff(n, u * Ch.coeff(n) + v2mu * Sh.coeff(n));
    return series_div(num, den);
}

}  // namespace cfg
