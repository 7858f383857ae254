#pragma once

#include "cfg/grammar.hpp"

#include <vector>

namespace cfg {

/// EGF in the time variable t, truncated at order N; coefficient of t^n is a
/// LaurentPoly (stored with its 1/n! factor absorbed into the rationals).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1) {
        if (order < 0) throw std::invalid_argument("order must be >= 0");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& coeff(int n) const { return coeffs_.at(n); }
    void set_coeff(int n, LaurentPoly p) { coeffs_.at(n) = std::move(p); }

    /// n! * c_n, the integral normal form used for display.
    LaurentPoly scaled_coeff(int n) const;

    bool operator==(const TruncatedSeries& b) const { return coeffs_ == b.coeffs_; }
    bool operator!=(const TruncatedSeries& b) const { return !(*this == b); }

private:
    std::vector<LaurentPoly> coeffs_;
};

/// Gen(w,t) = sum D^n(w) t^n/n!, truncated at order N.
TruncatedSeries egf(const Grammar& g, const LaurentPoly& w, int N);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with series_mul(q, b) = a up to truncation; b's constant coefficient
/// must be a nonzero single monomial (a unit of the Laurent ring).
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// d/dt; order drops by one.
TruncatedSeries series_ddt(const TruncatedSeries& a);

enum class SqrtFreeKind { trig, hyperbolic };

/// Square-root-free sine/cosine pair for argument t*sqrt(A):
///   trig:       S = sum (-1)^n A^n t^(2n+1)/(2n+1)!,  C = sum (-1)^n A^n t^(2n)/(2n)!
///   hyperbolic: same without the signs.
/// Then sin(t sqrt A) = sqrt(A)*S and cos(t sqrt A) = C.
std::pair<TruncatedSeries, TruncatedSeries> sqrtfree_pair(SqrtFreeKind kind,
                                                          const LaurentPoly& A, int N);

/// Closed-form right-hand sides with the radicals factored out.
TruncatedSeries andre_gf_rhs(int N);
TruncatedSeries gessel_gf_rhs(int N);
TruncatedSeries aux_gf_rhs(int N);

}  // namespace cfg
