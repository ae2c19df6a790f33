#pragma once

/// Exact real-rootedness testing via Sturm sequences over the rationals.
///
/// The route matters for log-concavity: a generating function with all roots
/// real and negative has log-concave coefficients, so a real-rootedness
/// certificate doubles as an LC certificate. The converse fails (inversion
/// polynomials are LC with non-real roots), so the implication is only ever
/// checked one way.

#include <optional>
#include <utility>
#include <vector>

#include "lcprop/seq.hpp"

namespace lcprop {

/// Polynomial with exact rational coefficients, ascending degree. Canonical
/// form strips trailing zero coefficients; the zero polynomial is [0].
class ExactPoly {
public:
    ExactPoly() : coeffs_{Rat(0)} {}
    explicit ExactPoly(std::vector<Rat> coeffs);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }
    Rat coeff(long k) const {
        return (k >= 0 && k < static_cast<long>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(k)]
                   : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    ExactPoly derivative() const;

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
    bool operator==(const ExactPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Integer-coefficient multiple with coefficient gcd 1. The rescale is
    /// by a positive rational, so every coefficient keeps its sign.
    ExactPoly primitive() const;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

/// Coefficients of sum_k s[k] x^k.
ExactPoly poly_from_seq(const ExactSeq& s);

/// Remainder of a / b over the rationals; b non-zero.
ExactPoly poly_rem(const ExactPoly& a, const ExactPoly& b);

/// Primitive gcd with positive leading coefficient.
ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b);

/// Number of distinct real roots of p in (lo, hi], where nullopt means
/// -infinity for lo and +infinity for hi. Square factors are removed
/// internally, so multiple roots are counted once. Rejects the zero
/// polynomial.
long sturm_real_root_count(const ExactPoly& p, const std::optional<Rat>& lo,
                           const std::optional<Rat>& hi);

/// x^k factored out: returns (k, p / x^k).
std::pair<long, ExactPoly> factor_out_x(const ExactPoly& p);

/// True iff every root of p is real and strictly negative, counted with
/// multiplicity (iterated square-free decomposition). Requires p non-zero
/// with all coefficients >= 0.
bool all_roots_real_negative(const ExactPoly& p);

struct RealRootsLcCheck {
    bool roots_real_negative = false;  // the premise
    LcReport lc;
    bool implication_holds = false;  // premise => is_lc; vacuously true otherwise
};

RealRootsLcCheck realroots_implies_lc_check(const ExactSeq& s);

}  // namespace lcprop
