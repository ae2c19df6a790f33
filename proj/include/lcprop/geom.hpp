#pragma once

/// Exact analysis of X + Geom(p) for finite-support X, where Geom(p) has
/// mass (1-p) p^i on i >= 0.
///
/// The pmf q_p of the sum satisfies q_p(i) = (1-p) pX(i) + p q_p(i-1), and
/// its LC deficit factors as
///     q_p(i)^2 - q_p(i+1) q_p(i-1) = (1-p) { q_p(i) pX(i) - q_p(i-1) pX(i+1) },
/// so the sum is log-concave iff the braced criterion is >= 0 for all i >= 1.
/// For finite-support X the criterion holds automatically beyond the support,
/// which makes the finite scan a complete decision procedure. The geometric
/// distribution itself is never materialized as an infinite object.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcprop/seq.hpp"

namespace lcprop {

/// Geometric parameter, exact rational in (0,1).
struct GeomParam {
    Rat p;
    explicit GeomParam(Rat value) : p(std::move(value)) {
        p.canonicalize();
        if (sgn(p) <= 0 || p >= 1) throw std::invalid_argument("GeomParam: p must be in (0,1)");
    }
};

struct GeomSumAnalysis {
    ExactSeq px;
    Rat p;
    long horizon = 0;  // len(px) + 1
    ExactSeq q_values;  // pmf of X + Geom(p) on 0..horizon, exact
    std::vector<std::pair<long, Rat>> criterion_values;  // i = 1..horizon
    bool is_lc = false;
    bool decisive = false;  // horizon covers the support, so the scan decides
    std::optional<long> first_violation;
};

/// Complete decision procedure for log-concavity of X + Geom(p).
/// Rejects the all-zero sequence.
GeomSumAnalysis geom_sum_analyze(const ExactSeq& px, const GeomParam& p);

/// True iff pX(i+1)/pX(i) <= p for every i >= 1 with pX(i) > 0, and no
/// positive mass follows a zero at i >= 1. Sufficient for the sum to be LC;
/// a false result decides nothing.
bool ratio_bound_test(const ExactSeq& px, const GeomParam& p);

/// Smallest i with pX(i) = 0, pX(i-1) > 0, pX(i+1) > 0, if any. A gap makes
/// X + Geom(p) non-LC for every p.
std::optional<long> gap_detect(const ExactSeq& px);

/// Coefficients expressing q_{p2} as a positive mixture of shifted q_{p1}:
/// b_0 = (1-p2)/(1-p1), b_r = ((p2-p1)(1-p2)/(1-p1)) p2^{r-1} for r >= 1.
struct MixCoeffs {
    Rat p1, p2;
    std::vector<Rat> b;  // b_0 .. b_horizon
};

/// Requires p1 <= p2.
MixCoeffs mix_coefficients(const GeomParam& p1, const GeomParam& p2, long horizon);

/// Checks q_{p2}(i) == sum_{r=0..i} b_r q_{p1}(i-r) exactly for i <= horizon.
bool verify_mixing(const ExactSeq& px, const GeomParam& p1, const GeomParam& p2, long horizon);

struct OrderReport {
    bool lc_at_p1 = false;
    bool lc_at_p2 = false;
    bool implication_holds = false;  // lc_at_p1 => lc_at_p2
    // Each bracket q1(i-r)(q1(i) - p1 q1(i-1)) - q1(i-r-1)(q1(i+1) - p1 q1(i))
    // is >= 0; only meaningful (and only checked) when lc_at_p1.
    bool brackets_nonneg = false;
    // The q_{p2} deficit equals (1-p2)/(1-p1) sum_r b_r * bracket(i, r),
    // checked exactly at every i regardless of log-concavity.
    bool identity_exact = false;
};

/// Requires p1 <= p2.
OrderReport verify_order(const ExactSeq& px, const GeomParam& p1, const GeomParam& p2);

class no_threshold_error : public std::runtime_error {
public:
    explicit no_threshold_error(const std::string& what) : std::runtime_error(what) {}
};

struct ThresholdInterval {
    Rat lo, hi;       // hi - lo <= 1/denominator_bound
    bool lc_at_hi;    // false only when no probe below 1 was LC
    long probes = 0;
};

/// Bisection enclosure of the least p making X + Geom(p) log-concave.
/// Each probe is decided exactly by geom_sum_analyze; the bisection is valid
/// because log-concavity of the sum is monotone in p. lo = 0 means every
/// probed p was LC. Throws no_threshold_error when the support has a gap.
ThresholdInterval min_lc_geom_param(const ExactSeq& px, long denominator_bound);

/// Finite-support surrogate for "W lies in the LC-compatibility class of V":
/// true iff convolve(pv, pw) has no LC violation at indices <= i_max.
bool cv_membership(const ExactSeq& pv, const ExactSeq& pw, long i_max);

}  // namespace lcprop
