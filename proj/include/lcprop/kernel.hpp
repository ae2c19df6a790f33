#pragma once

/// Dependent-sum machinery: conditional-weight kernels, the a-coefficient
/// arrays built from them, the diagonal partial-sum condition that certifies
/// log-concavity of a dependent sum, and the oracle tying it all together.
///
/// A kernel K(w|v) is a two-dimensional array of non-negative rationals that
/// acts like a family of conditional weights; rows need not sum to 1. The
/// dependent sum of a base sequence pV against K is
///     s(x) = sum_v pV(v) K(x-v|v),
/// which reduces to ordinary convolution when K does not depend on v.
///
/// For fixed i the coefficients
///     a^(i)_{r,s} = K(i-r|r) K(i-s|s) - K(i-r-1|r) K(i-s+1|s)
/// decompose the LC deficit of the dependent sum:
///     s(i)^2 - s(i-1) s(i+1) = sum_{j<=i, k<=i+1} pV(j) pV(k) a^(i)_{j,k}.
/// The certificate condition requires, for all 0 <= t <= m <= i,
///     (a)  sum_{k=-t..t}   a^(i)_{m+k,m-k}   >= 0
///     (b)  sum_{k=-t-1..t} a^(i)_{m+k+1,m-k} >= 0.
/// If it holds and pV is LC, the dependent sum is LC.

#include <optional>
#include <vector>

#include "lcprop/seq.hpp"

namespace lcprop {

enum class KernelKind { tabular, independent, stirling2, eulerian, geom_joint };

/// Immutable kernel. Values are zero for w < 0, for w beyond the kernel's
/// w-support, and for v outside the domain. Every kernel here has bounded
/// w-support, so dependent sums always terminate; the geometric family
/// carries an explicit truncation horizon for that reason.
class Kernel {
public:
    /// Rows indexed by v = 0..rows-1; row v lists K(0|v), K(1|v), ...
    static Kernel tabular(std::vector<std::vector<Rat>> rows);
    /// K(w|v) = pw(w) for every v; dependent_sum == convolve(pv, pw).
    static Kernel independent(ExactSeq pw);
    /// K(0|v) = v, K(1|v) = 1. Maps a Stirling-2 row to the next one.
    static Kernel stirling2();
    /// K(0|v) = v+1, K(1|v) = n-v on v <= n. Maps Eulerian row n to row n+1.
    static Kernel eulerian(long n);
    /// K(w|v) = C(v+w,v) (1-p+ap)^{v+1} (p(1-a))^w for w <= horizon.
    /// Requires p, alpha in (0,1) and horizon >= 1.
    static Kernel geometric_joint(const Rat& p, const Rat& alpha, long horizon);

    Rat operator()(long w, long v) const;
    KernelKind kind() const { return kind_; }
    /// Largest w with a possibly non-zero value.
    long max_w_support() const;

    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const ExactSeq& pw() const { return pw_; }
    long eulerian_n() const { return n_; }
    const Rat& geom_p() const { return p_; }
    const Rat& geom_alpha() const { return alpha_; }
    long horizon() const { return horizon_; }

private:
    explicit Kernel(KernelKind kind) : kind_(kind) {}

    KernelKind kind_;
    std::vector<std::vector<Rat>> rows_;  // tabular
    ExactSeq pw_;                         // independent
    long n_ = 0;                          // eulerian
    Rat p_, alpha_;                       // geom_joint
    long horizon_ = 0;                    // geom_joint
};

/// Exact dependent sum; output length = |pv| + max_w_support(K).
ExactSeq dependent_sum(const ExactSeq& pv, const Kernel& k);

/// Dense window of a^(i) entries over 0..r_max x 0..s_max; at() returns 0
/// outside the window, consistent with zero-extension of the kernel (all
/// entries with r > i or s > i+1 vanish identically).
struct AMatrix {
    long i = 0;
    long r_max = 0, s_max = 0;
    std::vector<Rat> entries;  // row-major (r_max+1) x (s_max+1)

    Rat at(long r, long s) const {
        if (r < 0 || s < 0 || r > r_max || s > s_max) return Rat(0);
        return entries[static_cast<std::size_t>(r * (s_max + 1) + s)];
    }
};

AMatrix a_matrix(const Kernel& k, long i, long r_max, long s_max);

/// a^(i) with the discriminant correction: -1 at (i-1,i-1) and (i,i),
/// +1 at (i-1,i) and (i,i-1), i.e. the expansion of (pV(i-1) - pV(i))^2
/// subtracted from the decomposition. Requires i >= 1.
AMatrix a_matrix_discriminant_adjusted(const Kernel& k, long i);

struct Condition1Verdict {
    long i = 0, m = 0, t = 0;
    Rat sum_a;  // sum_{k=-t..t}   a^(i)_{m+k,m-k}
    Rat sum_b;  // sum_{k=-t-1..t} a^(i)_{m+k+1,m-k}
};

struct Condition1Failure {
    long i = 0, m = 0, t = 0;
    char part = 'a';
};

struct Condition1Report {
    long i_max = 0;
    bool adjusted = false;
    bool holds_a = true, holds_b = true;
    std::optional<Condition1Failure> first_failure;
    std::vector<Condition1Verdict> verdicts;  // every (i, m, t), t <= m <= i

    bool holds() const { return holds_a && holds_b; }
};

/// Exhaustive scan of the partial sums for all 0 <= t <= m <= i <= i_max.
Condition1Report check_condition1(const Kernel& k, long i_max);

/// Same scan against the discriminant-adjusted arrays; i starts at 1.
Condition1Report check_condition1_adjusted(const Kernel& k, long i_max);

/// Term-by-term partial sums of part (b) over the symmetric range
/// sum_{k=-t..t} a_{m+k+1,m-k}, t = 0..t_max. This is the enumeration used
/// by the worked tables for the Stirling-2 kernel; the certificate itself
/// uses the asymmetric range in Condition1Verdict::sum_b.
std::vector<Rat> condition1b_symmetric_sums(const AMatrix& a, long m, long t_max);

struct MainTheoremReport {
    LcReport base_lc;            // pV
    Condition1Report condition1;
    ExactSeq sum;                // dependent_sum(pV, K)
    LcReport sum_lc;
    bool decomposition_exact = false;  // deficit(i) == sum pV(j) pV(k) a^(i)_{j,k}
    bool sum_lc_window = false;        // deficits >= 0 for 1 <= i <= i_max
    // True only when Condition 1 holds through i_max and the window is LC.
    // A Condition 1 failure yields no verdict (the condition is sufficient,
    // not necessary), so certified=false by itself says nothing about LC.
    bool certified = false;
};

/// Requires pV log-concave (throws std::invalid_argument otherwise).
/// Checks the decomposition identity exactly at every 1 <= i <= i_max and
/// applies the certificate when Condition 1 holds.
MainTheoremReport verify_main_theorem(const ExactSeq& pv, const Kernel& k, long i_max);

}  // namespace lcprop
