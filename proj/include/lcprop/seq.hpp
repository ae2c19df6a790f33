#pragma once

/// Exact non-negative sequences and the fundamental log-concavity,
/// unimodality and convolution operations.
///
/// A sequence u is log-concave (LC) when u(i)^2 >= u(i-1) u(i+1) for every
/// i >= 1, with u zero-extended outside its stored range. The quantity
/// u(i)^2 - u(i-1) u(i+1) is the LC deficit at i; all verdicts here are
/// reached by computing deficits exactly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcprop/rational.hpp"

namespace lcprop {

/// Finite sequence of non-negative exact rationals indexed from 0,
/// implicitly zero outside the stored range. Trailing explicit zeros are
/// permitted; equality compares canonical (trimmed) forms. Immutable after
/// construction.
class ExactSeq {
public:
    ExactSeq() : vals_{Rat(0)} {}
    explicit ExactSeq(std::vector<Rat> values);

    /// Parses a comma- or space-separated list of rationals: "5/8,1/4,1/8".
    static ExactSeq parse(const std::string& text);

    long size() const { return static_cast<long>(vals_.size()); }
    /// Zero-extended access, defined for every index including negatives.
    Rat at(long i) const {
        return (i >= 0 && i < size()) ? vals_[static_cast<std::size_t>(i)] : Rat(0);
    }
    const std::vector<Rat>& values() const { return vals_; }

    Rat sum() const;
    /// Trailing zeros trimmed; the all-zero sequence stays as [0].
    ExactSeq canonical() const;
    /// Largest index with a non-zero value, or -1 for the all-zero sequence.
    long support_max() const;

    bool operator==(const ExactSeq& o) const;

    std::string str() const;

private:
    std::vector<Rat> vals_;
};

struct LcReport {
    bool is_lc = false;
    // Deficit u(i)^2 - u(i-1) u(i+1) for i = 1..len, zero-extended at the
    // boundary. The i = len entry is always >= 0 but reported for
    // transparency.
    std::vector<std::pair<long, Rat>> deficits;
    std::optional<long> first_violation;
};

LcReport is_log_concave(const ExactSeq& s);

/// True iff s is non-decreasing up to some index and non-increasing after.
bool is_unimodal(const ExactSeq& s);

/// Exact convolution; result[x] = sum_v a[v] b[x-v], length |a|+|b|-1.
ExactSeq convolve(const ExactSeq& a, const ExactSeq& b);

/// Scales values to sum exactly to 1. Rejects the all-zero sequence.
ExactSeq normalize(const ExactSeq& s);

/// Sum_{j=0..i} p(l+j) p(m-j) c_j, computed both directly and through the
/// summation-by-parts rearrangement; throws std::logic_error if the two
/// routes ever disagree. Requires l >= m >= i >= 0 and c.size() > i.
/// When p is LC and the prefix sums of c are all >= 0 the value is >= 0.
Rat abel_oracle(const ExactSeq& p, const std::vector<Rat>& c, long l, long m, long i);

}  // namespace lcprop
