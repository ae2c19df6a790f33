#pragma once

/// Deterministic random fixtures for the property suites. A positive
/// sequence is log-concave exactly when its consecutive ratios are
/// non-increasing, so LC fixtures are built from sorted random ratios.

#include <algorithm>
#include <random>
#include <vector>

#include "lcprop/seq.hpp"

namespace lcprop {

class FixtureRng {
public:
    explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi) {  // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    /// Random positive rational with numerator and denominator <= max_part.
    Rat positive_rat(long max_part = 100) {
        return rat(uniform(1, max_part), uniform(1, max_part));
    }

    /// Random rational strictly inside (0,1).
    Rat open01(long max_den = 64) {
        const long den = uniform(2, max_den);
        return rat(uniform(1, den - 1), den);
    }

    /// Random log-concave sequence: optional leading zeros, then a positive
    /// run with non-increasing consecutive ratios.
    ExactSeq log_concave_seq(long max_len = 12, long max_part = 100) {
        const long lead = uniform(0, 2);
        const long run = uniform(1, std::max<long>(1, max_len - lead));
        std::vector<Rat> ratios;
        for (long j = 1; j < run; ++j) ratios.push_back(positive_rat(max_part));
        std::sort(ratios.begin(), ratios.end(), std::greater<Rat>());
        std::vector<Rat> vals(static_cast<std::size_t>(lead), Rat(0));
        Rat v = positive_rat(max_part);
        vals.push_back(v);
        for (const Rat& r : ratios) {
            v *= r;
            vals.push_back(v);
        }
        return ExactSeq(std::move(vals));
    }

    /// Arbitrary non-negative sequence; sprinkles zeros when allow_zeros.
    ExactSeq nonneg_seq(long max_len = 10, bool allow_zeros = true, long max_part = 30) {
        const long len = uniform(1, max_len);
        std::vector<Rat> vals;
        bool any_positive = false;
        for (long j = 0; j < len; ++j) {
            if (allow_zeros && uniform(0, 4) == 0) {
                vals.push_back(Rat(0));
            } else {
                vals.push_back(positive_rat(max_part));
                any_positive = true;
            }
        }
        if (!any_positive) vals[static_cast<std::size_t>(uniform(0, len - 1))] = positive_rat(max_part);
        return ExactSeq(std::move(vals));
    }

    /// Sequence with at least one interior support gap.
    ExactSeq gapped_seq(long max_len = 10, long max_part = 30) {
        const long len = std::max<long>(3, uniform(3, max_len));
        const long gap = uniform(1, len - 2);
        std::vector<Rat> vals;
        for (long j = 0; j < len; ++j)
            vals.push_back(j == gap ? Rat(0) : positive_rat(max_part));
        return ExactSeq(std::move(vals));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace lcprop
