#include "lcprop/geom.hpp"

#include <algorithm>

namespace lcprop {

GeomSumAnalysis geom_sum_analyze(const ExactSeq& px, const GeomParam& p) {
    if (sgn(px.sum()) == 0) throw std::invalid_argument("geom_sum_analyze: all-zero sequence");
    GeomSumAnalysis out;
    out.px = px;
    out.p = p.p;
    out.horizon = px.size() + 1;
    out.is_lc = true;
    out.decisive = true;

    std::vector<Rat> q(static_cast<std::size_t>(out.horizon) + 1);
    for (long i = 0; i <= out.horizon; ++i) {
        q[static_cast<std::size_t>(i)] = (1 - p.p) * px.at(i);
        if (i > 0) q[static_cast<std::size_t>(i)] += p.p * q[static_cast<std::size_t>(i - 1)];
    }
    out.q_values = ExactSeq(std::move(q));

    for (long i = 1; i <= out.horizon; ++i) {
        Rat crit = out.q_values.at(i) * px.at(i) - out.q_values.at(i - 1) * px.at(i + 1);
        if (sgn(crit) < 0 && !out.first_violation) {
            out.is_lc = false;
            out.first_violation = i;
        }
        out.criterion_values.emplace_back(i, std::move(crit));
    }
    return out;
}

bool ratio_bound_test(const ExactSeq& px, const GeomParam& p) {
    for (long i = 1; i < px.size(); ++i) {
        if (sgn(px.at(i)) == 0) {
            if (sgn(px.at(i + 1)) > 0) return false;
        } else if (px.at(i + 1) > p.p * px.at(i)) {
            return false;
        }
    }
    return true;
}

std::optional<long> gap_detect(const ExactSeq& px) {
    for (long i = 1; i + 1 < px.size(); ++i)
        if (sgn(px.at(i)) == 0 && sgn(px.at(i - 1)) > 0 && sgn(px.at(i + 1)) > 0) return i;
    return std::nullopt;
}

MixCoeffs mix_coefficients(const GeomParam& p1, const GeomParam& p2, long horizon) {
    if (p1.p > p2.p) throw std::invalid_argument("mix_coefficients: need p1 <= p2");
    if (horizon < 0) throw std::invalid_argument("mix_coefficients: negative horizon");
    MixCoeffs out{p1.p, p2.p, {}};
    out.b.reserve(static_cast<std::size_t>(horizon) + 1);
    out.b.push_back((1 - p2.p) / (1 - p1.p));
    const Rat scale = (p2.p - p1.p) * (1 - p2.p) / (1 - p1.p);
    for (long r = 1; r <= horizon; ++r) out.b.push_back(scale * rat_pow(p2.p, r - 1));
    return out;
}

bool verify_mixing(const ExactSeq& px, const GeomParam& p1, const GeomParam& p2, long horizon) {
    const MixCoeffs mix = mix_coefficients(p1, p2, horizon);
    // q windows out to `horizon`, regardless of the analysis default.
    auto q_window = [&px, horizon](const Rat& p) {
        std::vector<Rat> q(static_cast<std::size_t>(horizon) + 1);
        for (long i = 0; i <= horizon; ++i) {
            q[static_cast<std::size_t>(i)] = (1 - p) * px.at(i);
            if (i > 0) q[static_cast<std::size_t>(i)] += p * q[static_cast<std::size_t>(i - 1)];
        }
        return q;
    };
    const auto q1 = q_window(p1.p), q2 = q_window(p2.p);
    for (long i = 0; i <= horizon; ++i) {
        Rat mixed(0);
        for (long r = 0; r <= i; ++r)
            mixed += mix.b[static_cast<std::size_t>(r)] * q1[static_cast<std::size_t>(i - r)];
        if (mixed != q2[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

OrderReport verify_order(const ExactSeq& px, const GeomParam& p1, const GeomParam& p2) {
    if (p1.p > p2.p) throw std::invalid_argument("verify_order: need p1 <= p2");
    OrderReport out;
    const GeomSumAnalysis a1 = geom_sum_analyze(px, p1);
    const GeomSumAnalysis a2 = geom_sum_analyze(px, p2);
    out.lc_at_p1 = a1.is_lc;
    out.lc_at_p2 = a2.is_lc;
    out.implication_holds = !a1.is_lc || a2.is_lc;

    const long horizon = px.size() + 1;
    // q1 needs index horizon+1 for the i = horizon bracket.
    std::vector<Rat> q1(static_cast<std::size_t>(horizon) + 2);
    for (long i = 0; i <= horizon + 1; ++i) {
        q1[static_cast<std::size_t>(i)] = (1 - p1.p) * px.at(i);
        if (i > 0) q1[static_cast<std::size_t>(i)] += p1.p * q1[static_cast<std::size_t>(i - 1)];
    }
    auto q1_at = [&q1](long i) {
        return (i >= 0 && i < static_cast<long>(q1.size())) ? q1[static_cast<std::size_t>(i)]
                                                            : Rat(0);
    };
    const MixCoeffs mix = mix_coefficients(p1, p2, horizon);

    out.brackets_nonneg = true;
    out.identity_exact = true;
    for (long i = 1; i <= horizon; ++i) {
        Rat mixed(0);
        for (long r = 0; r <= i; ++r) {
            const Rat bracket = q1_at(i - r) * (q1_at(i) - p1.p * q1_at(i - 1)) -
                                q1_at(i - r - 1) * (q1_at(i + 1) - p1.p * q1_at(i));
            if (a1.is_lc && sgn(bracket) < 0) out.brackets_nonneg = false;
            mixed += mix.b[static_cast<std::size_t>(r)] * bracket;
        }
        const Rat q2i = a2.q_values.at(i);
        const Rat q2im = a2.q_values.at(i - 1);
        Rat q2ip = a2.q_values.at(i + 1);
        if (i + 1 > a2.horizon)  // one step past the analysis window
            q2ip = (1 - p2.p) * px.at(i + 1) + p2.p * q2i;
        const Rat deficit = q2i * q2i - q2ip * q2im;
        if (deficit != (1 - p2.p) / (1 - p1.p) * mixed) out.identity_exact = false;
    }
    if (!a1.is_lc) out.brackets_nonneg = false;
    return out;
}

ThresholdInterval min_lc_geom_param(const ExactSeq& px, long denominator_bound) {
    if (denominator_bound < 1)
        throw std::invalid_argument("min_lc_geom_param: denominator_bound must be >= 1");
    if (auto gap = gap_detect(px))
        throw no_threshold_error("support gap at index " + std::to_string(*gap) +
                                 ": no geometric parameter yields a log-concave sum");

    const Rat width_goal = Rat(1) / Rat(denominator_bound);
    long probes = 0;
    auto lc_at = [&](const Rat& p) {
        ++probes;
        return geom_sum_analyze(px, GeomParam(p)).is_lc;
    };

    // Find an LC upper bracket at 1 - 1/2^k; by monotonicity in p anything
    // larger stays LC.
    Rat lo(0), hi;
    bool found = false;
    for (Rat step = rat(1, 2); step * 2 >= width_goal; step /= 2) {
        hi = 1 - step;
        if (sgn(hi) == 0) continue;
        if (lc_at(hi)) {
            found = true;
            break;
        }
        lo = hi;
    }
    if (!found) return {lo, Rat(1), false, probes};

    while (hi - lo > width_goal) {
        const Rat mid = (lo + hi) / 2;
        if (lc_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, true, probes};
}

bool cv_membership(const ExactSeq& pv, const ExactSeq& pw, long i_max) {
    const ExactSeq sum = convolve(pv, pw);
    const long limit = std::min(i_max, sum.size());
    for (long i = 1; i <= limit; ++i)
        if (sum.at(i) * sum.at(i) < sum.at(i - 1) * sum.at(i + 1)) return false;
    return true;
}

}  // namespace lcprop
