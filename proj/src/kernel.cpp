#include "lcprop/kernel.hpp"

#include <algorithm>

namespace lcprop {

Kernel Kernel::tabular(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) throw std::invalid_argument("tabular kernel: no rows");
    for (auto& row : rows)
        for (Rat& v : row) {
            v.canonicalize();
            if (sgn(v) < 0) throw std::invalid_argument("tabular kernel: negative entry");
        }
    Kernel k(KernelKind::tabular);
    k.rows_ = std::move(rows);
    return k;
}

Kernel Kernel::independent(ExactSeq pw) {
    Kernel k(KernelKind::independent);
    k.pw_ = std::move(pw);
    return k;
}

Kernel Kernel::stirling2() { return Kernel(KernelKind::stirling2); }

Kernel Kernel::eulerian(long n) {
    if (n < 1) throw std::invalid_argument("eulerian kernel: n must be >= 1");
    Kernel k(KernelKind::eulerian);
    k.n_ = n;
    return k;
}

Kernel Kernel::geometric_joint(const Rat& p, const Rat& alpha, long horizon) {
    Kernel k(KernelKind::geom_joint);
    k.p_ = p;
    k.alpha_ = alpha;
    k.p_.canonicalize();
    k.alpha_.canonicalize();
    if (sgn(k.p_) <= 0 || k.p_ >= 1)
        throw std::invalid_argument("geometric kernel: p must be in (0,1)");
    if (sgn(k.alpha_) <= 0 || k.alpha_ >= 1)
        throw std::invalid_argument("geometric kernel: alpha must be in (0,1)");
    if (horizon < 1) throw std::invalid_argument("geometric kernel: horizon must be >= 1");
    k.horizon_ = horizon;
    return k;
}

Rat Kernel::operator()(long w, long v) const {
    if (w < 0 || v < 0) return Rat(0);
    switch (kind_) {
        case KernelKind::tabular: {
            if (v >= static_cast<long>(rows_.size())) return Rat(0);
            const auto& row = rows_[static_cast<std::size_t>(v)];
            if (w >= static_cast<long>(row.size())) return Rat(0);
            return row[static_cast<std::size_t>(w)];
        }
        case KernelKind::independent:
            return pw_.at(w);
        case KernelKind::stirling2:
            if (w == 0) return Rat(v);
            if (w == 1) return Rat(1);
            return Rat(0);
        case KernelKind::eulerian:
            if (v > n_) return Rat(0);
            if (w == 0) return Rat(v + 1);
            if (w == 1) return Rat(n_ - v);
            return Rat(0);
        case KernelKind::geom_joint: {
            if (w > horizon_) return Rat(0);
            // C(v+w, v) (1-p+ap)^{v+1} (p(1-a))^w
            Rat beta = 1 - p_ + alpha_ * p_;
            Rat gamma = p_ * (1 - alpha_);
            return binom(v + w, v) * rat_pow(beta, v + 1) * rat_pow(gamma, w);
        }
    }
    return Rat(0);
}

long Kernel::max_w_support() const {
    switch (kind_) {
        case KernelKind::tabular: {
            std::size_t n = 0;
            for (const auto& row : rows_) n = std::max(n, row.size());
            return n == 0 ? 0 : static_cast<long>(n) - 1;
        }
        case KernelKind::independent:
            return std::max<long>(pw_.size() - 1, 0);
        case KernelKind::stirling2:
        case KernelKind::eulerian:
            return 1;
        case KernelKind::geom_joint:
            return horizon_;
    }
    return 0;
}

ExactSeq dependent_sum(const ExactSeq& pv, const Kernel& k) {
    const long len = pv.size() + k.max_w_support() + 1;
    std::vector<Rat> out(static_cast<std::size_t>(len), Rat(0));
    for (long v = 0; v < pv.size(); ++v) {
        if (sgn(pv.at(v)) == 0) continue;
        for (long x = v; x < len; ++x) {
            Rat kv = k(x - v, v);
            if (sgn(kv) != 0) out[static_cast<std::size_t>(x)] += pv.at(v) * kv;
        }
    }
    return ExactSeq(std::move(out));
}

AMatrix a_matrix(const Kernel& k, long i, long r_max, long s_max) {
    AMatrix a;
    a.i = i;
    a.r_max = r_max;
    a.s_max = s_max;
    a.entries.assign(static_cast<std::size_t>((r_max + 1) * (s_max + 1)), Rat(0));
    for (long r = 0; r <= r_max; ++r) {
        const Rat kr0 = k(i - r, r), kr1 = k(i - r - 1, r);
        if (sgn(kr0) == 0 && sgn(kr1) == 0) continue;
        for (long s = 0; s <= s_max; ++s) {
            Rat e = kr0 * k(i - s, s) - kr1 * k(i - s + 1, s);
            a.entries[static_cast<std::size_t>(r * (s_max + 1) + s)] = std::move(e);
        }
    }
    return a;
}

AMatrix a_matrix_discriminant_adjusted(const Kernel& k, long i) {
    if (i < 1) throw std::invalid_argument("a_matrix_discriminant_adjusted: i must be >= 1");
    AMatrix a = a_matrix(k, i, i, i + 1);
    auto cell = [&a](long r, long s) -> Rat& {
        return a.entries[static_cast<std::size_t>(r * (a.s_max + 1) + s)];
    };
    cell(i - 1, i - 1) -= 1;
    cell(i, i) -= 1;
    cell(i - 1, i) += 1;
    cell(i, i - 1) += 1;
    return a;
}

namespace {

Condition1Report scan_condition1(const Kernel& k, long i_max, bool adjusted) {
    Condition1Report report;
    report.i_max = i_max;
    report.adjusted = adjusted;
    for (long i = adjusted ? 1 : 0; i <= i_max; ++i) {
        const AMatrix a =
            adjusted ? a_matrix_discriminant_adjusted(k, i) : a_matrix(k, i, i, i + 1);
        for (long m = 0; m <= i; ++m) {
            Rat sum_a = a.at(m, m);
            Rat sum_b = a.at(m, m + 1) + a.at(m + 1, m);
            for (long t = 0; t <= m; ++t) {
                if (t > 0) {
                    sum_a += a.at(m + t, m - t) + a.at(m - t, m + t);
                    sum_b += a.at(m + t + 1, m - t) + a.at(m - t, m + t + 1);
                }
                Condition1Verdict v;
                v.i = i;
                v.m = m;
                v.t = t;
                v.sum_a = sum_a;
                v.sum_b = sum_b;
                if (sgn(v.sum_a) < 0) {
                    report.holds_a = false;
                    if (!report.first_failure) report.first_failure = {i, m, t, 'a'};
                }
                if (sgn(v.sum_b) < 0) {
                    report.holds_b = false;
                    if (!report.first_failure) report.first_failure = {i, m, t, 'b'};
                }
                report.verdicts.push_back(std::move(v));
            }
        }
    }
    return report;
}

}  // namespace

Condition1Report check_condition1(const Kernel& k, long i_max) {
    return scan_condition1(k, i_max, false);
}

Condition1Report check_condition1_adjusted(const Kernel& k, long i_max) {
    return scan_condition1(k, i_max, true);
}

std::vector<Rat> condition1b_symmetric_sums(const AMatrix& a, long m, long t_max) {
    std::vector<Rat> sums;
    Rat acc(0);
    for (long t = 0; t <= t_max; ++t) {
        acc += a.at(m + t + 1, m - t);
        if (t > 0) acc += a.at(m - t + 1, m + t);
        sums.push_back(acc);
    }
    return sums;
}

MainTheoremReport verify_main_theorem(const ExactSeq& pv, const Kernel& k, long i_max) {
    MainTheoremReport report;
    report.base_lc = is_log_concave(pv);
    if (!report.base_lc.is_lc)
        throw std::invalid_argument("verify_main_theorem: base sequence is not log-concave");

    report.sum = dependent_sum(pv, k);
    report.sum_lc = is_log_concave(report.sum);
    report.condition1 = check_condition1(k, i_max);

    report.decomposition_exact = true;
    report.sum_lc_window = true;
    for (long i = 1; i <= i_max; ++i) {
        const Rat deficit =
            report.sum.at(i) * report.sum.at(i) - report.sum.at(i - 1) * report.sum.at(i + 1);
        const AMatrix a = a_matrix(k, i, i, i + 1);
        Rat decomposed(0);
        for (long j = 0; j <= i; ++j) {
            if (sgn(pv.at(j)) == 0) continue;
            for (long s = 0; s <= i + 1; ++s) {
                const Rat as = a.at(j, s);
                if (sgn(as) != 0) decomposed += pv.at(j) * pv.at(s) * as;
            }
        }
        if (deficit != decomposed) report.decomposition_exact = false;
        if (sgn(deficit) < 0) report.sum_lc_window = false;
    }
    report.certified = report.condition1.holds() && report.sum_lc_window;
    return report;
}

}  // namespace lcprop
