#include "lcprop/combinat.hpp"

namespace lcprop {

std::string family_name(TriangleFamily f) {
    switch (f) {
        case TriangleFamily::binomial: return "binomial";
        case TriangleFamily::stirling1: return "stirling1";
        case TriangleFamily::stirling2: return "stirling2";
        case TriangleFamily::q_stirling2: return "q_stirling2";
        case TriangleFamily::eulerian: return "eulerian";
        case TriangleFamily::inversions: return "inversions";
    }
    return "?";
}

std::optional<TriangleFamily> family_from_name(const std::string& name) {
    for (TriangleFamily f :
         {TriangleFamily::binomial, TriangleFamily::stirling1, TriangleFamily::stirling2,
          TriangleFamily::q_stirling2, TriangleFamily::eulerian, TriangleFamily::inversions})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

TriangleRow binomial_row(long n) {
    if (n < 0) throw std::invalid_argument("binomial_row: n must be >= 0");
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) row.push_back(binom(n, k));
    return {TriangleFamily::binomial, n, std::nullopt, ExactSeq(std::move(row))};
}

TriangleRow stirling1_row(long n) {
    if (n < 1) throw std::invalid_argument("stirling1_row: n must be >= 1");
    std::vector<Rat> row{Rat(0), Rat(1)};  // n = 1
    for (long m = 1; m < n; ++m) {
        std::vector<Rat> next(row.size() + 1, Rat(0));
        for (long k = 1; k <= m + 1; ++k) {
            Rat v = (k - 1 < static_cast<long>(row.size())) ? row[static_cast<std::size_t>(k - 1)]
                                                            : Rat(0);
            if (k < static_cast<long>(row.size())) v += Rat(m) * row[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    return {TriangleFamily::stirling1, n, std::nullopt, ExactSeq(std::move(row))};
}

TriangleRow stirling2_row(long n) {
    if (n < 1) throw std::invalid_argument("stirling2_row: n must be >= 1");
    std::vector<Rat> row{Rat(0), Rat(1)};  // n = 1
    for (long m = 2; m <= n; ++m) {
        std::vector<Rat> next(static_cast<std::size_t>(m) + 1, Rat(0));
        for (long k = 1; k <= m; ++k) {
            Rat v = (k - 1 < static_cast<long>(row.size())) ? row[static_cast<std::size_t>(k - 1)]
                                                            : Rat(0);
            if (k < static_cast<long>(row.size())) v += Rat(k) * row[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    return {TriangleFamily::stirling2, n, std::nullopt, ExactSeq(std::move(row))};
}

TriangleRow q_stirling2_row(long n, const Rat& q_in) {
    if (n < 1) throw std::invalid_argument("q_stirling2_row: n must be >= 1");
    Rat q = q_in;
    q.canonicalize();
    if (sgn(q) < 0) throw std::invalid_argument("q_stirling2_row: q must be >= 0");
    std::vector<Rat> row{Rat(0), Rat(1)};  // n = 1
    for (long m = 2; m <= n; ++m) {
        std::vector<Rat> next(static_cast<std::size_t>(m) + 1, Rat(0));
        Rat bracket(0);  // [k]_q accumulated as 1 + q + ... + q^{k-1}
        for (long k = 1; k <= m; ++k) {
            bracket += rat_pow(q, k - 1);
            Rat v = rat_pow(q, k - 1) * ((k - 1 < static_cast<long>(row.size()))
                                             ? row[static_cast<std::size_t>(k - 1)]
                                             : Rat(0));
            if (k < static_cast<long>(row.size()))
                v += bracket * row[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    TriangleRow out{TriangleFamily::q_stirling2, n, q, ExactSeq(std::move(row))};
    return out;
}

TriangleRow eulerian_row(long n) {
    if (n < 1) throw std::invalid_argument("eulerian_row: n must be >= 1");
    std::vector<Rat> row{Rat(1)};  // n = 1
    for (long m = 2; m <= n; ++m) {
        std::vector<Rat> next(static_cast<std::size_t>(m), Rat(0));
        for (long k = 0; k < m; ++k) {
            Rat v(0);
            if (k < static_cast<long>(row.size()))
                v += Rat(k + 1) * row[static_cast<std::size_t>(k)];
            if (k >= 1 && k - 1 < static_cast<long>(row.size()))
                v += Rat(m - k) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    return {TriangleFamily::eulerian, n, std::nullopt, ExactSeq(std::move(row))};
}

TriangleRow inversion_numbers(long n) {
    if (n < 1) throw std::invalid_argument("inversion_numbers: n must be >= 1");
    ExactSeq row(std::vector<Rat>{Rat(1)});
    for (long i = 1; i < n; ++i)
        row = convolve(row, ExactSeq(std::vector<Rat>(static_cast<std::size_t>(i) + 1, Rat(1))));
    return {TriangleFamily::inversions, n, std::nullopt, std::move(row)};
}

ExactSeq bernoulli_sum(const std::vector<Rat>& probs) {
    ExactSeq pmf(std::vector<Rat>{Rat(1)});
    for (const Rat& p_in : probs) {
        Rat p = p_in;
        p.canonicalize();
        if (sgn(p) < 0 || p > 1)
            throw std::invalid_argument("bernoulli_sum: probability outside [0,1]");
        pmf = convolve(pmf, ExactSeq(std::vector<Rat>{1 - p, p}));
    }
    return pmf;
}

}  // namespace lcprop
