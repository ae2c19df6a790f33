#include "lcprop/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcprop {

namespace {

template <typename Count>
std::vector<long long> permutation_histogram(int n, Count count_statistic, std::size_t bins) {
    if (n < 1 || n > 9) throw std::invalid_argument("permutation histogram: need 1 <= n <= 9");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> hist(bins, 0);
    do {
        ++hist[static_cast<std::size_t>(count_statistic(perm))];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hist;
}

}  // namespace

std::vector<long long> ascents_histogram_bruteforce(int n) {
    return permutation_histogram(
        n,
        [](const std::vector<int>& perm) {
            int ascents = 0;
            for (std::size_t j = 0; j + 1 < perm.size(); ++j)
                if (perm[j] < perm[j + 1]) ++ascents;
            return ascents;
        },
        static_cast<std::size_t>(n));
}

std::vector<long long> inversions_histogram_bruteforce(int n) {
    return permutation_histogram(
        n,
        [](const std::vector<int>& perm) {
            int inversions = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inversions;
            return inversions;
        },
        static_cast<std::size_t>(n * (n - 1) / 2 + 1));
}

Int bell_number(long n) {
    if (n < 0) throw std::invalid_argument("bell_number: n must be >= 0");
    if (n == 0) return 1;
    std::vector<Int> row{1};  // Bell triangle, row 1; Bell(n) ends row n
    for (long m = 2; m <= n; ++m) {
        std::vector<Int> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.back();
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace lcprop
