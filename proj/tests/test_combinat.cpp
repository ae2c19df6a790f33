#include <doctest.h>

#include "lcprop/combinat.hpp"
#include "lcprop/fixtures.hpp"
#include "lcprop/kernel.hpp"
#include "lcprop/oracles.hpp"

using namespace lcprop;

namespace {

ExactSeq from_counts(const std::vector<long long>& counts) {
    std::vector<Rat> vals;
    vals.reserve(counts.size());
    for (long long c : counts) vals.push_back(Rat(static_cast<long>(c)));
    return ExactSeq(std::move(vals));
}

}  // namespace

TEST_CASE("binomial rows") {
    CHECK(binomial_row(0).row == ExactSeq::parse("1"));
    CHECK(binomial_row(4).row == ExactSeq::parse("1,4,6,4,1"));
    // against repeated convolution with (1,1)
    ExactSeq pascal = ExactSeq::parse("1");
    for (long n = 1; n <= 12; ++n) {
        pascal = convolve(pascal, ExactSeq::parse("1,1"));
        CHECK(binomial_row(n).row == pascal);
    }
    for (long n = 0; n <= 20; ++n) CHECK(is_log_concave(binomial_row(n).row).is_lc);
    CHECK_THROWS_AS(binomial_row(-1), std::invalid_argument);
}

TEST_CASE("stirling rows") {
    CHECK(stirling1_row(1).row == ExactSeq::parse("0,1"));
    CHECK(stirling1_row(4).row == ExactSeq::parse("0,6,11,6,1"));
    CHECK(stirling2_row(1).row == ExactSeq::parse("0,1"));
    CHECK(stirling2_row(5).row == ExactSeq::parse("0,1,15,25,10,1"));
    CHECK_THROWS_AS(stirling1_row(0), std::invalid_argument);
    CHECK_THROWS_AS(stirling2_row(0), std::invalid_argument);

    SUBCASE("second kind agrees with the dependent-sum chain") {
        ExactSeq row = stirling2_row(1).row;
        for (long n = 2; n <= 12; ++n) {
            row = dependent_sum(row, Kernel::stirling2());
            CHECK(row == stirling2_row(n).row);
        }
    }
    SUBCASE("log-concave rows") {
        for (long n = 1; n <= 25; ++n) CHECK(is_log_concave(stirling2_row(n).row).is_lc);
        for (long n = 1; n <= 18; ++n) CHECK(is_log_concave(stirling1_row(n).row).is_lc);
    }
    SUBCASE("row sums: Bell numbers and factorials") {
        for (long n = 1; n <= 14; ++n) {
            CHECK(stirling2_row(n).row.sum() == Rat(bell_number(n)));
            CHECK(stirling1_row(n).row.sum() == Rat(factorial(n)));
        }
    }
    SUBCASE("first kind equals n! times a Bernoulli-sum pmf") {
        for (long n = 1; n <= 10; ++n) {
            std::vector<Rat> probs;
            for (long i = 1; i <= n; ++i) probs.push_back(rat(1, i));
            const ExactSeq pmf = bernoulli_sum(probs);
            std::vector<Rat> scaled;
            for (const Rat& v : pmf.values()) scaled.push_back(v * Rat(factorial(n)));
            CHECK(ExactSeq(std::move(scaled)) == stirling1_row(n).row);
        }
    }
}

TEST_CASE("q-stirling rows") {
    SUBCASE("q = 1 recovers the classical rows") {
        for (long n = 1; n <= 12; ++n) CHECK(q_stirling2_row(n, Rat(1)).row == stirling2_row(n).row);
    }
    SUBCASE("q = 0 degenerates to a single surviving column") {
        // The recurrence kills every column k >= 2 at q = 0: the k-1 term
        // carries q^{k-1} and S(2,2) = q already vanishes.
        const TriangleRow row = q_stirling2_row(4, Rat(0));
        CHECK(row.row.values() ==
              std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
        CHECK(row.row.size() == 5);  // row length keeps the family convention
    }
    SUBCASE("log-concave for q in [0,1]") {
        for (const char* q : {"0", "1/4", "1/2", "3/4", "1"})
            for (long n = 1; n <= 15; ++n)
                CHECK(is_log_concave(q_stirling2_row(n, parse_rat(q)).row).is_lc);
    }
    SUBCASE("q > 1 outcomes recorded without assertion") {
        int lc = 0, total = 0;
        for (const char* q : {"3/2", "2", "5"})
            for (long n = 1; n <= 10; ++n) {
                ++total;
                if (is_log_concave(q_stirling2_row(n, parse_rat(q)).row).is_lc) ++lc;
            }
        MESSAGE("q > 1 rows log-concave in " << lc << "/" << total << " cases");
    }
    CHECK_THROWS_AS(q_stirling2_row(3, Rat(-1)), std::invalid_argument);
}

TEST_CASE("eulerian rows") {
    CHECK(eulerian_row(1).row == ExactSeq::parse("1"));
    CHECK(eulerian_row(4).row == ExactSeq::parse("1,11,11,1"));
    for (int n = 1; n <= 8; ++n)
        CHECK(eulerian_row(n).row == from_counts(ascents_histogram_bruteforce(n)));
    for (long n = 1; n <= 12; ++n) {
        const ExactSeq row = eulerian_row(n).row;
        CHECK(is_log_concave(row).is_lc);
        CHECK(row.sum() == Rat(factorial(n)));
        for (long k = 0; k < n; ++k) CHECK(row.at(k) == row.at(n - 1 - k));  // symmetry
    }
}

TEST_CASE("inversion numbers") {
    CHECK(inversion_numbers(2).row == ExactSeq::parse("1,1"));
    CHECK(inversion_numbers(4).row == ExactSeq::parse("1,3,5,6,5,3,1"));
    for (int n = 1; n <= 8; ++n)
        CHECK(inversion_numbers(n).row == from_counts(inversions_histogram_bruteforce(n)));
    for (long n = 1; n <= 12; ++n) {
        const ExactSeq row = inversion_numbers(n).row;
        CHECK(is_log_concave(row).is_lc);
        CHECK(row.sum() == Rat(factorial(n)));
        const long top = n * (n - 1) / 2;
        for (long k = 0; k <= top; ++k) CHECK(row.at(k) == row.at(top - k));  // symmetry
    }
}

TEST_CASE("bernoulli sums") {
    CHECK(bernoulli_sum({rat(1, 2), rat(1, 2)}) == ExactSeq::parse("1/4,1/2,1/4"));
    SUBCASE("fair coins give scaled binomial rows") {
        std::vector<Rat> probs;
        for (long n = 1; n <= 10; ++n) {
            probs.push_back(rat(1, 2));
            const ExactSeq row = binomial_row(n).row;
            std::vector<Rat> scaled;
            for (const Rat& v : row.values()) scaled.push_back(v / rat_pow(Rat(2), n));
            CHECK(bernoulli_sum(probs) == ExactSeq(std::move(scaled)));
        }
    }
    SUBCASE("any Bernoulli sum is log-concave") {
        FixtureRng rng(1234);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rat> probs;
            const long count = rng.uniform(1, 10);
            for (long j = 0; j < count; ++j) {
                const long den = rng.uniform(1, 20);
                probs.push_back(rat(rng.uniform(0, den), den));
            }
            CHECK(is_log_concave(bernoulli_sum(probs)).is_lc);
        }
    }
    CHECK_THROWS_AS(bernoulli_sum({Rat(2)}), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli_sum({Rat(-1)}), std::invalid_argument);
    CHECK(bernoulli_sum({}) == ExactSeq::parse("1"));
}

TEST_CASE("family names round-trip") {
    for (TriangleFamily f :
         {TriangleFamily::binomial, TriangleFamily::stirling1, TriangleFamily::stirling2,
          TriangleFamily::q_stirling2, TriangleFamily::eulerian, TriangleFamily::inversions})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_FALSE(family_from_name("nope").has_value());
}
