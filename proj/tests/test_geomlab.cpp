#include <doctest.h>

#include "lcprop/fixtures.hpp"
#include "lcprop/geom.hpp"

using namespace lcprop;

TEST_CASE("geometric sum analysis") {
    SUBCASE("the section-4 fixture is LC from p = 1/10 on") {
        const ExactSeq w = ExactSeq::parse("5/8,1/4,1/8");
        CHECK(geom_sum_analyze(w, GeomParam(rat(1, 2))).is_lc);
        CHECK(geom_sum_analyze(w, GeomParam(rat(1, 10))).is_lc);
        CHECK_FALSE(geom_sum_analyze(w, GeomParam(rat(99, 1000))).is_lc);
        const auto analysis = geom_sum_analyze(w, GeomParam(rat(1, 20)));
        CHECK_FALSE(analysis.is_lc);
        CHECK(analysis.first_violation == 1);
    }
    SUBCASE("point mass gives the geometric distribution itself") {
        for (const char* p : {"1/7", "1/2", "9/10"}) {
            const auto analysis = geom_sum_analyze(ExactSeq::parse("1"), GeomParam(parse_rat(p)));
            CHECK(analysis.is_lc);
            CHECK(analysis.decisive);
        }
    }
    SUBCASE("gapped support is never LC") {
        for (const char* p : {"1/4", "1/2", "3/4"})
            CHECK_FALSE(
                geom_sum_analyze(ExactSeq::parse("1/2,0,1/2"), GeomParam(parse_rat(p))).is_lc);
    }
    SUBCASE("q window is the exact pmf and its deficits factor through the criterion") {
        FixtureRng rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            const ExactSeq px = rng.nonneg_seq(8);
            const Rat p = rng.open01();
            const auto analysis = geom_sum_analyze(px, GeomParam(p));
            // recurrence against the direct finite sum q(i) = sum_j (1-p)p^{i-j}px(j)
            for (long i = 0; i <= analysis.horizon; ++i) {
                Rat direct(0);
                for (long j = 0; j <= i; ++j) direct += (1 - p) * rat_pow(p, i - j) * px.at(j);
                CHECK(analysis.q_values.at(i) == direct);
            }
            for (long i = 1; i < analysis.horizon; ++i) {
                const Rat deficit =
                    analysis.q_values.at(i) * analysis.q_values.at(i) -
                    analysis.q_values.at(i + 1) * analysis.q_values.at(i - 1);
                CHECK(deficit ==
                      (1 - p) * analysis.criterion_values.at(static_cast<std::size_t>(i - 1)).second);
            }
        }
    }
    SUBCASE("the finite scan agrees with a much longer window") {
        FixtureRng rng(22);
        for (int trial = 0; trial < 80; ++trial) {
            const ExactSeq px = rng.nonneg_seq(7);
            const Rat p = rng.open01();
            const auto analysis = geom_sum_analyze(px, GeomParam(p));
            const long wide = analysis.horizon + 8;
            std::vector<Rat> q(static_cast<std::size_t>(wide) + 1);
            for (long i = 0; i <= wide; ++i) {
                q[static_cast<std::size_t>(i)] = (1 - p) * px.at(i);
                if (i > 0) q[static_cast<std::size_t>(i)] += p * q[static_cast<std::size_t>(i - 1)];
            }
            CHECK(analysis.is_lc == is_log_concave(ExactSeq(std::move(q))).is_lc);
        }
    }
    CHECK_THROWS_AS(geom_sum_analyze(ExactSeq::parse("0,0"), GeomParam(rat(1, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeomParam(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(GeomParam(Rat(1)), std::invalid_argument);
}

TEST_CASE("ratio bound test") {
    const ExactSeq w = ExactSeq::parse("5/8,1/4,1/8");
    CHECK(ratio_bound_test(w, GeomParam(rat(1, 2))));   // i=0 ratio 2/5 is exempt
    CHECK_FALSE(ratio_bound_test(w, GeomParam(rat(2, 5))));
    CHECK(geom_sum_analyze(w, GeomParam(rat(2, 5))).is_lc);  // bound is only sufficient

    SUBCASE("geometric window sits exactly on the bound") {
        const Rat p = rat(4, 7);
        std::vector<Rat> vals;
        for (long i = 0; i <= 8; ++i) vals.push_back((1 - p) * rat_pow(p, i));
        CHECK(ratio_bound_test(ExactSeq(std::move(vals)), GeomParam(p)));
    }
    SUBCASE("positive mass after an interior zero fails the bound") {
        CHECK_FALSE(ratio_bound_test(ExactSeq::parse("1,1,0,1"), GeomParam(rat(9, 10))));
    }
    SUBCASE("sufficiency on random fixtures") {
        FixtureRng rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            const ExactSeq px = rng.nonneg_seq(8);
            const GeomParam p(rng.open01());
            if (ratio_bound_test(px, p)) CHECK(geom_sum_analyze(px, p).is_lc);
        }
    }
}

TEST_CASE("gap detection") {
    CHECK(gap_detect(ExactSeq::parse("1/2,0,1/2")) == 1);
    CHECK_FALSE(gap_detect(ExactSeq::parse("5/8,1/4,1/8")).has_value());
    CHECK(gap_detect(ExactSeq::parse("1,1,0,1,0,1")) == 2);
    CHECK_FALSE(gap_detect(ExactSeq::parse("0,0,1,1")).has_value());
    CHECK_FALSE(gap_detect(ExactSeq::parse("1,1,0,0")).has_value());

    SUBCASE("a wider zero run is not the single-zero pattern but still never LC") {
        const ExactSeq wide = ExactSeq::parse("1,1,0,0,1");
        CHECK_FALSE(gap_detect(wide).has_value());
        for (const char* p : {"1/4", "1/2", "3/4"})
            CHECK_FALSE(geom_sum_analyze(wide, GeomParam(parse_rat(p))).is_lc);
    }

    FixtureRng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactSeq px = rng.gapped_seq(9, 30);
        REQUIRE(gap_detect(px).has_value());
        CHECK_FALSE(geom_sum_analyze(px, GeomParam(rng.open01())).is_lc);
    }
}

TEST_CASE("mixing coefficients") {
    SUBCASE("degenerate mixing at p1 = p2") {
        const auto mix = mix_coefficients(GeomParam(rat(1, 2)), GeomParam(rat(1, 2)), 6);
        CHECK(mix.b.at(0) == Rat(1));
        for (std::size_t r = 1; r < mix.b.size(); ++r) CHECK(mix.b[r] == Rat(0));
    }
    SUBCASE("leading coefficient for (1/3, 1/2)") {
        const auto mix = mix_coefficients(GeomParam(rat(1, 3)), GeomParam(rat(1, 2)), 4);
        CHECK(mix.b.at(0) == rat(3, 4));
        for (std::size_t r = 1; r < mix.b.size(); ++r) CHECK(sgn(mix.b[r]) > 0);
    }
    SUBCASE("identity against the fixture") {
        CHECK(verify_mixing(ExactSeq::parse("5/8,1/4,1/8"), GeomParam(rat(1, 3)),
                            GeomParam(rat(1, 2)), 12));
    }
    SUBCASE("identity on random fixtures") {
        FixtureRng rng(51);
        for (int trial = 0; trial < 100; ++trial) {
            const ExactSeq px = rng.nonneg_seq(7);
            Rat p1 = rng.open01(), p2 = rng.open01();
            if (p2 < p1) std::swap(p1, p2);
            CHECK(verify_mixing(px, GeomParam(p1), GeomParam(p2), 12));
        }
    }
    CHECK_THROWS_AS(mix_coefficients(GeomParam(rat(1, 2)), GeomParam(rat(1, 3)), 4),
                    std::invalid_argument);
}

TEST_CASE("monotonicity in the geometric parameter") {
    SUBCASE("fixture with both parameters workable") {
        const auto report = verify_order(ExactSeq::parse("5/8,1/4,1/8"), GeomParam(rat(1, 2)),
                                         GeomParam(rat(3, 4)));
        CHECK(report.lc_at_p1);
        CHECK(report.lc_at_p2);
        CHECK(report.implication_holds);
        CHECK(report.brackets_nonneg);
        CHECK(report.identity_exact);
    }
    SUBCASE("p1 = p2 is a tautology") {
        const auto report = verify_order(ExactSeq::parse("1,2,1"), GeomParam(rat(1, 3)),
                                         GeomParam(rat(1, 3)));
        CHECK(report.implication_holds);
        CHECK(report.identity_exact);
    }
    SUBCASE("never violated on random fixtures") {
        FixtureRng rng(61);
        for (int trial = 0; trial < 300; ++trial) {
            const ExactSeq px = rng.nonneg_seq(10);
            Rat p1 = rng.open01(), p2 = rng.open01();
            if (p2 < p1) std::swap(p1, p2);
            const auto report = verify_order(px, GeomParam(p1), GeomParam(p2));
            CHECK(report.implication_holds);
            CHECK(report.identity_exact);
            if (report.lc_at_p1) CHECK(report.brackets_nonneg);
        }
    }
    CHECK_THROWS_AS(
        verify_order(ExactSeq::parse("1"), GeomParam(rat(1, 2)), GeomParam(rat(1, 3))),
        std::invalid_argument);
}

TEST_CASE("least workable geometric parameter") {
    SUBCASE("the section-4 fixture thresholds at 1/10") {
        const auto interval = min_lc_geom_param(ExactSeq::parse("5/8,1/4,1/8"), 1024);
        CHECK(interval.lc_at_hi);
        CHECK(interval.hi <= rat(1, 2));
        CHECK(interval.hi - interval.lo <= rat(1, 1024));
        CHECK(interval.lo <= rat(1, 10));
        CHECK(rat(1, 10) <= interval.hi);
        CHECK(geom_sum_analyze(ExactSeq::parse("5/8,1/4,1/8"), GeomParam(interval.hi)).is_lc);
    }
    SUBCASE("already-LC input collapses to the bottom of the range") {
        const auto interval = min_lc_geom_param(ExactSeq::parse("1,2,1"), 1024);
        CHECK(interval.lo == Rat(0));
        CHECK(interval.hi <= rat(1, 1024));
        CHECK(interval.lc_at_hi);
        const auto point = min_lc_geom_param(ExactSeq::parse("1"), 1024);
        CHECK(point.lo == Rat(0));
        CHECK(point.lc_at_hi);
    }
    SUBCASE("gapped support throws") {
        CHECK_THROWS_AS(min_lc_geom_param(ExactSeq::parse("1/2,0,1/2"), 1024),
                        no_threshold_error);
    }
    SUBCASE("gap-free input may still have no workable p below 1") {
        // criterion at i=1 is (1-p)(1+p-3) < 0 for every p
        const auto interval = min_lc_geom_param(ExactSeq::parse("1,1,3"), 256);
        CHECK_FALSE(interval.lc_at_hi);
        CHECK(interval.hi == Rat(1));
    }
    SUBCASE("bisection endpoints are consistent with the predicate") {
        FixtureRng rng(71);
        for (int trial = 0; trial < 40; ++trial) {
            const ExactSeq px = rng.nonneg_seq(6, false);
            const auto interval = min_lc_geom_param(px, 128);
            if (interval.lc_at_hi) {
                CHECK(geom_sum_analyze(px, GeomParam(interval.hi)).is_lc);
                if (sgn(interval.lo) > 0)
                    CHECK_FALSE(geom_sum_analyze(px, GeomParam(interval.lo)).is_lc);
            }
        }
    }
}

TEST_CASE("compatibility-class membership surrogate") {
    SUBCASE("symmetry") {
        FixtureRng rng(81);
        for (int trial = 0; trial < 60; ++trial) {
            const ExactSeq a = rng.nonneg_seq(8), b = rng.nonneg_seq(8);
            CHECK(cv_membership(a, b, 32) == cv_membership(b, a, 32));
        }
    }
    SUBCASE("both LC implies membership") {
        FixtureRng rng(91);
        for (int trial = 0; trial < 60; ++trial)
            CHECK(cv_membership(rng.log_concave_seq(8, 30), rng.log_concave_seq(8, 30), 32));
    }
    SUBCASE("point mass reduces membership to plain log-concavity") {
        FixtureRng rng(102);
        for (int trial = 0; trial < 60; ++trial) {
            const ExactSeq pw = rng.nonneg_seq(8);
            CHECK(cv_membership(ExactSeq::parse("1"), pw, 32) == is_log_concave(pw).is_lc);
        }
    }
    SUBCASE("membership survives adding an independent LC summand") {
        const ExactSeq pw = ExactSeq::parse("5/8,1/4,1/8");  // not LC
        const ExactSeq pv1 = ExactSeq::parse("1,1");
        REQUIRE(cv_membership(pv1, pw, 32));
        FixtureRng rng(112);
        for (int trial = 0; trial < 60; ++trial) {
            const ExactSeq pu = rng.log_concave_seq(8, 30);
            CHECK(cv_membership(convolve(pv1, pu), pw, 64));
        }
    }
    SUBCASE("conditional version on random triples") {
        // Membership must survive adding an LC summand when the compound sum
        // is a genuine LC pmf, i.e. has contiguous support. The definition
        // alone admits shapes like [1,0,0,1] whose convolutions escape.
        FixtureRng rng(122);
        for (int trial = 0; trial < 100; ++trial) {
            const ExactSeq pv1 = rng.nonneg_seq(6), pw = rng.nonneg_seq(6);
            if (!cv_membership(pv1, pw, 64)) continue;
            const ExactSeq compound = convolve(pv1, pw);
            bool contiguous = true;
            for (long i = 1; i < compound.support_max(); ++i)
                if (sgn(compound.at(i)) == 0 && sgn(compound.at(i - 1)) > 0) contiguous = false;
            if (!contiguous) continue;
            const ExactSeq pu = rng.log_concave_seq(6, 30);
            CHECK(cv_membership(convolve(pv1, pu), pw, 64));
        }
    }
}
