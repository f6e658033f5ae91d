#include <catch2/catch_amalgamated.hpp>

#include "errsum/apery.hpp"

using namespace errsum;

TEST_CASE("Apery sequence seeds and recurrences") {
    auto z2_1 = apery_pair(AperyConstant::zeta2, 1);
    CHECK(z2_1.num == 5);
    CHECK(z2_1.den == 3);
    auto z2_2 = apery_pair(AperyConstant::zeta2, 2);
    CHECK(z2_2.num == Rat(125, 4));
    CHECK(z2_2.den == 19);
    auto z3_1 = apery_pair(AperyConstant::zeta3, 1);
    CHECK(z3_1.num == 6);
    CHECK(z3_1.den == 5);
    auto z3_2 = apery_pair(AperyConstant::zeta3, 2);
    CHECK(z3_2.num == Rat(351, 4));
    CHECK(z3_2.den == 73);

    CHECK(verify_apery_recurrence(AperyConstant::zeta2, 25).ok);
    CHECK(verify_apery_recurrence(AperyConstant::zeta3, 25).ok);
}

TEST_CASE("CF convergents equal Apery ratios") {
    for (auto c : {AperyConstant::zeta2, AperyConstant::zeta3}) {
        auto cv = gcf_convergents(apery_gcf(c), 15);
        for (long n = 1; n <= 15; ++n) {
            auto s = apery_pair(c, n);
            CHECK(cv[static_cast<std::size_t>(n - 1)].first /
                      cv[static_cast<std::size_t>(n - 1)].second ==
                  s.num / Rat(s.den));
        }
    }
}

TEST_CASE("residual signs and first term magnitudes") {
    HPReal z2 = const_value("zeta2", 192);
    // |B_n z2 - A_n|: 1.6449, 0.0652, 0.003747; sign alternates (-1)^n
    const char* mags[] = {"1.6449340668", "0.0651977994", "0.0037472701"};
    for (long n = 0; n <= 2; ++n) {
        auto s = apery_pair(AperyConstant::zeta2, n);
        HPReal r = HPReal::of(Rat(s.den), 192) * z2 - HPReal::of(s.num, 192);
        CHECK((r.sign() > 0) == (n % 2 == 0));
        CHECK(abs(abs(r) - HPReal::parse(mags[n], 192)) < HPReal::parse("1e-9", 192));
    }
    HPReal z3 = const_value("zeta3", 192);
    for (long n = 0; n <= 10; ++n) {
        auto s = apery_pair(AperyConstant::zeta3, n);
        HPReal r = HPReal::of(Rat(s.den), 192) * z3 - HPReal::of(s.num, 192);
        CHECK(r.sign() > 0);
    }
}

TEST_CASE("direct error sums match frozen values") {
    HPReal tol = HPReal::parse("1e-16", 192);
    auto s2s = errsum_apery(AperyConstant::zeta2, SignMode::signed_sum, 192, tol);
    auto s2a = errsum_apery(AperyConstant::zeta2, SignMode::absolute, 192, tol);
    auto s3 = errsum_apery(AperyConstant::zeta3, SignMode::signed_sum, 192, tol);
    CHECK(s2s.converged);
    CHECK(abs(s2s.value - HPReal::parse("1.5832522167594", 192)) <
          HPReal::parse("5e-13", 192));
    CHECK(abs(s2a.value - HPReal::parse("1.7141459142567", 192)) <
          HPReal::parse("5e-13", 192));
    // printed 11-digit value 1.2124982529 is truncated, not rounded
    CHECK(abs(s3.value - HPReal::parse("1.21249825298556012", 192)) <
          HPReal::parse("5e-11", 192));
    // zeta3 terms all positive: absolute == signed
    auto s3a = errsum_apery(AperyConstant::zeta3, SignMode::absolute, 192, tol);
    CHECK(abs(s3a.value - s3.value) < HPReal::parse("1e-20", 192));
}

TEST_CASE("Thm 5.10 multisums converge upward") {
    HPReal m_small = hyp_multisum(AperyConstant::zeta2, SignMode::absolute, 10, 80, 160);
    HPReal m_big = hyp_multisum(AperyConstant::zeta2, SignMode::absolute, 25, 200, 160);
    HPReal target = HPReal::parse("1.7141459142567", 160);
    CHECK(m_small < m_big);
    CHECK(m_big < target);
    CHECK(abs(m_big - target) < HPReal::parse("2e-2", 160));

    HPReal s_big = hyp_multisum(AperyConstant::zeta2, SignMode::signed_sum, 25, 200, 160);
    CHECK(abs(s_big - HPReal::parse("1.5832522167594", 160)) < HPReal::parse("2e-2", 160));

    HPReal z3_small = hyp_multisum(AperyConstant::zeta3, SignMode::signed_sum, 8, 120, 160);
    HPReal z3_big = hyp_multisum(AperyConstant::zeta3, SignMode::signed_sum, 16, 240, 160);
    HPReal z3t = HPReal::parse("1.2124982529", 160);
    CHECK(z3_small < z3_big);
    CHECK(z3_big < z3t);
    CHECK(abs(z3_big - z3t) < HPReal::parse("3e-2", 160));
}
