#include <catch2/catch_amalgamated.hpp>

#include "errsum/cf_engine.hpp"
#include "errsum/oracles.hpp"

using namespace errsum;

TEST_CASE("generalized CF evaluation and convergents") {
    // 4/pi = 1 + 1/(3 + 4/(5 + 9/(7 + ...))): b0=1, a_n = (2n-1)^2... use a
    // simple known CF instead: sqrt(2) = 1 + 1/(2 + 1/(2 + ...)).
    GcfSpec s{Rat(1), [](long) -> std::pair<Rat, Rat> { return {Rat(1), Rat(2)}; }};
    Rat v = eval_gcf(s, 20);
    Int pell = v.get_num() * v.get_num() - 2 * v.get_den() * v.get_den();
    CHECK((pell == 1 || pell == -1));  // Pell identity p^2 - 2q^2 = (-1)^n
    CHECK(eval_gcf(s, 0) == 1);

    auto cv = gcf_convergents(s, 5);
    // forward and backward evaluation agree at each depth
    for (long d = 1; d <= 5; ++d)
        CHECK(cv[static_cast<std::size_t>(d - 1)].first /
                  cv[static_cast<std::size_t>(d - 1)].second ==
              eval_gcf(s, d));
}

TEST_CASE("regular CF expansion: rationals") {
    CfExpansion e = regular_cf_expand(Rat(355, 113), 50);
    REQUIRE(e.quotients.size() == 3);
    CHECK(e.quotients[0] == 3);
    CHECK(e.quotients[1] == 7);
    CHECK(e.quotients[2] == 16);
    CHECK_FALSE(e.exhausted);
    CHECK(e.convergents.back().p == 355);
    CHECK(e.convergents.back().q == 113);

    CfExpansion neg = regular_cf_expand(Rat(-7, 3), 50);
    CHECK(neg.quotients[0] == -3);  // floor convention
}

TEST_CASE("regular CF expansion: reals and e pattern") {
    HPReal e = const_value("e", 512);
    CfExpansion cf = regular_cf_expand(e, 1000);
    REQUIRE(cf.quotients.size() >= 30);
    std::vector<long> expect{2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10};
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(cf.quotients[i] == expect[i]);
    CHECK(cf.exhausted);  // finite precision must eventually stop trusted output
}

TEST_CASE("minor convergents") {
    // alpha = e: a = [2,1,2,...]; minor convergents of n=2 (a_2=2): b=1,2
    std::vector<Int> q{2, 1, 2};
    auto mc = minor_convergents(q);
    REQUIRE(mc.size() == 3);  // n=1: b=1; n=2: b=1,2
    CHECK(mc[0].n == 1);
    CHECK(mc[0].p == 3);  // 1*2+1
    CHECK(mc[0].q == 1);
    CHECK(mc[2].p == 8);  // 2*3+2
    CHECK(mc[2].q == 3);
}

TEST_CASE("error-sum accumulation: geometric toy and divergence") {
    // alpha = 1/3 approximated by truncations r_n with |3^n * alpha - r_n| = 3^-n
    ErrorSumSpec s{
        [](mpfr_prec_t p) { return HPReal::of(Rat(1, 3), p); },
        [](long n) -> std::pair<Rat, Rat> {
            Int p3 = 1;
            for (long i = 0; i < n; ++i) p3 *= 3;
            return {Rat(p3), Rat(p3) / 3 - Rat(1) / Rat(p3)};
        },
        SignMode::absolute};
    HPReal tol = HPReal::parse("1e-30", 160);
    auto rep = accumulate(s, tol, 500);
    CHECK(rep.converged);
    // sum of 3^-n = 3/2
    CHECK(abs(rep.value - HPReal::of(Rat(3, 2), 160)) < HPReal::parse("1e-29", 160));
    CHECK(rep.tail_bound < tol);

    ErrorSumSpec bad{
        [](mpfr_prec_t p) { return HPReal::of(Rat(1, 3), p); },
        [](long n) -> std::pair<Rat, Rat> {
            Int p2 = 1;
            for (long i = 0; i < n; ++i) p2 *= 2;
            return {Rat(3 * p2), Rat(p2) + Rat(1)};  // |term| = 2^n, diverges
        },
        SignMode::absolute};
    CHECK_THROWS_AS(accumulate(bad, tol, 500), divergence_error);

    CHECK_THROWS_AS(accumulate(s, HPReal(160), 10), std::invalid_argument);
}
