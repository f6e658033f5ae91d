#include <catch2/catch_amalgamated.hpp>

#include "errsum/exp_errsums.hpp"

using namespace errsum;

TEST_CASE("Cohn residuals: exact alpha*e + beta") {
    // q_n e - p_n for e = [2;1,2,1,1,4,...]: convergents 2/1, 3/1, 8/3, 11/4, 19/7, ...
    HPReal e = const_value("e", 256);
    CfExpansion cf = regular_cf_expand(e, 40);
    for (long m = 0; m <= 10; ++m) {
        struct Case {
            long idx;
            CohnBranch br;
        } cases[] = {{3 * m - 1, CohnBranch::idx_3m_minus_1},
                     {3 * m, CohnBranch::idx_3m},
                     {3 * m + 1, CohnBranch::idx_3m_plus_1}};
        for (auto [idx, br] : cases) {
            ExactExpIntegral r = cohn_residual(m, br);
            Int p, q;
            if (idx < 0) {
                p = 1;  // p_{-1} = 1, q_{-1} = 0
                q = 0;
            } else {
                REQUIRE(idx < static_cast<long>(cf.convergents.size()));
                p = cf.convergents[static_cast<std::size_t>(idx)].p;
                q = cf.convergents[static_cast<std::size_t>(idx)].q;
            }
            // alpha*e + beta must equal q e - p exactly as a linear form in e
            CHECK(r.alpha == Rat(q));
            CHECK(r.beta == Rat(-p));
        }
    }
    CHECK_THROWS_AS(cohn_residual(-1, CohnBranch::idx_3m), std::invalid_argument);
}

TEST_CASE("1F1(1,3/2;.) series vs CF") {
    HPReal f1 = hyp1f1_one_half(Rat(1), 192);
    CHECK(abs(f1 - HPReal::parse("2.0300784692787049755", 192)) <
          HPReal::parse("1e-18", 192));
    // identity: 1F1(1,3/2;1) = e * int_0^1 e^{-t^2} dt
    HPReal rhs = const_value("e", 192) * HPReal::parse("0.74682413281242702540", 192);
    CHECK(abs(f1 - rhs) < HPReal::parse("1e-18", 192));
    CHECK(hyp1f1_one_half(Rat(0), 128) == HPReal::of(1L, 128));
}

TEST_CASE("Thm 1: three routes pairwise agree, l in {2..5}") {
    HPReal tol = HPReal::parse("1e-35", 256);
    const char* frozen[] = {"1.4106861346424479977", "0.8365973978267031698",
                            "0.5922965364693265757", "0.4578550519934935014"};
    for (long l = 2; l <= 5; ++l) {
        auto cf = errsum_exp(l, ExpMethod::cf_sum, 256, tol);
        auto erf = errsum_exp(l, ExpMethod::erf_form, 256, tol);
        auto gcf = errsum_exp(l, ExpMethod::gauss_cf, 256, tol);
        CHECK(abs(cf.value - erf.value) < HPReal::parse("1e-30", 256));
        CHECK(abs(erf.value - gcf.value) < HPReal::parse("1e-30", 256));
        CHECK(abs(erf.value - HPReal::parse(frozen[l - 2], 256)) <
              HPReal::parse("1e-18", 256));
    }
    CHECK_THROWS_AS(errsum_exp(1, ExpMethod::erf_form, 128, tol), std::invalid_argument);
}

TEST_CASE("Cor 1: minor-convergent sum for e, direct vs weighted") {
    HPReal tol = HPReal::parse("1e-30", 256);
    auto direct = minor_convergent_sum_e(false, 256, tol);
    auto weighted = minor_convergent_sum_e(true, 256, tol);
    CHECK(direct.converged);
    CHECK(weighted.converged);
    CHECK(abs(direct.value - weighted.value) < HPReal::parse("1e-25", 256));
    // equals e * int_0^1 e^{-t^2} dt = 1F1(1, 3/2; 1)
    CHECK(abs(direct.value - hyp1f1_one_half(Rat(1), 256)) <
          HPReal::parse("1e-25", 256));
}
