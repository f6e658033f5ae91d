#include <catch2/catch_amalgamated.hpp>

#include "errsum/pi_logrho.hpp"

using namespace errsum;

TEST_CASE("pi sequences and CF") {
    PiSeqPair s0 = pi_seq(0);
    CHECK(s0.A == 20);
    CHECK(s0.B == 24);
    PiSeqPair s1 = pi_seq(1);
    CHECK(Rat(s1.B / 4).get_den() == 1);  // B_n/4 integer
    CHECK(s1.A.get_den() != 1);           // A_1 is not an integer

    // CF convergents equal B_n/(4 A_n) as values for n <= 12
    auto cv = gcf_convergents(pi_gcf(), 13);
    for (long n = 0; n <= 12; ++n) {
        PiSeqPair s = pi_seq(n);
        CHECK(cv[static_cast<std::size_t>(n)].first /
                  cv[static_cast<std::size_t>(n)].second ==
              (s.B / 4) / s.A);
    }
}

TEST_CASE("pi residuals: sign, decay, bound") {
    HPReal prev(192);
    for (long n = 0; n <= 12; ++n) {
        HPReal r = pi_residual(n, 192);
        CHECK(r.sign() > 0);
        if (n > 0) CHECK(r < prev);
        // the bound is attained with equality at n = 0; allow rounding slack
        CHECK(r <= pi_residual_bound(n, 192) * HPReal::parse("1.000000000001", 192));
        prev = r;
    }
    // n=0: A_0 - pi B_0/4 = 20 - 6 pi
    HPReal expect = HPReal::of(20L, 192) - HPReal::of(6L, 192) * const_value("pi", 192);
    CHECK(abs(pi_residual(0, 192) - expect) < HPReal::parse("1e-50", 192));
}

TEST_CASE("Thm 2 error sum vs closed form") {
    HPReal tol = HPReal::parse("1e-20", 256);
    auto rep = errsum_pi(SignMode::signed_sum, 256, tol);
    CHECK(rep.converged);
    CHECK(abs(rep.value - thm2_closed_form(256)) < HPReal::parse("1e-15", 256));
    CHECK(abs(rep.value - HPReal::parse("-5.4333111067784279972", 256)) <
          HPReal::parse("5e-13", 256));
    // all terms negative => absolute = -signed
    auto repa = errsum_pi(SignMode::absolute, 256, tol);
    CHECK(abs(repa.value + rep.value) < HPReal::parse("1e-15", 256));
}

TEST_CASE("logrho sequences, residuals, CF") {
    LogRhoSeqPair s0 = logrho_seq(0);
    CHECK(s0.C == 13);
    CHECK(s0.D == 60);
    auto cv = gcf_convergents(logrho_gcf(), 11);
    for (long n = 0; n <= 10; ++n) {
        LogRhoSeqPair s = logrho_seq(n);
        CHECK(cv[static_cast<std::size_t>(n)].first /
                  cv[static_cast<std::size_t>(n)].second ==
              s.D / s.C);
    }
    // three independent residual routes agree
    for (long n : {0L, 1L, 3L, 6L}) {
        HPReal direct = logrho_residual(n, 192);
        HPReal hyp = logrho_residual_2f1(n, 192);
        CHECK(abs(direct - hyp) < HPReal::parse("1e-45", 192));
        CHECK(direct.sign() > 0);
    }
    CHECK(abs(logrho_residual(0, 192) - HPReal::parse("0.0877317710799", 192)) <
          HPReal::parse("1e-12", 192));
}

TEST_CASE("Thm 3 error sum vs closed form") {
    HPReal tol = HPReal::parse("1e-20", 256);
    auto rep = errsum_logrho(SignMode::signed_sum, 256, tol);
    CHECK(rep.converged);
    CHECK(abs(rep.value - thm3_closed_form(256)) < HPReal::parse("1e-15", 256));
    CHECK(abs(rep.value - HPReal::parse("-0.121064945992781625", 256)) <
          HPReal::parse("5e-13", 256));
}
