#include <catch2/catch_amalgamated.hpp>

#include "errsum/log1p_family.hpp"

using namespace errsum;

TEST_CASE("log1p sequences and CF pair equality") {
    // B_n(1) are the central Delannoy numbers
    const long delannoy[] = {1, 3, 13, 63, 321, 1683, 8989};
    for (long n = 0; n <= 6; ++n)
        CHECK(log1p_seq(Rat(1), n).B == delannoy[n]);

    Rat t(2, 5);
    auto cv = gcf_convergents(log1p_gcf(t), 12);
    for (long n = 1; n <= 12; ++n) {
        Log1pSeqPair s = log1p_seq(t, n);
        CHECK(cv[static_cast<std::size_t>(n - 1)].first == s.A);
        CHECK(cv[static_cast<std::size_t>(n - 1)].second == s.B);
    }
    CHECK_THROWS_AS(log1p_seq(Rat(-3, 2), 3), std::domain_error);
    CHECK_THROWS_AS(log1p_seq(Rat(2), 3), std::domain_error);
}

TEST_CASE("recurrence (4.20) and Vandermonde condition") {
    for (const Rat& t : {Rat(1), Rat(1, 2), Rat(-1, 3), Rat(7, 9)}) {
        auto rep = verify_recurrence_420(t, 30);
        CHECK(rep.ok);
    }
}

TEST_CASE("Lemma 4.1: exact linear form equals the integral") {
    for (long n : {1L, 3L, 6L}) {
        auto [exact, quad] = lemma41_check(Rat(1, 2), n, 160);
        CHECK(abs(exact - quad.value) <
              quad.error_estimate + HPReal::parse("1e-30", 160));
        CHECK(exact.sign() > 0);
    }
}

TEST_CASE("Cor 4.1 closed form and error sum") {
    // t = 1: E = pi/4
    HPReal pi4 = const_value("pi", 256) / HPReal::of(4L, 256);
    CHECK(abs(log1p_closed_form(Rat(1), 256) - pi4) < HPReal::parse("1e-70", 256));

    HPReal tol = HPReal::parse("1e-35", 256);
    auto series = errsum_log1p(Rat(1), Log1pMethod::series, 256, tol);
    CHECK(series.converged);
    CHECK(abs(series.value - pi4) < HPReal::parse("1e-30", 256));

    // frozen value at t = 1/2
    CHECK(abs(log1p_closed_form(Rat(1, 2), 256) -
              HPReal::parse("0.41970516716243772329", 256)) <
          HPReal::parse("1e-19", 256));
}

TEST_CASE("Cor 4.2 ODE residual is numerically zero") {
    std::vector<Rat> samples{Rat(1, 10), Rat(1, 3), Rat(1, 2), Rat(9, 10)};
    HPReal res = ode_check(samples, Rat(1, 1 << 20), 256);
    // central difference: O(h^2) ~ 1e-12
    CHECK(res < HPReal::parse("1e-10", 256));
}

TEST_CASE("Cor 4.3 irrationality audit") {
    auto rows = irrationality_audit(1, 2, 12, 192);
    REQUIRE(rows.size() == 12);
    for (const auto& r : rows) {
        CHECK(r.linear_form.sign() > 0);     // never exactly zero
        CHECK(r.linear_form < HPReal::of(1L, 192));
    }
    CHECK_THROWS_AS(irrationality_audit(3, 2, 5, 128), std::domain_error);
    CHECK_THROWS_AS(irrationality_audit(2, 2, 5, 128), std::domain_error);  // e a^2 >= 4b
}
