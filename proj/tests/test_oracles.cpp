#include <catch2/catch_amalgamated.hpp>

#include "errsum/oracles.hpp"

using namespace errsum;

namespace {
bool close(const HPReal& a, const HPReal& b, const char* tol) {
    return abs(a - b) < HPReal::parse(tol, 256);
}
}  // namespace

TEST_CASE("zeta via Euler-Maclaurin matches MPFR") {
    for (unsigned long s : {2UL, 3UL, 5UL}) {
        HPReal z = zeta_euler_maclaurin(s, 256);
        HPReal ref(256);
        mpfr_zeta_ui(ref.raw(), s, MPFR_RNDN);
        CHECK(abs(z - ref) < HPReal::parse("1e-70", 256));
    }
    CHECK_THROWS_AS(zeta_euler_maclaurin(1, 128), std::invalid_argument);
}

TEST_CASE("constants and function evaluation") {
    HPReal pi = const_value("pi", 256);
    CHECK(close(pi, HPReal::parse("3.14159265358979323846264338327950288", 256), "1e-34"));
    HPReal rho = const_value("golden_rho", 256);
    CHECK(close(rho * rho, rho + HPReal::of(1L, 256), "1e-70"));
    CHECK(close(const_value("log_rho", 256), fn_eval("log", rho, 256), "1e-70"));
    CHECK_THROWS_AS(const_value("nope", 128), std::invalid_argument);
    CHECK_THROWS_AS(fn_eval("log", HPReal::of(-1L, 128), 128), std::domain_error);
    CHECK_THROWS_AS(fn_eval("arccos", HPReal::of(2L, 128), 128), std::domain_error);
    CHECK_THROWS_AS(fn_eval("log1p", Rat(-2), 128), std::domain_error);
}

TEST_CASE("HPReal basics") {
    HPReal a = HPReal::of(Rat(1, 3), 128);
    HPReal b = HPReal::of(Rat(2, 3), 256);
    CHECK((a + b).prec() == 128);  // min-precision propagation
    CHECK(HPReal::parse("1e-12", 128) > HPReal(128));
    CHECK(HPReal::of(Rat(3, 4), 64).to_rational() == Rat(3, 4));
    HPReal c = HPReal::of(1L, 64);
    CHECK(c.ulp() == Rat(Int(1), Int(1) << 63));
}

TEST_CASE("Gauss-Legendre quadrature") {
    QuadratureSpec qs;
    qs.dimension = 1;
    qs.nodes = 24;
    qs.depth = 3;
    qs.refine = {0, 0, 0};
    // int_0^1 e^{-t^2} dt = 0.74682413281242702540...
    auto r = integrate(
        [](const std::vector<HPReal>& v) {
            return fn_eval("exp", -(v[0] * v[0]), v[0].prec());
        },
        qs, 192);
    CHECK(abs(r.value - HPReal::parse("0.746824132812427025399", 192)) <
          HPReal::parse("1e-15", 192));

    // 2D separable: int int x*y = 1/4
    QuadratureSpec q2;
    q2.dimension = 2;
    q2.nodes = 8;
    q2.depth = 2;
    auto r2 = integrate(
        [](const std::vector<HPReal>& v) { return v[0] * v[1]; }, q2, 128);
    CHECK(abs(r2.value - HPReal::of(Rat(1, 4), 128)) < HPReal::parse("1e-25", 128));

    // integrable endpoint singularity 1/sqrt(x), refined toward 0
    QuadratureSpec q1;
    q1.dimension = 1;
    q1.nodes = 16;
    q1.depth = 24;
    q1.refine = {-1, 0, 0};
    auto r1 = integrate(
        [](const std::vector<HPReal>& v) {
            return HPReal::of(1L, v[0].prec()) / fn_eval("sqrt", v[0], v[0].prec());
        },
        q1, 128);
    CHECK(abs(r1.value - HPReal::of(2L, 128)) < HPReal::parse("1e-4", 128));

    CHECK_THROWS_AS(integrate([](const std::vector<HPReal>& v) { return v[0]; },
                              QuadratureSpec{1, 1, 1, {0, 0, 0}}, 64),
                    std::invalid_argument);
}
