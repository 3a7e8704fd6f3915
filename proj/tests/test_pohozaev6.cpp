#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/definiteness.hpp"
#include "qcert/pohozaev6.hpp"
#include "qcert/radial.hpp"

using namespace qcert;

TEST_CASE("radial oracle for the six closed-form constants") {
    for (long n = 10; n <= 26; ++n)
        for (long km = 4; km < n - 6; km += 2) {
            const RadialExpr w = bubble_w(n, 6), Z = bubble_Z(n, 6);
            const RadialExpr lw = shifted_laplacian(w, n, 0), lZ = shifted_laplacian(Z, n, 0);
            const RadialExpr wp = w.derivative(), lwp = lw.derivative();
            const auto c = c6_closed(n, km);
            CHECK(integrate_moment(lZ * wp.div_r(1).derivative() + Z * lwp.div_r(1).derivative(),
                                   n + km - 2) == c[1]);
            CHECK(integrate_moment(lZ * lw, n + km - 3) == c[2]);
            CHECK(integrate_moment(lZ * wp + Z * lwp, n + km - 4) == c[3]);
            CHECK(integrate_moment(Z * wp.div_r(1).derivative(), n + km - 4) == c[4]);
            CHECK(integrate_moment(Z * wp, n + km - 6) == c[5]);
            CHECK(integrate_moment(Z * w, n + km - 7) == c[6]);
        }
}

TEST_CASE("c6 closed form shape") {
    // theta = 0: c6 = -(n-6)/2 (-I^{n+k+m-7}_{n-5} + I^{n+k+m-5}_{n-5})
    const long n = 16, km = 6;
    const auto c = c6_closed(n, km);
    CHECK(c[6] == rat(-(n - 6), 2) * (moment_integral(n + km - 5, n - 5) -
                                      moment_integral(n + km - 7, n - 5)));
    // log branch: bracket collapses to 1
    const auto clog = c6_closed(16, 10);
    CHECK(clog[6] == ScaledRational(rat(-10, 2), 0));
    CHECK(clog[1] == ScaledRational(Rational(4 * 100 * 144), 0));
}

TEST_CASE("pipeline regression pin at (12, 2, 2)") {
    const CoeffSet6 cs = coeff_pipeline_q6(12, 2, 2);
    // n even: no pi factor anywhere in the pipeline
    for (int i = 1; i <= 6; ++i) CHECK(cs.c[i].pi_half_power() == 0);
    // c6(12,4) = -3(-I^9_7 + I^11_7) = -3(-1/60 + 1/12) = -1/5
    CHECK(cs.c[6] == ScaledRational(rat(-1, 5), 0));
    // cross-tie with the radial kernel, independently of the frozen value
    const RadialExpr w = bubble_w(12, 6), Z = bubble_Z(12, 6);
    CHECK(integrate_moment(Z * w, 12 + 4 - 7) == cs.c[6]);
}

TEST_CASE("thresholds flip exactly where stated") {
    CHECK(classify(matrix_q6({Family::D, 10, 2})).positive_definite());
    CHECK(classify(matrix_q6({Family::D, 26, 2})).positive_definite());
    CHECK_FALSE(classify(matrix_q6({Family::D, 27, 2})).positive_definite());
    CHECK(classify(matrix_q6({Family::W, 29, 1})).positive_definite());
    CHECK_FALSE(classify(matrix_q6({Family::W, 30, 1})).positive_definite());
    CHECK(classify(matrix_q6({Family::H, 33, 2})).positive_definite());
    CHECK_FALSE(classify(matrix_q6({Family::H, 34, 2})).positive_definite());
}

TEST_CASE("blocks are symmetric as built and pi-homogeneous") {
    for (long n : {15L, 18L, 23L}) {
        const SymMatrix D = matrix_q6({Family::D, n, 2});
        CHECK(D.common_pi_half_power() == (n % 2 ? 2 : 0));
        if (n >= 14) {
            const SymMatrix H = matrix_q6({Family::H, n, 2});
            CHECK(H.common_pi_half_power() == (n % 2 ? 2 : 0));
        }
        const SymMatrix W = matrix_q6({Family::W, n, 1});
        CHECK(W.common_pi_half_power() == (n % 2 ? 2 : 0));
    }
}

TEST_CASE("scan against the expectation table") {
    const auto reports = scan_q6(10, 18, {Family::D, Family::W, Family::H}, std::nullopt, 2);
    CHECK(!reports.empty());
    for (const auto& r : reports) CHECK(r.passed());
    const auto fail_window = scan_q6(27, 28, {Family::D}, 2, 1);
    REQUIRE(fail_window.size() == 2);
    for (const auto& r : fail_window) {
        CHECK(r.passed());
        CHECK(r.expected == "not-positive-definite");
    }
}

TEST_CASE("fault injection: perturbing one c constant breaks the oracle") {
    const long n = 14, km = 6;
    auto c = c6_closed(n, km);
    c[2] += ScaledRational(Rational(1), c[2].pi_half_power());
    const RadialExpr Z = bubble_Z(n, 6);
    const RadialExpr lZ = shifted_laplacian(Z, n, 0);
    const RadialExpr lw = shifted_laplacian(bubble_w(n, 6), n, 0);
    CHECK_FALSE(integrate_moment(lZ * lw, n + km - 3) == c[2]);
}

TEST_CASE("log-branch entries carry the N0 scale and no moment factor") {
    // n=10, s=2 is the 1x1 log-branch block: k+m = 4 = n-6
    const SymMatrix M = matrix_q6({Family::D, 10, 2});
    REQUIRE(M.dim() == 1);
    CHECK(M.common_pi_half_power() == 0);
    const auto cp = cbarp_from(10, 2, 2, cbar_from(10, 2, 2, c6_closed(10, 4)));
    CHECK(M.at(0, 0) == kLogBranchScale * d_form_q6(cp, Rational(0), Rational(0)));
    CHECK(classify(M).positive_definite());
    // and the un-scaled builder must refuse the branch
    CHECK_THROWS_AS(matrix_q6({Family::D, 10, 2}, false), domain_error);
}
