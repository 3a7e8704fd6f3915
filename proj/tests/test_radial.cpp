#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/radial.hpp"

using namespace qcert;

TEST_CASE("moment integrals against elementary antiderivatives") {
    CHECK(moment_integral(1, 2) == ScaledRational(rat(1, 2), 0));  // -1/(2(1+r^2)) at 0
    CHECK(moment_integral(0, 1) == ScaledRational(rat(1, 2), 2));  // arctan -> pi/2
    CHECK(moment_integral(3, 3) == ScaledRational(rat(1, 4), 0));  // B(2,1)/2
    CHECK_THROWS_AS(moment_integral(1, 1), convergence_error);
    CHECK_THROWS_AS(moment_integral(-1, 3), domain_error);
}

TEST_CASE("moment recurrences on sample indices") {
    CHECK(check_moment_recurrences(3, 1));
    CHECK(check_moment_recurrences(4, 2));
    CHECK_THROWS_AS(check_moment_recurrences(2, 1), convergence_error);
    for (long n = 3; n <= 12; ++n)
        for (long l = 2; l <= 2 * n - 4; ++l) CHECK(check_moment_recurrences(n, l));
}

TEST_CASE("shifted laplacian basics") {
    // constant -> 0
    CHECK(shifted_laplacian(RadialExpr::term(Rational(1), 0, 0), 5, 0).is_zero());
    // Delta r^2 = 2n at n = 3
    const RadialExpr r2 = RadialExpr::term(Rational(1), 2, 0);
    CHECK(shifted_laplacian(r2, 3, 0) == RadialExpr::term(Rational(6), 0, 0));
}

namespace {

// Closed coefficient lists for Delta^t applied to (1+r^2)^{-a} p^{(b)}, the
// oracle every system-matrix column is checked against. Exponents are in the
// doubled units used by RadialExpr (term a2 means (1+r^2)^{-a2/2}).
RadialExpr newbasis_once(long n, long a2, long b) {
    const Rational twoa = rat(a2, 1);  // doubled exponent, matching the closed lists
    RadialExpr out;
    out += (-twoa * (twoa + 2)) * RadialExpr::power_basis(a2 + 4);
    out += (-twoa * (Rational(n) - twoa + Rational(2 * b - 2))) * RadialExpr::power_basis(a2 + 2);
    return out;
}

RadialExpr newbasis_twice(long n, long a2, long b) {
    const Rational twoa = rat(a2, 1);
    RadialExpr out;
    out += (twoa * (twoa + 2) * (twoa + 4) * (twoa + 6)) * RadialExpr::power_basis(a2 + 8);
    out += (twoa * (twoa + 2) * (twoa + 4) * Rational(2) *
            (Rational(n) - twoa + Rational(2 * b - 4))) *
           RadialExpr::power_basis(a2 + 6);
    out += (twoa * (twoa + 2) * (Rational(n) - twoa + Rational(2 * b - 2)) *
            (Rational(n) - twoa + Rational(2 * b - 4))) *
           RadialExpr::power_basis(a2 + 4);
    return out;
}

RadialExpr newbasis_thrice(long n, long a2, long b) {
    const Rational twoa = rat(a2, 1);
    const Rational e2 = Rational(n) - twoa + Rational(2 * b - 2);
    const Rational e4 = Rational(n) - twoa + Rational(2 * b - 4);
    const Rational e6 = Rational(n) - twoa + Rational(2 * b - 6);
    RadialExpr out;
    out += (-twoa * (twoa + 2) * (twoa + 4) * (twoa + 6) * (twoa + 8) * (twoa + 10)) *
           RadialExpr::power_basis(a2 + 12);
    out += (-twoa * (twoa + 2) * (twoa + 4) * (twoa + 6) * (twoa + 8) * Rational(3) * e6) *
           RadialExpr::power_basis(a2 + 10);
    out += (-twoa * (twoa + 2) * (twoa + 4) * (twoa + 6) * e4 * Rational(3) * e6) *
           RadialExpr::power_basis(a2 + 8);
    out += (-twoa * (twoa + 2) * (twoa + 4) * e2 * e4 * e6) * RadialExpr::power_basis(a2 + 6);
    return out;
}

}  // namespace

TEST_CASE("newbasis oracle: symbolic Laplacians reproduce the closed lists") {
    for (long n = 8; n <= 30; ++n)
        for (long a2 = 1; a2 <= 24; ++a2)  // a = 1/2, 1, ..., 12
            for (long b = 0; b <= 8; ++b) {
                const RadialExpr f = RadialExpr::power_basis(a2);
                const RadialExpr d1 = shifted_laplacian(f, n, b);
                CHECK(d1.fold_even_powers() == newbasis_once(n, a2, b));
                const RadialExpr d2 = shifted_laplacian(d1, n, b);
                CHECK(d2.fold_even_powers() == newbasis_twice(n, a2, b));
                const RadialExpr d3 = shifted_laplacian(d2, n, b);
                CHECK(d3.fold_even_powers() == newbasis_thrice(n, a2, b));
            }
}

TEST_CASE("integrate_moment on w-type products") {
    // w^2 with w = (1+r^2)^{-(n-6)/2} at n = 12, extra power n-7 = 5: I^5_6
    const RadialExpr w = bubble_w(12, 6);
    CHECK(integrate_moment(w * w, 5) == moment_integral(5, 6));
    CHECK(integrate_moment(RadialExpr(), 3).is_zero());
    // w w' at n = 12, extra n-6: -(n-6) I^{n-5}_{n-5}
    const ScaledRational got = integrate_moment(w * w.derivative(), 6);
    CHECK(got == Rational(-6) * moment_integral(7, 7));
    // divergent single term is an error even with benign-looking coefficients
    CHECK_THROWS_AS(integrate_moment(RadialExpr::term(Rational(1), 2, 2), 0),
                    convergence_error);
}

TEST_CASE("fundamental theorem: integral of an exact derivative vanishes") {
    for (long n = 10; n <= 16; ++n)
        for (long mpow = 1; mpow <= 4; ++mpow) {
            const RadialExpr f = bubble_w(n, 6) * bubble_w(n, 6);
            const RadialExpr rm = RadialExpr::term(Rational(1), mpow, 0);
            CHECK(integrate_moment((rm * f).derivative(), 0).is_zero());
        }
}

TEST_CASE("fold keeps integrals intact") {
    const RadialExpr z = bubble_Z(13, 6);
    const RadialExpr expr = z * z.derivative();
    CHECK(integrate_moment(expr, 8) == integrate_moment(expr.fold_even_powers(), 8));
}

TEST_CASE("Z is the dilation derivative of w") {
    for (long n = 9; n <= 20; ++n)
        for (int order : {4, 6}) {
            if (n <= order) continue;
            const RadialExpr w = bubble_w(n, order);
            const RadialExpr z = bubble_Z(n, order);
            const RadialExpr expected = RadialExpr::term(Rational(1), 1, 0) * w.derivative() +
                                        rat(n - order, 2) * w;
            CHECK(z == expected);
        }
}
