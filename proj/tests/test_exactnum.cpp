#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcert/exactnum.hpp"

using namespace qcert;

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_half(6) == ScaledRational(Rational(2), 0));   // Gamma(3) = 2
    CHECK(gamma_half(1) == ScaledRational(Rational(1), 1));   // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_half(3) == ScaledRational(rat(1, 2), 1));     // Gamma(3/2) = sqrt(pi)/2
    CHECK(gamma_half(2) == ScaledRational(Rational(1), 0));   // Gamma(1) = 1
    CHECK(gamma_half(8) == ScaledRational(Rational(6), 0));   // Gamma(4) = 6
    CHECK_THROWS_AS(gamma_half(0), domain_error);
    CHECK_THROWS_AS(gamma_half(-3), domain_error);
}

TEST_CASE("gamma functional equation") {
    for (long twice_x = 1; twice_x <= 40; ++twice_x) {
        const ScaledRational lhs = gamma_half(twice_x + 2);  // Gamma(x+1)
        const ScaledRational rhs = rat(twice_x, 2) * gamma_half(twice_x);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("scaled addition keeps pi powers honest") {
    const ScaledRational a(rat(1, 2), 2), b(rat(1, 4), 2);
    CHECK(a + b == ScaledRational(rat(3, 4), 2));
    CHECK(ScaledRational(Rational(1), 0) + ScaledRational() == ScaledRational(Rational(1), 0));
    CHECK_THROWS_AS(ScaledRational(Rational(1), 0) + ScaledRational(Rational(1), 2),
                    homogeneity_error);
    // cancellation produces the canonical zero, addable to anything
    const ScaledRational z = a - a;
    CHECK(z.is_zero());
    CHECK(z.pi_half_power() == 0);
    CHECK(z + ScaledRational(Rational(5), 4) == ScaledRational(Rational(5), 4));
}

TEST_CASE("scaled multiplication is a monoid action on pi powers") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9), pw(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const ScaledRational x(rat(num(rng), den(rng)), static_cast<int>(pw(rng)));
        const ScaledRational y(rat(num(rng), den(rng)), static_cast<int>(pw(rng)));
        const ScaledRational z(rat(num(rng), den(rng)), static_cast<int>(pw(rng)));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero() && !y.is_zero())
            CHECK((x * y).pi_half_power() == x.pi_half_power() + y.pi_half_power());
    }
}

TEST_CASE("quadext sign by rational comparisons") {
    CHECK(quadext_sign(QuadExtNumber(Rational(1), Rational(0), Rational(2))) == 1);
    CHECK(quadext_sign(QuadExtNumber(Rational(-3), Rational(2), Rational(2))) == -1);
    CHECK(quadext_sign(QuadExtNumber(Rational(2), Rational(-1), Rational(4))) == 0);
    CHECK(quadext_sign(QuadExtNumber(Rational(-1), Rational(1), Rational(2))) == 1);
    CHECK_THROWS_AS(QuadExtNumber(Rational(1), Rational(1), Rational(-2)), domain_error);
}

TEST_CASE("quadext arithmetic: conjugate product and sign antisymmetry") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 7), rad(1, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
        const Rational D = rat(rad(rng), den(rng));
        const QuadExtNumber v(a, b, D);
        const QuadExtNumber prod = v * v.conj();
        CHECK(prod.is_rational());
        CHECK(prod.a() == a * a - b * b * D);
        const int s = quadext_sign(v) * quadext_sign(-v);
        CHECK((s == -1 || s == 0));
        CHECK((s == 0) == v.is_zero());
    }
}

TEST_CASE("quadext contexts never mix") {
    const QuadExtNumber x(Rational(1), Rational(1), Rational(2));
    const QuadExtNumber y(Rational(1), Rational(1), Rational(3));
    CHECK_THROWS_AS(x + y, domain_error);
    CHECK_THROWS_AS(x * y, domain_error);
}

TEST_CASE("symmetric matrix invariants") {
    std::vector<std::vector<ScaledRational>> bad(2, std::vector<ScaledRational>(2));
    bad[0][1] = ScaledRational(Rational(1), 0);
    bad[1][0] = ScaledRational(Rational(2), 0);
    CHECK_THROWS_AS(SymMatrix(std::move(bad)), domain_error);

    std::vector<std::vector<ScaledRational>> mixed(2, std::vector<ScaledRational>(2));
    mixed[0][0] = ScaledRational(Rational(1), 0);
    mixed[1][1] = ScaledRational(Rational(1), 2);
    CHECK_THROWS_AS(SymMatrix(std::move(mixed)), homogeneity_error);

    const SymMatrix ok = SymMatrix::diagonal(
        {ScaledRational(Rational(3), 2), ScaledRational(Rational(7), 2)});
    CHECK(ok.common_pi_half_power() == 2);
    CHECK(ok.rational_part()[1][1] == Rational(7));
}
