#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/linsys.hpp"
#include "qcert/radial.hpp"

using namespace qcert;

TEST_CASE("admissibility grid") {
    CHECK(ProblemIndex{Order::four, 10, 2, 0}.admissible());
    CHECK_FALSE(ProblemIndex{Order::four, 9, 2, 0}.admissible());
    CHECK_FALSE(ProblemIndex{Order::four, 10, 3, 0}.admissible());  // k > K-2 = 2... k=3 invalid
    CHECK(ProblemIndex{Order::six, 12, 2, 0}.admissible());
    CHECK_FALSE(ProblemIndex{Order::six, 10, 2, 0}.admissible());
    CHECK_FALSE(ProblemIndex{Order::four, 14, 4, 2}.admissible());  // s > (k-2)/2
    CHECK_THROWS_AS(rhs_vector({Order::six, 10, 2, 0}, RhsVariant::plain), domain_error);
}

TEST_CASE("pinned right-hand sides") {
    // order 4, n=10, k=2, s=0: (0, 0, -136, -32)
    const auto b = rhs_vector({Order::four, 10, 2, 0}, RhsVariant::plain);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == 0);
    CHECK(b[1] == 0);
    CHECK(b[2] == Rational(-136));
    CHECK(b[3] == Rational(-32));
    // order 2, s=0: (0, 0, 1) -- the binomial convention collapses to C(0,0)
    const auto b2 = rhs_vector({Order::two, 10, 2, 0}, RhsVariant::plain);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == 0);
    CHECK(b2[1] == 0);
    CHECK(b2[2] == Rational(1));
    CHECK_THROWS_AS(rhs_vector({Order::two, 10, 2, 0}, RhsVariant::primed), domain_error);
}

TEST_CASE("hand-expanded signed entries for s = 0, 1, 2") {
    // order 4 closed forms: b3 = (-1)^{s+1} 2(n^2-4n+8), b4 = (-1)^s (2s(...) - 2(k+2)(n-6)),
    // b_{s+4} = 2s(2k-2s+n-2) - 2(k+2)(n-6).
    for (long n : {12L, 17L, 25L})
        for (long k = 2; k <= n - 8; ++k)
            for (long s = 0; s <= (k - 2) / 2 && s <= 2; ++s) {
                const auto b = rhs_vector({Order::four, n, k, s}, RhsVariant::plain);
                const long sgn3 = (s + 1) % 2 == 0 ? 1 : -1;
                const long sgn4 = s % 2 == 0 ? 1 : -1;
                CHECK(b[2] == Rational(sgn3 * 2 * (n * n - 4 * n + 8)));
                CHECK(b[3] == Rational(sgn4) * Rational(2 * s * (n * n - 4 * n + 8) -
                                                        2 * (k + 2) * (n - 6)));
                CHECK(b[s + 3] ==
                      Rational(2 * s * (2 * k - 2 * s + n - 2) - 2 * (k + 2) * (n - 6)));
            }
    // order 6 closed forms at s = 1: b6 = (-1)^{s-1}[C(3,3)c5 + C(2,2)c4 + C(1,1)c3 + c2]
    {
        const long n = 16, k = 4, s = 1;
        const auto b = rhs_vector({Order::six, n, k, s}, RhsVariant::plain);
        const Rational c1 = Rational(2 * s * (2 * k - 2 * s + n - 2)) * Rational(2 * s - 2) *
                            Rational(2 * k - 2 * s + n - 4);
        CHECK(c1 == 0);  // s = 1 kills the c1 slot
        const Rational c2 = Rational(-2 * s * (2 * k - 2 * s + n - 2)) *
                            Rational(4 * (n - 8) * k + 3 * n * n - 18 * n + 8);
        const Rational c3 = Rational(4 * (n - 8) * (n - 6) * k * k) +
                            Rational(2 * (n - 6) * (3 * n * n - 12 * n - 40) * k) +
                            Rational(2 * s * (2 * k - 2 * s + n - 2)) *
                                Rational(3 * n * n - 26 * n + 72) +
                            Rational(3 * n * n * n * n - 12 * n * n * n - 44 * n * n + 176 * n +
                                     192);
        const Rational c4 = Rational(-2 * (n - 4)) * Rational((3 * n * n - 28 * n + 60) * k +
                                                              3 * (n * n * n - 2 * n * n -
                                                                   4 * n + 40));
        const Rational c5 = Rational((n - 4) * n) * Rational(3 * n * n - 12 * n + 44);
        CHECK(b[5] == c5 + c4 + c3 + c2);  // i = 6 = s+5, sign (+1)^0
    }
}

TEST_CASE("pinned solutions") {
    const auto g4 = solve_gamma({Order::four, 10, 2, 0}).gamma;
    REQUIRE(g4.size() == 3);
    CHECK(g4[0] == rat(-1, 8));
    CHECK(g4[1] == rat(-1, 16));
    CHECK(g4[2] == rat(-1, 36));

    const auto g6 = solve_gamma({Order::six, 12, 2, 0}).gamma;
    REQUIRE(g6.size() == 3);
    CHECK(g6[0] == rat(-11, 120));
    CHECK(g6[1] == rat(-11, 240));
    CHECK(g6[2] == rat(-1, 48));
}

TEST_CASE("system matrix pinned entry and band structure") {
    const auto A = system_matrix({Order::four, 10, 2, 0});
    CHECK(A.at(0, 0) == Rational(3840));  // 4(n-2)n(n+2)(k-2s-1)
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j)
            if (i + 1 < j || i > j + 1) CHECK(A.at(i, j) == 0);
    const auto A6 = system_matrix({Order::six, 14, 4, 1});
    for (long i = 0; i < A6.rows; ++i)
        for (long j = 0; j < A6.cols; ++j)
            if (i + 1 < j || i > j + 2) CHECK(A6.at(i, j) == 0);
}

namespace {

// Column oracle: every system-matrix column must match the symbolic expansion
// of the linearized operator applied to its basis element.
void check_columns_against_radial(const ProblemIndex& idx) {
    const auto A = system_matrix(idx);
    const long n = idx.n, b = idx.k - 2 * idx.s;
    for (long j = 1; j <= A.cols; ++j) {
        // basis exponent: (n+2-2j)/2 for order 2, (n-2j)/2 for 4, (n-2-2j)/2 for 6
        const long off = idx.order == Order::two ? 2 : (idx.order == Order::four ? 0 : -2);
        const RadialExpr f = RadialExpr::power_basis(n + off - 2 * j);
        RadialExpr lhs;
        if (idx.order == Order::two) {
            lhs = shifted_laplacian(f, n, b) +
                  Rational(n * (n + 2)) * (RadialExpr::power_basis(4) * f);
        } else if (idx.order == Order::four) {
            lhs = shifted_laplacian(shifted_laplacian(f, n, b), n, b) -
                  Rational((n - 2) * n) * Rational((n + 2) * (n + 4)) *
                      (RadialExpr::power_basis(8) * f);
        } else {
            lhs = shifted_laplacian(shifted_laplacian(shifted_laplacian(f, n, b), n, b), n, b) +
                  Rational((n - 4) * (n - 2) * n) * Rational((n + 2) * (n + 4) * (n + 6)) *
                      (RadialExpr::power_basis(12) * f);
        }
        const RadialExpr folded = lhs.fold_even_powers();
        // row i corresponds to exponent (n+2*order-2-2i)/2 in doubled units
        const long row_base = idx.order == Order::two ? n + 4 : (idx.order == Order::four ? n + 6 : n + 8);
        for (long i = 1; i <= A.rows; ++i)
            CHECK(folded.coefficient(0, row_base - 2 * i) == A.at(i - 1, j - 1));
        // nothing outside the rows the matrix accounts for
        for (const auto& [key, coeff] : folded.terms()) {
            CHECK(key.first == 0);
            const long i = (row_base - key.second) / 2;
            CHECK(i >= 1);
            CHECK(i <= A.rows);
        }
    }
}

}  // namespace

TEST_CASE("system matrix columns equal the symbolic operator expansion") {
    for (long n : {10L, 13L, 16L, 21L})
        for (long k = 2; k <= n - 8; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s) {
                check_columns_against_radial({Order::two, n, k, s});
                check_columns_against_radial({Order::four, n, k, s});
            }
    for (long n : {12L, 15L, 20L})
        for (long k = 2; k <= n - 10; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s)
                check_columns_against_radial({Order::six, n, k, s});
}

TEST_CASE("certified cancellation and recurrences on a sample grid") {
    for (long n : {10L, 11L, 14L, 19L, 26L})
        for (long k = 2; k <= n - 8; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s) {
                for (Order o : {Order::two, Order::four}) {
                    const auto rep = certify_cancellation({o, n, k, s});
                    CHECK(rep.passed());
                }
                if (n >= 12 && k <= n - 10) {
                    const auto rep = certify_cancellation({Order::six, n, k, s});
                    CHECK(rep.passed());
                }
            }
}

TEST_CASE("consistency row is genuinely overdetermined") {
    // a_{1,1} Gamma_1 + a_{1,2} Gamma_2 = 0 for order 4
    const ProblemIndex idx{Order::four, 14, 4, 1};
    const auto A = system_matrix(idx);
    const auto g = solve_gamma(idx).gamma;
    CHECK(A.at(0, 0) * g[0] + A.at(0, 1) * g[1] == 0);
    // order 6 has two such rows
    const ProblemIndex idx6{Order::six, 16, 4, 1};
    const auto A6 = system_matrix(idx6);
    const auto g6 = solve_gamma(idx6).gamma;
    CHECK(A6.at(0, 0) * g6[0] + A6.at(0, 1) * g6[1] == 0);
    CHECK(A6.at(1, 0) * g6[0] + A6.at(1, 1) * g6[1] + A6.at(1, 2) * g6[2] == 0);
}

TEST_CASE("fault injection: a perturbed rhs entry breaks a residual") {
    for (long n : {10L, 15L})
        for (long k = 2; k <= n - 8; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s) {
                const ProblemIndex idx{Order::four, n, k, s};
                auto b = rhs_vector(idx, RhsVariant::plain);
                for (size_t pos = 0; pos < b.size(); ++pos) {
                    if (b[pos] == 0) continue;
                    auto bad = b;
                    bad[pos] += 1;
                    CHECK_FALSE(certify_cancellation_with_rhs(idx, bad).passed());
                }
            }
}

TEST_CASE("cross-order equality") {
    CHECK(check_cross_order(12, 2, 0));
    CHECK(check_cross_order(20, 6, 2));
    CHECK_THROWS_AS(check_cross_order(10, 2, 0), domain_error);
    for (long n = 12; n <= 30; ++n)
        for (long k = 2; k <= n - 10; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s) CHECK(check_cross_order(n, k, s));
}

TEST_CASE("gamma3 closed form shared by all orders") {
    // Gamma_{s+3} = -1/(2(n-2s-4)(k-s+1)) for every order
    for (long n : {14L, 18L})
        for (long k = 2; k <= n - 10; ++k)
            for (long s = 0; s <= (k - 2) / 2; ++s)
                for (Order o : {Order::two, Order::four, Order::six}) {
                    const auto g = solve_gamma({o, n, k, s}).gamma;
                    CHECK(g.back() == rat(-1, 2 * (n - 2 * s - 4) * (k - s + 1)));
                }
}
