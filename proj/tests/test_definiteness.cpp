#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "qcert/definiteness.hpp"

using namespace qcert;

namespace {

SymMatrix from_longs(const std::vector<std::vector<long>>& rows, int h = 0) {
    std::vector<std::vector<ScaledRational>> e(rows.size(),
                                               std::vector<ScaledRational>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) e[i][j] = ScaledRational(Rational(rows[i][j]), h);
    return SymMatrix(std::move(e));
}

}  // namespace

TEST_CASE("characteristic polynomial on knowns") {
    const auto p = characteristic_polynomial({{Rational(2), Rational(0)}, {Rational(0), Rational(3)}});
    CHECK(p == Poly{Rational(6), Rational(-5), Rational(1)});
    const auto q = characteristic_polynomial({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
    CHECK(q == Poly{Rational(-3), Rational(-2), Rational(1)});
}

TEST_CASE("classification examples") {
    const auto pd = classify(from_longs({{2, 0}, {0, 3}}));
    CHECK(pd.classification == Definiteness::positive_definite);
    CHECK(pd.negative == 0);
    CHECK(pd.zero == 0);
    CHECK(pd.positive == 2);

    const auto ind = classify(from_longs({{1, 2}, {2, 1}}));
    CHECK(ind.classification == Definiteness::indefinite);
    CHECK(ind.negative == 1);
    CHECK(ind.positive == 1);
    REQUIRE(ind.minor_witness.has_value());
    CHECK(ind.minor_witness->first == 2);
    CHECK(ind.minor_witness->second == Rational(-3));
    REQUIRE(ind.negative_root_interval.has_value());
    CHECK(ind.negative_root_interval->first < Rational(-1));
    CHECK(ind.negative_root_interval->second > Rational(-1));

    const auto zero = classify(from_longs({{0}}));
    CHECK(zero.classification == Definiteness::positive_semidefinite_singular);
    CHECK(zero.zero == 1);

    const auto nd = classify(from_longs({{-4, 1}, {1, -4}}));
    CHECK(nd.classification == Definiteness::negative_definite);

    const auto nsd = classify(from_longs({{-1, 1}, {1, -1}}));
    CHECK(nsd.classification == Definiteness::negative_semidefinite_singular);

    // repeated eigenvalues are counted with multiplicity
    const auto rep = classify(from_longs({{-2, 0, 0}, {0, -2, 0}, {0, 0, 5}}));
    CHECK(rep.negative == 2);
    CHECK(rep.positive == 1);
}

namespace {

struct RandomMatrices {
    std::mt19937_64 rng{20240601};
    std::uniform_int_distribution<long> entry{-6, 6};
    std::uniform_int_distribution<long> dim{1, 8};
    std::uniform_int_distribution<int> kind{0, 2};

    SymMatrix next() {
        const long d = dim(rng);
        switch (kind(rng)) {
            case 0: {  // Gram  G^T G (PSD, often singular)
                std::vector<std::vector<long>> g(d, std::vector<long>(d));
                for (auto& row : g)
                    for (auto& x : row) x = entry(rng);
                std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
                for (long i = 0; i < d; ++i)
                    for (long j = 0; j < d; ++j)
                        for (long l = 0; l < d; ++l) m[i][j] += g[l][i] * g[l][j];
                return from_longs(m);
            }
            case 1: {  // diagonally shifted symmetric
                std::vector<std::vector<long>> m(d, std::vector<long>(d));
                for (long i = 0; i < d; ++i)
                    for (long j = i; j < d; ++j) m[i][j] = m[j][i] = entry(rng);
                for (long i = 0; i < d; ++i) m[i][i] += 6 * d;
                return from_longs(m);
            }
            default: {  // plain random symmetric
                std::vector<std::vector<long>> m(d, std::vector<long>(d));
                for (long i = 0; i < d; ++i)
                    for (long j = i; j < d; ++j) m[i][j] = m[j][i] = entry(rng);
                return from_longs(m);
            }
        }
    }
};

}  // namespace

TEST_CASE("randomized agreement of Sturm, Sylvester, floats and invariances") {
    RandomMatrices gen;
    std::uniform_int_distribution<long> cnum(1, 9);
    for (int trial = 0; trial < 400; ++trial) {
        const SymMatrix M = gen.next();
        const auto v = classify(M);  // classify itself cross-checks Sturm vs Sylvester
        CHECK(v.negative + v.zero + v.positive == M.dim());

        // positive scaling invariance
        const Rational c = rat(cnum(gen.rng), cnum(gen.rng));
        const auto vs = classify(M.scaled(c));
        CHECK(vs.negative == v.negative);
        CHECK(vs.zero == v.zero);
        CHECK(vs.positive == v.positive);

        // permutation invariance (Sylvester's law of inertia, permutation case)
        std::vector<long> perm(M.dim());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen.rng);
        const auto vp = classify(M.permuted(perm));
        CHECK(vp.negative == v.negative);
        CHECK(vp.zero == v.zero);
        CHECK(vp.positive == v.positive);

        const FloatSanity fs = float_sanity(M);
        CHECK((fs.abstained || fs.agreed));
    }
}

TEST_CASE("Gram matrices are never indefinite") {
    RandomMatrices gen;
    for (int trial = 0; trial < 300; ++trial) {
        const long d = gen.dim(gen.rng);
        std::vector<std::vector<long>> g(d, std::vector<long>(d));
        for (auto& row : g)
            for (auto& x : row) x = gen.entry(gen.rng);
        std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                for (long l = 0; l < d; ++l) m[i][j] += g[l][i] * g[l][j];
        const auto v = classify(from_longs(m));
        CHECK((v.classification == Definiteness::positive_definite ||
               v.classification == Definiteness::positive_semidefinite_singular));
    }
}

TEST_CASE("near-singular float check abstains") {
    // eigenvalues 1 and 1e-9: below the float threshold after normalization
    std::vector<std::vector<ScaledRational>> e(2, std::vector<ScaledRational>(2));
    e[0][0] = ScaledRational(Rational(1), 0);
    e[1][1] = ScaledRational(rat(1, 1000000000), 0);
    const FloatSanity fs = float_sanity(SymMatrix(std::move(e)));
    CHECK(fs.abstained);
}

TEST_CASE("pi power is stripped before classification") {
    const SymMatrix with_pi = SymMatrix::diagonal(
        {ScaledRational(Rational(3), 2), ScaledRational(Rational(-7), 2)});
    const auto v = classify(with_pi);
    CHECK(v.classification == Definiteness::indefinite);
    const FloatSanity fs = float_sanity(with_pi);
    CHECK(fs.agreed);
}
