#include "qcert/linsys.hpp"

#include <chrono>

#include "qcert/errors.hpp"

namespace qcert {

namespace {

Rational sign_pow(long e) { return Rational(((e % 2) + 2) % 2 == 0 ? 1 : -1); }

// Intermediate constants of the order-6 right-hand side.
struct C6Rhs {
    Rational c1, c2, c3, c4, c5;
};

C6Rhs rhs_constants_q6(long n, long k, long s) {
    C6Rhs c;
    c.c1 = Rational(2 * s * (2 * k - 2 * s + n - 2)) * Rational(2 * s - 2) *
           Rational(2 * k - 2 * s + n - 4);
    c.c2 = Rational(-2 * s * (2 * k - 2 * s + n - 2)) *
           Rational(4 * (n - 8) * k + 3 * n * n - 18 * n + 8);
    c.c3 = Rational(4 * (n - 8) * (n - 6)) * Rational(k * k) +
           Rational(2 * (n - 6)) * Rational(3 * n * n - 12 * n - 40) * Rational(k) +
           Rational(2 * s * (2 * k - 2 * s + n - 2)) * Rational(3 * n * n - 26 * n + 72) +
           Rational(3 * n * n * n * n - 12 * n * n * n - 44 * n * n + 176 * n + 192);
    c.c4 = Rational(-2 * (n - 4)) *
           Rational((3 * n * n - 28 * n + 60) * k + 3 * (n * n * n - 2 * n * n - 4 * n + 40));
    c.c5 = Rational((n - 4) * n) * Rational(3 * n * n - 12 * n + 44);
    return c;
}

}  // namespace

long ProblemIndex::rhs_count() const {
    switch (order) {
        case Order::two: return s + 3;
        case Order::four: return s + 4;
        default: return s + 5;
    }
}

bool ProblemIndex::admissible() const {
    const long n_min = order == Order::six ? 12 : 10;
    if (n < n_min) return false;
    const long K = order == Order::six ? n - 8 : n - 6;
    if (k < 2 || k > K - 2) return false;
    return s >= 0 && s <= (k - 2) / 2;
}

void ProblemIndex::validate() const {
    if (!admissible())
        throw domain_error("index (order=" + std::to_string(static_cast<int>(order)) +
                           ", n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                           ", s=" + std::to_string(s) + ") is outside the admissible grid");
}

std::vector<Rational> rhs_vector(const ProblemIndex& idx, RhsVariant variant) {
    idx.validate();
    const long n = idx.n, k = idx.k, s = idx.s;
    std::vector<Rational> b(idx.rhs_count(), Rational(0));

    if (idx.order == Order::two) {
        if (variant == RhsVariant::primed)
            throw domain_error("the order-2 system has no primed right-hand side");
        // b_i = (-1)^{s+3-i} C(s, i-3)
        for (long i = 3; i <= s + 3; ++i) b[i - 1] = sign_pow(s + 3 - i) * binomial(s, i - 3);
        return b;
    }

    if (idx.order == Order::four) {
        const Rational A = variant == RhsVariant::plain
                               ? Rational(2 * (n * n - 4 * n + 8))
                               : Rational(2 * n) * Rational(n * n - 4 * n + 8);
        const Rational B = variant == RhsVariant::plain
                               ? Rational(2 * s * (2 * k - 2 * s + n - 2))
                               : Rational(2 * (n - 4)) * Rational(s * (2 * k - 2 * s + n - 2));
        const Rational C = variant == RhsVariant::plain
                               ? Rational(2 * (k + 2) * (n - 6))
                               : Rational(2) * Rational(k * (n - 6) * (n - 2) - 8 * (n - 1));
        for (long i = 3; i <= s + 4; ++i)
            b[i - 1] = sign_pow(s + 4 - i) *
                       (A * binomial(s, i - 3) + B * binomial(s - 1, i - 5) - C * binomial(s, i - 4));
        return b;
    }

    const C6Rhs c = rhs_constants_q6(n, k, s);
    const bool primed = variant == RhsVariant::primed;
    const Rational w5 = primed ? Rational(n + 2) * c.c5 : c.c5;
    const Rational w4 = primed ? Rational(n) * c.c4 : c.c4;
    const Rational w3 = primed ? Rational(n - 2) * c.c3 : c.c3;
    const Rational w2 = primed ? Rational(n - 4) * c.c2 : c.c2;
    const Rational w1 = primed ? Rational(n - 6) * c.c1 : c.c1;
    for (long i = 3; i <= s + 5; ++i)
        b[i - 1] = sign_pow(s + 5 - i) *
                   (w5 * binomial(s + 2, i - 3) + w4 * binomial(s + 1, i - 4) +
                    w3 * binomial(s, i - 5) + w2 * binomial(s - 1, i - 6) +
                    w1 * binomial(s - 2, i - 7));
    return b;
}

SystemMatrix system_matrix(const ProblemIndex& idx) {
    idx.validate();
    const long n = idx.n, k = idx.k, s = idx.s;
    SystemMatrix A;
    A.rows = idx.rhs_count();
    A.cols = idx.gamma_count();
    A.a.assign(A.rows, std::vector<Rational>(A.cols, Rational(0)));
    auto set = [&A](long i, long j, const Rational& v) {
        if (i >= 1 && i <= A.rows) A.a[i - 1][j - 1] = v;
    };

    for (long j = 1; j <= A.cols; ++j) {
        const long e = k - 2 * s + j - 2;
        if (idx.order == Order::two) {
            // (Delta + n(n+2)(1+r^2)^{-2}) on (1+r^2)^{-(n+2-2j)/2}
            set(j - 1, j, Rational(n * (n + 2) - (n + 2 - 2 * j) * (n + 4 - 2 * j)));
            set(j, j, Rational(-2 * (n + 2 - 2 * j)) * Rational(e));
        } else if (idx.order == Order::four) {
            // (Delta^2 - c4~(n) (1+r^2)^{-4}) on (1+r^2)^{-(n-2j)/2}
            set(j - 1, j,
                Rational(-8 * (j - 1)) * Rational(n + 2 - j) *
                    Rational(n * n - 2 * (j - 2) * n + 2 * j * (j - 3)));
            set(j, j,
                Rational(4 * (n - 2 * j)) * Rational((n + 2 - 2 * j) * (n + 4 - 2 * j)) *
                    Rational(e));
            set(j + 1, j,
                Rational(4 * (n - 2 * j)) * Rational(n + 2 - 2 * j) * Rational((e + 1) * e));
        } else {
            // (Delta^3 + c6~(n) (1+r^2)^{-6}) on (1+r^2)^{-(n-2-2j)/2}
            const Rational p3 = Rational(n - 2 * j - 2) * Rational(n - 2 * j) * Rational(n - 2 * j + 2);
            const Rational p4 = p3 * Rational(n - 2 * j + 4);
            const Rational p5 = p4 * Rational(n - 2 * j + 6);
            const Rational p6 = p5 * Rational(n - 2 * j + 8);
            const Rational c6t = Rational(n - 4) * Rational(n - 2) * Rational(n) * Rational(n + 2) *
                                 Rational(n + 4) * Rational(n + 6);
            set(j - 1, j, c6t - p6);
            set(j, j, Rational(-6) * p5 * Rational(e));
            set(j + 1, j, Rational(-12) * p4 * Rational((e + 1) * e));
            set(j + 2, j, Rational(-8) * p3 * Rational((e + 2) * (e + 1) * e));
        }
    }
    return A;
}

GammaSolution solve_gamma(const ProblemIndex& idx) {
    idx.validate();
    const SystemMatrix A = system_matrix(idx);
    const std::vector<Rational> b = rhs_vector(idx, RhsVariant::plain);
    const long m = idx.gamma_count();
    // Row used to determine column j: j for order 2, j+1 for order 4, j+2 for order 6.
    const long shift = idx.order == Order::two ? 0 : (idx.order == Order::four ? 1 : 2);
    std::vector<Rational> g(m, Rational(0));
    for (long j = m; j >= 1; --j) {
        const long i = j + shift;
        const Rational& pivot = A.at(i - 1, j - 1);
        if (pivot == 0) throw degeneracy_error(i, j);
        Rational acc = b[i - 1];
        for (long jj = j + 1; jj <= m && jj <= j + 3; ++jj) acc -= A.at(i - 1, jj - 1) * g[jj - 1];
        g[j - 1] = acc / pivot;
    }
    return {idx, std::move(g)};
}

std::vector<Rational> residual(const SystemMatrix& A, const std::vector<Rational>& gamma,
                               const std::vector<Rational>& b) {
    std::vector<Rational> r(A.rows, Rational(0));
    for (long i = 0; i < A.rows; ++i) {
        Rational acc(0);
        for (long j = 0; j < A.cols; ++j) acc += A.a[i][j] * gamma[j];
        r[i] = acc - b[i];
    }
    return r;
}

std::vector<Rational> recurrence_residuals(const ProblemIndex& idx,
                                           const std::vector<Rational>& gamma) {
    const long n = idx.n, k = idx.k, s = idx.s;
    std::vector<Rational> res;
    // (k-2s-1) G1 = 2 G2
    res.push_back(Rational(k - 2 * s - 1) * gamma[0] - Rational(2) * gamma[1]);
    // (k-2s) G2 = 4(n-1)/(n-2) G3
    res.push_back(Rational(k - 2 * s) * gamma[1] - rat(4 * (n - 1), n - 2) * gamma[2]);
    // (k-2s+j-2) Gj = 2j(n-j+1)/(n-2j+2) G_{j+1} - (-1)^{s+3-j}/(2(n-2j+2)) C(s, j-3)
    for (long j = 3; j <= s + 2; ++j)
        res.push_back(Rational(k - 2 * s + j - 2) * gamma[j - 1] -
                      rat(2 * j * (n - j + 1), n - 2 * j + 2) * gamma[j] +
                      sign_pow(s + 3 - j) * rat(1, 2 * (n - 2 * j + 2)) * binomial(s, j - 3));
    // (k-s+1) G_{s+3} = -1/(2(n-2s-4))
    res.push_back(Rational(k - s + 1) * gamma[s + 2] + rat(1, 2 * (n - 2 * s - 4)));
    return res;
}

namespace {

VerificationReport certify_impl(const ProblemIndex& idx, const std::vector<Rational>* rhs_override) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check_id = "linearized-cancellation";
    rep.params = {{"order", std::to_string(static_cast<int>(idx.order))},
                  {"n", std::to_string(idx.n)},
                  {"k", std::to_string(idx.k)},
                  {"s", std::to_string(idx.s)}};
    rep.expected = "zero residuals";
    try {
        const SystemMatrix A = system_matrix(idx);
        const std::vector<Rational> b =
            rhs_override ? *rhs_override : rhs_vector(idx, RhsVariant::plain);

        // Back-substitute against b directly (not via solve_gamma) so an
        // injected right-hand side flows into the solution the same way.
        const long m = idx.gamma_count();
        const long shift = idx.order == Order::two ? 0 : (idx.order == Order::four ? 1 : 2);
        std::vector<Rational> g(m, Rational(0));
        for (long j = m; j >= 1; --j) {
            const long i = j + shift;
            if (A.at(i - 1, j - 1) == 0) throw degeneracy_error(i, j);
            Rational acc = b[i - 1];
            for (long jj = j + 1; jj <= m && jj <= j + 3; ++jj)
                acc -= A.at(i - 1, jj - 1) * g[jj - 1];
            g[j - 1] = acc / A.at(i - 1, j - 1);
        }

        const std::vector<Rational> res = residual(A, g, b);
        const std::vector<Rational> rec = recurrence_residuals(idx, g);
        long bad_rows = 0, bad_recs = 0;
        std::string res_str, rec_str;
        for (size_t i = 0; i < res.size(); ++i) {
            if (res[i] != 0) ++bad_rows;
            res_str += (i ? "," : "") + to_string(res[i]);
        }
        for (size_t i = 0; i < rec.size(); ++i) {
            if (rec[i] != 0) ++bad_recs;
            rec_str += (i ? "," : "") + to_string(rec[i]);
        }
        if (bad_rows == 0 && bad_recs == 0) {
            rep.verdict = VerificationReport::Verdict::pass;
            rep.actual = "zero residuals";
        } else {
            rep.verdict = VerificationReport::Verdict::fail;
            rep.actual = std::to_string(bad_rows) + " nonzero system row(s), " +
                         std::to_string(bad_recs) + " broken recurrence(s)";
            rep.witness = {{"system_residual", res_str}, {"recurrence_residual", rec_str}};
        }
    } catch (const std::exception& e) {
        rep.verdict = VerificationReport::Verdict::error;
        rep.actual = e.what();
        rep.witness = {{"exception", e.what()}};
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace

VerificationReport certify_cancellation(const ProblemIndex& idx) { return certify_impl(idx, nullptr); }

VerificationReport certify_cancellation_with_rhs(const ProblemIndex& idx,
                                                 const std::vector<Rational>& b) {
    return certify_impl(idx, &b);
}

bool check_cross_order(long n, long k, long s) {
    const ProblemIndex i2{Order::two, n, k, s};
    const ProblemIndex i4{Order::four, n, k, s};
    const ProblemIndex i6{Order::six, n, k, s};
    if (!i2.admissible() || !i4.admissible() || !i6.admissible())
        throw domain_error("(n,k,s)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                           std::to_string(s) + ") is not admissible for all three orders");
    const auto g2 = solve_gamma(i2).gamma;
    const auto g4 = solve_gamma(i4).gamma;
    const auto g6 = solve_gamma(i6).gamma;
    return g2 == g4 && g4 == g6;
}

}  // namespace qcert
