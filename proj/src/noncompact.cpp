#include "qcert/noncompact.hpp"

#include <chrono>

#include "qcert/pohozaev6.hpp"
#include "qcert/radial.hpp"

namespace qcert {

const std::array<long, 5> kAVectorTail = {0, -3634, 803, -62, 1};

namespace {

constexpr long kQTop = 4;  // a-vector indices 0..4, k = 2q+2 up to 10

Rational lambda_nc(long n, long q) { return Rational(-q) * Rational(n + 2 * q + 2); }

void require_no_log_branch(long n) {
    if (n < 27) throw domain_error("non-compactness construction needs n >= 27");
    // k+m <= 20 < n-6 keeps every radial integral convergent
    if (20 >= n - 6) throw domain_error("logarithmic branch would be reached");
}

ScaledRational mi(long i, long j) { return moment_integral(i, j); }

template <typename Fn>
VerificationReport timed_report(const char* check_id,
                                std::vector<std::pair<std::string, std::string>> params, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check_id = check_id;
    rep.params = std::move(params);
    try {
        fn(rep);
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

SymMatrix d2_block_q6(long n) {
    require_no_log_branch(n);
    std::vector<std::vector<ScaledRational>> e(kQTop + 1,
                                               std::vector<ScaledRational>(kQTop + 1));
    for (long q = 0; q <= kQTop; ++q)
        for (long qp = 0; qp <= kQTop; ++qp) {
            const long k = 2 * q + 2, m = 2 * qp + 2;
            if (k + m == n - 6) throw domain_error("logarithmic branch in the D-block");
            const auto cp = cbarp_from(n, k, m, cbar_from(n, k, m, c6_closed(n, k + m)));
            e[q][qp] = d_form_q6(cp, lambda_nc(n, q), lambda_nc(n, qp));
        }
    return SymMatrix(std::move(e));
}

ScalingData scaling_quadratics(long n) {
    const SymMatrix M = d2_block_q6(n);
    ScalingData out;
    out.pi_half_power = M.common_pi_half_power();
    const auto m = M.rational_part();
    for (auto* p : {&out.p_at_1, &out.dp_at_1, &out.ddp_at_1}) p->fill(Rational(0));
    for (long q = 0; q <= kQTop; ++q)
        for (long qp = 0; qp <= kQTop; ++qp) {
            const long km = 2 * q + 2 * qp + 4;
            // P(1) picks up -m/(k+m); P'(1) picks up -m; P''(1) picks up -(k+m-1) m.
            const Rational w_p = -m[q][qp] / Rational(km);
            const Rational w_dp = -m[q][qp];
            const Rational w_ddp = Rational(-(km - 1)) * m[q][qp];
            const long zeros = (q == 0) + (qp == 0);
            const Rational tail =
                Rational(q == 0 ? 1 : kAVectorTail[q]) * Rational(qp == 0 ? 1 : kAVectorTail[qp]);
            out.p_at_1[zeros] += w_p * tail;
            out.dp_at_1[zeros] += w_dp * tail;
            out.ddp_at_1[zeros] += w_ddp * tail;
        }
    out.disc = out.dp_at_1[1] * out.dp_at_1[1] - Rational(4) * out.dp_at_1[2] * out.dp_at_1[0];
    return out;
}

QuadExtNumber compute_a0(long n) {
    const ScalingData sd = scaling_quadratics(n);
    if (sign_of(sd.disc) <= 0)
        throw domain_error("discriminant of P'(1) is not positive at n=" + std::to_string(n));
    const Rational& alpha = sd.dp_at_1[2];
    if (alpha == 0) throw domain_error("P'(1) is not quadratic in a_0");
    // larger root: -beta/(2 alpha) + sqrt(disc)/(2 |alpha|)
    return QuadExtNumber(-sd.dp_at_1[1] / (2 * alpha), Rational(1) / (2 * abs(alpha)), sd.disc);
}

QuadExtNumber eval_quadratic(const QuadraticPoly& p, const QuadExtNumber& x) {
    return QuadExtNumber(p[0], x.D()) + p[1] * x + p[2] * (x * x);
}

VerificationReport verify_delta_direction(long n) {
    return timed_report("noncompact-delta-direction", {{"n", std::to_string(n)}},
                        [n](VerificationReport& rep) {
                            rep.expected = "P(1)<0, P'(1)=0, P''(1)>0 at a0";
                            const ScalingData sd = scaling_quadratics(n);
                            if (sign_of(sd.disc) <= 0) {
                                rep.verdict = VerificationReport::Verdict::fail;
                                rep.actual = "disc(P'(1)) <= 0";
                                rep.witness = {{"disc", to_string(sd.disc)}};
                                return;
                            }
                            const QuadExtNumber a0 = compute_a0(n);
                            const int sp = eval_quadratic(sd.p_at_1, a0).sign();
                            const int sdp = eval_quadratic(sd.dp_at_1, a0).sign();
                            const int sddp = eval_quadratic(sd.ddp_at_1, a0).sign();
                            rep.actual = "signs (" + std::to_string(sp) + "," +
                                         std::to_string(sdp) + "," + std::to_string(sddp) + ")";
                            if (sp < 0 && sdp == 0 && sddp > 0) {
                                rep.verdict = VerificationReport::Verdict::pass;
                            } else {
                                rep.verdict = VerificationReport::Verdict::fail;
                                rep.witness = {{"a0", a0.str()},
                                               {"P1", eval_quadratic(sd.p_at_1, a0).str()},
                                               {"Ppp1", eval_quadratic(sd.ddp_at_1, a0).str()}};
                            }
                        });
}

namespace {

struct CBarSets {
    // index 0 unused throughout
    std::array<ScaledRational, 8> cI;     // cbar^I_1..7
    std::array<ScaledRational, 11> cII;   // cbar^II_1..10
    std::array<ScaledRational, 18> cIII;  // cbar^III_1..17 (5 unused)
};

std::array<ScaledRational, 7> cI_closed(long n, long p) {
    std::array<ScaledRational, 7> c;
    c[1] = Rational(2 * (n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n * n - 8) * mi(n + p - 1, n - 1) +
            Rational(4 * (n - 3)) * mi(n + p + 1, n - 1));
    c[2] = Rational(-(n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n * (n + 2)) * mi(n + p - 3, n - 1) +
            Rational(8 * (n + 1)) * mi(n + p - 1, n - 1) + Rational(16) * mi(n + p + 1, n - 1));
    c[3] = Rational(-2 * (n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n + 2) * mi(n + p - 3, n - 2) + Rational(4) * mi(n + p - 1, n - 2));
    c[4] = Rational(-(n - 6) * (n - 6)) * Rational(n - 4) * mi(n + p - 3, n - 3);
    c[5] = Rational((n - 6) * (n - 6)) * mi(n + p - 5, n - 4);
    c[6] = Rational(-(n - 6)) * mi(n + p - 7, n - 5);
    return c;
}

std::array<ScaledRational, 7> cII_closed(long n, long p) {
    std::array<ScaledRational, 7> c;
    c[1] = Rational(-2 * (n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) * Rational(n - 2) *
           (Rational(n + 4) * mi(n + p + 1, n) + Rational(4) * mi(n + p + 3, n));
    c[2] = Rational((n - 6) * (n - 6)) * Rational((n - 4) * (n - 2)) *
           (Rational(n * (n + 4)) * mi(n + p - 1, n) + Rational(8 * (n + 2)) * mi(n + p + 1, n) +
            Rational(16) * mi(n + p + 3, n));
    c[3] = Rational(2 * (n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n * n - 8) * mi(n + p - 1, n - 1) +
            Rational(4 * (n - 3)) * mi(n + p + 1, n - 1));
    c[4] = Rational((n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) * mi(n + p - 1, n - 2);
    c[5] = Rational(-(n - 6) * (n - 6)) * Rational(n - 4) * mi(n + p - 3, n - 3);
    c[6] = Rational((n - 6) * (n - 4)) * mi(n + p - 5, n - 4);
    return c;
}

std::array<ScaledRational, 9> cIII_closed(long n, long p) {
    std::array<ScaledRational, 9> c;
    c[1] = Rational(-(n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) * Rational(n - 2) *
           (Rational(n + 4) * mi(n + p + 1, n) + Rational(4) * mi(n + p + 3, n));
    c[2] = Rational((n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) *
           (Rational((n + 2) * (n + 2)) * mi(n + p - 1, n) +
            Rational(8 * (n + 2)) * mi(n + p + 1, n) + Rational(16) * mi(n + p + 3, n));
    c[3] = Rational(2 * (n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n * n - 8) * mi(n + p - 1, n - 1) +
            Rational(4 * (n - 3)) * mi(n + p + 1, n - 1));
    c[4] = Rational((n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) * mi(n + p - 1, n - 2);
    c[5] = Rational(-(n - 6) * (n - 6)) * Rational(n - 4) * mi(n + p - 3, n - 3);
    c[6] = Rational((n - 6) * (n - 6)) * mi(n + p - 5, n - 4);
    c[7] = Rational(-2 * (n - 6) * (n - 6)) * Rational(n - 4) *
           (Rational(n + 2) * mi(n + p - 3, n - 2) + Rational(4) * mi(n + p - 1, n - 2));
    c[8] = Rational((n - 6) * (n - 6)) * mi(n + p - 5, n - 4);
    return c;
}

std::array<ScaledRational, 11> cbarII_from(long n, long k, long m,
                                           const std::array<ScaledRational, 7>& c) {
    const long p = k + m;
    std::array<ScaledRational, 11> cb;
    cb[1] = -(Rational((p - 6) * (n + p - 4)) * Rational((p - 4) * (n + p - 2)) *
              rat(n - 6, 4 * (n - 1)) * c[6]) -
            rat(n * n - 2 * n - 8 + (n - 10) * (p - 2), 2 * (n - 1)) * c[3] +
            rat(n - 2, 4 * (n - 1)) * c[2] -
            rat(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1)) * c[1] -
            Rational(p - 4) * Rational((n + p - 2) * (n + p - 4)) * rat(n - 6, 2 * (n - 1)) *
                c[5] -
            Rational((p - 4) * (n + p - 2)) *
                rat((n - 6) * (n - 4) * (n - 2) + 16, 2 * (n - 4) * (n - 2) * (n - 1)) * c[4] -
            rat(8 * (n - 2) * p * p - 8 * (n - 6) * p + 16 * (n - 4),
                (n - 4) * (n - 2) * (n - 1)) *
                c[4];
    cb[2] = -(Rational((p - 6) * (n + p - 4)) * rat(2 * (n - 6), (n - 2) * (n - 2)) * c[6]) -
            rat(4 * (n - 6) * p + 4 * (n * n - 8 * n + 20), (n - 2) * (n - 2)) * c[5] -
            rat(4 * (n * n - 8 * n + 20), (n - 4) * (n - 2) * (n - 2)) * c[4];
    cb[3] = rat(-2 * k * m, n - 2) * c[1] -
            Rational((p - 2) * (n + p)) * rat(4 * k * m, (n - 4) * (n - 2)) * c[4];
    cb[4] = rat(2, n - 2) * c[3] - rat(8, (n - 4) * (n - 2)) * c[4];
    cb[5] = rat(4, (n - 4) * (n - 2)) * c[5];
    cb[6] = rat(-4 * (n - 6), (n - 4) * (n - 2) * (n - 2)) * c[6];
    cb[7] = rat(-8, (n - 4) * (n - 2)) * c[4];
    cb[8] = -(Rational((p - 4) * (n + p - 4)) * rat(n - 6, n - 1) * c[6]) -
            rat((n - 6) * (n - 4) * (n - 2) + 16, (n - 4) * (n - 2) * (n - 1)) * c[4] -
            Rational(n + p - 4) * rat(n - 6, n - 1) * c[5];
    cb[9] = rat(-4 * (n - 6), (n - 2) * (n - 2)) * c[6];
    cb[10] = rat(-8 * k * m, (n - 4) * (n - 2)) * c[4];
    return cb;
}

std::array<ScaledRational, 18> cbarIII_from(long n, long k, long m,
                                            const std::array<ScaledRational, 9>& c) {
    const long p = k + m;
    std::array<ScaledRational, 18> cb;
    cb[1] = -(Rational((p - 6) * (n + p - 4)) * Rational((p - 4) * (n + p - 2)) *
              rat(n - 6, 4 * (n - 1)) * c[6]) +
            rat(n * n - 4 * n + 12, (n - 2) * (n - 1)) * c[3] +
            rat(n - 2, 4 * (n - 1)) * c[2] +
            rat(n * n - 4 * n + 12, (n - 2) * (n - 1)) * c[1] +
            Rational((p - 4) * (n + p - 2)) * rat(n - 6, n - 1) * c[5] +
            Rational((p - 2) * (n + p - 2)) * rat(16, (n - 4) * (n - 2) * (n - 1)) * c[5] +
            Rational((p - 1) * (n + p - 2)) * rat(8, (n - 4) * (n - 1)) * c[5] +
            Rational((p - 4) * (n + p - 2)) *
                rat((n - 6) * (n - 4) * (n - 2) + 16, 2 * (n - 4) * (n - 2) * (n - 1)) * c[4] +
            rat(8 * (n - 2) * p * p - 8 * (n - 6) * p + 16 * (n - 4),
                (n - 4) * (n - 2) * (n - 1)) *
                c[4] +
            Rational((n + p - 4) * (n + p - 2)) * rat(8, (n - 4) * (n - 1)) * c[8];
    cb[2] = -(Rational((p - 6) * (n + p - 4)) * rat(2 * (n - 6), (n - 2) * (n - 2)) * c[6]) +
            rat(8 * (n * n - 8 * n + 20), (n - 4) * (n - 2) * (n - 2)) * c[5] +
            rat(4 * (n * n - 8 * n + 20), (n - 4) * (n - 2) * (n - 2)) * c[4];
    cb[3] = rat(4 * k * m, n - 2) * c[1] +
            Rational((p - 2) * (n + p)) * rat(4 * k * m, (n - 4) * (n - 2)) * c[4];
    cb[4] = rat(8, (n - 4) * (n - 2)) * c[4];
    cb[6] = rat(-4 * (n - 6), (n - 4) * (n - 2) * (n - 2)) * c[6];
    cb[7] = rat(8, (n - 4) * (n - 2)) * c[4];
    cb[8] = -(Rational((p - 4) * (n + p - 4)) * rat(n - 6, n - 1) * c[6]) +
            rat((n - 6) * (n - 4) * (n - 2) + 16, (n - 4) * (n - 2) * (n - 1)) * c[4] +
            rat(2 * (n - 6), n - 1) * c[5] - Rational(p - 1) * rat(8, (n - 4) * (n - 1)) * c[5] +
            rat(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1)) * c[7] -
            Rational(n + p - 4) * rat(8, (n - 4) * (n - 1)) * c[8] +
            Rational((p - 2) * (n + p - 4)) *
                rat((n - 6) * (n - 4) * (n - 2) + 16, 2 * (n - 4) * (n - 2) * (n - 1)) * c[8];
    cb[9] = rat(-4 * (n - 6), (n - 2) * (n - 2)) * c[6] +
            (rat(4 * (n - 4), (n - 2) * (n - 2)) + rat(16, (n - 4) * (n - 2) * (n - 2))) * c[8];
    cb[10] = rat(8 * k * m, (n - 4) * (n - 2)) * c[4];
    cb[11] = rat(2, n - 2) * c[3] +
             Rational((p - 2) * (n + p - 2)) * rat(4, (n - 4) * (n - 2)) * c[5];
    cb[12] = rat(16, (n - 4) * (n - 2)) * c[5];
    cb[13] = rat(-4, n - 2) * c[7] -
             Rational((p - 2) * (n + p - 4)) * rat(8, (n - 4) * (n - 2)) * c[8];
    cb[14] = Rational(n + p - 4) * rat(8, (n - 4) * (n - 2)) * c[8];
    cb[15] = (rat(-48, (n - 2) * (n - 2)) + rat(16, (n - 2) * (n - 2)) +
              rat(32, (n - 4) * (n - 2))) *
             c[8];
    cb[16] = rat(2, n - 2) * c[7] +
             Rational((p - 2) * (n + p - 4)) * rat(4, (n - 4) * (n - 2)) * c[8];
    cb[17] = rat(8, (n - 4) * (n - 2)) * c[8];
    return cb;
}

CBarSets cbar_sets(long n, long k, long m) {
    CBarSets out;
    const auto cI = cI_closed(n, k + m);
    const auto cbarI_neg = cbar_from(n, k, m, cI);  // defined with an overall minus
    for (int i = 1; i <= 7; ++i) out.cI[i] = -cbarI_neg[i];
    out.cII = cbarII_from(n, k, m, cII_closed(n, k + m));
    out.cIII = cbarIII_from(n, k, m, cIII_closed(n, k + m));
    return out;
}

}  // namespace

HessianMatrices hessian_matrices(long n) {
    require_no_log_branch(n);
    HessianMatrices out;
    std::array<std::array<ScaledRational, 5>, 5> mI, mII1, mII2, mIII1, mIII2, mIV;

    const Rational n2 = Rational(2 * n) * Rational(n + 2);          // 2n(n+2)
    const Rational n24 = Rational(n) * Rational((n + 2) * (n + 4)); // n(n+2)(n+4)

    for (long q = 0; q <= kQTop; ++q) {
        for (long qp = 0; qp <= kQTop; ++qp) {
            const long k = 2 * q + 2, m = 2 * qp + 2;
            const Rational lq = lambda_nc(n, q), lqp = lambda_nc(n, qp);
            const Rational lqm1 = lambda_nc(n, q - 1), lqpm1 = lambda_nc(n, qp - 1);
            const CBarSets cb = cbar_sets(n, k, m);

            // shared eigenvalue envelope (terms 2..7 of the I/II tables)
            auto envelope = [&](const ScaledRational* c) {
                return c[2] * (lq * lqp) + c[3] +
                       (Rational(k) * lqp + Rational(m) * lq) * c[4] -
                       Rational(2) * (Rational(k) * lqpm1 * lqp + Rational(m) * lqm1 * lq) * c[5] -
                       Rational(2) * ((lqpm1 + lqm1) * lqp * lq) * c[6] +
                       (Rational(k * k) * lqp + Rational(m * m) * lq) * c[7];
            };
            const Rational qmix(q + qp + q * qp);

            mI[q][qp] = Rational(1) / n2 * envelope(cb.cI.data()) -
                        (qmix / n2 + rat(1, 4 * n)) * cb.cI[1];

            const ScaledRational envII = envelope(cb.cII.data());
            mII1[q][qp] = Rational(2) / n24 * envII -
                          (Rational(2) * qmix / n24 + Rational(1) / n2) * cb.cII[1];
            mII2[q][qp] = Rational(1) / (Rational(2) * n24) * envII -
                          (qmix / (Rational(2) * n24) + rat(1, 4 * n * (n + 2))) * cb.cII[1] -
                          (qmix / n2 + rat(1, 4 * n)) * cb.cII[8] +
                          Rational(1) / n2 * (cb.cII[9] * (lq * lqp) + cb.cII[10]);

            // III envelope omits the c5-slot (no H.Delta Ric term there)
            const ScaledRational envIII =
                cb.cIII[2] * (lq * lqp) + cb.cIII[3] +
                (Rational(k) * lqp + Rational(m) * lq) * cb.cIII[4] -
                Rational(2) * ((lqpm1 + lqm1) * lqp * lq) * cb.cIII[6] +
                (Rational(k * k) * lqp + Rational(m * m) * lq) * cb.cIII[7];

            const ScaledRational brkt_mk =
                Rational(m) * cb.cIII[11] + (Rational(k) * lqp) * cb.cIII[12] +
                rat(n + k + m - 2, 2) * cb.cIII[16];
            const ScaledRational brkt_km =
                Rational(k) * cb.cIII[11] + (Rational(m) * lq) * cb.cIII[12] +
                rat(n + k + m - 2, 2) * cb.cIII[16];
            const ScaledRational brkt17_qp = lqp * cb.cIII[17] - rat(1, 2) * cb.cIII[16];
            const ScaledRational brkt17_q = lq * cb.cIII[17] - rat(1, 2) * cb.cIII[16];

            mIII1[q][qp] =
                Rational(2) / n24 * envIII -
                (Rational(2) * qmix / n24 + Rational(1) / n2) * cb.cIII[1] +
                Rational(1) / n2 *
                    ((lq + lqp) * cb.cIII[13] + (Rational(m) * lq + Rational(k) * lqp) * cb.cIII[14] +
                     (lq * lqp) * cb.cIII[15]) +
                Rational(n + 4 + 4 * q) / n24 * brkt_mk + Rational(n + 4 + 4 * qp) / n24 * brkt_km +
                (Rational(8 * q * (q - 1)) / n24 + Rational(4 * q) / n2 * Rational(2)) * brkt17_qp +
                (Rational(8 * qp * (qp - 1)) / n24 + Rational(4 * qp) / n2 * Rational(2)) * brkt17_q;

            mIII2[q][qp] =
                Rational(1) / (Rational(2) * n24) * envIII -
                (qmix / (Rational(2) * n24) + rat(1, 4 * n * (n + 2))) * cb.cIII[1] -
                (qmix / n2 + rat(1, 4 * n)) * cb.cIII[8] +
                Rational(1) / n2 * (cb.cIII[9] * (lq * lqp) + cb.cIII[10]) +
                Rational(q) / n24 * brkt_mk + Rational(qp) / n24 * brkt_km +
                (Rational(2 * q * (q - 1)) / n24 + Rational(q) / n2 * Rational(2)) * brkt17_qp +
                (Rational(2 * qp * (qp - 1)) / n24 + Rational(qp) / n2 * Rational(2)) * brkt17_q;

            mIV[q][qp] = rat((n - 6) * (n - 6) * (n - 4), 1) / (Rational(2) * n2) *
                         (Rational(3 * n * n * n + 8 * n * n - 20 * n - 48) * mi(n + k + m - 1, n) +
                          Rational(16 * (n * n - 8)) * mi(n + k + m + 1, n) +
                          Rational(32 * (n - 3)) * mi(n + k + m + 3, n));
        }
    }

    // strip the common pi power across all six matrices
    std::optional<int> h;
    auto scan = [&h](const std::array<std::array<ScaledRational, 5>, 5>& m) {
        for (const auto& row : m)
            for (const auto& x : row) {
                if (x.is_zero()) continue;
                if (!h) h = x.pi_half_power();
                else if (*h != x.pi_half_power())
                    throw homogeneity_error("Hessian coefficient matrices mix pi powers");
            }
    };
    for (const auto* m : {&mI, &mII1, &mII2, &mIII1, &mIII2, &mIV}) scan(*m);
    out.pi_half_power = h.value_or(0);
    auto strip = [](const std::array<std::array<ScaledRational, 5>, 5>& src,
                    std::array<std::array<Rational, 5>, 5>& dst) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) dst[i][j] = src[i][j].coeff();
    };
    strip(mI, out.mI);
    strip(mII1, out.mII1);
    strip(mII2, out.mII2);
    strip(mIII1, out.mIII1);
    strip(mIII2, out.mIII2);
    strip(mIV, out.mIV);
    return out;
}

HessianSums hessian_sums(long n) {
    const HessianMatrices hm = hessian_matrices(n);
    const QuadExtNumber a0 = compute_a0(n);
    const Rational disc = a0.D();
    QuadExtNumber total(Rational(0), disc), m2sum(Rational(0), disc);
    for (long q = 0; q <= kQTop; ++q) {
        const QuadExtNumber aq =
            q == 0 ? a0 : QuadExtNumber(Rational(kAVectorTail[q]), disc);
        for (long qp = 0; qp <= kQTop; ++qp) {
            const QuadExtNumber aqp =
                qp == 0 ? a0 : QuadExtNumber(Rational(kAVectorTail[qp]), disc);
            const Rational m1 = -hm.mII1[q][qp] - hm.mIII1[q][qp] + hm.mIV[q][qp];
            const Rational m2 = -hm.mI[q][qp] - hm.mII2[q][qp] - hm.mIII2[q][qp];
            total += (m1 + m2) * (aq * aqp);
            m2sum += m2 * (aq * aqp);
        }
    }
    return {disc, total, m2sum};
}

VerificationReport verify_xi_direction(long n) {
    return timed_report(
        "noncompact-xi-direction", {{"n", std::to_string(n)}}, [n](VerificationReport& rep) {
            rep.expected = "sum(m1+m2) a a' > 0 and sum(m2) a a' > 0";
            const HessianSums hs = hessian_sums(n);
            const int s1 = hs.total.sign(), s2 = hs.m2.sign();
            rep.actual = "signs (" + std::to_string(s1) + "," + std::to_string(s2) + ")";
            if (s1 > 0 && s2 > 0) {
                rep.verdict = VerificationReport::Verdict::pass;
            } else {
                rep.verdict = VerificationReport::Verdict::fail;
                rep.witness = {{"total", hs.total.str()}, {"m2", hs.m2.str()}};
            }
        });
}

std::array<ScaledRational, 7> c6_wmoments(long n, long kpm) {
    const RadialExpr w = bubble_w(n, 6);
    const RadialExpr wp = w.derivative();
    const RadialExpr lap_w = shifted_laplacian(w, n, 0);
    const RadialExpr lap_wp = lap_w.derivative();
    const RadialExpr wp_over_r_prime = wp.div_r(1).derivative();
    const RadialExpr lapwp_over_r_prime = lap_wp.div_r(1).derivative();

    std::array<ScaledRational, 7> c;
    c[1] = integrate_moment(lap_w * wp_over_r_prime + w * lapwp_over_r_prime, n + kpm - 2);
    c[2] = integrate_moment(lap_w * lap_w, n + kpm - 3);
    c[3] = integrate_moment(lap_w * wp + w * lap_wp, n + kpm - 4);
    c[4] = integrate_moment(w * wp_over_r_prime, n + kpm - 4);
    c[5] = integrate_moment(w * wp, n + kpm - 6);
    c[6] = integrate_moment(w * w, n + kpm - 7);
    return c;
}

ScaledRational wmoment_d2_entry(long n, long q, long qp) {
    require_no_log_branch(n);
    const long k = 2 * q + 2, m = 2 * qp + 2;
    const auto cpw = cbarp_from(n, k, m, cbar_from(n, k, m, c6_wmoments(n, k + m)));
    return rat(1, 2) * d_form_q6(cpw, lambda_nc(n, q), lambda_nc(n, qp));
}

VerificationReport verify_k_plus_m_relation(long n, long k, long m) {
    return timed_report(
        "noncompact-k-plus-m-relation",
        {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}},
        [n, k, m](VerificationReport& rep) {
            rep.expected = "cbar'_i = -((k+m)/2) cbar'_{w,i} for i=1..8; fails at c-level i=1";
            if (k < 2 || m < 2 || k > 10 || m > 10 || k % 2 || m % 2)
                throw domain_error("k, m must be even in [2,10]");
            require_no_log_branch(n);
            const auto c = c6_closed(n, k + m);
            const auto cp = cbarp_from(n, k, m, cbar_from(n, k, m, c));
            const auto cw = c6_wmoments(n, k + m);
            const auto cpw = cbarp_from(n, k, m, cbar_from(n, k, m, cw));
            const Rational factor = rat(-(k + m), 2);
            long mismatches = 0;
            std::string detail;
            for (int i = 1; i <= 8; ++i)
                if (cp[i] != factor * cpw[i]) {
                    ++mismatches;
                    detail += (detail.empty() ? "i=" : ",i=") + std::to_string(i);
                }
            const bool c_level_differs = c[1] != factor * cw[1];
            if (mismatches == 0 && c_level_differs) {
                rep.verdict = VerificationReport::Verdict::pass;
                rep.actual = "all eight hold; c-level differs at i=1";
            } else {
                rep.verdict = VerificationReport::Verdict::fail;
                rep.actual = std::to_string(mismatches) + " broken identities; c-level " +
                             (c_level_differs ? "differs" : "coincides");
                rep.witness = {{"broken", detail.empty() ? "none" : detail},
                               {"c1", c[1].str()},
                               {"cw1_scaled", (factor * cw[1]).str()}};
            }
        });
}

VerificationReport verify_w_matrix_relation(long n) {
    return timed_report(
        "noncompact-w-matrix-relation", {{"n", std::to_string(n)}},
        [n](VerificationReport& rep) {
            rep.expected = "m^{w,D,2} = -m^{D,2}/(k+m) entrywise";
            const SymMatrix M = d2_block_q6(n);
            long mismatches = 0;
            for (long q = 0; q <= kQTop; ++q)
                for (long qp = 0; qp <= kQTop; ++qp) {
                    const long km = 2 * q + 2 * qp + 4;
                    if (wmoment_d2_entry(n, q, qp) != rat(-1, km) * M.at(q, qp)) ++mismatches;
                }
            rep.actual = std::to_string(mismatches) + " mismatching entries";
            rep.verdict = mismatches == 0 ? VerificationReport::Verdict::pass
                                          : VerificationReport::Verdict::fail;
            if (mismatches) rep.witness = {{"mismatches", std::to_string(mismatches)}};
        });
}

VerificationReport verify_n52_remark(long n) {
    return timed_report(
        "noncompact-n52-discriminant", {{"n", std::to_string(n)}}, [n](VerificationReport& rep) {
            rep.expected = n >= 52 ? "positive" : "not positive";
            const SymMatrix M = d2_block_q6(n);
            const auto m = M.rational_part();
            // -(1/2)(m00 a0^2 + 2 m01 a0 + m11): discriminant m01^2 - m00 m11
            const Rational disc = m[0][1] * m[0][1] - m[0][0] * m[1][1];
            const int s = sign_of(disc);
            rep.actual = s > 0 ? "positive" : (s == 0 ? "zero" : "negative");
            const bool ok = (n >= 52) == (s > 0);
            rep.verdict = ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
            if (!ok) rep.witness = {{"disc", to_string(disc)}};
        });
}

ScaledRational gamma_prefactor(long n) {
    if (n <= 24) throw domain_error("gamma prefactor needs n > 24");
    return gamma_half(n - 24) * gamma_half(n + 6) / gamma_half(2 * n + 2);
}

}  // namespace qcert
