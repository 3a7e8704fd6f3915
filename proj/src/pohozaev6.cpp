#include "qcert/pohozaev6.hpp"

#include "qcert/linsys.hpp"
#include "qcert/radial.hpp"
#include "qcert/scan_common.hpp"

namespace qcert {

namespace {

ScaledRational mi(long i, long j) { return moment_integral(i, j); }

}  // namespace

std::array<ScaledRational, 7> c6_closed(long n, long kpm) {
    const bool log_branch = (kpm == n - 6);
    std::array<ScaledRational, 7> c;

    const ScaledRational one(Rational(1));
    ScaledRational b1 = one, b2 = one, b3 = one, b4 = one, b5 = one, b6 = one;
    if (!log_branch) {
        b1 = rat(-(n * n - 4), 4 * (n - 4)) * mi(n + kpm - 1, n) +
             rat(-n, n - 4) * mi(n + kpm + 1, n) +
             rat(n * n - 20, 4 * (n - 4)) * mi(n + kpm + 3, n) + mi(n + kpm + 5, n);
        b2 = rat(-n * n, 16 * (n - 6)) * Rational(n - 2) * mi(n + kpm - 3, n - 1) +
             rat(n * n, 16 * (n - 6)) * Rational(n - 10) * mi(n + kpm - 1, n - 1) +
             rat(n * n - 6 * n - 4, 2 * (n - 6)) * mi(n + kpm + 1, n - 1) +
             mi(n + kpm + 3, n - 1);
        b3 = rat(-(n * n - 2 * n - 4), 4 * (n - 5)) * mi(n + kpm - 3, n - 2) +
             rat(n * (n - 6), 4 * (n - 5)) * mi(n + kpm - 1, n - 2) + mi(n + kpm + 1, n - 2);
        b4 = -mi(n + kpm - 3, n - 3) + mi(n + kpm - 1, n - 3);
        b5 = -mi(n + kpm - 5, n - 4) + mi(n + kpm - 3, n - 4);
        b6 = -mi(n + kpm - 7, n - 5) + mi(n + kpm - 5, n - 5);
    }
    c[1] = Rational(4 * (n - 6) * (n - 6)) * Rational((n - 4) * (n - 4)) * b1;
    c[2] = Rational(-8 * (n - 6)) * Rational((n - 6) * (n - 6)) * b2;
    c[3] = Rational(-4 * (n - 6) * (n - 6)) * Rational(n - 5) * b3;
    c[4] = rat(-(n - 6) * (n - 6) * (n - 4), 2) * b4;
    c[5] = rat((n - 6) * (n - 6), 2) * b5;
    c[6] = rat(-(n - 6), 2) * b6;
    return c;
}

std::array<ScaledRational, 11> cbar_from(long n, long k, long m,
                                         const std::array<ScaledRational, 7>& c) {
    const long p = k + m;
    std::array<ScaledRational, 11> cb;

    cb[1] = Rational((p - 4) * (n + p - 6)) * Rational((p - 2) * (n + p - 4)) *
                rat(n - 6, 4 * (n - 1)) * c[6] +
            rat(n * n - 2 * n - 8 + (n - 10) * (p - 2), 2 * (n - 1)) * c[3] -
            rat(n - 2, 4 * (n - 1)) * c[2] +
            rat(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1)) * c[1] +
            Rational(p - 2) * Rational((n + p - 4) * (n + p - 4)) * rat(n - 6, 2 * (n - 1)) *
                c[5] +
            Rational((p - 2) * (n + p - 4)) *
                rat((n - 6) * (n - 4) * (n - 2) + 16, 2 * (n - 4) * (n - 2) * (n - 1)) * c[4] +
            rat(8 * (n - 2) * p * p - 8 * (n - 6) * p + 16 * (n - 4),
                (n - 4) * (n - 2) * (n - 1)) *
                c[4];

    cb[2] = Rational((p - 4) * (n + p - 6)) * rat(2 * (n - 6), (n - 2) * (n - 2)) * c[6] +
            rat(4 * (n - 6) * p + 4 * (n * n - 8 * n + 20), (n - 2) * (n - 2)) * c[5] +
            rat(4 * (n - 4) * (n - 4) + 16, (n - 4) * (n - 2) * (n - 2)) * c[4];

    cb[3] = rat(2 * k * m, n - 2) * c[1] +
            Rational(p * (n + p - 2)) * rat(4 * k * m, (n - 4) * (n - 2)) * c[4];

    cb[4] = rat(-2, n - 2) * c[3] + rat(8, (n - 4) * (n - 2)) * c[4];

    cb[5] = rat(-4, (n - 4) * (n - 2)) * c[5];

    cb[6] = rat(4 * (n - 6), (n - 4) * (n - 2) * (n - 2)) * c[6];

    cb[7] = rat(8, (n - 4) * (n - 2)) * c[4];

    cb[8] = rat(-8 * (n + p - 4) * k * m, (n - 2) * (n - 2)) * c[5] -
            (rat(8 * k * m, (n - 4) * (n - 2)) + rat(8 * k * m, (n - 2) * (n - 2))) * c[4];

    const Rational n1sq((n - 1) * (n - 1));
    cb[9] = rat(-(n - 6), 4) *
                (rat(2 * (3 * n - 4), (n - 4) * (n - 2)) / n1sq + rat(3 * n - 2, 8) / n1sq) *
                Rational((n + p - 6) * (p - 4)) * c[6] -
            rat(n - 6, 2) * Rational(n - 6) * Rational(n + p - 6) * Rational(n * p - 4) /
                (Rational((n - 4) * (n - 2)) * n1sq) * c[6] -
            (rat(3 * n * n * n - 12 * n * n - 36 * n + 64, 16) / n1sq -
             rat(2 * p, (n - 4) * (n - 1))) *
                c[5] -
            (rat((3 * n * n - 28 * n + 28) * (p - 4), 16) / n1sq +
             Rational((n - 4) * (n * p - 4)) / (Rational(n - 2) * n1sq) +
             rat(8 * (n + p - 4), (n - 2) * (n - 2)) / n1sq) *
                c[5] -
            Rational(3 * n - 4) * Rational((n - 6) * p + (n * n - 8 * n + 20)) /
                (Rational((n - 2) * (n - 2)) * n1sq) * c[5] -
            Rational(3 * n - 4) * Rational(n * n - 8 * n + 20) /
                (Rational((n - 4) * (n - 2) * (n - 2)) * n1sq) * c[4] -
            (rat(3 * n * n - 12 * n + 28, 16) / n1sq + rat(8, (n - 4) * (n - 2)) / n1sq +
             rat(8, (n - 2) * (n - 2)) / n1sq) *
                c[4];

    cb[10] = rat(n - 6, 2) *
                 (rat(2 * (3 * n - 4), (n - 4) * (n - 2)) / n1sq + rat(3 * n - 2, 8) / n1sq) *
                 c[6] -
             rat(n - 6, 2) *
                 (rat(2 * (3 * n - 4), (n - 2) * (n - 2)) / n1sq +
                  rat((n - 6) * (n + 4), 4 * (n - 4)) / n1sq) *
                 c[6];
    return cb;
}

std::array<ScaledRational, 9> cbarp_from(long n, long k, long m,
                                         const std::array<ScaledRational, 11>& cb) {
    const long p = k + m;
    std::array<ScaledRational, 9> cp;

    const ScaledRational inner_sym =
        Rational(k * m * (n + p - 6)) * cb[5] - rat(1, 4) * cb[1];
    const ScaledRational slope = cb[4] - Rational(2 * (n - 4)) * cb[5];
    const ScaledRational curv = cb[7] - Rational(n + p - 2) * cb[5];

    cp[1] = cb[3] - rat(p * (n + p - 2), 8) * cb[1] -
            rat((m - k) * (n + p - 2), 2) *
                (inner_sym + Rational(k) * slope + Rational(k * k) * curv);

    cp[2] = Rational(2) * inner_sym + Rational(p) * slope + Rational(k * k + m * m) * curv;

    cp[3] = cb[2] - Rational(4 * (n + p - 4)) * cb[6] - Rational(2 * p) * cb[5];

    cp[4] = Rational(-2) * cb[6];

    cp[5] = cb[8] + rat(k * m, 2) * cb[2] + Rational(k * m * (2 * n + p - 8)) * cb[5] +
            (rat(k * m, 2) * Rational((n + p - 4) * (p - 2)) -
             Rational(k * m) * Rational((n + k - 2) * (n + m - 2)) +
             Rational(k * m * (2 * n + p - 4))) *
                cb[6];

    cp[6] = Rational(-k * m) * cb[6];

    cp[7] = cb[9] + rat(1, n - 1) * cb[2] + rat((n - 3) * p, n - 1) * cb[5] +
            (rat((n - 3) * (n - 3), 2 * (n - 1) * (n - 1)) * Rational((p - 4) * (n + p - 6)) +
             Rational(p) + rat(2 * (p - 2), n - 1) -
             rat((n - 3) * (n - 2), (n - 1) * (n - 1)) * Rational(k * k + m * m - 5 * p + 12) -
             rat((n - 3) * n, n - 1) * Rational(p - 2) +
             rat(p - 4, n - 1) * Rational(n + p - 6) -
             rat(n - 3, 2 * (n - 1)) * Rational(k * k + m * m + p * (n - 4))) *
                cb[6];

    cp[8] = cb[10] - rat(n * n - 4 * n + 7, (n - 1) * (n - 1)) * cb[6];
    return cp;
}

CoeffSet6 coeff_pipeline_q6(long n, long k, long m) {
    if (k < 2 || m < 2 || (k + m) % 2 != 0)
        throw domain_error("coefficient pipeline needs k, m >= 2 with k+m even");
    CoeffSet6 out;
    out.c = c6_closed(n, k + m);
    out.cbar = cbar_from(n, k, m, out.c);
    out.cbarp = cbarp_from(n, k, m, out.cbar);
    return out;
}

ScaledRational d_form_q6(const std::array<ScaledRational, 9>& cp, const Rational& lq,
                         const Rational& lqp) {
    return cp[1] + lq * cp[2] + (lq * lqp) * cp[3] + (lq * lqp * (lq + lqp)) * cp[4];
}

Rational lambda_d_q6(long n, long s, long q) {
    return Rational(-q) * Rational(n + 2 * q + 2 * s - 2);
}

long d_value_q6(long n) { return (n - 6) / 2; }

std::pair<long, long> s_range_q6(Family f, long n) {
    const long d = d_value_q6(n);
    switch (f) {
        case Family::D: return {2, d};
        case Family::W: return {1, d - 2};
        default: return {2, d - 2};
    }
}

std::pair<long, long> q_range_q6(Family f, long n, long s) {
    const long top = (d_value_q6(n) - s) / 2;
    return {f == Family::D ? 0 : 1, top};
}

namespace {

Rational lambda_q6(Family f, long n, long s, long q) {
    switch (f) {
        case Family::D: return lambda_d_q6(n, s, q);
        case Family::W: return rat(-1, 2) * Rational(n + s + 2 * q - 2) * Rational(s + 2 * q);
        default:
            return Rational(s - 1) * (Rational(2) - rat(n - 2, n - 1) * Rational(n + s - 1)) -
                   Rational(q + 1) * Rational(n + 2 * q + 2 * s - 4);
    }
}

Rational kappa_s(long n, long s) {
    return rat(n - 2, n - 1) * Rational(s * (s - 1)) * Rational((n + s - 1) * (n + s - 2));
}

struct HData6 {
    std::vector<std::vector<Rational>> gamma;
    std::vector<std::vector<Rational>> b, bp;
};

HData6 h_linsys_data6(long n, long s, long q_lo, long q_hi) {
    HData6 h;
    h.gamma.resize(q_hi + 1);
    h.b.resize(q_hi + 1);
    h.bp.resize(q_hi + 1);
    for (long q = q_lo; q <= q_hi; ++q) {
        const ProblemIndex idx{Order::six, n, 2 * q + s - 2, q - 1};
        h.gamma[q] = solve_gamma(idx).gamma;
        h.b[q] = rhs_vector(idx, RhsVariant::plain);
        h.bp[q] = rhs_vector(idx, RhsVariant::primed);
    }
    return h;
}

ScaledRational h2_raw6(long n, long s, long q, long qp, const HData6& h, bool log_branch) {
    if (log_branch) return ScaledRational();
    const Rational pf = rat(n - 6, 4 * (n - 1)) * kappa_s(n, s);
    ScaledRational sum;
    for (long i = 1; i <= qp + 4; ++i) {
        const Rational& bi = h.b[qp][i - 1];
        if (bi == 0) continue;
        for (long j = 1; j <= q + 2; ++j) {
            const Rational bracket =
                rat((n - 2 * s - 2 * i - 2 * j + 6) * (n - 2 - 2 * j), n + 3 - i - j) -
                Rational(n + 2 - 4 * j - 2 * s);
            sum += (bi * h.gamma[q][j - 1] * bracket) *
                   moment_integral(n - 1 + 2 * s, n + 3 - i - j);
        }
    }
    return rat(1, 2) * pf * pf * sum;
}

ScaledRational h3_raw6(long n, long s, long q, long qp, const HData6& h, bool log_branch) {
    const Rational pf = rat(n - 6, 4 * (n - 1)) * kappa_s(n, s);
    if (log_branch)
        return ScaledRational(rat(-(n - 6), 2) * pf * pf * h.gamma[q][q + 1] * h.b[qp][qp + 3]);
    ScaledRational sum;
    for (long i = 1; i <= qp + 4; ++i) {
        const Rational& bi = h.b[qp][i - 1];
        const Rational& bpi = h.bp[qp][i - 1];
        if (bi == 0 && bpi == 0) continue;
        for (long j = 1; j <= q + 2; ++j) {
            const Rational bracket =
                rat(n - 2 * s - 2 * i - 2 * j + 6, n + 3 - i - j) * bpi - Rational(n - 6) * bi;
            sum += (h.gamma[q][j - 1] * bracket) * moment_integral(n - 1 + 2 * s, n + 3 - i - j);
        }
    }
    return rat(1, 2) * pf * pf * sum;
}

}  // namespace

SymMatrix matrix_q6(const FamilySpec6& spec, bool scale_log_branch) {
    const long n = spec.n, s = spec.s;
    const auto [s_lo, s_hi] = s_range_q6(spec.family, n);
    const long n_min = spec.family == Family::D ? 10 : (spec.family == Family::W ? 12 : 14);
    if (n < n_min || s < s_lo || s > s_hi)
        throw domain_error("no " + std::string(family_name(spec.family)) +
                           "-family block at n=" + std::to_string(n) + ", s=" + std::to_string(s));
    const auto [q_lo, q_hi] = q_range_q6(spec.family, n, s);
    const long dim = q_hi - q_lo + 1;

    HData6 hdata;
    if (spec.family == Family::H) hdata = h_linsys_data6(n, s, q_lo, q_hi);

    std::vector<std::vector<ScaledRational>> e(dim, std::vector<ScaledRational>(dim));
    for (long q = q_lo; q <= q_hi; ++q) {
        for (long qp = q_lo; qp <= q_hi; ++qp) {
            const long k = 2 * q + s, m = 2 * qp + s;
            const bool log_branch = (k + m == n - 6);
            if (log_branch && !scale_log_branch)
                throw domain_error("logarithmic branch reached where it must not appear");
            const auto cp = cbarp_from(n, k, m, cbar_from(n, k, m, c6_closed(n, k + m)));
            const Rational lq = lambda_q6(spec.family, n, s, q);
            const Rational lqp = lambda_q6(spec.family, n, s, qp);
            const ScaledRational base = d_form_q6(cp, lq, lqp);

            ScaledRational entry;
            switch (spec.family) {
                case Family::D: entry = base; break;
                case Family::W: {
                    const Rational g1 = Rational(2 * s) * Rational(n + s);
                    const Rational g2 = Rational(s * s) * Rational((n + s) * (n + s));
                    const Rational bracket =
                        Rational(4 * (q - 1) * (qp - 1) + 2 * (s + 1) * (q + qp - 2)) +
                        Rational((s + 1) * (n + 2 * s));
                    entry = g1 * base + g2 * cp[5] + (g2 * bracket) * cp[6];
                    break;
                }
                case Family::H: {
                    const Rational ks = kappa_s(n, s);
                    const Rational ks2 = ks * ks;
                    const Rational big6 =
                        Rational(s * (s - 1)) * Rational((n + 2 * s - 2) * (n + 2 * s - 4)) +
                        Rational(s * (n + 2 * s - 2)) *
                            Rational(4 * q * qp - 2 * (q + qp) - s * s + 2 * s * (q + qp + 1)) +
                        Rational(s * s) *
                            Rational(2 * s * (1 - (q + qp)) - 4 * q * qp + 2 * (q + qp) + n - 4);
                    const Rational big8 =
                        Rational(4 * (q - 1) * (qp - 1) + 2 * s * (q + qp - 2)) +
                        Rational(s * (n + 2 * s - 2));
                    entry = ks * base + ks2 / Rational(s * (n + s - 2)) * cp[5] +
                            ks2 * big6 / Rational(s * s) / Rational((n + s - 2) * (n + s - 2)) *
                                cp[6] +
                            ks2 * cp[7] + (ks2 * big8) * cp[8];
                    entry += rat(1, 2) * (h2_raw6(n, s, q, qp, hdata, log_branch) +
                                          h2_raw6(n, s, qp, q, hdata, log_branch));
                    entry += rat(1, 2) * (h3_raw6(n, s, q, qp, hdata, log_branch) +
                                          h3_raw6(n, s, qp, q, hdata, log_branch));
                    break;
                }
            }
            if (log_branch) entry = kLogBranchScale * entry;
            e[q - q_lo][qp - q_lo] = entry;
        }
    }
    return SymMatrix(std::move(e));
}

std::optional<bool> expected_q6(Family f, long n, long s) {
    switch (f) {
        case Family::D:
            if (n >= 10 && n <= 26) return true;
            if (n >= 27 && s == 2) return false;
            return std::nullopt;
        case Family::W:
            if (n >= 12 && n <= 29) return true;
            if (n >= 30 && s == 1) return false;
            return std::nullopt;
        default:
            if (n >= 14 && n <= 33) return true;
            if (n >= 34 && s == 2) return false;
            return std::nullopt;
    }
}

std::vector<VerificationReport> scan_q6(long n_lo, long n_hi, const std::vector<Family>& families,
                                        std::optional<long> s_filter, int jobs) {
    std::vector<std::tuple<Family, long, long>> cells;
    for (long n = n_lo; n <= n_hi; ++n)
        for (Family f : families) {
            const long n_min = f == Family::D ? 10 : (f == Family::W ? 12 : 14);
            if (n < n_min) continue;
            const auto [s_lo, s_hi] = s_range_q6(f, n);
            for (long s = s_lo; s <= s_hi; ++s) {
                if (s_filter && *s_filter != s) continue;
                cells.emplace_back(f, n, s);
            }
        }
    return scan_family_reports(
        "q6-definiteness", cells,
        [](Family f, long n, long s) { return matrix_q6({f, n, s}); },
        [](Family f, long n, long s) { return expected_q6(f, n, s); }, jobs);
}

}  // namespace qcert
