#include "qcert/pohozaev4.hpp"

#include <chrono>

#include "qcert/definiteness.hpp"
#include "qcert/linsys.hpp"
#include "qcert/parallel.hpp"
#include "qcert/radial.hpp"
#include "qcert/scan_common.hpp"

namespace qcert {

const char* family_name(Family f) {
    switch (f) {
        case Family::D: return "D";
        case Family::W: return "W";
        default: return "H";
    }
}

const Rational kLogBranchScale = Rational(pow_integer(10, 10));

CoeffSet4 coeffs_q4(long n, long k, long m) {
    const long km = k + m;
    CoeffSet4 c;
    c.c1 = Rational(km) * Rational(n * n * n - (km + 2) * n * n + (6 * km - 4) * n - 4 * km + 8);
    c.c2 = Rational(2 * (n - 1) * km) * Rational((n + km - 2) * k * m);
    c.c3 = rat(8 * (n - 3) * (n - 1) * km, (n - 2) * (n + km - 4));
    c.c4 = Rational(n - 3) * Rational(n * n * n - 4 * n * n + 16 * n - 16) * rat(km, 1) /
           Rational(2 * (n - 2) * (n - 1) * (n + km - 4));
    return c;
}

long d_value_q4(long n) { return (n - 4) / 2; }

std::pair<long, long> s_range_q4(Family f, long n) {
    const long d = d_value_q4(n);
    switch (f) {
        case Family::D: return {2, d};
        case Family::W: return {1, d - 2};
        default: return {2, d - 2};
    }
}

std::pair<long, long> q_range_q4(Family f, long n, long s) {
    const long top = (d_value_q4(n) - s) / 2;
    return {f == Family::D ? 0 : 1, top};
}

namespace {

Rational lambda_q4(Family f, long n, long s, long q) {
    switch (f) {
        case Family::D: return Rational(-q) * Rational(n + 2 * q + 2 * s - 2);
        case Family::W: return rat(-1, 2) * Rational(n + s + 2 * q - 2) * Rational(s + 2 * q);
        default:
            return Rational(s - 1) * (Rational(2) - rat(n - 2, n - 1) * Rational(n + s - 1)) -
                   Rational(q + 1) * Rational(n + 2 * q + 2 * s - 4);
    }
}

Rational kappa_s(long n, long s) {
    return rat(n - 2, n - 1) * Rational(s * (s - 1)) * Rational((n + s - 1) * (n + s - 2));
}

struct HData {
    std::vector<std::vector<Rational>> gamma;    // gamma[q] = solution of (n, 2q+s-2, q-1)
    std::vector<std::vector<Rational>> b, bp;    // b[q'], bp[q'] for (n, 2q'+s-2, q'-1)
};

HData h_linsys_data(long n, long s, long q_lo, long q_hi) {
    HData h;
    h.gamma.resize(q_hi + 1);
    h.b.resize(q_hi + 1);
    h.bp.resize(q_hi + 1);
    for (long q = q_lo; q <= q_hi; ++q) {
        const ProblemIndex idx{Order::four, n, 2 * q + s - 2, q - 1};
        h.gamma[q] = solve_gamma(idx).gamma;
        h.b[q] = rhs_vector(idx, RhsVariant::plain);
        h.bp[q] = rhs_vector(idx, RhsVariant::primed);
    }
    return h;
}

// Raw (unsymmetrized) m^{H,s,2} entry.
ScaledRational h2_raw(long n, long s, long q, long qp, const HData& h, bool log_branch) {
    if (log_branch) return ScaledRational();
    const Rational pf = rat(n - 4, 4 * (n - 1)) * kappa_s(n, s);
    ScaledRational sum;
    for (long i = 1; i <= qp + 3; ++i) {
        const Rational& bi = h.b[qp][i - 1];
        if (bi == 0) continue;
        for (long j = 1; j <= q + 2; ++j) {
            const Rational bracket =
                rat((n - 2 * s - 2 * i - 2 * j + 6) * (n - 2 * j), n + 3 - i - j) -
                Rational(n + 4 - 4 * j - 2 * s);
            sum += (bi * h.gamma[q][j - 1] * bracket) *
                   moment_integral(n - 1 + 2 * s, n + 3 - i - j);
        }
    }
    return rat(-1, 2) * pf * pf * sum;
}

// Raw (unsymmetrized) m^{H,s,3} entry.
ScaledRational h3_raw(long n, long s, long q, long qp, const HData& h, bool log_branch) {
    const Rational pf = rat(n - 4, 4 * (n - 1)) * kappa_s(n, s);
    if (log_branch)
        return ScaledRational(rat(n - 4, 2) * pf * pf * h.gamma[q][q + 1] * h.b[qp][qp + 2]);
    ScaledRational sum;
    for (long i = 1; i <= qp + 3; ++i) {
        const Rational& bi = h.b[qp][i - 1];
        const Rational& bpi = h.bp[qp][i - 1];
        if (bi == 0 && bpi == 0) continue;
        for (long j = 1; j <= q + 2; ++j) {
            const Rational bracket =
                rat(n - 2 * s - 2 * i - 2 * j + 6, n + 3 - i - j) * bpi - Rational(n - 4) * bi;
            sum += (h.gamma[q][j - 1] * bracket) * moment_integral(n - 1 + 2 * s, n + 3 - i - j);
        }
    }
    return rat(-1, 2) * pf * pf * sum;
}

}  // namespace

SymMatrix matrix_q4(const FamilySpec4& spec) {
    const long n = spec.n, s = spec.s;
    const auto [s_lo, s_hi] = s_range_q4(spec.family, n);
    const long n_min = spec.family == Family::D ? 8 : (spec.family == Family::W ? 10 : 12);
    if (n < n_min || s < s_lo || s > s_hi)
        throw domain_error("no " + std::string(family_name(spec.family)) +
                           "-family block at n=" + std::to_string(n) + ", s=" + std::to_string(s));
    const auto [q_lo, q_hi] = q_range_q4(spec.family, n, s);
    const long dim = q_hi - q_lo + 1;
    const Rational pref = Rational((n - 4) * (n - 4)) / Rational(8 * (n - 3) * (n - 2) * (n - 1));

    HData hdata;
    if (spec.family == Family::H) hdata = h_linsys_data(n, s, q_lo, q_hi);

    std::vector<std::vector<ScaledRational>> e(dim, std::vector<ScaledRational>(dim));
    for (long q = q_lo; q <= q_hi; ++q) {
        for (long qp = q_lo; qp <= q_hi; ++qp) {
            const long k = 2 * q + s, m = 2 * qp + s;
            const bool log_branch = (k + m == n - 4);
            const CoeffSet4 c = coeffs_q4(n, k, m);
            const Rational lq = lambda_q4(spec.family, n, s, q);
            const Rational lqp = lambda_q4(spec.family, n, s, qp);
            const Rational u = rat(1, 8) * c.c1 *
                                   (Rational(2) * (lq + lqp) + Rational((n + k + m - 2) * (k + m))) -
                               c.c2;

            Rational core;
            switch (spec.family) {
                case Family::D: core = c.c3 * lq * lqp + u; break;
                case Family::W:
                    core = c.c3 / 2 *
                               (Rational(4 * s) * Rational(n + s) * lq * lqp +
                                Rational(k * m * s * s) * Rational((n + s) * (n + s))) +
                           Rational(2 * s) * Rational(n + s) * u;
                    break;
                case Family::H: {
                    const Rational ks = kappa_s(n, s);
                    core = ks * (c.c3 * lq * lqp +
                                 rat(4 * (n - 3) * (k + m) * (s - 1), n + k + m - 4) *
                                     Rational((n + s - 1) * k * m) -
                                 rat((n - 4) * (n - 3), 2 * (n - 2) * (n - 1)) *
                                     Rational(n * n * (k + m)) * ks / Rational(n + k + m - 4) +
                                 u);
                    break;
                }
            }

            ScaledRational entry =
                log_branch ? ScaledRational(pref * core)
                           : (pref * core) * moment_integral(n + k + m - 3, n - 3);
            if (spec.family == Family::H) {
                const ScaledRational m2 = rat(1, 2) * (h2_raw(n, s, q, qp, hdata, log_branch) +
                                                       h2_raw(n, s, qp, q, hdata, log_branch));
                const ScaledRational m3 = rat(1, 2) * (h3_raw(n, s, q, qp, hdata, log_branch) +
                                                       h3_raw(n, s, qp, q, hdata, log_branch));
                entry += m2 + m3;
            }
            if (log_branch) entry = kLogBranchScale * entry;
            e[q - q_lo][qp - q_lo] = entry;
        }
    }
    return SymMatrix(std::move(e));  // construction re-checks exact symmetry
}

std::optional<bool> expected_q4(Family f, long n, long s) {
    switch (f) {
        case Family::D:
            if (n >= 8 && n <= 24) return true;
            if (n >= 25 && s == 2) return false;
            return std::nullopt;
        case Family::W:
            if (n >= 10 && n <= 28) return true;
            if (n >= 29 && s == 1) return false;
            return std::nullopt;
        default:
            if (n >= 12 && n <= 32) return true;
            if (n >= 33 && s == 2) return false;
            return std::nullopt;
    }
}

namespace {

struct ScanItem {
    Family family;
    long n, s;
};

template <typename MatrixFn, typename ExpectFn>
std::vector<VerificationReport> run_scan(const char* check_id, const std::vector<ScanItem>& items,
                                         MatrixFn build, ExpectFn expect, int jobs) {
    std::vector<VerificationReport> reports(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t idx) {
        const auto t0 = std::chrono::steady_clock::now();
        const ScanItem& it = items[idx];
        VerificationReport rep;
        rep.check_id = check_id;
        rep.params = {{"family", family_name(it.family)},
                      {"n", std::to_string(it.n)},
                      {"s", std::to_string(it.s)}};
        const std::optional<bool> claim = expect(it.family, it.n, it.s);
        rep.expected = !claim ? "no-claim" : (*claim ? "positive-definite" : "not-positive-definite");
        try {
            const SymMatrix M = build(it.family, it.n, it.s);
            const DefinitenessVerdict v = classify(M);
            rep.actual = definiteness_name(v.classification);
            const bool ok = !claim || (*claim == v.positive_definite());
            rep.verdict = ok ? VerificationReport::Verdict::pass : VerificationReport::Verdict::fail;
            if (!ok) {
                rep.witness = {{"eigen_sign_counts", "(" + std::to_string(v.negative) + "," +
                                                         std::to_string(v.zero) + "," +
                                                         std::to_string(v.positive) + ")"}};
                if (v.minor_witness)
                    rep.witness.push_back({"minor_" + std::to_string(v.minor_witness->first),
                                           to_string(v.minor_witness->second)});
                if (v.negative_root_interval)
                    rep.witness.push_back(
                        {"negative_eigenvalue_in",
                         "(" + to_string(v.negative_root_interval->first) + "," +
                             to_string(v.negative_root_interval->second) + ")"});
            }
        } catch (const std::exception& e) {
            rep.verdict = VerificationReport::Verdict::error;
            rep.actual = e.what();
            rep.witness = {{"exception", e.what()}};
        }
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        reports[idx] = std::move(rep);
    });
    return reports;
}

}  // namespace

std::vector<VerificationReport> scan_q4(long n_lo, long n_hi, const std::vector<Family>& families,
                                        std::optional<long> s_filter, int jobs) {
    std::vector<ScanItem> items;
    for (long n = n_lo; n <= n_hi; ++n)
        for (Family f : families) {
            const auto [s_lo, s_hi] = s_range_q4(f, n);
            const long n_min = f == Family::D ? 8 : (f == Family::W ? 10 : 12);
            if (n < n_min) continue;
            for (long s = s_lo; s <= s_hi; ++s) {
                if (s_filter && *s_filter != s) continue;
                items.push_back({f, n, s});
            }
        }
    return run_scan(
        "q4-definiteness", items,
        [](Family f, long n, long s) { return matrix_q4({f, n, s}); },
        [](Family f, long n, long s) { return expected_q4(f, n, s); }, jobs);
}

// The q6 scan reuses run_scan through this translation unit.
std::vector<VerificationReport> scan_family_reports(
    const char* check_id, const std::vector<std::tuple<Family, long, long>>& cells,
    const std::function<SymMatrix(Family, long, long)>& build,
    const std::function<std::optional<bool>(Family, long, long)>& expect, int jobs) {
    std::vector<ScanItem> items;
    items.reserve(cells.size());
    for (const auto& [f, n, s] : cells) items.push_back({f, n, s});
    return run_scan(check_id, items, build, expect, jobs);
}

}  // namespace qcert
