#include "qcert/definiteness.hpp"

#include <algorithm>
#include <cmath>

namespace qcert {

const char* definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive-definite";
        case Definiteness::positive_semidefinite_singular: return "positive-semidefinite-singular";
        case Definiteness::indefinite: return "indefinite";
        case Definiteness::negative_definite: return "negative-definite";
        default: return "negative-semidefinite-singular";
    }
}

namespace {

long degree(const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
    trim(d);
    return d;
}

// Remainder of u mod v over Q.
Poly poly_rem(Poly u, const Poly& v) {
    const long dv = degree(v);
    long du = degree(u);
    while (du >= dv && du >= 0) {
        const Rational q = u[du] / v[dv];
        for (long i = 0; i <= dv; ++i) u[du - dv + i] -= q * v[i];
        u[du] = 0;  // kill rounding-free residue exactly
        du = degree(u);
    }
    trim(u);
    return u;
}

Poly poly_quot(Poly u, const Poly& v) {
    const long dv = degree(v);
    long du = degree(u);
    if (du < dv) return {};
    Poly q(du - dv + 1, Rational(0));
    while (du >= dv) {
        const Rational c = u[du] / v[dv];
        q[du - dv] = c;
        for (long i = 0; i <= dv; ++i) u[du - dv + i] -= c * v[i];
        u[du] = 0;
        du = degree(u);
    }
    return q;
}

Poly monic(Poly p) {
    const long d = degree(p);
    if (d < 0) return p;
    const Rational lc = p[d];
    for (auto& c : p) c /= lc;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

// Positive rational scaling to a primitive integer polynomial (signs intact).
Poly primitive_part(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Integer den(1);
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Integer g(0);
    std::vector<Integer> zs(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        zs[i] = p[i].get_num() * (den / p[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zs[i].get_mpz_t());
    }
    if (g == 0) g = 1;
    for (size_t i = 0; i < p.size(); ++i) p[i] = Rational(zs[i] / g);
    return p;
}

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(primitive_part(f));
    Poly d = primitive_part(derivative(f));
    if (degree(d) >= 0) chain.push_back(d);
    while (chain.size() >= 2) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (degree(r) < 0) break;
        for (auto& c : r) c = -c;
        chain.push_back(primitive_part(std::move(r)));
    }
    return chain;
}

int sign_at(const Poly& p, const Rational& x) {
    Rational v(0);
    for (long i = degree(p); i >= 0; --i) v = v * x + p[i];
    return sign_of(v);
}

int sign_at_neg_inf(const Poly& p) {
    const long d = degree(p);
    if (d < 0) return 0;
    const int lc = sign_of(p[d]);
    return d % 2 == 0 ? lc : -lc;
}

int sign_at_pos_inf(const Poly& p) {
    const long d = degree(p);
    return d < 0 ? 0 : sign_of(p[d]);
}

template <typename SignFn>
long sign_changes(const std::vector<Poly>& chain, SignFn at) {
    long changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = at(p);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Yun squarefree decomposition: p = prod f_i^i, returns [(f_i, i)].
std::vector<std::pair<Poly, long>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, long>> out;
    Poly a = monic(p);
    Poly ap = derivative(a);
    Poly g = poly_gcd(a, ap);
    if (degree(g) == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly w = poly_quot(a, g);
    Poly y = poly_quot(ap, g);
    Poly z = y;
    {
        Poly wp = derivative(w);
        Poly t(std::max(z.size(), wp.size()), Rational(0));
        for (size_t i = 0; i < z.size(); ++i) t[i] += z[i];
        for (size_t i = 0; i < wp.size(); ++i) t[i] -= wp[i];
        trim(t);
        z = t;
    }
    long i = 1;
    const long max_iter = degree(p) + 2;
    while (degree(w) > 0) {
        if (i > max_iter) throw internal_check_error("squarefree decomposition did not terminate");
        Poly gi = poly_gcd(w, z);
        if (degree(gi) > 0) out.emplace_back(monic(gi), i);
        w = poly_quot(w, gi);
        y = poly_quot(z, gi);
        Poly wp = derivative(w);
        Poly t(std::max(y.size(), wp.size()), Rational(0));
        for (size_t j = 0; j < y.size(); ++j) t[j] += y[j];
        for (size_t j = 0; j < wp.size(); ++j) t[j] -= wp[j];
        trim(t);
        z = t;
        ++i;
    }
    return out;
}

Rational root_bound(const Poly& p) {
    const long d = degree(p);
    Rational b(0);
    for (long i = 0; i < d; ++i) {
        const Rational a = abs(p[i] / p[d]);
        if (a > b) b = a;
    }
    return b + 1;
}

}  // namespace

Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& m) {
    const long d = static_cast<long>(m.size());
    // Faddeev-LeVerrier: A_1 = M, b_1 = -tr A_1; A_k = M(A_{k-1} + b_{k-1} I).
    std::vector<std::vector<Rational>> A = m;
    Poly p(d + 1, Rational(0));
    p[d] = 1;
    Rational bk;
    for (long k = 1; k <= d; ++k) {
        if (k > 1) {
            std::vector<std::vector<Rational>> shifted = A;
            for (long i = 0; i < d; ++i) shifted[i][i] += bk;
            std::vector<std::vector<Rational>> next(d, std::vector<Rational>(d, Rational(0)));
            for (long i = 0; i < d; ++i)
                for (long l = 0; l < d; ++l) {
                    if (m[i][l] == 0) continue;
                    for (long j = 0; j < d; ++j) next[i][j] += m[i][l] * shifted[l][j];
                }
            A = std::move(next);
        }
        Rational tr(0);
        for (long i = 0; i < d; ++i) tr += A[i][i];
        bk = -tr / Rational(k);
        p[d - k] = bk;
    }
    return p;
}

std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& m) {
    const long d = static_cast<long>(m.size());
    std::vector<Rational> minors(d);
    for (long k = 1; k <= d; ++k) {
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) a[i][j] = m[i][j];
        Rational det(1);
        bool singular = false;
        for (long c = 0; c < k && !singular; ++c) {
            long piv = -1;
            for (long r = c; r < k; ++r)
                if (a[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            if (piv != c) {
                std::swap(a[piv], a[c]);
                det = -det;
            }
            det *= a[c][c];
            for (long r = c + 1; r < k; ++r) {
                if (a[r][c] == 0) continue;
                const Rational f = a[r][c] / a[c][c];
                for (long j = c; j < k; ++j) a[r][j] -= f * a[c][j];
            }
        }
        minors[k - 1] = singular ? Rational(0) : det;
    }
    return minors;
}

long sturm_count_interval(const Poly& f, const Rational& a, const Rational& b) {
    const auto chain = sturm_chain(f);
    const long va = sign_changes(chain, [&](const Poly& p) { return sign_at(p, a); });
    const long vb = sign_changes(chain, [&](const Poly& p) { return sign_at(p, b); });
    return va - vb;
}

SignCounts real_root_sign_counts(const Poly& p_in) {
    Poly p = p_in;
    trim(p);
    if (degree(p) < 0) throw domain_error("zero polynomial has no root counts");
    SignCounts counts;
    size_t t = 0;
    while (t < p.size() && p[t] == 0) ++t;
    counts.zero = static_cast<long>(t);
    Poly q(p.begin() + static_cast<long>(t), p.end());
    if (degree(q) == 0) return counts;

    for (const auto& [f, mult] : squarefree_decomposition(q)) {
        const auto chain = sturm_chain(f);
        const long v_minf = sign_changes(chain, [](const Poly& s) { return sign_at_neg_inf(s); });
        const long v_zero = sign_changes(chain, [](const Poly& s) { return sign_at(s, Rational(0)); });
        const long v_pinf = sign_changes(chain, [](const Poly& s) { return sign_at_pos_inf(s); });
        counts.negative += mult * (v_minf - v_zero);
        counts.positive += mult * (v_zero - v_pinf);
    }
    return counts;
}

DefinitenessVerdict classify(const SymMatrix& M) {
    const auto m = M.rational_part();  // pi^(h/2) > 0 stripped; definiteness invariant
    const long d = M.dim();

    const Poly p = characteristic_polynomial(m);
    const SignCounts counts = real_root_sign_counts(p);
    if (counts.negative + counts.zero + counts.positive != d)
        throw internal_check_error("eigenvalue sign counts do not sum to the dimension");

    const auto minors = leading_principal_minors(m);
    const bool pd_minors =
        std::all_of(minors.begin(), minors.end(), [](const Rational& x) { return sign_of(x) > 0; });
    const bool pd_sturm = counts.negative == 0 && counts.zero == 0;
    if (pd_minors != pd_sturm)
        throw internal_check_error("Sturm and Sylvester disagree on positive-definiteness");

    // Jacobi's inertia rule as a second count whenever no minor vanishes.
    if (std::all_of(minors.begin(), minors.end(), [](const Rational& x) { return x != 0; })) {
        long flips = 0;
        int prev = 1;
        for (const auto& mk : minors) {
            const int s = sign_of(mk);
            if (s != prev) ++flips;
            prev = s;
        }
        if (flips != counts.negative)
            throw internal_check_error("Sturm and Sylvester-minor inertia counts disagree");
    }

    DefinitenessVerdict v;
    v.negative = counts.negative;
    v.zero = counts.zero;
    v.positive = counts.positive;
    if (counts.negative == 0 && counts.zero == 0) v.classification = Definiteness::positive_definite;
    else if (counts.negative == 0) v.classification = Definiteness::positive_semidefinite_singular;
    else if (counts.positive == 0 && counts.zero == 0) v.classification = Definiteness::negative_definite;
    else if (counts.positive == 0) v.classification = Definiteness::negative_semidefinite_singular;
    else v.classification = Definiteness::indefinite;

    if (!v.positive_definite()) {
        for (long k = 0; k < d; ++k)
            if (sign_of(minors[k]) <= 0) {
                v.minor_witness = std::make_pair(k + 1, minors[k]);
                break;
            }
        if (!v.minor_witness)
            throw internal_check_error("not PD but every leading principal minor is positive");
    }

    if (counts.negative > 0) {
        // Isolate one negative eigenvalue with the squarefree part of p.
        Poly q = p;
        size_t t = 0;
        while (q[t] == 0) ++t;
        q.erase(q.begin(), q.begin() + static_cast<long>(t));
        Poly f = monic(poly_quot(q, poly_gcd(q, derivative(q))));
        Rational lo = -root_bound(f), hi(0);
        for (int step = 0; step < 80 && sturm_count_interval(f, lo, hi) > 1; ++step) {
            const Rational mid = (lo + hi) / 2;
            if (sturm_count_interval(f, lo, mid) >= 1) hi = mid;
            else lo = mid;
        }
        v.negative_root_interval = std::make_pair(lo, hi);
    }
    return v;
}

namespace {

// Cyclic Jacobi eigenvalues of a small symmetric matrix.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t d = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-26) break;
        for (size_t p = 0; p < d; ++p)
            for (size_t q = p + 1; q < d; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t i = 0; i < d; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (size_t i = 0; i < d; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(d);
    for (size_t i = 0; i < d; ++i) eig[i] = a[i][i];
    return eig;
}

}  // namespace

FloatSanity float_sanity(const SymMatrix& M) {
    const auto m = M.rational_part();
    const long d = M.dim();
    Rational maxabs(0);
    for (const auto& row : m)
        for (const auto& x : row) {
            const Rational a = abs(x);
            if (a > maxabs) maxabs = a;
        }
    FloatSanity out;
    if (maxabs == 0) {  // zero matrix: floats agree trivially
        return out;
    }
    std::vector<std::vector<double>> a(d, std::vector<double>(d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) a[i][j] = Rational(m[i][j] / maxabs).get_d();
    const auto eig = jacobi_eigenvalues(std::move(a));
    long neg = 0, pos = 0;
    for (double e : eig) {
        if (std::abs(e) <= 1e-6) {
            out.abstained = true;
            return out;
        }
        (e < 0 ? neg : pos)++;
    }
    const auto exact = classify(M);
    out.agreed = (exact.zero == 0 && neg == exact.negative && pos == exact.positive);
    return out;
}

}  // namespace qcert
