#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qcert/exactnum.hpp"
#include "qcert/pohozaev4.hpp"
#include "qcert/report.hpp"

namespace qcert {

struct FamilySpec6 {
    Family family;
    long n = 0;
    long s = 0;
};

/// Radial constants c_1..c_6(n, k+m) (index 0 unused), the ten intermediate
/// coefficients cbar_1..cbar_10 and the eight assembled cbar'_1..cbar'_8 of
/// the sixth-order quadratic form.
struct CoeffSet6 {
    std::array<ScaledRational, 7> c;
    std::array<ScaledRational, 11> cbar;
    std::array<ScaledRational, 9> cbarp;
};

/// Closed forms of c_1..c_6; on the logarithmic branch (k+m equal to the
/// critical degree n-6) the bracketed integral combination is replaced by 1.
std::array<ScaledRational, 7> c6_closed(long n, long kpm);

/// cbar_i from any set of six radial constants (also reused with the w-moment
/// constants by the non-compactness module).
std::array<ScaledRational, 11> cbar_from(long n, long k, long m,
                                         const std::array<ScaledRational, 7>& c);

std::array<ScaledRational, 9> cbarp_from(long n, long k, long m,
                                         const std::array<ScaledRational, 11>& cbar);

CoeffSet6 coeff_pipeline_q6(long n, long k, long m);

/// D-family quadratic-form value cbar'_1 + cbar'_2 lq + cbar'_3 lq lq' +
/// cbar'_4 lq lq' (lq + lq').
ScaledRational d_form_q6(const std::array<ScaledRational, 9>& cbarp, const Rational& lq,
                         const Rational& lqp);

Rational lambda_d_q6(long n, long s, long q);  // -q(n+2q+2s-2)

long d_value_q6(long n);                                     // floor((n-6)/2)
std::pair<long, long> s_range_q6(Family f, long n);          // inclusive
std::pair<long, long> q_range_q6(Family f, long n, long s);  // inclusive

/// One (family, n, s) block of the sixth-order Pohozaev form, N0-scaled on the
/// logarithmic branch. `scale_log_branch=false` is used by the non-compactness
/// module, which must never hit that branch (asserted).
SymMatrix matrix_q6(const FamilySpec6& spec, bool scale_log_branch = true);

std::vector<VerificationReport> scan_q6(long n_lo, long n_hi, const std::vector<Family>& families,
                                        std::optional<long> s_filter, int jobs = 1);

std::optional<bool> expected_q6(Family f, long n, long s);

}  // namespace qcert
