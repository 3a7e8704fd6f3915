#pragma once

#include <array>

#include "qcert/exactnum.hpp"
#include "qcert/report.hpp"

namespace qcert {

/// Integer coefficients a_1..a_4 of the blow-up direction; a_0 lives in the
/// quadratic extension and is computed per dimension.
extern const std::array<long, 5> kAVectorTail;  // index 0 unused

/// 5x5 block (q, q' = 0..4) of the sixth-order D-family matrix at s = 2,
/// without the logarithmic-branch scale, which must never trigger here.
SymMatrix d2_block_q6(long n);

/// Quadratic c0 + c1 x + c2 x^2 with rational coefficients.
using QuadraticPoly = std::array<Rational, 3>;

struct ScalingData {
    int pi_half_power = 0;  // positive factor stripped from all entries
    QuadraticPoly p_at_1;   // P(1) as a quadratic in a_0
    QuadraticPoly dp_at_1;  // P'(1)
    QuadraticPoly ddp_at_1; // P''(1)
    Rational disc;          // discriminant of P'(1)
};

/// P(delta) = sum m^{w,D,2}_{qq'} a_q a_{q'} delta^{k+m} with
/// m^{w,D,2} = -m^{D,2}/(k+m); returns P(1), P'(1), P''(1) as quadratics in a_0.
ScalingData scaling_quadratics(long n);

/// The larger root of P'(1) = 0 in Q(sqrt(disc)).
QuadExtNumber compute_a0(long n);

QuadExtNumber eval_quadratic(const QuadraticPoly& p, const QuadExtNumber& x);

/// Exact signs of (P(1), P'(1), P''(1)) at a_0; passes iff (-, 0, +).
VerificationReport verify_delta_direction(long n);

struct HessianMatrices {
    int pi_half_power = 0;
    // index [q][q'], q, q' = 0..4
    std::array<std::array<Rational, 5>, 5> mI, mII1, mII2, mIII1, mIII2, mIV;
};

HessianMatrices hessian_matrices(long n);

struct HessianSums {
    Rational disc;
    QuadExtNumber total;  // sum (m^1 + m^2) a_q a_{q'}
    QuadExtNumber m2;     // sum m^2 a_q a_{q'}
};

/// The two scalar sums controlling positivity of the translation-direction
/// Hessian; both must be > 0.
HessianSums hessian_sums(long n);

VerificationReport verify_xi_direction(long n);

/// w-moment radial constants c_{w,1}..c_{w,6}(n, k+m), computed by the
/// symbolic radial kernel (no closed forms are consumed).
std::array<ScaledRational, 7> c6_wmoments(long n, long kpm);

/// m^{w,D,2} entry through the full c_w pipeline; equals -m^{D,2}/(k+m).
ScaledRational wmoment_d2_entry(long n, long q, long qp);

/// The eight identities cbar'_i = -((k+m)/2) cbar'_{w,i} hold exactly, while
/// the c-level analogue fails at i = 1.
VerificationReport verify_k_plus_m_relation(long n, long k, long m);

/// Matrix-level variational identity over the whole 5x5 block.
VerificationReport verify_w_matrix_relation(long n);

/// Sign of the 2x2 [a_0, 1] discriminant: positive iff n >= 52.
VerificationReport verify_n52_remark(long n);

/// Gamma(n/2-12) Gamma(n/2+3) / Gamma(n+1): positive, pi-homogeneous with the
/// Hessian entries.
ScaledRational gamma_prefactor(long n);

// Optional transcription cross-checks against the published tables; enabled by
// the CLI flag, never part of the primary computation path.
bool crosscheck_published_a0(long n);
bool crosscheck_published_hessian_sums(long n);

}  // namespace qcert
