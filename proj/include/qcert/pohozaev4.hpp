#pragma once

#include <optional>
#include <vector>

#include "qcert/exactnum.hpp"
#include "qcert/report.hpp"

namespace qcert {

enum class Family { D, W, H };

const char* family_name(Family f);

/// N0 scale applied to the logarithmic-branch entries (k+m equals the
/// critical degree), exactly 10^10 as an integer.
extern const Rational kLogBranchScale;

struct FamilySpec4 {
    Family family;
    long n = 0;
    long s = 0;
};

struct CoeffSet4 {
    Rational c1, c2, c3, c4;
};

CoeffSet4 coeffs_q4(long n, long k, long m);

long d_value_q4(long n);                                  // floor((n-4)/2)
std::pair<long, long> s_range_q4(Family f, long n);       // inclusive
std::pair<long, long> q_range_q4(Family f, long n, long s);  // inclusive

/// The exact quadratic-form matrix for one (family, n, s) block of the
/// fourth-order problem, N0-scaled on the logarithmic branch.
SymMatrix matrix_q4(const FamilySpec4& spec);

/// Expected-vs-actual definiteness reports over a dimension range; the
/// expectation table is data, so a claim-contradicting matrix is a first-class
/// failed report rather than an exception.
std::vector<VerificationReport> scan_q4(long n_lo, long n_hi, const std::vector<Family>& families,
                                        std::optional<long> s_filter, int jobs = 1);

/// Definiteness claimed in the source material, when any (true = PD).
std::optional<bool> expected_q4(Family f, long n, long s);

}  // namespace qcert
