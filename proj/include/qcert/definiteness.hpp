#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcert/exactnum.hpp"
#include "qcert/rational.hpp"

namespace qcert {

enum class Definiteness {
    positive_definite,
    positive_semidefinite_singular,
    indefinite,
    negative_definite,
    negative_semidefinite_singular,
};

const char* definiteness_name(Definiteness d);

struct DefinitenessVerdict {
    Definiteness classification;
    long negative = 0;
    long zero = 0;
    long positive = 0;
    /// First k with leading principal minor Delta_k <= 0 (present iff not PD).
    std::optional<std::pair<long, Rational>> minor_witness;
    /// Isolating interval (lo, hi) with lo < hi <= 0 containing a negative
    /// eigenvalue (present iff negative > 0).
    std::optional<std::pair<Rational, Rational>> negative_root_interval;

    bool positive_definite() const { return classification == Definiteness::positive_definite; }
};

/// Exact classification. Primary path: characteristic polynomial
/// (Faddeev-LeVerrier) + Sturm sign-change counts with squarefree
/// multiplicities. Redundant path: Sylvester leading principal minors (and,
/// when all are nonzero, Jacobi's inertia rule). Disagreement between the two
/// paths aborts via internal_check_error.
DefinitenessVerdict classify(const SymMatrix& M);

struct FloatSanity {
    bool agreed = true;
    bool abstained = false;
};

/// Double-precision Jacobi eigensolve on the rescaled matrix; compares strict
/// sign counts with the exact verdict when every normalized float eigenvalue
/// exceeds 1e-6 in magnitude, abstains otherwise. Never overrides the exact path.
FloatSanity float_sanity(const SymMatrix& M);

// ---- exposed internals (exercised directly by the test suites) ----

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

/// Monic det(xI - M).
Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& m);

struct SignCounts {
    long negative = 0;
    long zero = 0;
    long positive = 0;
};

/// Root sign counts (with multiplicity) of a polynomial with all-real roots.
SignCounts real_root_sign_counts(const Poly& p);

/// Distinct real roots of squarefree f in the half-open interval (a, b].
long sturm_count_interval(const Poly& f, const Rational& a, const Rational& b);

}  // namespace qcert
