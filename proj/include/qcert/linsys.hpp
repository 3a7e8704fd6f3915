#pragma once

#include <vector>

#include "qcert/report.hpp"
#include "qcert/rational.hpp"

namespace qcert {

/// Problem order: 2 is the classical (Yamabe) linearization, 4 and 6 the
/// fourth- and sixth-order ones. Orders 2 and 4 share one admissible grid;
/// order 6 shifts it by two.
enum class Order : int { two = 2, four = 4, six = 6 };

struct ProblemIndex {
    Order order;
    long n = 0;
    long k = 0;
    long s = 0;

    long gamma_count() const { return s + 3; }
    long rhs_count() const;
    bool admissible() const;
    void validate() const;  // throws domain_error when not admissible
};

enum class RhsVariant { plain, primed };

/// Right-hand-side vector b (or b') of the linearized system. The formulas
/// are 1-based; returned 0-based with entries b[0] = b_1 = 0, b[1] = b_2 = 0.
std::vector<Rational> rhs_vector(const ProblemIndex& idx, RhsVariant variant);

/// Dense storage for the banded system matrix A (rows x cols).
struct SystemMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<std::vector<Rational>> a;
    const Rational& at(long i, long j) const { return a[i][j]; }
};

SystemMatrix system_matrix(const ProblemIndex& idx);

struct GammaSolution {
    ProblemIndex idx;
    std::vector<Rational> gamma;  // gamma[0] = Gamma_1, ..., gamma[s+2] = Gamma_{s+3}
};

/// Back-substitution from Gamma_{s+3} downward, mirroring the explicit solve.
/// A zero pivot raises degeneracy_error with its position.
GammaSolution solve_gamma(const ProblemIndex& idx);

std::vector<Rational> residual(const SystemMatrix& A, const std::vector<Rational>& gamma,
                               const std::vector<Rational>& b);

/// Residuals of the four closed-form recurrence families the solution must
/// satisfy; all must be exactly zero.
std::vector<Rational> recurrence_residuals(const ProblemIndex& idx,
                                           const std::vector<Rational>& gamma);

/// Full certificate for one index: A*Gamma - b = 0 in every row including the
/// overdetermined one(s), plus the recurrence residuals.
VerificationReport certify_cancellation(const ProblemIndex& idx);

/// Same certificate, but with the right-hand side replaced by an arbitrary
/// vector (fault-injection hook; the solution is still computed from the
/// stated back-substitution rows).
VerificationReport certify_cancellation_with_rhs(const ProblemIndex& idx,
                                                 const std::vector<Rational>& b);

/// Gamma^(2) = Gamma^(4) = Gamma^(6) entrywise on the common grid.
bool check_cross_order(long n, long k, long s);

}  // namespace qcert
