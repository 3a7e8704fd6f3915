#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qcert/exactnum.hpp"
#include "qcert/rational.hpp"

namespace qcert {

/// Finite sum of terms c * r^i * (1+r^2)^(-a/2), the function class generated
/// by the bubbles w, Z and their radial derivatives. The exponent of (1+r^2)
/// is stored in half-integer units (a), since w carries (n-4)/2 or (n-6)/2.
class RadialExpr {
public:
    RadialExpr() = default;

    static RadialExpr term(const Rational& c, long r_power, long inv_half_power);
    /// (1+r^2)^(-a/2)
    static RadialExpr power_basis(long inv_half_power) { return term(Rational(1), 0, inv_half_power); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    RadialExpr operator-() const;
    friend RadialExpr operator+(const RadialExpr& f, const RadialExpr& g);
    friend RadialExpr operator-(const RadialExpr& f, const RadialExpr& g);
    friend RadialExpr operator*(const RadialExpr& f, const RadialExpr& g);
    friend RadialExpr operator*(const Rational& c, const RadialExpr& f);
    RadialExpr& operator+=(const RadialExpr& g) { return *this = *this + g; }

    friend bool operator==(const RadialExpr& f, const RadialExpr& g) { return f.terms_ == g.terms_; }

    /// d/dr, using d/dr (1+r^2)^(-a/2) = -a r (1+r^2)^(-(a+2)/2).
    RadialExpr derivative() const;

    /// Exact division by r^k; every term must have r_power >= k.
    RadialExpr div_r(long k = 1) const;

    /// Rewrite so every r_power is 0 or 1, folding r^2 = (1+r^2) - 1 into the
    /// (1+r^2) exponents. Needed when comparing against pure power-basis lists.
    RadialExpr fold_even_powers() const;

    /// Coefficient of r^{r_power} (1+r^2)^{-a/2}; zero if absent.
    Rational coefficient(long r_power, long inv_half_power) const;

    const std::map<std::pair<long, long>, Rational>& terms() const { return terms_; }

private:
    void add_term(long i, long a, const Rational& c);
    // key = (r_power, inv_half_power)
    std::map<std::pair<long, long>, Rational> terms_;
};

/// I^i_j = int_0^inf r^i (1+r^2)^(-j) dr, exact via (1/2) B((i+1)/2, j-(i+1)/2).
/// h = 0 for odd i, h = 2 (one factor of pi) for even i.
ScaledRational moment_integral(long i, long j);

inline bool moment_converges(long i, long j) { return i - 2 * j < -1; }

/// Laplacian of f * p for p harmonic of degree b, reduced to the radial factor:
/// f'' + (n-1+2b) f'/r.
RadialExpr shifted_laplacian(const RadialExpr& f, long n, long b);

/// Exact integral sum over terms of coeff * I^{i+extra}_{a/2}. Every term must
/// converge on its own and the exponent a must be even.
ScaledRational integrate_moment(const RadialExpr& f, long extra_r_power);

/// The two index-reduction recurrences for the moment integrals plus the two
/// derived identities at (n, l); identities whose members would need a negative
/// exponent are skipped, a divergent member raises convergence_error.
bool check_moment_recurrences(long n, long l);

/// w(r) = (1+r^2)^(-(n-order)/2) for order in {4, 6} (the normalized bubble
/// without the constant factor), and order 2 for the Yamabe analogue.
RadialExpr bubble_w(long n, int order);

/// Z(r) = r w'(r) + ((n-order)/2) w(r).
RadialExpr bubble_Z(long n, int order);

}  // namespace qcert
