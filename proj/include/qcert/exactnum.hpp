#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/rational.hpp"

namespace qcert {

/// Exact scalar c * pi^(h/2) with c rational and h a nonnegative integer.
///
/// Powers of pi are tracked in units of sqrt(pi) because Gamma at half-integer
/// arguments introduces one such factor at a time. Addition is defined only
/// between values of equal h; mixing is a homogeneity_error, not a coercion.
class ScaledRational {
public:
    ScaledRational() : coeff_(0), h_(0) {}
    ScaledRational(Rational c, int pi_half_power) : coeff_(std::move(c)), h_(pi_half_power) {
        if (h_ < 0) throw domain_error("negative pi power");
        if (coeff_ == 0) h_ = 0;  // canonical zero
    }
    explicit ScaledRational(Rational c) : ScaledRational(std::move(c), 0) {}
    explicit ScaledRational(long c) : ScaledRational(Rational(c), 0) {}

    const Rational& coeff() const { return coeff_; }
    int pi_half_power() const { return h_; }
    bool is_zero() const { return coeff_ == 0; }
    int sign() const { return sign_of(coeff_); }

    ScaledRational operator-() const { return ScaledRational(-coeff_, h_); }

    friend ScaledRational operator+(const ScaledRational& x, const ScaledRational& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.h_ != y.h_)
            throw homogeneity_error("adding pi^(" + std::to_string(x.h_) + "/2) to pi^(" +
                                    std::to_string(y.h_) + "/2) term");
        return ScaledRational(x.coeff_ + y.coeff_, x.h_);
    }
    friend ScaledRational operator-(const ScaledRational& x, const ScaledRational& y) {
        return x + (-y);
    }
    friend ScaledRational operator*(const ScaledRational& x, const ScaledRational& y) {
        if (x.is_zero() || y.is_zero()) return ScaledRational();
        return ScaledRational(x.coeff_ * y.coeff_, x.h_ + y.h_);
    }
    friend ScaledRational operator*(const Rational& c, const ScaledRational& x) {
        return ScaledRational(c * x.coeff_, x.h_);
    }
    friend ScaledRational operator*(const ScaledRational& x, const Rational& c) { return c * x; }

    /// Exact quotient; the pi power must not go negative.
    friend ScaledRational operator/(const ScaledRational& x, const ScaledRational& y) {
        if (y.is_zero()) throw domain_error("division by zero");
        if (x.is_zero()) return ScaledRational();
        if (x.h_ < y.h_) throw homogeneity_error("quotient would carry a negative pi power");
        return ScaledRational(x.coeff_ / y.coeff_, x.h_ - y.h_);
    }

    ScaledRational& operator+=(const ScaledRational& y) { return *this = *this + y; }
    ScaledRational& operator-=(const ScaledRational& y) { return *this = *this - y; }
    ScaledRational& operator*=(const ScaledRational& y) { return *this = *this * y; }

    friend bool operator==(const ScaledRational& x, const ScaledRational& y) {
        return x.h_ == y.h_ && x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const ScaledRational& x, const ScaledRational& y) { return !(x == y); }

    double to_double() const;
    std::string str() const;

private:
    Rational coeff_;
    int h_;
};

/// Gamma(twice_x / 2) for twice_x >= 1. Integer arguments give (m-1)! with
/// h = 0; half-integer arguments give a rational multiple of sqrt(pi) (h = 1).
ScaledRational gamma_half(long twice_x);

/// a + b*sqrt(D) with a, b, D rational and D > 0 fixed per context.
class QuadExtNumber {
public:
    QuadExtNumber(Rational a, Rational b, Rational D)
        : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
        if (sign_of(D_) <= 0) throw domain_error("quadratic extension needs D > 0");
    }
    explicit QuadExtNumber(Rational a, const Rational& D) : QuadExtNumber(std::move(a), Rational(0), D) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& D() const { return D_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExtNumber conj() const { return QuadExtNumber(a_, -b_, D_); }
    QuadExtNumber operator-() const { return QuadExtNumber(-a_, -b_, D_); }

    friend QuadExtNumber operator+(const QuadExtNumber& x, const QuadExtNumber& y) {
        x.require_same_context(y);
        return QuadExtNumber(x.a_ + y.a_, x.b_ + y.b_, x.D_);
    }
    friend QuadExtNumber operator-(const QuadExtNumber& x, const QuadExtNumber& y) {
        x.require_same_context(y);
        return QuadExtNumber(x.a_ - y.a_, x.b_ - y.b_, x.D_);
    }
    friend QuadExtNumber operator*(const QuadExtNumber& x, const QuadExtNumber& y) {
        x.require_same_context(y);
        return QuadExtNumber(x.a_ * y.a_ + x.b_ * y.b_ * x.D_, x.a_ * y.b_ + x.b_ * y.a_, x.D_);
    }
    friend QuadExtNumber operator*(const Rational& c, const QuadExtNumber& x) {
        return QuadExtNumber(c * x.a_, c * x.b_, x.D_);
    }
    QuadExtNumber& operator+=(const QuadExtNumber& y) { return *this = *this + y; }

    friend bool operator==(const QuadExtNumber& x, const QuadExtNumber& y) {
        x.require_same_context(y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Exact sign of a + b*sqrt(D), decided by rational comparisons only.
    int sign() const;

    std::string str() const;

private:
    void require_same_context(const QuadExtNumber& y) const {
        if (D_ != y.D_) throw domain_error("mixing quadratic extensions with different radicands");
    }
    Rational a_, b_, D_;
};

int quadext_sign(const QuadExtNumber& v);

/// Exactly symmetric matrix over ScaledRational. All nonzero entries must
/// share one pi_half_power; rational_part() strips it for definiteness work.
class SymMatrix {
public:
    explicit SymMatrix(std::vector<std::vector<ScaledRational>> entries);

    static SymMatrix diagonal(const std::vector<ScaledRational>& diag);

    long dim() const { return static_cast<long>(e_.size()); }
    const ScaledRational& at(long i, long j) const { return e_[i][j]; }

    /// Common pi_half_power of the nonzero entries (0 for the zero matrix).
    int common_pi_half_power() const;

    std::vector<std::vector<Rational>> rational_part() const;

    SymMatrix scaled(const Rational& c) const;
    SymMatrix permuted(const std::vector<long>& perm) const;

private:
    std::vector<std::vector<ScaledRational>> e_;
};

}  // namespace qcert
