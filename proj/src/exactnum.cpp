#include "qcert/exactnum.hpp"

#include <cmath>
#include <sstream>

namespace qcert {

double ScaledRational::to_double() const {
    return coeff_.get_d() * std::pow(std::acos(-1.0), h_ / 2.0);
}

std::string ScaledRational::str() const {
    std::string s = to_string(coeff_);
    if (h_ == 0 || coeff_ == 0) return s;
    if (h_ % 2 == 0)
        return s + "*pi" + (h_ == 2 ? std::string() : "^" + std::to_string(h_ / 2));
    return s + "*pi^(" + std::to_string(h_) + "/2)";
}

ScaledRational gamma_half(long twice_x) {
    if (twice_x <= 0) throw domain_error("gamma_half needs a positive argument");
    if (twice_x % 2 == 0) {
        long m = twice_x / 2;  // Gamma(m) = (m-1)!
        return ScaledRational(Rational(factorial(m - 1)), 0);
    }
    // Gamma(1/2) = sqrt(pi); climb with Gamma(x+1) = x Gamma(x).
    Rational c(1);
    for (long t = 1; t < twice_x; t += 2) c *= rat(t, 2);
    return ScaledRational(c, 1);
}

int QuadExtNumber::sign() const {
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 D.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * D_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

std::string QuadExtNumber::str() const {
    std::ostringstream os;
    os << to_string(a_);
    if (b_ != 0) os << (sign_of(b_) > 0 ? " + " : " - ") << to_string(abs(b_)) << "*sqrt(" << to_string(D_) << ")";
    return os.str();
}

int quadext_sign(const QuadExtNumber& v) { return v.sign(); }

SymMatrix::SymMatrix(std::vector<std::vector<ScaledRational>> entries) : e_(std::move(entries)) {
    const long d = static_cast<long>(e_.size());
    if (d == 0) throw domain_error("empty matrix");
    for (long i = 0; i < d; ++i)
        if (static_cast<long>(e_[i].size()) != d) throw domain_error("matrix is not square");
    for (long i = 0; i < d; ++i)
        for (long j = i + 1; j < d; ++j)
            if (e_[i][j] != e_[j][i])
                throw domain_error("matrix is not exactly symmetric at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
    common_pi_half_power();  // reject mixed pi powers up front
}

SymMatrix SymMatrix::diagonal(const std::vector<ScaledRational>& diag) {
    const long d = static_cast<long>(diag.size());
    std::vector<std::vector<ScaledRational>> e(d, std::vector<ScaledRational>(d));
    for (long i = 0; i < d; ++i) e[i][i] = diag[i];
    return SymMatrix(std::move(e));
}

int SymMatrix::common_pi_half_power() const {
    std::optional<int> h;
    for (const auto& row : e_)
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            if (!h) h = x.pi_half_power();
            else if (*h != x.pi_half_power())
                throw homogeneity_error("matrix entries carry mixed pi powers");
        }
    return h.value_or(0);
}

std::vector<std::vector<Rational>> SymMatrix::rational_part() const {
    std::vector<std::vector<Rational>> m(e_.size(), std::vector<Rational>(e_.size()));
    for (size_t i = 0; i < e_.size(); ++i)
        for (size_t j = 0; j < e_.size(); ++j) m[i][j] = e_[i][j].coeff();
    return m;
}

SymMatrix SymMatrix::scaled(const Rational& c) const {
    auto e = e_;
    for (auto& row : e)
        for (auto& x : row) x = c * x;
    return SymMatrix(std::move(e));
}

SymMatrix SymMatrix::permuted(const std::vector<long>& perm) const {
    const long d = dim();
    std::vector<std::vector<ScaledRational>> e(d, std::vector<ScaledRational>(d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) e[i][j] = e_[perm[i]][perm[j]];
    return SymMatrix(std::move(e));
}

}  // namespace qcert
