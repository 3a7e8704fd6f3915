// Published closed-form data for the non-compactness construction: the
// (A1 + sqrt(A2))/A3 expression for a_0 and the two assembled Hessian sums.
// These feed the optional transcription cross-checks only; the primary path
// computes everything from the coefficient pipeline.

#include <initializer_list>

#include "qcert/noncompact.hpp"

namespace qcert {

namespace {

Integer I(const char* digits) { return Integer(digits); }

// Horner evaluation; coefficients listed from the highest power down.
Integer eval_poly(long n, std::initializer_list<Integer> coeffs) {
    Integer acc(0);
    for (const Integer& c : coeffs) acc = acc * n + c;
    return acc;
}

Integer eval_factors(long n, std::initializer_list<long> roots) {
    Integer acc(1);
    for (long r : roots) acc *= (n - r);
    return acc;
}

Integer table_a1(long n) {
    return eval_factors(n, {26, 24, 22, 20, -4}) *
           eval_poly(n, {I("11991"), I("-852294"), I("24029888"), I("-334408272"),
                         I("2238186992"), I("-4359884256"), I("-20759728000"), I("78857215488"),
                         I("8339503104"), I("-124262055936")});
}

Integer table_a2(long n) {
    return eval_factors(n, {26, 24, 22, 20, -4}) *
           eval_poly(n, {I("10989225"),
                         I("-2987756460"),
                         I("378031055952"),
                         I("-29507030164560"),
                         I("1587504902043088"),
                         I("-62286471762681984"),
                         I("1838499343113943552"),
                         I("-41499228022465995264"),
                         I("720749814386841727744"),
                         I("-9608374930260373355520"),
                         I("97259447027246828171264"),
                         I("-732525312300365433016320"),
                         I("3980505368562305038315520"),
                         I("-15065834669595927057334272"),
                         I("40459950924707392220168192"),
                         I("-103397876171264024797249536"),
                         I("339819087637723673505300480"),
                         I("-740098364899745956009869312"),
                         I("-394627146196739293779591168"),
                         I("4735360453239104195348398080"),
                         I("-3600382007256808416243351552"),
                         I("-13598394732655532252847931392"),
                         I("27513309069085642550126051328"),
                         I("-15449764981452555902999592960")});
}

Integer table_a3(long n) {
    return eval_factors(n, {26, 24, 22, 20, 18, 16, 14, 12, 4, 2}) *
           eval_poly(n, {I("3"), I("-24"), I("-4"), I("208"), I("384")});
}

// Brackets of the two Hessian sums, as quadratics/linear polynomials in a_0.
Integer xi_total_quad(long n) {
    return Integer(96) * eval_factors(n, {24, 22, 20, 18, 16, 14, 12, 10, 3, 2, 2});
}

Integer xi_total_lin(long n) {
    return eval_factors(n, {24, 22, 20, 18, 2}) *
           eval_poly(n, {I("16575"), I("-1195250"), I("34609680"), I("-498405392"),
                         I("3446826416"), I("-6825460384"), I("-32854222976"),
                         I("140880911360"), I("-106071106560"), I("18351046656")});
}

Integer xi_total_const(long n) {
    return eval_poly(n, {I("-62587200"),
                         I("9336113958"),
                         I("-606097935636"),
                         I("22249394723672"),
                         I("-498762775048144"),
                         I("6750998185878816"),
                         I("-47179375607237312"),
                         I("11091250449666688"),
                         I("2371218672260016384"),
                         I("-14692080003168780288"),
                         I("16691759536983257088"),
                         I("91210104770428968960"),
                         I("-251248956860387328000"),
                         I("196206255022978105344"),
                         I("-29818376183737221120")});
}

Integer xi_m2_lin(long n) {
    return eval_factors(n, {24, 22, 20, 18, 2}) *
           eval_poly(n, {I("3315"), I("-210762"), I("5346128"), I("-67844560"), I("431303152"),
                         I("-1014186016"), I("-2114580096"), I("14491618304"), I("-18999469056"),
                         I("4521295872")});
}

Integer xi_m2_const(long n) {
    return eval_poly(n, {I("-9586980"),
                         I("1357155654"),
                         I("-82964460564"),
                         I("2837453335768"),
                         I("-58221379164240"),
                         I("692018215328032"),
                         I("-3505745916586176"),
                         I("-18173061039999360"),
                         I("375084465957971200"),
                         I("-1981203034836353024"),
                         I("2356795745930203136"),
                         I("11804945493335236608"),
                         I("-35984415983967043584"),
                         I("27690912838249611264"),
                         I("-1017973919522488320")});
}

}  // namespace

bool crosscheck_published_a0(long n) {
    const QuadExtNumber a0 = compute_a0(n);
    const Rational a1(table_a1(n)), a2(table_a2(n)), a3(table_a3(n));
    if (sign_of(a2) <= 0 || a3 == 0) return false;
    // a0 == (A1 + sqrt(A2))/A3  <=>  y := A3 a0 - A1 satisfies y >= 0, y^2 = A2.
    const QuadExtNumber y = a3 * a0 - QuadExtNumber(a1, a0.D());
    if (y.sign() < 0) return false;
    const QuadExtNumber y2 = y * y;
    return y2.is_rational() && y2.a() == a2;
}

bool crosscheck_published_hessian_sums(long n) {
    const HessianMatrices hm = hessian_matrices(n);
    const HessianSums hs = hessian_sums(n);
    const QuadExtNumber a0 = compute_a0(n);
    const ScaledRational gamma_ratio = gamma_prefactor(n);
    if (gamma_ratio.pi_half_power() != hm.pi_half_power) return false;
    const Rational pref = Rational((n - 6) * (n - 6)) /
                          Rational(Integer(1024) * (n - 2) * (n + 2) * (n + 4)) *
                          gamma_ratio.coeff();

    const QuadExtNumber total_pub =
        pref * (Rational(xi_total_quad(n)) * (a0 * a0) + Rational(xi_total_lin(n)) * a0 +
                QuadExtNumber(Rational(xi_total_const(n)), a0.D()));
    const QuadExtNumber m2_pub =
        pref * (Rational(xi_m2_lin(n)) * a0 + QuadExtNumber(Rational(xi_m2_const(n)), a0.D()));
    return hs.total == total_pub && hs.m2 == m2_pub;
}

}  // namespace qcert
