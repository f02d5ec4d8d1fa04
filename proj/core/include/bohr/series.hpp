#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

using Complex = std::complex<double>;

/// Default truncation degree.  With coefficients bounded by 1 and r <= 0.5
/// the geometric tails fall below 1e-70, far under every test tolerance.
inline constexpr int kDefaultOrder = 256;

/// Truncated complex power series c_0 + c_1 z + ... + c_K z^K with explicit
/// order K.  Arithmetic truncates eagerly to the minimum order of the inputs,
/// which fixes memory and keeps the tail bookkeeping uniform.
class TaylorSeries {
public:
    explicit TaylorSeries(std::vector<Complex> coeffs);

    static TaylorSeries zero(int order);
    static TaylorSeries constant(Complex c, int order);
    /// The identity map z.
    static TaylorSeries identity(int order);
    /// The monomial z^k (k <= order).
    static TaylorSeries monomial(int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex& coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex& coeff_ref(int n) { return coeffs_[static_cast<std::size_t>(n)]; }

private:
    std::vector<Complex> coeffs_; // exactly order+1 entries
};

/// Coefficient-wise sum, truncated to the minimum input order.
TaylorSeries add(const TaylorSeries& s, const TaylorSeries& t);
TaylorSeries sub(const TaylorSeries& s, const TaylorSeries& t);

/// Cauchy product truncated to the minimum input order.
TaylorSeries mul(const TaylorSeries& s, const TaylorSeries& t);

TaylorSeries scale(const TaylorSeries& s, Complex c);

/// Multiplicative inverse up to order; requires |c_0| > 0.
/// Throws ZeroLeadingCoefficient otherwise.
TaylorSeries reciprocal(const TaylorSeries& s);

/// num/den up to min order via the long-division recurrence; |den_0| > 0.
TaylorSeries div(const TaylorSeries& num, const TaylorSeries& den);

/// z^m * s(z^p): places c_n at index p*n + m, zero elsewhere.  The result
/// order is p*order(s) + m so every input coefficient lands exactly.
TaylorSeries symmetrize(const TaylorSeries& s, int p, int m);

/// Term-wise derivative; order drops by one.
TaylorSeries derivative(const TaylorSeries& s);

/// Multiply by z^k within the same order budget (high coefficients drop off).
TaylorSeries shift(const TaylorSeries& s, int k);

/// Multiply by the linear factor (c0 + c1*z) within the same order budget.
TaylorSeries mul_linear(const TaylorSeries& s, Complex c0, Complex c1);

/// Divide by (1 - w*z) via the one-pass recurrence t_n = s_n + w*t_{n-1}.
TaylorSeries div_one_minus_cz(const TaylorSeries& s, Complex w);

inline TaylorSeries operator+(const TaylorSeries& s, const TaylorSeries& t) { return add(s, t); }
inline TaylorSeries operator-(const TaylorSeries& s, const TaylorSeries& t) { return sub(s, t); }
inline TaylorSeries operator*(const TaylorSeries& s, const TaylorSeries& t) { return mul(s, t); }

struct EvalResult {
    Complex value;  // Horner evaluation of the truncated polynomial
    double tail;    // rigorous bound on the discarded remainder
};

/// Horner evaluation at |z| < 1.  The attached tail bound is
/// coeff_bound * |z|^{K+1} / (1 - |z|), valid when |c_n| <= coeff_bound for
/// all n > K (pass 0 for an exact polynomial).
EvalResult eval(const TaylorSeries& s, Complex z, double coeff_bound);

} // namespace bohr
