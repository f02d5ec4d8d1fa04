#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohr {

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("TaylorSeries needs at least the constant coefficient");
    }
}

TaylorSeries TaylorSeries::zero(int order) {
    return TaylorSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TaylorSeries TaylorSeries::constant(Complex c, int order) {
    auto s = zero(order);
    s.coeff_ref(0) = c;
    return s;
}

TaylorSeries TaylorSeries::identity(int order) { return monomial(1, order); }

TaylorSeries TaylorSeries::monomial(int k, int order) {
    if (k < 0 || k > order) {
        throw DomainError("monomial degree outside the order budget");
    }
    auto s = zero(order);
    s.coeff_ref(k) = 1.0;
    return s;
}

TaylorSeries add(const TaylorSeries& s, const TaylorSeries& t) {
    const int k = std::min(s.order(), t.order());
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) out[static_cast<std::size_t>(n)] = s.coeff(n) + t.coeff(n);
    return TaylorSeries(std::move(out));
}

TaylorSeries sub(const TaylorSeries& s, const TaylorSeries& t) {
    const int k = std::min(s.order(), t.order());
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) out[static_cast<std::size_t>(n)] = s.coeff(n) - t.coeff(n);
    return TaylorSeries(std::move(out));
}

TaylorSeries mul(const TaylorSeries& s, const TaylorSeries& t) {
    const int k = std::min(s.order(), t.order());
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        const Complex si = s.coeff(i);
        if (si == 0.0) continue;
        for (int j = 0; i + j <= k; ++j) {
            out[static_cast<std::size_t>(i + j)] += si * t.coeff(j);
        }
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries scale(const TaylorSeries& s, Complex c) {
    std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
    for (auto& v : out) v *= c;
    return TaylorSeries(std::move(out));
}

TaylorSeries reciprocal(const TaylorSeries& s) {
    if (std::abs(s.coeff(0)) == 0.0) {
        throw ZeroLeadingCoefficient("reciprocal of a series with zero constant term");
    }
    const int k = s.order();
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    const Complex inv0 = 1.0 / s.coeff(0);
    out[0] = inv0;
    for (int n = 1; n <= k; ++n) {
        Complex acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += s.coeff(j) * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = -inv0 * acc;
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries div(const TaylorSeries& num, const TaylorSeries& den) {
    if (std::abs(den.coeff(0)) == 0.0) {
        throw ZeroLeadingCoefficient("division by a series with zero constant term");
    }
    const int k = std::min(num.order(), den.order());
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    const Complex inv0 = 1.0 / den.coeff(0);
    for (int n = 0; n <= k; ++n) {
        Complex acc = num.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = inv0 * acc;
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries symmetrize(const TaylorSeries& s, int p, int m) {
    if (p < 1 || m < 0 || m > p) {
        throw DomainError("symmetrize requires p >= 1 and 0 <= m <= p");
    }
    const int k = s.order();
    auto out = TaylorSeries::zero(p * k + m);
    for (int n = 0; n <= k; ++n) out.coeff_ref(p * n + m) = s.coeff(n);
    return out;
}

TaylorSeries derivative(const TaylorSeries& s) {
    const int k = s.order();
    if (k == 0) return TaylorSeries::zero(0);
    std::vector<Complex> out(static_cast<std::size_t>(k));
    for (int n = 1; n <= k; ++n) {
        out[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * s.coeff(n);
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries shift(const TaylorSeries& s, int k) {
    const int ord = s.order();
    auto out = TaylorSeries::zero(ord);
    for (int n = k; n <= ord; ++n) out.coeff_ref(n) = s.coeff(n - k);
    return out;
}

TaylorSeries mul_linear(const TaylorSeries& s, Complex c0, Complex c1) {
    const int ord = s.order();
    std::vector<Complex> out(static_cast<std::size_t>(ord) + 1);
    out[0] = c0 * s.coeff(0);
    for (int n = 1; n <= ord; ++n) {
        out[static_cast<std::size_t>(n)] = c0 * s.coeff(n) + c1 * s.coeff(n - 1);
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries div_one_minus_cz(const TaylorSeries& s, Complex w) {
    const int ord = s.order();
    std::vector<Complex> out(static_cast<std::size_t>(ord) + 1);
    out[0] = s.coeff(0);
    for (int n = 1; n <= ord; ++n) {
        out[static_cast<std::size_t>(n)] = s.coeff(n) + w * out[static_cast<std::size_t>(n - 1)];
    }
    return TaylorSeries(std::move(out));
}

EvalResult eval(const TaylorSeries& s, Complex z, double coeff_bound) {
    const double r = std::abs(z);
    if (r >= 1.0) {
        throw DomainError("eval requires |z| < 1");
    }
    const int k = s.order();
    Complex acc = s.coeff(k);
    for (int n = k - 1; n >= 0; --n) acc = acc * z + s.coeff(n);
    const double tail =
        coeff_bound == 0.0 ? 0.0 : coeff_bound * std::pow(r, k + 1) / (1.0 - r);
    return {acc, tail};
}

} // namespace bohr
