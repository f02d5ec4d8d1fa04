#include "bohr/bounds.hpp"

#include <cmath>

namespace bohr {

double lemma1_rhs(double a0, double r) {
    if (!(a0 >= 0.0 && a0 < 1.0 && r >= 0.0 && r < 1.0)) {
        throw DomainError("lemma1_rhs requires a0, r in [0,1)");
    }
    if (a0 >= r) return r * (1.0 - a0 * a0) / (1.0 - r * a0);
    return r * std::sqrt(1.0 - a0 * a0) / std::sqrt(1.0 - r * r);
}

double lemma2_rhs(double a0, double r) {
    if (!(a0 >= 0.0 && a0 < 1.0 && r >= 0.0)) {
        throw DomainError("lemma2_rhs requires a0 in [0,1), r >= 0");
    }
    if (r > 1.0 / std::sqrt(2.0)) {
        throw DomainError("lemma2_rhs bound is only asserted for r <= 1/sqrt(2)");
    }
    const double gap = 1.0 - a0 * a0;
    const double den = 1.0 - a0 * a0 * r * r;
    return r * r * gap * gap / (den * den);
}

Lemma3Report lemma3_check(const SchurFunction& f, int n) {
    if (n < 0 || 2 * n + 1 > f.series.order()) {
        throw DomainError("lemma3_check requires 0 <= n with 2n+1 <= order");
    }
    const double a0 = f.head_modulus();
    double square_head = 0.0; // |a_0|^2 + ... + |a_{n-1}|^2
    for (int k = 0; k < n; ++k) square_head += std::norm(f.series.coeff(k));
    const double an_sq = std::norm(f.series.coeff(n));

    Lemma3Report rep;
    rep.part_a = LemmaReport::compare(
        ValueInterval::exact(std::abs(f.series.coeff(2 * n + 1))),
        ValueInterval::exact(1.0 - square_head - an_sq));
    if (n >= 1) {
        rep.part_b = LemmaReport::compare(
            ValueInterval::exact(std::abs(f.series.coeff(2 * n))),
            ValueInterval::exact(1.0 - square_head - an_sq / (1.0 + a0)));
    }
    return rep;
}

LemmaReport lemma4_sides(const SchurFunction& f, double r, int N) {
    if (N < 1) throw DomainError("lemma4_sides requires N >= 1");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("lemma4_sides requires r in [0,1)");
    const int order = f.series.order();
    const double a0 = f.head_modulus();
    const double gap = 1.0 - a0 * a0;
    const int t = (N - 1) / 2;

    double head_sum = 0.0;
    {
        double rn = std::pow(r, N);
        for (int n = N; n <= order; ++n) {
            head_sum += std::abs(f.series.coeff(n)) * rn;
            rn *= r;
        }
    }
    const double head_tail = modulus_tail(gap, r, std::max(N, order + 1));

    double middle = 0.0;
    double middle_tail = 0.0;
    if (t >= 1) {
        double sq = 0.0;
        for (int n = 1; n <= std::min(t, order); ++n) sq += std::norm(f.series.coeff(n));
        middle = sq * std::pow(r, N) / (1.0 - r);
        if (t > order) {
            middle_tail = (t - order) * gap * gap * std::pow(r, N) / (1.0 - r);
        }
    }

    const double factor = 1.0 / (1.0 + a0) + r / (1.0 - r);
    double quad = 0.0;
    {
        const double r2 = r * r;
        double rn = std::pow(r2, t + 1);
        for (int n = t + 1; n <= order; ++n) {
            quad += std::norm(f.series.coeff(n)) * rn;
            rn *= r2;
        }
    }
    const double quad_tail = square_tail(gap, r, std::max(t + 1, order + 1));

    const ValueInterval lhs{head_sum + middle + factor * quad,
                            head_sum + head_tail + middle + middle_tail +
                                factor * (quad + quad_tail)};
    const ValueInterval rhs = ValueInterval::exact(gap * std::pow(r, N) / (1.0 - r));
    return LemmaReport::compare(lhs, rhs);
}

double schwarz_pick_value(double a0, double r) {
    if (!(a0 >= 0.0 && a0 < 1.0 && r >= 0.0 && r < 1.0)) {
        throw DomainError("schwarz_pick_value requires a0, r in [0,1)");
    }
    return (r + a0) / (1.0 + r * a0);
}

double schwarz_pick_derivative_bound(double w, double r) {
    return (1.0 - w * w) / (1.0 - r * r);
}

double modulus_tail(double head_gap, double r, int start) {
    if (r == 0.0) return 0.0;
    return head_gap * std::pow(r, start) / (1.0 - r);
}

double square_tail(double head_gap, double r, int start) {
    if (r == 0.0) return 0.0;
    const double x = r * r;
    return head_gap * head_gap * std::pow(x, start) / (1.0 - x);
}

double area_tail(double head_gap, double r, int start) {
    if (r == 0.0) return 0.0;
    const double x = r * r;
    const double den = (1.0 - x) * (1.0 - x);
    return head_gap * head_gap * std::pow(x, start) *
           (start - (start - 1) * x) / den;
}

double derivative_tail(double head_gap, double r, int start) {
    if (r == 0.0) return 0.0;
    const double den = (1.0 - r) * (1.0 - r);
    return head_gap * std::pow(r, start) * ((start + 1) - start * r) / den;
}

} // namespace bohr
