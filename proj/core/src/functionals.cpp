#include "bohr/functionals.hpp"

#include <cmath>

namespace bohr {

namespace {

double head_gap(const SchurFunction& f) {
    const double a0 = f.head_modulus();
    return 1.0 - a0 * a0;
}

ValueInterval modulus_from_eval(Complex value, double tail) {
    const double m = std::abs(value);
    return {std::max(m - tail, 0.0), m + tail};
}

} // namespace

ValueInterval point_modulus(const SchurFunction& f, Complex z) {
    const auto ev = eval(f.series, z, 1.0);
    return modulus_from_eval(ev.value, ev.tail);
}

ValueInterval point_distance(const SchurFunction& f, Complex z) {
    const auto ev = eval(f.series, z, 1.0);
    return modulus_from_eval(ev.value - f.head, ev.tail);
}

ValueInterval point_derivative(const SchurFunction& f, Complex z) {
    const auto fd = derivative(f.series);
    const auto ev = eval(fd, z, 0.0);
    const double tail = derivative_tail(head_gap(f), std::abs(z), f.series.order());
    return modulus_from_eval(ev.value, tail);
}

ValueInterval bohr_sum(const SchurFunction& f, double r, int start) {
    if (start < 0) throw DomainError("bohr_sum requires start >= 0");
    const int order = f.series.order();
    double sum = 0.0;
    double rn = std::pow(r, start);
    for (int n = start; n <= order; ++n) {
        sum += std::abs(f.series.coeff(n)) * rn;
        rn *= r;
    }
    const double tail = modulus_tail(head_gap(f), r, std::max(start, order + 1));
    return ValueInterval::with_tail(sum, tail);
}

ValueInterval refined_tail(const SchurFunction& f, double r, int t) {
    if (t < 0) throw DomainError("refined_tail requires t >= 0");
    const int order = f.series.order();
    const double a0 = f.head_modulus();
    const double factor = 1.0 / (1.0 + a0) + r / (1.0 - r);
    const double r2 = r * r;
    double sum = 0.0;
    double rn = std::pow(r2, t + 1);
    for (int n = t + 1; n <= order; ++n) {
        sum += std::norm(f.series.coeff(n)) * rn;
        rn *= r2;
    }
    const double tail = square_tail(head_gap(f), r, std::max(t + 1, order + 1));
    return {factor * sum, factor * (sum + tail)};
}

ValueInterval refined_bohr(const SchurFunction& f, double r, Head head) {
    const double a0 = f.head_modulus();
    const double head_val = head == Head::Modulus ? a0 : a0 * a0;
    return head_val + bohr_sum(f, r, 1) + refined_tail(f, r, 0);
}

ValueInterval rogosinski(const SchurFunction& f, Complex z, int N, int head_power) {
    if (N < 1) throw DomainError("rogosinski requires N >= 1");
    const double r = std::abs(z);
    const int t = (N - 1) / 2;
    ValueInterval acc = pow_head(point_modulus(f, z), head_power);
    acc += bohr_sum(f, r, N);
    if (t >= 1) {
        const int order = f.series.order();
        double sq = 0.0;
        for (int n = 1; n <= std::min(t, order); ++n) {
            sq += std::norm(f.series.coeff(n));
        }
        const double scale = std::pow(r, N) / (1.0 - r);
        acc += sq * scale;
        if (t > order) {
            // Unseen middle coefficients: each |a_n|^2 <= (1-|a0|^2)^2.
            const double gap = head_gap(f);
            acc.upper += (t - order) * gap * gap * scale;
        }
    }
    acc += refined_tail(f, r, t);
    return acc;
}

ValueInterval symmetric_refined(const SchurFunction& g, int p, int m, double r, Head head) {
    if (p < 1 || m < 0 || m > p) {
        throw DomainError("symmetric_refined requires p >= 1 and 0 <= m <= p");
    }
    if (head == Head::Square && m != 0) {
        throw DomainError("square head is only defined for m = 0");
    }
    const int order = g.series.order();
    const double b0 = g.head_modulus();
    const double gap = 1.0 - b0 * b0;
    const double rho = std::pow(r, p);
    const double rm = std::pow(r, m);

    double lin = head == Head::Modulus ? b0 : b0 * b0;
    {
        double rn = rho;
        for (int n = 1; n <= order; ++n) {
            lin += std::abs(g.series.coeff(n)) * rn;
            rn *= rho;
        }
    }
    const double lin_tail = modulus_tail(gap, rho, order + 1);

    const double factor = 1.0 / (1.0 + b0) + rho / (1.0 - rho);
    const double rho2 = rho * rho;
    double quad = 0.0;
    {
        double rn = rho2;
        for (int n = 1; n <= order; ++n) {
            quad += std::norm(g.series.coeff(n)) * rn;
            rn *= rho2;
        }
    }
    const double quad_tail = square_tail(gap, rho, order + 1);

    return {rm * (lin + factor * quad),
            rm * (lin + lin_tail + factor * (quad + quad_tail))};
}

ValueInterval symmetric_bohr_sum(const SchurFunction& g, int p, int m, double r) {
    if (p < 1 || m < 0 || m > p) {
        throw DomainError("symmetric_bohr_sum requires p >= 1 and 0 <= m <= p");
    }
    const int order = g.series.order();
    const double rho = std::pow(r, p);
    const double rm = std::pow(r, m);
    double sum = 0.0;
    double rn = 1.0;
    for (int n = 0; n <= order; ++n) {
        sum += std::abs(g.series.coeff(n)) * rn;
        rn *= rho;
    }
    const double b0 = g.head_modulus();
    const double tail = modulus_tail(1.0 - b0 * b0, rho, order + 1);
    return {rm * sum, rm * (sum + tail)};
}

ValueInterval cor2_functional(const SchurFunction& g, int p, double r, InnerStart start) {
    if (p < 1) throw DomainError("cor2_functional requires p >= 1");
    const int order = g.series.order();
    const double b0 = g.head_modulus();
    const double gap = 1.0 - b0 * b0;
    const double rho = std::pow(r, p);

    // sum_{n>=1} |a_{pn}| r^{pn} = rho * sum_k |b_k| rho^k
    double lin = 0.0;
    {
        double rn = 1.0;
        for (int k = 0; k <= order; ++k) {
            lin += std::abs(g.series.coeff(k)) * rn;
            rn *= rho;
        }
    }
    const double lin_tail = modulus_tail(gap, rho, order + 1);

    // sum_{n>=2} |a_{pn}|^2 r^{p(2n-1)} = rho * sum_{k>=1} |b_k|^2 rho^{2k}
    const double rho2 = rho * rho;
    double quad = 0.0;
    {
        double rn = rho2;
        for (int k = 1; k <= order; ++k) {
            quad += std::norm(g.series.coeff(k)) * rn;
            rn *= rho2;
        }
    }
    double quad_tail = square_tail(gap, rho, order + 1);
    if (start == InnerStart::FromFirst) quad += b0 * b0; // adds the k = 0 term

    const double factor = 1.0 / (1.0 + b0) + rho / (1.0 - rho);
    return {rho * (lin + factor * quad),
            rho * (lin + lin_tail + factor * (quad + quad_tail))};
}

ValueInterval area_sum(const SchurFunction& f, double r) {
    const int order = f.series.order();
    const double r2 = r * r;
    double sum = 0.0;
    double rn = r2;
    for (int n = 1; n <= order; ++n) {
        sum += n * std::norm(f.series.coeff(n)) * rn;
        rn *= r2;
    }
    return ValueInterval::with_tail(sum, area_tail(head_gap(f), r, order + 1));
}

ValueInterval area_refined(const SchurFunction& f, double r, double lambda, Head head) {
    if (lambda < 0.0) throw DomainError("area_refined requires lambda >= 0");
    return refined_bohr(f, r, head) + scale(lambda, area_sum(f, r));
}

ValueInterval distance_refined(const SchurFunction& f, Complex z, int dist_power, Head head) {
    if (dist_power != 1 && dist_power != 2) {
        throw DomainError("distance power must be 1 or 2");
    }
    const double r = std::abs(z);
    const double a0 = f.head_modulus();
    ValueInterval acc =
        head == Head::Modulus ? bohr_sum(f, r, 0) : a0 * a0 + bohr_sum(f, r, 1);
    acc += refined_tail(f, r, 0);
    acc += pow_head(point_distance(f, z), dist_power);
    return acc;
}

ValueInterval derivative_refined(const SchurFunction& f, Complex z, int head_power,
                                 bool include_quadratic) {
    const double r = std::abs(z);
    ValueInterval acc = pow_head(point_modulus(f, z), head_power);
    acc += scale(r, point_derivative(f, z));
    acc += bohr_sum(f, r, 2);
    if (include_quadratic) acc += refined_tail(f, r, 0);
    return acc;
}

// ---------------------------------------------------------------------------

namespace closed_form {

double refined_bohr_moebius(double a, double r, Head head) {
    const double h = head == Head::Modulus ? a : a * a;
    return h + (1.0 - a * a) * r / (1.0 - r);
}

double moebius_tail_sum(double a, double r, int start) {
    return (1.0 - a * a) * std::pow(a, start - 1) * std::pow(r, start) / (1.0 - a * r);
}

double rogosinski_psi(double a, double r, int N, int head_power) {
    const double x0 = (a + r) / (1.0 + a * r);
    const int t = (N - 1) / 2;
    double v = head_power == 2 ? x0 * x0 : x0;
    v += moebius_tail_sum(a, r, N);
    if (t >= 1) {
        v += (1.0 - a * a) * (1.0 - std::pow(a, 2 * t)) * std::pow(r, N) / (1.0 - r);
    }
    v += (1.0 - a) * (1.0 - a * a) * std::pow(a, 2 * t) * std::pow(r, 2 * t + 2) /
         ((1.0 - r) * (1.0 - a * r));
    return v;
}

double symmetric_refined_extremal(double a, double r, int p, int m) {
    const double rho = std::pow(r, p);
    return std::pow(r, m) * (a + (1.0 - a * a) * rho / (1.0 - rho));
}

double bohr_sum_symmetric_extremal(double a, double r, int p, int m) {
    const double rho = std::pow(r, p);
    return std::pow(r, m) * (a + (1.0 - a * a) * rho / (1.0 - a * rho));
}

double cor2_extremal(double a, double r, int p, InnerStart start) {
    const double rho = std::pow(r, p);
    double v = rho * (a + (1.0 - a * a) * rho / (1.0 - rho));
    if (start == InnerStart::FromFirst) {
        v += (1.0 / (1.0 + a) + rho / (1.0 - rho)) * a * a * rho;
    }
    return v;
}

double area_refined_moebius(double a, double r, double lambda, Head head) {
    const double gap = 1.0 - a * a;
    const double den = 1.0 - a * a * r * r;
    return refined_bohr_moebius(a, r, head) + lambda * gap * gap * r * r / (den * den);
}

double distance_refined_moebius(double a, double r, int dist_power, Head head) {
    const double d = (1.0 - a * a) * r / (1.0 - a * r);
    return refined_bohr_moebius(a, r, head) + (dist_power == 2 ? d * d : d);
}

double derivative_refined_psi(double a, double r, int head_power, bool include_quadratic) {
    const double gap = 1.0 - a * a;
    const double x0 = (a + r) / (1.0 + a * r);
    double v = head_power == 2 ? x0 * x0 : x0;
    v += r * gap / ((1.0 + a * r) * (1.0 + a * r));
    v += gap * a * r * r / (1.0 - a * r);
    if (include_quadratic) {
        v += (1.0 - a) * gap * r * r / ((1.0 - r) * (1.0 - a * r));
    }
    return v;
}

} // namespace closed_form

} // namespace bohr
