#pragma once

#include "bohr/bounds.hpp"
#include "bohr/interval.hpp"
#include "bohr/schur.hpp"

namespace bohr {

/// Head term convention: |a_0| or |a_0|^2.
enum class Head { Modulus, Square };

/// Inner-sum start for the lacunary quadratic functionals.
enum class InnerStart { FromSecond, FromFirst };

/// sum_{n>=start} |a_n| r^n with the analytic remainder in the upper bound.
ValueInterval bohr_sum(const SchurFunction& f, double r, int start);

/// (1/(1+|a0|) + r/(1-r)) * sum_{n>=t+1} |a_n|^2 r^{2n}.
ValueInterval refined_tail(const SchurFunction& f, double r, int t);

/// head + sum_{n>=1} |a_n| r^n + refined quadratic term.
ValueInterval refined_bohr(const SchurFunction& f, double r, Head head);

/// |f(z)|^{head_power} + sum_{n>=N} |a_n| r^n
///   + sgn(t) sum_{n=1}^{t} |a_n|^2 r^N/(1-r) + refined tail from t+1,
/// with t = floor((N-1)/2) and the evaluation tail folded into the interval.
ValueInterval rogosinski(const SchurFunction& f, Complex z, int N, int head_power);

/// C(r) for f = z^m g(z^p), computed from the base coefficients b_n = a_{pn+m}:
///   sum |b_n| r^{pn+m} + (1/(1+|b_0|) + r^p/(1-r^p)) sum_{n>=1} |b_n|^2 r^{2pn+m}.
/// head = Square replaces the n = 0 head |b_0| by |b_0|^2 (m = 0 only).
ValueInterval symmetric_refined(const SchurFunction& g, int p, int m, double r,
                                Head head = Head::Modulus);

/// Plain majorant sum for f = z^m g(z^p): sum_{n>=0} |b_n| r^{pn+m}.
ValueInterval symmetric_bohr_sum(const SchurFunction& g, int p, int m, double r);

/// The lacunary functionals for f = z^p g(z^p) (so a_{pn} = b_{n-1}):
///   sum_{n>=1} |a_{pn}| r^{pn}
///     + (1/(1+|a_p|) + r^p/(1-r^p)) sum_{n>=start} |a_{pn}|^2 r^{p(2n-1)}.
ValueInterval cor2_functional(const SchurFunction& g, int p, double r, InnerStart start);

/// S_r/pi = sum n |a_n|^2 r^{2n}.
ValueInterval area_sum(const SchurFunction& f, double r);

/// refined_bohr(head) + lambda * area_sum.
ValueInterval area_refined(const SchurFunction& f, double r, double lambda, Head head);

/// Base sum (full modulus sum, or |a0|^2 + sum_{n>=1}) + refined tail
/// + |f(z) - a_0|^{dist_power}.
ValueInterval distance_refined(const SchurFunction& f, Complex z, int dist_power, Head head);

/// |f(z)|^{head_power} + |f'(z)| r + sum_{n>=2} |a_n| r^n
/// (+ refined quadratic term when include_quadratic).
ValueInterval derivative_refined(const SchurFunction& f, Complex z, int head_power,
                                 bool include_quadratic);

/// Modulus enclosure of f at z from the truncated series (coefficient bound 1).
ValueInterval point_modulus(const SchurFunction& f, Complex z);

/// Modulus enclosure of f - a_0 at z.
ValueInterval point_distance(const SchurFunction& f, Complex z);

/// Modulus enclosure of f' at z, with the derivative-series remainder bound.
ValueInterval point_derivative(const SchurFunction& f, Complex z);

// Closed forms on the extremal families (real parameter a, real z = r).  The
// Moebius pair phi_a = (a-z)/(1-az) and psi_a = (a+z)/(1+az) share coefficient
// moduli a, (1-a^2) a^{n-1}, so every modulus-built sum below covers both.
// These are the witness-evaluation route for sharpness certification and the
// algebraic cross-check for the series route above.
namespace closed_form {

/// head(a) + (1-a^2) r/(1-r): the refined Bohr sum telescopes exactly.
double refined_bohr_moebius(double a, double r, Head head);

/// sum_{n>=start} |a_n| r^n = (1-a^2) a^{start-1} r^start / (1-ar), start >= 1.
double moebius_tail_sum(double a, double r, int start);

/// Full Bohr--Rogosinski assembly at z = r with |psi_a(r)| = (a+r)/(1+ar).
double rogosinski_psi(double a, double r, int N, int head_power);

/// C(r) on z^m (a - z^p)/(1 - a z^p):  r^m [a + (1-a^2) rho/(1-rho)], rho = r^p.
double symmetric_refined_extremal(double a, double r, int p, int m);

/// Plain majorant sum on the same family: r^m [a + (1-a^2) rho/(1-a rho)].
double bohr_sum_symmetric_extremal(double a, double r, int p, int m);

/// Lacunary functionals on z^p (a - z^p)/(1 - a z^p).
double cor2_extremal(double a, double r, int p, InnerStart start);

/// refined_bohr_moebius + lambda (1-a^2)^2 r^2/(1-a^2 r^2)^2.
double area_refined_moebius(double a, double r, double lambda, Head head);

/// F/G/H assemblies on phi_a at z = r (so |phi_a(r) - a| = (1-a^2) r/(1-ar)).
double distance_refined_moebius(double a, double r, int dist_power, Head head);

/// I/J assemblies on psi_a at z = r.
double derivative_refined_psi(double a, double r, int head_power, bool include_quadratic);

} // namespace closed_form

} // namespace bohr
