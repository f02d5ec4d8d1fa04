#pragma once

#include <optional>

#include "bohr/interval.hpp"
#include "bohr/schur.hpp"

namespace bohr {

/// Uniform slack for inequality checks; dominated by double-precision
/// accumulation at order 256, far above rounding noise.
inline constexpr double kInequalitySlack = 1e-9;

/// One checkable inequality instance: lhs <= rhs with rigorous enclosures.
struct LemmaReport {
    ValueInterval lhs;
    ValueInterval rhs;
    double margin = 0.0; // rhs.lower - lhs.upper
    bool holds = false;  // margin >= -1e-9

    static LemmaReport compare(ValueInterval lhs, ValueInterval rhs) {
        LemmaReport rep{lhs, rhs, rhs.lower - lhs.upper, false};
        rep.holds = rep.margin >= -kInequalitySlack;
        return rep;
    }
};

/// Majorant bound for sum_{n>=1} |a_n| r^n:
///   r (1-|a0|^2)/(1-r|a0|)        for |a0| >= r,
///   r sqrt(1-|a0|^2)/sqrt(1-r^2)  for |a0| <  r.
double lemma1_rhs(double a0, double r);

/// Area-sum bound r^2 (1-|a0|^2)^2 / (1-|a0|^2 r^2)^2, valid for r <= 1/sqrt(2).
double lemma2_rhs(double a0, double r);

/// Coefficient bounds |a_{2n+1}| <= 1 - |a_0|^2 - ... - |a_n|^2 (part a) and
/// |a_{2n}| <= 1 - |a_0|^2 - ... - |a_{n-1}|^2 - |a_n|^2/(1+|a_0|) (part b,
/// n >= 1 only).
struct Lemma3Report {
    LemmaReport part_a;
    std::optional<LemmaReport> part_b; // absent at n = 0
};
Lemma3Report lemma3_check(const SchurFunction& f, int n);

/// Master tail inequality with t = floor((N-1)/2), sgn(0) = 0:
///   sum_{n>=N} |a_n| r^n + sgn(t) sum_{n=1}^{t} |a_n|^2 r^N/(1-r)
///     + (1/(1+|a0|) + r/(1-r)) sum_{n>=t+1} |a_n|^2 r^{2n}
///   <= (1-|a0|^2) r^N / (1-r).
/// Truncation tails are folded into the LHS upper bound.
LemmaReport lemma4_sides(const SchurFunction& f, double r, int N);

/// Classical point bound (r + a0) / (1 + r a0) for |f(z)| on |z| = r.
double schwarz_pick_value(double a0, double r);

/// Companion derivative bound (1 - w^2)/(1 - r^2) for a given |f(z)| = w.
double schwarz_pick_derivative_bound(double w, double r);

// Analytic tails used throughout: every n >= 1 coefficient obeys
// |a_n| <= 1 - |a0|^2 (Lemma 3(a) at n = 0).

/// Bound on sum_{n>=start} |a_n| r^n over the unseen indices (start > K).
double modulus_tail(double head_gap, double r, int start);

/// Bound on sum_{n>=start} |a_n|^2 r^{2n} over the unseen indices.
double square_tail(double head_gap, double r, int start);

/// Bound on sum_{n>=start} n |a_n|^2 r^{2n} over the unseen indices.
double area_tail(double head_gap, double r, int start);

/// Bound on sum_{n>=start} (n+1) |a_{n+1}| r^n (derivative-series remainder).
double derivative_tail(double head_gap, double r, int start);

} // namespace bohr
