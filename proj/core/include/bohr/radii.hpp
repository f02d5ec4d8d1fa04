#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bohr/errors.hpp"

namespace bohr {

/// Radius constants and equations, one per theorem variant.
enum class Theorem {
    ThmB,       // 1/(2 + a)
    Thm1R,      // positive root of 2(1+r) r^N - (1-r)^2 = 0
    Thm1Rsq,    // positive root of (1+r) r^N - (1-r)^2 = 0
    Thm2,       // 2 / (3 + a + sqrt(5)(1 + a))
    Thm2Sq,     // unique positive root of (1-a^2) r^3 - (1+2a) r^2 - 2r + 1 = 0
    ThmD,       // maximal positive root of -6 r^{p-m} + r^{2(p-m)} + 8 r^{2p} + 1 = 0
    Thm3,       // unique positive root of (1-a-a^2) r^{p+m} + r^p + a r^m - 1 = 0
    Cor1a,      // (2 + a)^{-1/p}
    Cor1b,      // 2^{-1/p}
    Cor2A,      // (2 / alpha(a))^{1/p}, alpha = 1 + a + sqrt((1-a)(5+3a))
    Cor2B,      // ((5 - sqrt(17)) / 2)^{1/p}
    Thm4First,  // 1/3
    Thm4Second, // 1/(3 - a)
    Thm5,       // 1/3
    Thm6G,      // 1/5
    Thm6H,      // 1/3
    ThmF,       // (sqrt(17) - 3) / 4
    Thm7J,      // unique positive root of 1 - 2r - r^2 - r^3 - r^4 = 0
};

/// Theorem identifier plus the parameters its radius formula needs.
struct RadiusQuery {
    Theorem theorem = Theorem::ThmB;
    int n = 1;      // tail start (Thm1R / Thm1Rsq)
    int p = 1;      // symmetry period
    int m = 0;      // symmetry offset, 0 <= m <= p
    double a = 0.0; // head-coefficient modulus in [0,1)
};

struct RadiusResult {
    double radius = 0.0;
    double residual = 0.0; // |equation(radius)| where an equation exists, else 0
    int sign_changes = 0;  // brackets found by the 1e-3 scan (0 for closed forms)
    bool via_minimum = false; // double root located through the critical-point fallback
};

/// Closed forms are evaluated directly; polynomial equations are bisected to
/// interval width < 1e-14.  "Maximal positive root" variants pick the
/// right-most bracket of the scan; a vanishing discriminant (no sign change)
/// falls back to critical-point bisection.  Throws NoRootInUnitInterval when
/// nothing is found and MultipleRoots when a documented-unique equation
/// brackets more than one root.
RadiusResult solve_detailed(const RadiusQuery& q);
double solve(const RadiusQuery& q);

/// Residual of the defining equation at a candidate radius (0 when the
/// variant has no equation).
double equation_residual(const RadiusQuery& q, double r);

/// Theorem D extremal parameter a = (1 - sqrt(1 - r^{2p})/sqrt(2)) / r^p
/// at r = r_{p,m}.  Throws DomainError when the value leaves [0,1).
double extremal_a_for_thmD(int p, int m);

/// Scriptable lowercase-hyphenated ids ("thm1-r", "thm7-j", ...).
std::string theorem_id(Theorem t);
std::optional<Theorem> theorem_from_id(std::string_view id);

/// True when the radius depends on the function head |a_0| (or |a_m|, |a_p|).
bool radius_depends_on_head(Theorem t);

/// alpha(a) = 1 + a + sqrt((1-a)(5+3a)) from the lacunary corollary.
double cor2_alpha(double a);

} // namespace bohr
