#pragma once

#include <span>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr {

/// One (a, r) point where the extremal functional strictly exceeds 1.
struct SharpnessWitness {
    double a = 0.0;
    double r = 0.0;
    ValueInterval value;
    std::string recipe;
};

/// Evidence that a radius (or a lambda constant) cannot be improved.
struct SharpnessCertificate {
    RadiusQuery query;
    bool lambda_inflation = false;
    double lambda = 0.0; // the inflated constant when lambda_inflation is set
    std::vector<SharpnessWitness> witnesses;
    std::string grid;

    bool valid() const { return !witnesses.empty(); }
};

inline constexpr double kWitnessMargin = 1e-12;

inline const std::vector<double> kDefaultAGrid{0.9, 0.99, 0.999};
inline const std::vector<double> kDefaultEpsGrid{1e-2, 1e-3};

/// Scan the (a, eps) grid: build the theorem's extremal function, put
/// r = (1 + eps) * failure-radius(a) capped below the theorem's failure
/// window, evaluate the closed-form functional at real z = r, and record the
/// points with value > 1 + 1e-12.  With lambda_inflation (Theorem 4 only) r is
/// pinned at the theorem radius and the area constant is inflated by 1%.
/// Throws NoWitnessFound when the scan produces nothing.
SharpnessCertificate certify_sharpness(const RadiusQuery& q,
                                       std::span<const double> a_grid,
                                       std::span<const double> eps_grid,
                                       bool lambda_inflation = false);

SharpnessCertificate certify_sharpness(const RadiusQuery& q);

/// Per-radius head threshold from the Theorem 6 proofs:
///   G: a_r = (3(1-r) - sqrt(5r^2 - 6r + 5)) / (2r)   for 1/5 < r < (3-sqrt 5)/2,
///   H: a_r = (r^2 - 3r + 1) / (r - 2r^2)             for 1/3 < r < (3-sqrt 5)/2.
double threshold_a(Theorem which, double r);

/// The Theorem 4 remark: no c > 0 admits the square-head area inequality up
/// to r = 1/2; f(z) = z at r = 1/2 evaluates to exactly 1 + c/4.
struct RemarkReport {
    double c = 0.0;
    ValueInterval value;     // series-path evaluation
    double closed_form = 0.0; // 1 + c/4
    bool exceeds_one = false;
};
RemarkReport remark_thm4_counterexample(double c);

/// Closed-form witness value for the theorem's extremal family at real z = r.
double extremal_functional_value(const RadiusQuery& q, double a, double r);

/// Per-a radius beyond which the extremal family fails (the theorem constant
/// when the failure threshold does not depend on a).
double extremal_failure_radius(const RadiusQuery& q, double a);

} // namespace bohr
