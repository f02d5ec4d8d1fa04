#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bohr/rng.hpp"
#include "bohr/series.hpp"

namespace bohr {

// Construction recipes.  Each one certifies membership in the Schur class by
// construction; serialized forms replay failing witnesses from reports.

struct MoebiusRecipe {
    double a = 0.0; // head modulus, in [0,1)
    int sign = -1;  // -1: (a-z)/(1-az), +1: (a+z)/(1+az)
};

struct SymmetricExtremalRecipe {
    double a = 0.0;
    int p = 1;
    int m = 0;
    int sign = -1; // -1: z^m (a-z^p)/(1-a z^p), +1: z^m (z^p-a)/(1-a z^p)
};

struct BlaschkeRecipe {
    std::vector<Complex> zeros; // all |alpha_k| < 1, at least one
    double phase = 0.0;
};

struct SchurParamsRecipe {
    std::vector<Complex> params; // all |gamma_j| < 1, nonempty
};

struct ConvexComboRecipe;

using Recipe = std::variant<MoebiusRecipe, SymmetricExtremalRecipe, BlaschkeRecipe,
                            SchurParamsRecipe, ConvexComboRecipe>;

struct ConvexComboRecipe {
    std::vector<double> weights; // positive, summing to 1
    std::vector<Recipe> parts;
};

/// A Schur-class function: truncated series, the construction recipe that
/// certifies sup-norm <= 1, and the exact head coefficient a_0 (|a_0| < 1;
/// unimodular constants are rejected everywhere).
struct SchurFunction {
    TaylorSeries series;
    Recipe recipe;
    Complex head;

    double head_modulus() const { return std::abs(head); }
};

/// sign=-1: phi_a = (a-z)/(1-az) = a - (1-a^2) sum a^{n-1} z^n,
/// sign=+1: psi_a = (a+z)/(1+az) = a + (1-a^2) sum (-a)^{n-1} z^n.
/// Coefficients come from the closed form, not series division.
SchurFunction moebius(double a, int sign, int order = kDefaultOrder);

/// z^m (a -+ z^p)/(1 - a z^p): the symmetrized Moebius family with exact
/// coefficients +-(1-a^2) a^{n-1} at indices p*n + m.
SchurFunction symmetric_extremal(double a, int p, int m, int sign, int order = kDefaultOrder);

/// e^{i phase} * prod (alpha_k - z)/(1 - conj(alpha_k) z).  Degree 1..32;
/// the empty product is a unimodular constant and is rejected.
SchurFunction blaschke(const std::vector<Complex>& zeros, double phase,
                       int order = kDefaultOrder);

/// Classical Schur recursion f_j = (gamma_j + z f_{j+1}) / (1 + conj(gamma_j) z f_{j+1}),
/// f_d = gamma_d.  All |gamma_j| < 1.
SchurFunction from_schur_params(const std::vector<Complex>& params, int order = kDefaultOrder);

enum class SampleProfile { Blaschke, SchurParams, ConvexCombo };

/// Deterministic function of the rng state.  Blaschke: degree 1..8, zeros on
/// the disk of radius 0.95.  Schur params: depth 1..10, parameters on the
/// disk of radius 0.95.  Convex combo: 2..4 parts with Dirichlet weights.
SchurFunction sample_schur(CounterRng& rng, SampleProfile profile, int order = kDefaultOrder);

/// Rebuild a function from its recipe at the given order.
SchurFunction build(const Recipe& recipe, int order = kDefaultOrder);

/// Compact one-line text form (tag + parameters at 17 significant digits).
std::string recipe_to_string(const Recipe& recipe);
Recipe recipe_from_string(std::string_view text);

const char* profile_name(SampleProfile profile);

} // namespace bohr
