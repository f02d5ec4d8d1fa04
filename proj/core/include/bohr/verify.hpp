#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/certify.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr {

/// A replayable counterexample candidate.
struct FailureWitness {
    std::string recipe;
    Complex z;
    double r = 0.0;
    ValueInterval value;
};

struct VerificationReport {
    std::string check; // theorem id, or "lemmas"
    RadiusQuery query;
    int trials = 0;
    std::uint64_t seed = 0;
    int order = kDefaultOrder;
    bool edge = false;
    double worst_margin = 0.0; // min over trials of 1 - upper (rhs - lhs for lemmas)
    double worst_width = 0.0;  // max functional interval width seen
    std::vector<FailureWitness> failures;
    std::int64_t elapsed_ms = 0;
    std::string note; // e.g. the Theorem 5 head filter

    bool passed() const { return failures.empty(); }
};

/// Monte Carlo campaign for one theorem variant.  Per trial: sample a
/// function (profiles rotate blaschke / schur-params / convex per trial
/// index), compute the per-function radius when it depends on the head, draw
/// r uniform in [0, radius] (edge pins r = radius), then check the functional
/// either through the Schwarz--Pick worst case or on the 128-angle grid.
/// Identical (query, trials, seed, order) reproduce the report bit-for-bit;
/// failures are data, not errors.
VerificationReport run(const RadiusQuery& q, int trials, std::uint64_t seed,
                       int order = kDefaultOrder, bool edge = false);

/// Lemma campaign: the four coefficient/tail lemmas plus the Schwarz--Pick
/// point bound, per sample, across r in {0.05,...,0.45} and N in 1..6.
VerificationReport run_lemmas(int trials, std::uint64_t seed, int order = kDefaultOrder);

/// Re-check one recipe (a report witness) at a fixed radius on the full grid.
VerificationReport run_replay(const RadiusQuery& q, const Recipe& recipe, double r,
                              int order = kDefaultOrder);

/// Trial profile rotation used by the campaigns.
SampleProfile trial_profile(std::uint64_t trial);

/// 4*sqrt(2) - 5, the Theorem 5 head threshold.
double thm5_head_threshold();

} // namespace bohr
