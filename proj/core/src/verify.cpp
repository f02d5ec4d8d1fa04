#include "bohr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace bohr {

namespace {

constexpr int kThetaGrid = 128;
constexpr double kSqrt2Minus1 = 0.41421356237309503;

bool has_point_term(Theorem t) {
    switch (t) {
    case Theorem::Thm1R:
    case Theorem::Thm1Rsq:
    case Theorem::Thm2:
    case Theorem::Thm2Sq:
    case Theorem::Thm5:
    case Theorem::Thm6G:
    case Theorem::Thm6H:
    case Theorem::ThmF:
    case Theorem::Thm7J:
        return true;
    default:
        return false;
    }
}

int rogosinski_n(const RadiusQuery& q) {
    switch (q.theorem) {
    case Theorem::Thm1R:
    case Theorem::Thm1Rsq: return q.n;
    default: return 1;
    }
}

/// Functional value for the variants built purely from coefficient moduli.
ValueInterval eval_no_point(const RadiusQuery& q, const SchurFunction& fn, double r) {
    switch (q.theorem) {
    case Theorem::ThmB: return refined_bohr(fn, r, Head::Modulus);
    case Theorem::ThmD: return symmetric_bohr_sum(fn, q.p, q.m, r);
    case Theorem::Thm3: return symmetric_refined(fn, q.p, q.m, r);
    case Theorem::Cor1a: return symmetric_refined(fn, q.p, 0, r);
    case Theorem::Cor1b: return symmetric_refined(fn, q.p, 0, r, Head::Square);
    case Theorem::Cor2A: return cor2_functional(fn, q.p, r, InnerStart::FromSecond);
    case Theorem::Cor2B: return cor2_functional(fn, q.p, r, InnerStart::FromFirst);
    case Theorem::Thm4First: return area_refined(fn, r, 8.0 / 9.0, Head::Modulus);
    case Theorem::Thm4Second: return area_refined(fn, r, 9.0 / 8.0, Head::Square);
    default:
        throw DomainError("variant carries a point term");
    }
}

/// Functional value at one point z with |z| = r.
ValueInterval eval_at_point(const RadiusQuery& q, const SchurFunction& fn, Complex z) {
    switch (q.theorem) {
    case Theorem::Thm1R: return rogosinski(fn, z, q.n, 1);
    case Theorem::Thm1Rsq: return rogosinski(fn, z, q.n, 2);
    case Theorem::Thm2: return rogosinski(fn, z, 1, 1);
    case Theorem::Thm2Sq: return rogosinski(fn, z, 1, 2);
    case Theorem::Thm5: return distance_refined(fn, z, 2, Head::Modulus);
    case Theorem::Thm6G: return distance_refined(fn, z, 1, Head::Modulus);
    case Theorem::Thm6H: return distance_refined(fn, z, 1, Head::Square);
    case Theorem::ThmF: return derivative_refined(fn, z, 1, true);
    case Theorem::Thm7J: return derivative_refined(fn, z, 2, true);
    default:
        throw DomainError("variant has no point term");
    }
}

/// Worst-case sufficient upper bound: the point terms are replaced by their
/// Schwarz--Pick / majorant bounds, mirroring the proofs.  Returns +inf when
/// the replacement is not valid at this radius, forcing the grid.
double sp_upper(const RadiusQuery& q, const SchurFunction& fn, double r) {
    const double a0 = fn.head_modulus();
    const double x0 = schwarz_pick_value(a0, r);
    switch (q.theorem) {
    case Theorem::Thm1R:
    case Theorem::Thm1Rsq:
    case Theorem::Thm2:
    case Theorem::Thm2Sq: {
        const int n = rogosinski_n(q);
        const int t = (n - 1) / 2;
        const int hp = (q.theorem == Theorem::Thm1Rsq || q.theorem == Theorem::Thm2Sq) ? 2 : 1;
        const int order = fn.series.order();
        double upper = hp == 2 ? x0 * x0 : x0;
        upper += bohr_sum(fn, r, n).upper;
        if (t >= 1) {
            double sq = 0.0;
            for (int k = 1; k <= std::min(t, order); ++k) {
                sq += std::norm(fn.series.coeff(k));
            }
            if (t > order) {
                const double gap = 1.0 - a0 * a0;
                sq += (t - order) * gap * gap;
            }
            upper += sq * std::pow(r, n) / (1.0 - r);
        }
        upper += refined_tail(fn, r, t).upper;
        return upper;
    }
    case Theorem::Thm5:
    case Theorem::Thm6G: {
        const double d = lemma1_rhs(a0, r);
        const double dist = q.theorem == Theorem::Thm5 ? d * d : d;
        return bohr_sum(fn, r, 0).upper + refined_tail(fn, r, 0).upper + dist;
    }
    case Theorem::Thm6H:
        return a0 * a0 + bohr_sum(fn, r, 1).upper + refined_tail(fn, r, 0).upper +
               lemma1_rhs(a0, r);
    case Theorem::ThmF: {
        if (r > kSqrt2Minus1) return std::numeric_limits<double>::infinity();
        const double deriv = r * (1.0 - x0 * x0) / (1.0 - r * r);
        return x0 + deriv + bohr_sum(fn, r, 2).upper + refined_tail(fn, r, 0).upper;
    }
    case Theorem::Thm7J: {
        if (r > 0.5) return std::numeric_limits<double>::infinity();
        const double deriv = r * (1.0 - x0 * x0) / (1.0 - r * r);
        return x0 * x0 + deriv + bohr_sum(fn, r, 2).upper + refined_tail(fn, r, 0).upper;
    }
    default:
        throw DomainError("variant has no point term");
    }
}

struct TrialOutcome {
    double margin = 0.0;
    double width = 0.0;
    bool failed = false;
    FailureWitness witness;
};

struct GridEval {
    ValueInterval worst; // interval at the angle with the largest upper bound
    Complex worst_z;
};

GridEval eval_on_grid(const RadiusQuery& q, const SchurFunction& fn, double r) {
    GridEval out;
    out.worst.upper = -1.0;
    for (int j = 0; j < kThetaGrid; ++j) {
        const Complex z = std::polar(r, 2.0 * M_PI * j / kThetaGrid);
        const auto v = eval_at_point(q, fn, z);
        if (v.upper > out.worst.upper) {
            out.worst = v;
            out.worst_z = z;
        }
    }
    return out;
}

SchurFunction sample_for(const RadiusQuery& q, CounterRng& rng, SampleProfile profile,
                         int order) {
    auto fn = sample_schur(rng, profile, order);
    if (q.theorem == Theorem::Thm5) {
        const double cap = thm5_head_threshold();
        int attempts = 0;
        while (fn.head_modulus() > cap) {
            if (++attempts > 1000) {
                throw DomainError("thm5 head filter failed to accept after 1000 draws");
            }
            fn = sample_schur(rng, profile, order);
        }
    }
    return fn;
}

TrialOutcome run_trial(const RadiusQuery& q, std::uint64_t seed, std::uint64_t trial,
                       int order, bool edge, double fixed_radius) {
    CounterRng rng(seed, trial);
    const auto profile = trial_profile(trial);
    auto fn = sample_for(q, rng, profile, order);

    double radius = fixed_radius;
    if (radius_depends_on_head(q.theorem)) {
        RadiusQuery at = q;
        at.a = fn.head_modulus();
        radius = solve(at);
    }
    const double u = rng.uniform01();
    const double r = edge ? radius : u * radius;
    const bool prefer_grid = rng.uniform01() < 0.5;

    TrialOutcome out;
    if (!has_point_term(q.theorem)) {
        const auto v = eval_no_point(q, fn, r);
        out.margin = 1.0 - v.upper;
        out.width = v.width();
        if (out.margin < -kInequalitySlack) {
            out.failed = true;
            out.witness = {recipe_to_string(fn.recipe), Complex(r, 0.0), r, v};
        }
        return out;
    }

    if (!prefer_grid) {
        const double upper = sp_upper(q, fn, r);
        if (1.0 - upper >= -kInequalitySlack) {
            out.margin = 1.0 - upper;
            out.width = 0.0;
            return out;
        }
    }
    const auto grid = eval_on_grid(q, fn, r);
    out.margin = 1.0 - grid.worst.upper;
    out.width = grid.worst.width();
    if (out.margin < -kInequalitySlack) {
        out.failed = true;
        out.witness = {recipe_to_string(fn.recipe), grid.worst_z, r, grid.worst};
    }
    return out;
}

int worker_count() {
    if (const char* env = std::getenv("BOHR_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

template <typename TrialFn>
std::vector<TrialOutcome> run_parallel(int trials, const TrialFn& fn) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    const int workers = std::min(worker_count(), std::max(trials, 1));
    if (workers <= 1) {
        for (int i = 0; i < trials; ++i) outcomes[static_cast<std::size_t>(i)] = fn(i);
        return outcomes;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < trials; i += workers) {
                outcomes[static_cast<std::size_t>(i)] = fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
    return outcomes;
}

VerificationReport reduce(std::vector<TrialOutcome> outcomes, VerificationReport rep) {
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.worst_width = 0.0;
    for (auto& o : outcomes) {
        rep.worst_margin = std::min(rep.worst_margin, o.margin);
        rep.worst_width = std::max(rep.worst_width, o.width);
        if (o.failed) rep.failures.push_back(std::move(o.witness));
    }
    return rep;
}

} // namespace

SampleProfile trial_profile(std::uint64_t trial) {
    switch (trial % 3) {
    case 0: return SampleProfile::Blaschke;
    case 1: return SampleProfile::SchurParams;
    default: return SampleProfile::ConvexCombo;
    }
}

double thm5_head_threshold() { return 4.0 * std::sqrt(2.0) - 5.0; }

VerificationReport run(const RadiusQuery& q, int trials, std::uint64_t seed, int order,
                       bool edge) {
    if (trials < 1) throw DomainError("run requires trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.check = theorem_id(q.theorem);
    rep.query = q;
    rep.trials = trials;
    rep.seed = seed;
    rep.order = order;
    rep.edge = edge;
    if (q.theorem == Theorem::Thm5) {
        rep.note = "sampler filtered to |a0| <= 4*sqrt(2)-5";
    }

    const double fixed_radius = radius_depends_on_head(q.theorem) ? 0.0 : solve(q);
    auto outcomes = run_parallel(trials, [&](int i) {
        return run_trial(q, seed, static_cast<std::uint64_t>(i), order, edge, fixed_radius);
    });
    rep = reduce(std::move(outcomes), std::move(rep));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

namespace {

const std::vector<double>& lemma_r_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (int k = 1; k <= 9; ++k) g.push_back(0.05 * k);
        return g;
    }();
    return grid;
}

TrialOutcome run_lemma_trial(std::uint64_t seed, std::uint64_t trial, int order) {
    CounterRng rng(seed, trial);
    auto fn = sample_schur(rng, trial_profile(trial), order);
    const double a0 = fn.head_modulus();

    TrialOutcome out;
    out.margin = std::numeric_limits<double>::infinity();
    auto note = [&](double margin, double width, Complex z, double r, ValueInterval lhs) {
        out.margin = std::min(out.margin, margin);
        out.width = std::max(out.width, width);
        if (margin < -kInequalitySlack && !out.failed) {
            out.failed = true;
            out.witness = {recipe_to_string(fn.recipe), z, r, lhs};
        }
    };

    for (const double r : lemma_r_grid()) {
        {
            const auto lhs = bohr_sum(fn, r, 1);
            const double rhs = lemma1_rhs(a0, r);
            note(rhs - lhs.upper, lhs.width(), Complex(r, 0.0), r, lhs);
        }
        {
            const auto lhs = area_sum(fn, r);
            const double rhs = lemma2_rhs(a0, r);
            note(rhs - lhs.upper, lhs.width(), Complex(r, 0.0), r, lhs);
        }
        for (int n = 1; n <= 6; ++n) {
            const auto rep = lemma4_sides(fn, r, n);
            note(rep.margin, rep.lhs.width(), Complex(r, 0.0), r, rep.lhs);
        }
        const double bound = schwarz_pick_value(a0, r);
        for (int j = 0; j < kThetaGrid; ++j) {
            const Complex z = std::polar(r, 2.0 * M_PI * j / kThetaGrid);
            const auto v = point_modulus(fn, z);
            note(bound - v.upper, v.width(), z, r, v);
        }
    }
    for (int n = 0; n <= 5; ++n) {
        const auto rep = lemma3_check(fn, n);
        note(rep.part_a.margin, 0.0, Complex(0.0, 0.0), 0.0, rep.part_a.lhs);
        if (rep.part_b) {
            note(rep.part_b->margin, 0.0, Complex(0.0, 0.0), 0.0, rep.part_b->lhs);
        }
    }
    return out;
}

} // namespace

VerificationReport run_lemmas(int trials, std::uint64_t seed, int order) {
    if (trials < 1) throw DomainError("run_lemmas requires trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.check = "lemmas";
    rep.trials = trials;
    rep.seed = seed;
    rep.order = order;

    auto outcomes = run_parallel(trials, [&](int i) {
        return run_lemma_trial(seed, static_cast<std::uint64_t>(i), order);
    });
    rep = reduce(std::move(outcomes), std::move(rep));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerificationReport run_replay(const RadiusQuery& q, const Recipe& recipe, double r,
                              int order) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("replay radius must lie in [0,1)");
    const auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.check = theorem_id(q.theorem);
    rep.query = q;
    rep.trials = 1;
    rep.order = order;
    rep.note = "replay";

    const auto fn = build(recipe, order);
    if (!has_point_term(q.theorem)) {
        const auto v = eval_no_point(q, fn, r);
        rep.worst_margin = 1.0 - v.upper;
        rep.worst_width = v.width();
        if (rep.worst_margin < -kInequalitySlack) {
            rep.failures.push_back({recipe_to_string(recipe), Complex(r, 0.0), r, v});
        }
    } else {
        const auto grid = eval_on_grid(q, fn, r);
        rep.worst_margin = 1.0 - grid.worst.upper;
        rep.worst_width = grid.worst.width();
        if (rep.worst_margin < -kInequalitySlack) {
            rep.failures.push_back({recipe_to_string(recipe), grid.worst_z, r, grid.worst});
        }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace bohr
