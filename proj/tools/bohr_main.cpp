// Command-line surface: radius constants, verification campaigns, sharpness
// certificates, radius sweeps, and sampler inspection.
//
// Exit codes: 0 success/verified, 1 inequality failure or missing witness,
// 2 usage error, 3 solver error.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/report_io.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

int default_order() {
    if (const char* env = std::getenv("BOHR_DEFAULT_ORDER")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    return bohr::kDefaultOrder;
}

struct TheoremFlags {
    std::string theorem;
    int n = 1;
    int p = 1;
    int m = 0;
    double a0 = 0.0;

    bohr::RadiusQuery query() const {
        const auto t = bohr::theorem_from_id(theorem);
        if (!t) throw bohr::DomainError("unknown theorem id '" + theorem + "'");
        return {*t, n, p, m, a0};
    }
};

void add_theorem_flags(CLI::App* cmd, TheoremFlags& flags, bool require_theorem = true) {
    auto* opt = cmd->add_option("--theorem", flags.theorem, "theorem id (e.g. thm1-r, thm7-j)");
    if (require_theorem) opt->required();
    cmd->add_option("--n", flags.n, "tail start N (thm1-r / thm1-rsq)");
    cmd->add_option("--p", flags.p, "symmetry period p");
    cmd->add_option("--m", flags.m, "symmetry offset m");
    cmd->add_option("--a0", flags.a0, "head-coefficient modulus |a0|");
}

json query_params_json(const bohr::RadiusQuery& q) {
    return json{{"n", q.n}, {"p", q.p}, {"m", q.m}, {"a0", q.a}};
}

int cmd_radius(const TheoremFlags& flags, const std::string& format) {
    const auto q = flags.query();
    const auto res = bohr::solve_detailed(q);
    if (format == "csv") {
        std::cout << "theorem,radius,residual,root_count\n"
                  << flags.theorem << ',' << bohr::format_17(res.radius) << ','
                  << bohr::format_17(res.residual) << ',' << res.sign_changes << '\n';
        return 0;
    }
    json doc{
        {"command", "radius"},
        {"theorem", flags.theorem},
        {"params", query_params_json(q)},
        {"radius", res.radius},
        {"residual", res.residual},
        {"root_count", res.sign_changes},
        {"via_minimum", res.via_minimum},
    };
    if (q.theorem == bohr::Theorem::Thm4Second) {
        doc["note"] = "a in 1/(3-a) read as |a0|, following the proof's usage";
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_verify(const TheoremFlags& flags, int trials, std::uint64_t seed, int order,
               bool edge, const std::string& replay, double replay_r,
               const std::string& format) {
    bohr::VerificationReport rep;
    if (flags.theorem == "lemmas") {
        rep = bohr::run_lemmas(trials, seed, order);
    } else if (!replay.empty()) {
        const auto recipe = bohr::recipe_from_string(replay);
        rep = bohr::run_replay(flags.query(), recipe, replay_r, order);
    } else {
        rep = bohr::run(flags.query(), trials, seed, order, edge);
    }
    if (format == "csv") {
        std::cout << "theorem,trials,seed,order,worst_margin,failures,elapsed_ms\n"
                  << rep.check << ',' << rep.trials << ',' << rep.seed << ',' << rep.order
                  << ',' << bohr::format_17(rep.worst_margin) << ',' << rep.failures.size()
                  << ',' << rep.elapsed_ms << '\n';
    } else {
        std::cout << bohr::report_to_json(rep) << '\n';
    }
    return rep.passed() ? 0 : kExitFailure;
}

int cmd_sharpness(const TheoremFlags& flags, std::vector<double> a_grid,
                  std::vector<double> eps_grid) {
    bool lambda_inflation = false;
    TheoremFlags resolved = flags;
    if (flags.theorem == "thm4-lambda-first") {
        resolved.theorem = "thm4-first";
        lambda_inflation = true;
    } else if (flags.theorem == "thm4-lambda-second") {
        resolved.theorem = "thm4-second";
        lambda_inflation = true;
    }
    if (a_grid.empty()) a_grid = bohr::kDefaultAGrid;
    if (eps_grid.empty()) eps_grid = bohr::kDefaultEpsGrid;
    const auto cert =
        bohr::certify_sharpness(resolved.query(), a_grid, eps_grid, lambda_inflation);
    std::cout << bohr::certificate_to_json(cert) << '\n';
    return 0;
}

struct SweepRefs {
    bool has_lower = false;
    bool has_upper = false;
    double lower = 0.0;
    double upper = 0.0;
};

SweepRefs sweep_refs(const bohr::RadiusQuery& q) {
    SweepRefs refs;
    switch (q.theorem) {
    case bohr::Theorem::Thm2:
        refs.has_lower = true;
        refs.lower = std::sqrt(5.0) - 2.0;
        break;
    case bohr::Theorem::Thm2Sq:
        refs.has_lower = refs.has_upper = true;
        refs.lower = 1.0 / 3.0;
        refs.upper = 1.0 / (2.0 + q.a);
        break;
    case bohr::Theorem::Thm3:
    case bohr::Theorem::Cor1a:
        refs.has_lower = true;
        refs.lower = std::pow(2.0 + q.a, -1.0 / q.p);
        break;
    case bohr::Theorem::Cor2A:
        refs.has_lower = true;
        refs.lower = std::pow(0.6, 1.0 / q.p);
        break;
    default:
        break;
    }
    return refs;
}

int cmd_table(const TheoremFlags& flags, const std::string& param, double from, double to,
              double step, const std::string& format) {
    if (step <= 0.0) throw bohr::DomainError("--step must be positive");
    if (param != "a0" && param != "n" && param != "p") {
        throw bohr::DomainError("--param must be one of a0, n, p");
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "param,radius,residual,lower_ref,upper_ref\n";
    for (double x = from; x <= to + 1e-12; x += step) {
        TheoremFlags at = flags;
        if (param == "a0") at.a0 = x;
        if (param == "n") at.n = static_cast<int>(std::llround(x));
        if (param == "p") at.p = static_cast<int>(std::llround(x));
        const auto q = at.query();
        const auto res = bohr::solve_detailed(q);
        const auto refs = sweep_refs(q);
        if (format == "json") {
            json row{{"param", x}, {"radius", res.radius}, {"residual", res.residual}};
            if (refs.has_lower) row["lower_ref"] = refs.lower;
            if (refs.has_upper) row["upper_ref"] = refs.upper;
            rows.push_back(row);
        } else {
            csv << bohr::format_17(x) << ',' << bohr::format_17(res.radius) << ','
                << bohr::format_17(res.residual) << ','
                << (refs.has_lower ? bohr::format_17(refs.lower) : "") << ','
                << (refs.has_upper ? bohr::format_17(refs.upper) : "") << '\n';
        }
    }
    if (format == "json") {
        std::cout << json{{"command", "table"},
                          {"sweep", flags.theorem},
                          {"param", param},
                          {"rows", rows}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_sample(std::uint64_t seed, const std::string& profile_name, int order,
               const std::string& format) {
    bohr::SampleProfile profile;
    if (profile_name == "blaschke") profile = bohr::SampleProfile::Blaschke;
    else if (profile_name == "schur-params") profile = bohr::SampleProfile::SchurParams;
    else if (profile_name == "convex") profile = bohr::SampleProfile::ConvexCombo;
    else throw bohr::DomainError("--profile must be blaschke, schur-params or convex");

    bohr::CounterRng rng(seed, 0);
    const auto fn = bohr::sample_schur(rng, profile, order);
    const int shown = std::min(15, fn.series.order());

    if (format == "csv") {
        std::cout << "n,re,im\n";
        for (int n = 0; n <= shown; ++n) {
            std::cout << n << ',' << bohr::format_17(fn.series.coeff(n).real()) << ','
                      << bohr::format_17(fn.series.coeff(n).imag()) << '\n';
        }
        return 0;
    }
    json coeffs = json::array();
    for (int n = 0; n <= shown; ++n) {
        coeffs.push_back(json{{"n", n},
                              {"re", fn.series.coeff(n).real()},
                              {"im", fn.series.coeff(n).imag()}});
    }
    std::cout << json{{"command", "sample"},
                      {"seed", seed},
                      {"profile", profile_name},
                      {"order", order},
                      {"recipe", bohr::recipe_to_string(fn.recipe)},
                      {"a0_re", fn.head.real()},
                      {"a0_im", fn.head.imag()},
                      {"coefficients", coeffs}}
                     .dump(2)
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr-type inequality toolkit for the Schur class"};
    app.require_subcommand(1);

    TheoremFlags radius_flags;
    std::string radius_format = "json";
    auto* radius = app.add_subcommand("radius", "evaluate a radius constant or equation root");
    add_theorem_flags(radius, radius_flags);
    radius->add_option("--format", radius_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    TheoremFlags verify_flags;
    int trials = 1000;
    std::uint64_t seed = 42;
    int order = default_order();
    bool edge = false;
    std::string replay;
    double replay_r = 0.0;
    std::string verify_format = "json";
    auto* verify = app.add_subcommand("verify", "run a Monte Carlo verification campaign");
    verify->add_option("--theorem", verify_flags.theorem, "theorem id, or 'lemmas'")->required();
    verify->add_option("--n", verify_flags.n, "tail start N");
    verify->add_option("--p", verify_flags.p, "symmetry period p");
    verify->add_option("--m", verify_flags.m, "symmetry offset m");
    verify->add_option("--trials", trials, "trial count");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--order", order, "truncation order K");
    verify->add_flag("--edge", edge, "pin r at the theorem radius");
    verify->add_option("--replay", replay, "recipe text of a witness to re-check");
    verify->add_option("--r", replay_r, "radius for --replay");
    verify->add_option("--format", verify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    TheoremFlags sharp_flags;
    std::vector<double> a_grid;
    std::vector<double> eps_grid;
    auto* sharp = app.add_subcommand("sharpness", "certify that a radius cannot be improved");
    sharp->add_option("--theorem", sharp_flags.theorem,
                      "theorem id, or thm4-lambda-first / thm4-lambda-second")
        ->required();
    sharp->add_option("--n", sharp_flags.n, "tail start N");
    sharp->add_option("--p", sharp_flags.p, "symmetry period p");
    sharp->add_option("--m", sharp_flags.m, "symmetry offset m");
    sharp->add_option("--a-grid", a_grid, "head parameters to scan")->delimiter(',');
    sharp->add_option("--eps-grid", eps_grid, "relative radius excesses")->delimiter(',');

    TheoremFlags table_flags;
    std::string sweep_param = "a0";
    double from = 0.0, to = 0.9, step = 0.1;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "sweep a radius over a parameter range");
    table->add_option("--sweep", table_flags.theorem, "radius id to sweep")->required();
    table->add_option("--param", sweep_param, "a0, n or p")->required();
    table->add_option("--from", from, "range start")->required();
    table->add_option("--to", to, "range end")->required();
    table->add_option("--step", step, "range step")->required();
    table->add_option("--n", table_flags.n, "fixed N");
    table->add_option("--p", table_flags.p, "fixed p");
    table->add_option("--m", table_flags.m, "fixed m");
    table->add_option("--a0", table_flags.a0, "fixed |a0|");
    table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));

    std::uint64_t sample_seed = 0;
    std::string profile = "blaschke";
    int sample_order = default_order();
    std::string sample_format = "json";
    auto* sample = app.add_subcommand("sample", "draw a deterministic Schur-class sample");
    sample->add_option("--seed", sample_seed, "sampler seed")->required();
    sample->add_option("--profile", profile, "blaschke, schur-params or convex");
    sample->add_option("--order", sample_order, "truncation order K");
    sample->add_option("--format", sample_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (radius->parsed()) return cmd_radius(radius_flags, radius_format);
        if (verify->parsed()) {
            return cmd_verify(verify_flags, trials, seed, order, edge, replay, replay_r,
                              verify_format);
        }
        if (sharp->parsed()) return cmd_sharpness(sharp_flags, a_grid, eps_grid);
        if (table->parsed()) {
            return cmd_table(table_flags, sweep_param, from, to, step, table_format);
        }
        if (sample->parsed()) return cmd_sample(sample_seed, profile, sample_order, sample_format);
    } catch (const bohr::NoRootInUnitInterval& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const bohr::MultipleRoots& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const bohr::NoWitnessFound& e) {
        std::cerr << "no witness: " << e.what() << '\n';
        return kExitFailure;
    } catch (const bohr::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
