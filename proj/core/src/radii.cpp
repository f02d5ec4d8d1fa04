#include "bohr/radii.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace bohr {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kBisectWidth = 1e-14;

void check_params(const RadiusQuery& q) {
    if (!(q.a >= 0.0 && q.a < 1.0)) throw DomainError("radius parameter a must lie in [0,1)");
    if (q.n < 1) throw DomainError("radius parameter n must satisfy n >= 1");
    if (q.p < 1) throw DomainError("radius parameter p must satisfy p >= 1");
    if (q.m < 0 || q.m > q.p) throw DomainError("radius parameter m must satisfy 0 <= m <= p");
}

using Fn = std::function<double(double)>;

double bisect(const Fn& f, double lo, double hi) {
    double flo = f(lo);
    while (hi - lo > kBisectWidth) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Scan grid over (0,1): the 1e-3 lattice plus a few near-1 points so roots
/// close to the boundary still get bracketed.
std::vector<double> scan_points() {
    std::vector<double> xs;
    xs.reserve(1003);
    for (int k = 1; k <= 999; ++k) xs.push_back(k * kScanStep);
    xs.push_back(1.0 - 1e-4);
    xs.push_back(1.0 - 1e-5);
    xs.push_back(1.0 - 1e-6);
    return xs;
}

struct ScanOutcome {
    std::vector<std::pair<double, double>> brackets;
};

ScanOutcome scan_sign_changes(const Fn& f) {
    ScanOutcome out;
    const auto xs = scan_points();
    double prev_x = xs.front();
    double prev_f = f(prev_x);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x = xs[i];
        const double fx = f(x);
        if ((prev_f < 0.0 && fx >= 0.0) || (prev_f >= 0.0 && fx < 0.0)) {
            out.brackets.emplace_back(prev_x, x);
        }
        prev_x = x;
        prev_f = fx;
    }
    return out;
}

enum class RootPick { Unique, Rightmost };

RadiusResult solve_polynomial(const Fn& f, RootPick pick, const char* name) {
    const auto scan = scan_sign_changes(f);
    if (scan.brackets.empty()) {
        throw NoRootInUnitInterval(std::string(name) + ": no sign change on (0,1)");
    }
    if (pick == RootPick::Unique && scan.brackets.size() > 1) {
        throw MultipleRoots(std::string(name) + ": expected a unique positive root, found " +
                            std::to_string(scan.brackets.size()));
    }
    const auto& b = pick == RootPick::Rightmost ? scan.brackets.back() : scan.brackets.front();
    RadiusResult res;
    res.radius = bisect(f, b.first, b.second);
    res.residual = std::abs(f(res.radius));
    res.sign_changes = static_cast<int>(scan.brackets.size());
    return res;
}

/// Double-root fallback: bracket critical points through the derivative and
/// accept the right-most one where the equation itself (nearly) vanishes.
RadiusResult solve_double_root(const Fn& f, const Fn& df, const char* name) {
    const auto scan = scan_sign_changes(df);
    RadiusResult res;
    bool found = false;
    for (const auto& b : scan.brackets) {
        const double x = bisect(df, b.first, b.second);
        if (std::abs(f(x)) < 1e-10) {
            res.radius = x;
            res.residual = std::abs(f(x));
            found = true;
        }
    }
    if (!found) {
        throw NoRootInUnitInterval(std::string(name) +
                                   ": no sign change and no vanishing critical point on (0,1)");
    }
    res.sign_changes = 0;
    res.via_minimum = true;
    return res;
}

} // namespace

double cor2_alpha(double a) {
    return 1.0 + a + std::sqrt((1.0 - a) * (5.0 + 3.0 * a));
}

double equation_residual(const RadiusQuery& q, double r) {
    const double a = q.a;
    switch (q.theorem) {
    case Theorem::ThmB: return std::abs((2.0 + a) * r - 1.0);
    case Theorem::Thm1R: return std::abs(2.0 * (1.0 + r) * std::pow(r, q.n) - (1.0 - r) * (1.0 - r));
    case Theorem::Thm1Rsq: return std::abs((1.0 + r) * std::pow(r, q.n) - (1.0 - r) * (1.0 - r));
    case Theorem::Thm2: return std::abs((1.0 - a - a * a) * r * r - (3.0 + a) * r + 1.0);
    case Theorem::Thm2Sq:
        return std::abs((1.0 - a * a) * r * r * r - (1.0 + 2.0 * a) * r * r - 2.0 * r + 1.0);
    case Theorem::ThmD:
        return std::abs(-6.0 * std::pow(r, q.p - q.m) + std::pow(r, 2 * (q.p - q.m)) +
                        8.0 * std::pow(r, 2 * q.p) + 1.0);
    case Theorem::Thm3:
        return std::abs((1.0 - a - a * a) * std::pow(r, q.p + q.m) + std::pow(r, q.p) +
                        a * std::pow(r, q.m) - 1.0);
    case Theorem::Cor1a: return std::abs((2.0 + a) * std::pow(r, q.p) - 1.0);
    case Theorem::Cor1b: return std::abs(2.0 * std::pow(r, q.p) - 1.0);
    case Theorem::Cor2A: return std::abs(cor2_alpha(a) * std::pow(r, q.p) - 2.0);
    case Theorem::Cor2B: {
        const double x = std::pow(r, q.p);
        return std::abs(x * x - 5.0 * x + 2.0);
    }
    case Theorem::ThmF:
        return std::abs(2.0 * std::pow(r, 4) + 3.0 * std::pow(r, 3) + r * r + 3.0 * r - 1.0);
    case Theorem::Thm7J:
        return std::abs(1.0 - 2.0 * r - r * r - std::pow(r, 3) - std::pow(r, 4));
    case Theorem::Thm4Second: return std::abs((3.0 - a) * r - 1.0);
    case Theorem::Thm4First:
    case Theorem::Thm5:
    case Theorem::Thm6G:
    case Theorem::Thm6H:
        return 0.0; // bare constants
    }
    return 0.0;
}

RadiusResult solve_detailed(const RadiusQuery& q) {
    check_params(q);
    const double a = q.a;
    RadiusResult res;
    switch (q.theorem) {
    case Theorem::ThmB:
        res.radius = 1.0 / (2.0 + a);
        break;
    case Theorem::Thm1R:
        return solve_polynomial(
            [&](double r) { return 2.0 * (1.0 + r) * std::pow(r, q.n) - (1.0 - r) * (1.0 - r); },
            RootPick::Unique, "thm1-r");
    case Theorem::Thm1Rsq:
        return solve_polynomial(
            [&](double r) { return (1.0 + r) * std::pow(r, q.n) - (1.0 - r) * (1.0 - r); },
            RootPick::Unique, "thm1-rsq");
    case Theorem::Thm2:
        res.radius = 2.0 / (3.0 + a + std::sqrt(5.0) * (1.0 + a));
        res.residual = equation_residual(q, res.radius);
        return res;
    case Theorem::Thm2Sq:
        return solve_polynomial(
            [&](double r) {
                return (1.0 - a * a) * r * r * r - (1.0 + 2.0 * a) * r * r - 2.0 * r + 1.0;
            },
            RootPick::Unique, "thm2-sq");
    case Theorem::ThmD: {
        const int d1 = q.p - q.m;
        const auto f = [&](double r) {
            return -6.0 * std::pow(r, d1) + std::pow(r, 2 * d1) + 8.0 * std::pow(r, 2 * q.p) + 1.0;
        };
        try {
            return solve_polynomial(f, RootPick::Rightmost, "thmd");
        } catch (const NoRootInUnitInterval&) {
            const auto df = [&](double r) {
                double v = 16.0 * q.p * std::pow(r, 2 * q.p - 1);
                if (d1 >= 1) {
                    v += -6.0 * d1 * std::pow(r, d1 - 1) + 2.0 * d1 * std::pow(r, 2 * d1 - 1);
                }
                return v;
            };
            return solve_double_root(f, df, "thmd");
        }
    }
    case Theorem::Thm3:
        return solve_polynomial(
            [&](double r) {
                return (1.0 - a - a * a) * std::pow(r, q.p + q.m) + std::pow(r, q.p) +
                       a * std::pow(r, q.m) - 1.0;
            },
            RootPick::Unique, "thm3");
    case Theorem::Cor1a:
        res.radius = std::pow(2.0 + a, -1.0 / q.p);
        break;
    case Theorem::Cor1b:
        res.radius = std::pow(2.0, -1.0 / q.p);
        break;
    case Theorem::Cor2A:
        res.radius = std::pow(2.0 / cor2_alpha(a), 1.0 / q.p);
        break;
    case Theorem::Cor2B:
        res.radius = std::pow((5.0 - std::sqrt(17.0)) / 2.0, 1.0 / q.p);
        break;
    case Theorem::Thm4First:
    case Theorem::Thm5:
    case Theorem::Thm6H:
        res.radius = 1.0 / 3.0;
        break;
    case Theorem::Thm4Second:
        res.radius = 1.0 / (3.0 - a);
        break;
    case Theorem::Thm6G:
        res.radius = 0.2;
        break;
    case Theorem::ThmF:
        res.radius = (std::sqrt(17.0) - 3.0) / 4.0;
        break;
    case Theorem::Thm7J:
        return solve_polynomial(
            [&](double r) { return 1.0 - 2.0 * r - r * r - std::pow(r, 3) - std::pow(r, 4); },
            RootPick::Unique, "thm7-j");
    }
    res.residual = equation_residual(q, res.radius);
    return res;
}

double solve(const RadiusQuery& q) { return solve_detailed(q).radius; }

double extremal_a_for_thmD(int p, int m) {
    const double r = solve({Theorem::ThmD, 1, p, m, 0.0});
    const double rp = std::pow(r, p);
    const double a = (1.0 - std::sqrt(1.0 - rp * rp) / std::sqrt(2.0)) / rp;
    if (!(a >= 0.0 && a < 1.0)) {
        throw DomainError("thmD extremal parameter left [0,1): a = " + std::to_string(a));
    }
    return a;
}

namespace {

struct IdEntry {
    Theorem theorem;
    const char* id;
};

constexpr std::array<IdEntry, 18> kIds{{
    {Theorem::ThmB, "thmb-modulus"},
    {Theorem::Thm1R, "thm1-r"},
    {Theorem::Thm1Rsq, "thm1-rsq"},
    {Theorem::Thm2, "thm2"},
    {Theorem::Thm2Sq, "thm2-sq"},
    {Theorem::ThmD, "thmd"},
    {Theorem::Thm3, "thm3"},
    {Theorem::Cor1a, "cor1a"},
    {Theorem::Cor1b, "cor1b"},
    {Theorem::Cor2A, "cor2a"},
    {Theorem::Cor2B, "cor2b"},
    {Theorem::Thm4First, "thm4-first"},
    {Theorem::Thm4Second, "thm4-second"},
    {Theorem::Thm5, "thm5"},
    {Theorem::Thm6G, "thm6-g"},
    {Theorem::Thm6H, "thm6-h"},
    {Theorem::ThmF, "thmf"},
    {Theorem::Thm7J, "thm7-j"},
}};

} // namespace

std::string theorem_id(Theorem t) {
    for (const auto& e : kIds) {
        if (e.theorem == t) return e.id;
    }
    return "?";
}

std::optional<Theorem> theorem_from_id(std::string_view id) {
    for (const auto& e : kIds) {
        if (id == e.id) return e.theorem;
    }
    return std::nullopt;
}

bool radius_depends_on_head(Theorem t) {
    switch (t) {
    case Theorem::ThmB:
    case Theorem::Thm2:
    case Theorem::Thm2Sq:
    case Theorem::Thm3:
    case Theorem::Cor1a:
    case Theorem::Cor2A:
    case Theorem::Thm4Second:
        return true;
    default:
        return false;
    }
}

} // namespace bohr
