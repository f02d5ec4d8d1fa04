#include "bohr/certify.hpp"

#include <cmath>
#include <sstream>

namespace bohr {

namespace {

const double kGoldenWindow = (3.0 - std::sqrt(5.0)) / 2.0; // top of the Thm 6 windows

std::string witness_recipe(const RadiusQuery& q, double a) {
    switch (q.theorem) {
    case Theorem::Thm1R:
    case Theorem::Thm1Rsq:
    case Theorem::Thm2:
    case Theorem::Thm2Sq:
    case Theorem::ThmF:
    case Theorem::Thm7J:
        return recipe_to_string(MoebiusRecipe{a, +1});
    case Theorem::Thm3:
    case Theorem::Cor1a:
    case Theorem::Cor1b:
        return recipe_to_string(SymmetricExtremalRecipe{a, q.p, q.m, -1});
    case Theorem::Cor2A:
    case Theorem::Cor2B:
        return recipe_to_string(SymmetricExtremalRecipe{a, q.p, q.p, -1});
    case Theorem::ThmD:
        return recipe_to_string(q.p == 1 && q.m == 0
                                    ? Recipe(MoebiusRecipe{a, -1})
                                    : Recipe(SymmetricExtremalRecipe{a, q.p, q.m, -1}));
    default:
        return recipe_to_string(MoebiusRecipe{a, -1});
    }
}

double window_cap(const RadiusQuery& q) {
    switch (q.theorem) {
    case Theorem::Thm6G:
    case Theorem::Thm6H:
        return kGoldenWindow - 1e-9;
    default:
        return 1.0 - 1e-9;
    }
}

} // namespace

double extremal_failure_radius(const RadiusQuery& q, double a) {
    RadiusQuery at = q;
    at.a = a;
    switch (q.theorem) {
    case Theorem::ThmD:
        // Classical case: phi_a fails past 1/(1+2a), approaching 1/3 as a -> 1.
        if (q.p == 1 && q.m == 0) return 1.0 / (1.0 + 2.0 * a);
        return solve(q);
    case Theorem::Thm4First:
        return 1.0 / 3.0;
    case Theorem::Thm4Second:
        // 1/(3-a) is sharp only as an approximation; the family fails past 1/2.
        return 0.5;
    case Theorem::Thm5:
        return 1.0 / 3.0;
    default:
        return radius_depends_on_head(q.theorem) ? solve(at) : solve(q);
    }
}

double extremal_functional_value(const RadiusQuery& q, double a, double r) {
    using namespace closed_form;
    switch (q.theorem) {
    case Theorem::ThmB: return refined_bohr_moebius(a, r, Head::Modulus);
    case Theorem::Thm1R: return rogosinski_psi(a, r, q.n, 1);
    case Theorem::Thm1Rsq: return rogosinski_psi(a, r, q.n, 2);
    case Theorem::Thm2: return rogosinski_psi(a, r, 1, 1);
    case Theorem::Thm2Sq: return rogosinski_psi(a, r, 1, 2);
    case Theorem::ThmD: return bohr_sum_symmetric_extremal(a, r, q.p, q.m);
    case Theorem::Thm3: return symmetric_refined_extremal(a, r, q.p, q.m);
    case Theorem::Cor1a: return symmetric_refined_extremal(a, r, q.p, 0);
    case Theorem::Cor1b: {
        const double rho = std::pow(r, q.p);
        return a * a + (1.0 - a * a) * rho / (1.0 - rho);
    }
    case Theorem::Cor2A: return cor2_extremal(a, r, q.p, InnerStart::FromSecond);
    case Theorem::Cor2B: return cor2_extremal(a, r, q.p, InnerStart::FromFirst);
    case Theorem::Thm4First: return area_refined_moebius(a, r, 8.0 / 9.0, Head::Modulus);
    case Theorem::Thm4Second: return area_refined_moebius(a, r, 9.0 / 8.0, Head::Square);
    case Theorem::Thm5: return distance_refined_moebius(a, r, 2, Head::Modulus);
    case Theorem::Thm6G: return distance_refined_moebius(a, r, 1, Head::Modulus);
    case Theorem::Thm6H: return distance_refined_moebius(a, r, 1, Head::Square);
    case Theorem::ThmF: return derivative_refined_psi(a, r, 1, true);
    case Theorem::Thm7J: return derivative_refined_psi(a, r, 2, true);
    }
    throw DomainError("no extremal family for this theorem variant");
}

SharpnessCertificate certify_sharpness(const RadiusQuery& q,
                                       std::span<const double> a_grid,
                                       std::span<const double> eps_grid,
                                       bool lambda_inflation) {
    if (a_grid.empty() || eps_grid.empty()) {
        throw DomainError("certify_sharpness requires nonempty grids");
    }
    if (lambda_inflation && q.theorem != Theorem::Thm4First &&
        q.theorem != Theorem::Thm4Second) {
        throw DomainError("lambda inflation only applies to the area-refined theorem");
    }

    SharpnessCertificate cert;
    cert.query = q;
    cert.lambda_inflation = lambda_inflation;
    if (lambda_inflation) {
        cert.lambda = (q.theorem == Theorem::Thm4First ? 8.0 / 9.0 : 9.0 / 8.0) * 1.01;
    }

    // Theorems whose sharpness argument pins the head parameter.
    std::vector<double> heads(a_grid.begin(), a_grid.end());
    if (q.theorem == Theorem::Thm5) {
        heads.push_back(4.0 * std::sqrt(2.0) - 5.0);
    } else if (q.theorem == Theorem::ThmD && !(q.p == 1 && q.m == 0)) {
        heads = {extremal_a_for_thmD(q.p, q.m)};
    }

    std::ostringstream scanned;
    const double cap = window_cap(q);
    for (const double a : heads) {
        for (const double eps : eps_grid) {
            double r;
            double value;
            if (lambda_inflation) {
                r = q.theorem == Theorem::Thm4First ? 1.0 / 3.0 : 1.0 / (3.0 - a);
                value = closed_form::area_refined_moebius(
                    a, r, cert.lambda,
                    q.theorem == Theorem::Thm4First ? Head::Modulus : Head::Square);
                (void)eps; // the inflation replaces the radius excess
            } else {
                r = std::min((1.0 + eps) * extremal_failure_radius(q, a), cap);
                value = extremal_functional_value(q, a, r);
                RadiusQuery at = q;
                at.a = a;
                if (!(r > solve(at))) {
                    scanned << " (a=" << a << ",r=" << r << ",below-radius)";
                    continue;
                }
            }
            if (value > 1.0 + kWitnessMargin) {
                cert.witnesses.push_back(
                    {a, r, ValueInterval::exact(value), witness_recipe(q, a)});
            } else {
                scanned << " (a=" << a << ",eps=" << eps << ",value=" << value << ")";
            }
            if (lambda_inflation) break; // eps plays no role; one row per a
        }
    }

    std::ostringstream grid;
    grid << "a={";
    for (std::size_t i = 0; i < heads.size(); ++i) grid << (i ? "," : "") << heads[i];
    grid << "} eps={";
    for (std::size_t i = 0; i < eps_grid.size(); ++i) grid << (i ? "," : "") << eps_grid[i];
    grid << "}";
    cert.grid = grid.str();

    if (!cert.valid()) {
        throw NoWitnessFound("no sharpness witness for " + theorem_id(q.theorem) +
                             "; scanned:" + scanned.str());
    }
    return cert;
}

SharpnessCertificate certify_sharpness(const RadiusQuery& q) {
    return certify_sharpness(q, kDefaultAGrid, kDefaultEpsGrid, false);
}

double threshold_a(Theorem which, double r) {
    if (which == Theorem::Thm6G) {
        if (!(r > 0.2 && r < kGoldenWindow)) {
            throw DomainError("threshold_a(G) needs 1/5 < r < (3-sqrt(5))/2");
        }
        const double a = (3.0 * (1.0 - r) - std::sqrt(5.0 * r * r - 6.0 * r + 5.0)) / (2.0 * r);
        if (!(a > 0.0 && a < 1.0)) throw DomainError("threshold_a(G) left (0,1)");
        return a;
    }
    if (which == Theorem::Thm6H) {
        if (!(r > 1.0 / 3.0 && r < kGoldenWindow)) {
            throw DomainError("threshold_a(H) needs 1/3 < r < (3-sqrt(5))/2");
        }
        const double a = (r * r - 3.0 * r + 1.0) / (r - 2.0 * r * r);
        if (!(a > 0.0 && a < 1.0)) throw DomainError("threshold_a(H) left (0,1)");
        return a;
    }
    throw DomainError("threshold_a is defined for thm6-g / thm6-h only");
}

RemarkReport remark_thm4_counterexample(double c) {
    if (!(c > 0.0)) throw DomainError("remark requires c > 0");
    const auto f = moebius(0.0, +1); // the identity map z
    RemarkReport rep;
    rep.c = c;
    rep.value = area_refined(f, 0.5, c, Head::Square);
    rep.closed_form = 1.0 + c / 4.0;
    rep.exceeds_one = rep.value.lower > 1.0;
    return rep;
}

} // namespace bohr
