#include "bohr/schur.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bohr {

namespace {

constexpr double kSamplerRadiusCap = 0.95; // keeps near-boundary series well conditioned
constexpr int kMaxBlaschkeDegree = 32;

void require_unit(double a, const char* what) {
    if (!(a >= 0.0 && a < 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0,1)");
    }
}

} // namespace

SchurFunction moebius(double a, int sign, int order) {
    require_unit(a, "moebius parameter a");
    if (sign != 1 && sign != -1) throw DomainError("moebius sign must be +1 or -1");
    auto s = TaylorSeries::zero(order);
    s.coeff_ref(0) = a;
    const double head_gap = 1.0 - a * a;
    double geom = 1.0; // (-+a)^{n-1}
    const double ratio = sign > 0 ? -a : a;
    const double lead = sign > 0 ? head_gap : -head_gap;
    for (int n = 1; n <= order; ++n) {
        s.coeff_ref(n) = lead * geom;
        geom *= ratio;
    }
    return {std::move(s), MoebiusRecipe{a, sign}, Complex(a, 0.0)};
}

SchurFunction symmetric_extremal(double a, int p, int m, int sign, int order) {
    require_unit(a, "symmetric extremal parameter a");
    if (p < 1 || m < 0 || m > p) {
        throw DomainError("symmetric extremal requires p >= 1 and 0 <= m <= p");
    }
    if (sign != 1 && sign != -1) throw DomainError("symmetric extremal sign must be +1 or -1");
    auto s = TaylorSeries::zero(order);
    const double head_gap = 1.0 - a * a;
    const double a_m = sign > 0 ? -a : a;
    if (m <= order) s.coeff_ref(m) = a_m;
    const double lead = sign > 0 ? head_gap : -head_gap;
    double geom = 1.0; // a^{n-1}
    for (int n = 1; p * n + m <= order; ++n) {
        s.coeff_ref(p * n + m) = lead * geom;
        geom *= a;
    }
    const Complex head = m == 0 ? Complex(a_m, 0.0) : Complex(0.0, 0.0);
    return {std::move(s), SymmetricExtremalRecipe{a, p, m, sign}, head};
}

SchurFunction blaschke(const std::vector<Complex>& zeros, double phase, int order) {
    if (zeros.empty()) {
        throw DomainError("empty Blaschke product is a unimodular constant, excluded from the class");
    }
    if (static_cast<int>(zeros.size()) > kMaxBlaschkeDegree) {
        throw DomainError("Blaschke degree capped at 32");
    }
    for (const auto& alpha : zeros) {
        if (!(std::abs(alpha) < 1.0)) throw DomainError("Blaschke zeros must satisfy |alpha| < 1");
    }
    auto s = TaylorSeries::constant(std::polar(1.0, phase), order);
    Complex head = std::polar(1.0, phase);
    for (const auto& alpha : zeros) {
        s = mul_linear(s, alpha, -1.0);
        s = div_one_minus_cz(s, std::conj(alpha));
        head *= alpha;
    }
    s.coeff_ref(0) = head; // exact by construction; kill accumulated rounding
    return {std::move(s), BlaschkeRecipe{zeros, phase}, head};
}

SchurFunction from_schur_params(const std::vector<Complex>& params, int order) {
    if (params.empty()) throw DomainError("Schur parameter list must be nonempty");
    for (const auto& g : params) {
        if (!(std::abs(g) < 1.0)) throw DomainError("Schur parameters must satisfy |gamma| < 1");
    }
    auto f = TaylorSeries::constant(params.back(), order);
    for (int j = static_cast<int>(params.size()) - 2; j >= 0; --j) {
        const Complex g = params[static_cast<std::size_t>(j)];
        const auto zf = shift(f, 1);
        const auto num = add(TaylorSeries::constant(g, order), zf);
        const auto den = add(TaylorSeries::constant(1.0, order), scale(zf, std::conj(g)));
        f = div(num, den);
    }
    f.coeff_ref(0) = params.front(); // f_j(0) = gamma_j exactly
    return {std::move(f), SchurParamsRecipe{params}, params.front()};
}

namespace {

Recipe sample_recipe(CounterRng& rng, SampleProfile profile, bool allow_combo) {
    switch (profile) {
    case SampleProfile::Blaschke: {
        const int degree = rng.uniform_int(1, 8);
        std::vector<Complex> zeros(static_cast<std::size_t>(degree));
        for (auto& z : zeros) z = rng.uniform_disk(kSamplerRadiusCap);
        const double phase = rng.uniform(0.0, 2.0 * M_PI);
        return BlaschkeRecipe{std::move(zeros), phase};
    }
    case SampleProfile::SchurParams: {
        const int depth = rng.uniform_int(1, 10);
        std::vector<Complex> params(static_cast<std::size_t>(depth));
        for (auto& g : params) g = rng.uniform_disk(kSamplerRadiusCap);
        return SchurParamsRecipe{std::move(params)};
    }
    case SampleProfile::ConvexCombo: {
        if (!allow_combo) break;
        const int parts = rng.uniform_int(2, 4);
        std::vector<double> weights(static_cast<std::size_t>(parts));
        double total = 0.0;
        for (auto& w : weights) {
            w = -std::log(1.0 - rng.uniform01()); // Exp(1) -> Dirichlet(1,..,1)
            total += w;
        }
        for (auto& w : weights) w /= total;
        std::vector<Recipe> inner;
        inner.reserve(static_cast<std::size_t>(parts));
        for (int i = 0; i < parts; ++i) {
            const auto sub = rng.uniform01() < 0.5 ? SampleProfile::Blaschke
                                                   : SampleProfile::SchurParams;
            inner.push_back(sample_recipe(rng, sub, false));
        }
        return ConvexComboRecipe{std::move(weights), std::move(inner)};
    }
    }
    throw DomainError("unreachable sample profile");
}

} // namespace

SchurFunction build(const Recipe& recipe, int order) {
    return std::visit(
        [order](const auto& r) -> SchurFunction {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, MoebiusRecipe>) {
                return moebius(r.a, r.sign, order);
            } else if constexpr (std::is_same_v<T, SymmetricExtremalRecipe>) {
                return symmetric_extremal(r.a, r.p, r.m, r.sign, order);
            } else if constexpr (std::is_same_v<T, BlaschkeRecipe>) {
                return blaschke(r.zeros, r.phase, order);
            } else if constexpr (std::is_same_v<T, SchurParamsRecipe>) {
                return from_schur_params(r.params, order);
            } else {
                if (r.parts.size() != r.weights.size() || r.parts.empty()) {
                    throw DomainError("convex combo needs matching nonempty weights and parts");
                }
                auto acc = TaylorSeries::zero(order);
                Complex head = 0.0;
                for (std::size_t i = 0; i < r.parts.size(); ++i) {
                    const auto part = build(r.parts[i], order);
                    acc = add(acc, scale(part.series, r.weights[i]));
                    head += r.weights[i] * part.head;
                }
                return {std::move(acc), r, head};
            }
        },
        recipe);
}

SchurFunction sample_schur(CounterRng& rng, SampleProfile profile, int order) {
    return build(sample_recipe(rng, profile, true), order);
}

const char* profile_name(SampleProfile profile) {
    switch (profile) {
    case SampleProfile::Blaschke: return "blaschke";
    case SampleProfile::SchurParams: return "schur-params";
    case SampleProfile::ConvexCombo: return "convex";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Recipe text form.  Grammar (no spaces):
//   moebius(s,a)            s in {+,-}
//   symext(s,a,p,m)
//   blaschke(phase;re,im;re,im;...)
//   schur(re,im;re,im;...)
//   combo(w1,w2,...;part;part;...)   parts split at depth zero
// Reals are printed with 17 significant digits so replay is bit-exact.

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(Complex z) { return fmt17(z.real()) + "," + fmt17(z.imag()); }

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw DomainError("recipe parse error: expected '" + std::string(1, c) +
                                       "' at offset " + std::to_string(pos));
    }
};

std::string_view read_tag(Cursor& c) {
    const std::size_t start = c.pos;
    while (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '-') ++c.pos;
    return c.text.substr(start, c.pos - start);
}

// Everything up to the matching close paren of the '(' just consumed.
std::string_view read_body(Cursor& c) {
    const std::size_t start = c.pos;
    int depth = 1;
    while (c.pos < c.text.size()) {
        const char ch = c.text[c.pos];
        if (ch == '(') ++depth;
        if (ch == ')' && --depth == 0) {
            const auto body = c.text.substr(start, c.pos - start);
            ++c.pos;
            return body;
        }
        ++c.pos;
    }
    throw DomainError("recipe parse error: unbalanced parentheses");
}

std::vector<std::string_view> split_depth0(std::string_view body, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == sep && depth == 0) {
            out.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(body.substr(start));
    return out;
}

double parse_real(std::string_view s) {
    std::string tmp(s);
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str() || *end != '\0') {
        throw DomainError("recipe parse error: bad number '" + tmp + "'");
    }
    return v;
}

Complex parse_complex(std::string_view s) {
    const auto parts = split_depth0(s, ',');
    if (parts.size() != 2) throw DomainError("recipe parse error: complex needs re,im");
    return {parse_real(parts[0]), parse_real(parts[1])};
}

long parse_int(std::string_view s) { return static_cast<long>(parse_real(s)); }

Recipe parse_recipe(std::string_view text);

Recipe parse_body(std::string_view tag, std::string_view body) {
    if (tag == "moebius" || tag == "symext") {
        const auto f = split_depth0(body, ',');
        if (f.empty()) throw DomainError("recipe parse error: empty body");
        const int sign = f[0] == "+" ? 1 : f[0] == "-" ? -1
                                                       : throw DomainError("recipe sign must be + or -");
        if (tag == "moebius") {
            if (f.size() != 2) throw DomainError("moebius recipe needs (sign,a)");
            return MoebiusRecipe{parse_real(f[1]), sign};
        }
        if (f.size() != 4) throw DomainError("symext recipe needs (sign,a,p,m)");
        return SymmetricExtremalRecipe{parse_real(f[1]), static_cast<int>(parse_int(f[2])),
                                       static_cast<int>(parse_int(f[3])), sign};
    }
    if (tag == "blaschke") {
        const auto f = split_depth0(body, ';');
        if (f.size() < 2) throw DomainError("blaschke recipe needs phase and zeros");
        BlaschkeRecipe r;
        r.phase = parse_real(f[0]);
        for (std::size_t i = 1; i < f.size(); ++i) r.zeros.push_back(parse_complex(f[i]));
        return r;
    }
    if (tag == "schur") {
        const auto f = split_depth0(body, ';');
        SchurParamsRecipe r;
        for (const auto& part : f) r.params.push_back(parse_complex(part));
        return r;
    }
    if (tag == "combo") {
        const auto f = split_depth0(body, ';');
        if (f.size() < 3) throw DomainError("combo recipe needs weights and >= 2 parts");
        ConvexComboRecipe r;
        for (const auto& w : split_depth0(f[0], ',')) r.weights.push_back(parse_real(w));
        for (std::size_t i = 1; i < f.size(); ++i) r.parts.push_back(parse_recipe(f[i]));
        if (r.weights.size() != r.parts.size()) {
            throw DomainError("combo recipe weight/part count mismatch");
        }
        return r;
    }
    throw DomainError("recipe parse error: unknown tag '" + std::string(tag) + "'");
}

Recipe parse_recipe(std::string_view text) {
    Cursor c{text};
    const auto tag = read_tag(c);
    c.expect('(');
    const auto body = read_body(c);
    if (c.pos != text.size()) throw DomainError("recipe parse error: trailing characters");
    return parse_body(tag, body);
}

} // namespace

std::string recipe_to_string(const Recipe& recipe) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, MoebiusRecipe>) {
                return std::string("moebius(") + (r.sign > 0 ? "+" : "-") + "," + fmt17(r.a) + ")";
            } else if constexpr (std::is_same_v<T, SymmetricExtremalRecipe>) {
                return std::string("symext(") + (r.sign > 0 ? "+" : "-") + "," + fmt17(r.a) + "," +
                       std::to_string(r.p) + "," + std::to_string(r.m) + ")";
            } else if constexpr (std::is_same_v<T, BlaschkeRecipe>) {
                std::string out = "blaschke(" + fmt17(r.phase);
                for (const auto& z : r.zeros) out += ";" + fmt_complex(z);
                return out + ")";
            } else if constexpr (std::is_same_v<T, SchurParamsRecipe>) {
                std::string out = "schur(";
                for (std::size_t i = 0; i < r.params.size(); ++i) {
                    if (i) out += ";";
                    out += fmt_complex(r.params[i]);
                }
                return out + ")";
            } else {
                std::string out = "combo(";
                for (std::size_t i = 0; i < r.weights.size(); ++i) {
                    if (i) out += ",";
                    out += fmt17(r.weights[i]);
                }
                for (const auto& part : r.parts) out += ";" + recipe_to_string(part);
                return out + ")";
            }
        },
        recipe);
}

Recipe recipe_from_string(std::string_view text) { return parse_recipe(text); }

} // namespace bohr
