#include "bohr/report_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace bohr {

namespace {

using nlohmann::json;

json params_obj(const VerificationReport& rep) {
    json params{
        {"n", rep.query.n},
        {"p", rep.query.p},
        {"m", rep.query.m},
        {"edge", rep.edge},
        {"slack", kInequalitySlack},
        {"theta_grid", 128},
        {"profiles", "blaschke,schur-params,convex"},
    };
    if (!rep.note.empty()) params["note"] = rep.note;
    return params;
}

} // namespace

std::string report_to_json(const VerificationReport& rep, bool include_timing, int indent) {
    json failures = json::array();
    for (const auto& f : rep.failures) {
        failures.push_back(json{
            {"recipe", f.recipe},
            {"z_re", f.z.real()},
            {"z_im", f.z.imag()},
            {"r", f.r},
            {"value_lower", f.value.lower},
            {"value_upper", f.value.upper},
        });
    }
    const json doc{
        {"theorem", rep.check},
        {"params", params_obj(rep)},
        {"trials", rep.trials},
        {"seed", rep.seed},
        {"order", rep.order},
        {"worst_margin", rep.worst_margin},
        {"failures", failures},
        {"elapsed_ms", include_timing ? rep.elapsed_ms : 0},
    };
    return doc.dump(indent);
}

std::string certificate_to_json(const SharpnessCertificate& cert, int indent) {
    json witnesses = json::array();
    for (const auto& w : cert.witnesses) {
        witnesses.push_back(json{
            {"a", w.a},
            {"r", w.r},
            {"value_lower", w.value.lower},
            {"value_upper", w.value.upper},
            {"recipe", w.recipe},
        });
    }
    json doc{
        {"theorem", theorem_id(cert.query.theorem)},
        {"params", json{{"n", cert.query.n}, {"p", cert.query.p}, {"m", cert.query.m}}},
        {"grid", cert.grid},
        {"witnesses", witnesses},
        {"valid", cert.valid()},
    };
    if (cert.lambda_inflation) doc["lambda"] = cert.lambda;
    return doc.dump(indent);
}

std::string format_17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace bohr
