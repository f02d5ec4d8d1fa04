#pragma once

#include <string>

#include "bohr/certify.hpp"
#include "bohr/verify.hpp"

namespace bohr {

/// Documented report schema:
/// { "theorem": str, "params": obj, "trials": int, "seed": int, "order": int,
///   "worst_margin": float, "failures": [ { "recipe": str, "z_re": float,
///   "z_im": float, "r": float, "value_lower": float, "value_upper": float } ],
///   "elapsed_ms": int }
/// include_timing=false zeroes elapsed_ms so reruns compare byte-identical.
std::string report_to_json(const VerificationReport& rep, bool include_timing = true,
                           int indent = 2);

std::string certificate_to_json(const SharpnessCertificate& cert, int indent = 2);

/// Decimal text with 17 significant digits (CSV fields, recipe parameters).
std::string format_17(double v);

} // namespace bohr
