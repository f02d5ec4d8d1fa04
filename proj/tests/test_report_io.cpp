#include <doctest.h>

#include <json.hpp>

#include "bohr/report_io.hpp"
#include "test_util.hpp"

using namespace bohr;
using nlohmann::json;

TEST_CASE("report JSON carries the documented schema and round-trips") {
    const auto rep = run({Theorem::Thm2}, 40, 77);
    const auto text = report_to_json(rep);
    const auto doc = json::parse(text);

    CHECK(doc.at("theorem") == "thm2");
    CHECK(doc.at("trials") == 40);
    CHECK(doc.at("seed") == 77);
    CHECK(doc.at("order") == kDefaultOrder);
    CHECK(doc.at("worst_margin").is_number());
    CHECK(doc.at("failures").is_array());
    CHECK(doc.at("elapsed_ms").is_number());
    CHECK(doc.at("params").is_object());
    CHECK(doc.at("params").at("slack") == kInequalitySlack);
    CHECK(doc.at("params").at("theta_grid") == 128);

    // Parse -> re-serialize is idempotent.
    CHECK(json::parse(doc.dump(2)).dump(2) == doc.dump(2));
}

TEST_CASE("failure entries expose replayable fields") {
    const auto rep = run_replay({Theorem::Thm5}, recipe_from_string("moebius(-,0.8)"),
                                1.0 / 3.0);
    REQUIRE_FALSE(rep.passed());
    const auto doc = json::parse(report_to_json(rep));
    const auto& failure = doc.at("failures").at(0);
    CHECK(failure.at("recipe").is_string());
    CHECK(failure.at("z_re").is_number());
    CHECK(failure.at("z_im").is_number());
    CHECK(failure.at("r").is_number());
    CHECK(failure.at("value_lower").get<double>() > 1.0);
    CHECK(failure.at("value_upper").get<double>() >=
          failure.at("value_lower").get<double>());

    // The recipe replays against the same theorem.
    const auto again =
        run_replay({Theorem::Thm5},
                   recipe_from_string(failure.at("recipe").get<std::string>()),
                   failure.at("r").get<double>());
    CHECK_FALSE(again.passed());
}

TEST_CASE("timing can be zeroed for byte comparisons") {
    const auto rep = run({Theorem::ThmB}, 30, 5);
    const auto a = json::parse(report_to_json(rep, false));
    CHECK(a.at("elapsed_ms") == 0);
}

TEST_CASE("certificate JSON names theorem, grid and witnesses") {
    const auto cert = certify_sharpness({Theorem::Thm2});
    const auto doc = json::parse(certificate_to_json(cert));
    CHECK(doc.at("theorem") == "thm2");
    CHECK(doc.at("valid") == true);
    CHECK(doc.at("grid").is_string());
    REQUIRE(doc.at("witnesses").is_array());
    CHECK(doc.at("witnesses").size() == cert.witnesses.size());
    CHECK(doc.at("witnesses").at(0).at("value_lower").get<double>() > 1.0);

    const auto lam = certify_sharpness({Theorem::Thm4First}, kDefaultAGrid,
                                       kDefaultEpsGrid, true);
    const auto lam_doc = json::parse(certificate_to_json(lam));
    CHECK(lam_doc.at("lambda").get<double>() > 8.0 / 9.0);
}

TEST_CASE("17-significant-digit formatting round-trips doubles") {
    CounterRng rng(123, 0);
    for (int i = 0; i < 200; ++i) {
        const double v = (rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform_int(-12, 3));
        const double back = std::stod(format_17(v));
        CHECK(back == v);
    }
    CHECK(format_17(0.1) == "0.10000000000000001");
}
