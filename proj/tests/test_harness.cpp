#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "isingecho/config.hpp"
#include "isingecho/echo.hpp"
#include "isingecho/emit.hpp"
#include "isingecho/sweep.hpp"

using namespace isingecho;
namespace fs = std::filesystem;

namespace {

SweepConfig small_config(double delta = 0.1) {
    SweepConfig cfg;
    cfg.base = ChainParams{.N = 8, .J = 1.0, .lambda = 0.5, .delta = delta, .a = 1.0};
    cfg.lambda = {0.5, 1.5, 0.5};
    cfg.time = {0.0, 2.0, 1.0};
    return cfg;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempFile {
    fs::path path;
    explicit TempFile(const char* name) : path(fs::temp_directory_path() / name) {}
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("grid ranges") {
    CHECK(GridRange{0.9, 0.9, 0.0}.scalar());
    CHECK(GridRange{0.9, 0.9, 0.0}.points() == std::vector<double>{0.9});
    const auto pts = GridRange{0.0, 2.0, 0.5}.points();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS((GridRange{1.0, 0.5, 0.1}.validate("x")), std::invalid_argument);
    CHECK_THROWS_AS((GridRange{0.0, 1.0, 0.0}.validate("x")), std::invalid_argument);
    CHECK_THROWS_AS((GridRange{0.0, 1.0, -0.1}.validate("x")), std::invalid_argument);
}

TEST_CASE("sweep config validation") {
    auto cfg = small_config();
    CHECK_NOTHROW(cfg.validate());
    cfg.outputs = {{"csv", "a.csv"}, {"svg", "a.svg"}};
    CHECK_NOTHROW(cfg.validate());
    cfg.outputs.push_back({"png", "a.png"});
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.outputs = {{"csv", "same"}, {"json", "same"}};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.outputs = {{"csv", ""}};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sweep surface is bitwise independent of the worker count") {
    auto cfg = small_config();
    cfg.time = {0.0, 3.0, 0.25};
    const SweepResult one = run_sweep(cfg, 1);
    const SweepResult four = run_sweep(cfg, 4);
    REQUIRE(one.surface.size() == four.surface.size());
    REQUIRE(one.surface.size() == one.lambdas.size() * one.times.size());
    for (std::size_t i = 0; i < one.surface.size(); ++i) {
        CHECK(one.surface[i] == four.surface[i]);  // bitwise
    }
    for (double v : one.surface) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    // t = 0 column is exactly one
    for (std::size_t i = 0; i < one.lambdas.size(); ++i)
        CHECK(one.surface[i * one.times.size()] == 1.0);
    CHECK(one.threads == 1);
}

TEST_CASE("identical branches give a flat surface and no valley") {
    auto cfg = small_config(0.0);
    cfg.lambda = {0.0, 2.0, 0.25};
    const SweepResult r = run_sweep(cfg);
    for (double v : r.surface) CHECK(v == 1.0);
    const ValleyReport rep = detect_valley(r);
    CHECK(rep.no_valley);
}

TEST_CASE("valley detection preconditions") {
    auto cfg = small_config();
    cfg.lambda = {1.2, 2.0, 0.2};
    CHECK_THROWS_AS(detect_valley(run_sweep(cfg)), std::invalid_argument);
    cfg.lambda = {0.0, 0.9, 0.1};
    CHECK_THROWS_AS(detect_valley(run_sweep(cfg)), std::invalid_argument);
}

TEST_CASE("valley location for the reference chain") {
    SweepConfig cfg;
    cfg.base = ChainParams{.N = 200, .J = 1.0, .lambda = 0.0, .delta = 0.1, .a = 1.0};
    cfg.lambda = {0.0, 2.0, 0.02};
    cfg.time = {0.0, 27.0, 0.05};
    const ValleyReport rep = detect_valley(run_sweep(cfg));
    CHECK_FALSE(rep.no_valley);
    CHECK(rep.lambda_min == doctest::Approx(0.92).epsilon(1e-9));
    CHECK(rep.mean_echo == doctest::Approx(0.06472406690240472).epsilon(1e-9));
    // the pointwise-minimum metric lands closer to the critical point
    CHECK(rep.lambda_min_depth == doctest::Approx(0.98).epsilon(1e-9));
    CHECK(rep.depth == doctest::Approx(0.0016985235881555713).epsilon(1e-6));
    CHECK(rep.depth < rep.mean_echo);
}

TEST_CASE("csv layout: lambda-outer rows, 17 significant digits, LF") {
    auto cfg = small_config(0.0);
    const SweepResult r = run_sweep(cfg, 1);
    std::ostringstream ss;
    emit_csv(r, ss);
    CHECK(ss.str() ==
          "lambda,t,L\n"
          "0.5,0,1\n0.5,1,1\n0.5,2,1\n"
          "1,0,1\n1,1,1\n1,2,1\n"
          "1.5,0,1\n1.5,1,1\n1.5,2,1\n");

    TempFile tmp("isingecho_csv_test.csv");
    emit_csv(r, tmp.path.string());
    CHECK(slurp(tmp.path) == ss.str());
}

TEST_CASE("csv payload matches the frozen golden file") {
    auto cfg = small_config();
    const SweepResult r = run_sweep(cfg, 1);
    std::ostringstream ss;
    emit_csv(r, ss);
    const std::string golden = slurp(fs::path(ISINGECHO_GOLDEN_DIR) / "sweep_small.csv");
    CHECK(ss.str() == golden);
}

TEST_CASE("json config parsing") {
    using nlohmann::json;
    SUBCASE("minimal config with defaults") {
        const auto cfg = sweep_config_from_json(json::parse(
            R"({"N": 8, "delta": 0.1, "lambda": 0.9, "time": {"min": 0, "max": 2, "step": 1}})"));
        CHECK(cfg.base.N == 8);
        CHECK(cfg.base.J == 1.0);
        CHECK(cfg.base.a == 1.0);
        CHECK(cfg.lambda.scalar());
        CHECK(cfg.lambda.min == 0.9);
        CHECK(cfg.base.lambda == 0.9);
        CHECK(cfg.grid == GridConvention::PaperInteger);
        CHECK(cfg.outputs.empty());
    }
    SUBCASE("full config") {
        const auto cfg = sweep_config_from_json(json::parse(R"({
            "N": 200, "J": 2.0, "a": 0.5, "delta": 0.01,
            "lambda": {"min": 0.0, "max": 2.0, "step": 0.02},
            "time": {"min": 0.0, "max": 27.0, "step": 0.05},
            "grid": "antiperiodic",
            "outputs": [{"format": "csv", "path": "x.csv"}, {"format": "svg", "path": "x.svg"}]
        })"));
        CHECK(cfg.base.J == 2.0);
        CHECK(cfg.base.a == 0.5);
        CHECK_FALSE(cfg.lambda.scalar());
        CHECK(cfg.lambda.step == 0.02);
        CHECK(cfg.grid == GridConvention::AntiPeriodic);
        REQUIRE(cfg.outputs.size() == 2);
        CHECK(cfg.outputs[1].format == "svg");
    }
    SUBCASE("unknown keys are rejected at every level") {
        CHECK_THROWS_WITH_AS(
            sweep_config_from_json(json::parse(
                R"({"N": 8, "delta": 0.1, "lambda": 0.9,
                    "time": {"min": 0, "max": 1, "step": 1}, "bogus": 3})")),
            doctest::Contains("unknown key 'bogus'"), std::runtime_error);
        CHECK_THROWS_WITH_AS(
            sweep_config_from_json(json::parse(
                R"({"N": 8, "delta": 0.1, "lambda": {"min": 0, "max": 1, "step": 1, "count": 3},
                    "time": {"min": 0, "max": 1, "step": 1}})")),
            doctest::Contains("unknown key 'count'"), std::runtime_error);
        CHECK_THROWS_WITH_AS(
            sweep_config_from_json(json::parse(
                R"({"N": 8, "delta": 0.1, "lambda": 0.9,
                    "time": {"min": 0, "max": 1, "step": 1},
                    "outputs": [{"format": "csv", "path": "x", "mode": "w"}]})")),
            doctest::Contains("unknown key 'mode'"), std::runtime_error);
    }
    SUBCASE("malformed fields are rejected") {
        CHECK_THROWS_AS(sweep_config_from_json(json::parse(
                            R"({"delta": 0.1, "lambda": 0.9,
                                "time": {"min": 0, "max": 1, "step": 1}})")),
                        std::runtime_error);  // missing N
        CHECK_THROWS_AS(sweep_config_from_json(json::parse(
                            R"({"N": 8.5, "delta": 0.1, "lambda": 0.9,
                                "time": {"min": 0, "max": 1, "step": 1}})")),
                        std::runtime_error);  // non-integer N
        CHECK_THROWS_AS(sweep_config_from_json(json::parse(
                            R"({"N": 8, "delta": 0.1, "lambda": 0.9, "time": 5})")),
                        std::runtime_error);  // scalar time
        CHECK_THROWS_AS(sweep_config_from_json(json::parse(
                            R"({"N": 8, "delta": 0.1, "lambda": 0.9,
                                "time": {"min": 0, "max": 1, "step": 1}, "grid": "torus"})")),
                        std::runtime_error);  // unknown grid
    }
    SUBCASE("round trip preserves the config") {
        auto cfg = small_config();
        cfg.outputs = {{"csv", "out.csv"}};
        cfg.grid = GridConvention::AntiPeriodic;
        const auto j = sweep_config_to_json(cfg);
        const auto back = sweep_config_from_json(nlohmann::json::parse(j.dump()));
        CHECK(sweep_config_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("json surface export") {
    auto cfg = small_config();
    const SweepResult r = run_sweep(cfg, 1);
    TempFile tmp("isingecho_json_test.json");
    emit_json(r, tmp.path.string());
    const std::string body = slurp(tmp.path);
    CHECK(body.back() == '\n');
    const auto j = nlohmann::json::parse(body);
    CHECK(j.at("lambda").size() == 3);
    CHECK(j.at("time").size() == 3);
    REQUIRE(j.at("surface").size() == 3);
    CHECK(j.at("surface").at(0).size() == 3);
    CHECK(j.at("surface").at(0).at(0).get<double>() == 1.0);
    CHECK(j.at("metadata").contains("version"));
    CHECK(j.at("metadata").at("threads").get<int>() == 1);
    CHECK(j.at("config").at("N").get<int>() == 8);
}

TEST_CASE("svg rendering") {
    SUBCASE("heatmap for a rectangular surface") {
        auto cfg = small_config();
        cfg.lambda = {0.0, 2.0, 0.1};
        cfg.time = {0.0, 5.0, 0.25};
        const SweepResult r = run_sweep(cfg);
        TempFile tmp("isingecho_svg_heat.svg");
        emit_svg(r, tmp.path.string());
        const std::string body = slurp(tmp.path);
        CHECK(body.starts_with("<?xml"));
        CHECK(body.find("<svg") != std::string::npos);
        CHECK(body.find("<rect") != std::string::npos);
        CHECK(body.find("</svg>") != std::string::npos);
        CHECK(body.find("width=\"800\"") != std::string::npos);
        CHECK(body.find("height=\"600\"") != std::string::npos);

        // byte-identical on re-emission
        TempFile tmp2("isingecho_svg_heat2.svg");
        emit_svg(r, tmp2.path.string());
        CHECK(slurp(tmp2.path) == body);
    }
    SUBCASE("single-lambda sweep renders as a curve") {
        auto cfg = small_config();
        cfg.lambda = {0.9, 0.9, 0.0};
        cfg.time = {0.0, 5.0, 0.1};
        TempFile tmp("isingecho_svg_curve.svg");
        emit_svg(run_sweep(cfg), tmp.path.string());
        const std::string body = slurp(tmp.path);
        CHECK(body.find("<polyline") != std::string::npos);
        CHECK(body.find("lambda = 0.9") != std::string::npos);
    }
    SUBCASE("curve overlay with legend") {
        const ChainParams p50{.N = 50, .J = 1.0, .lambda = 0.9, .delta = 0.1, .a = 1.0};
        ChainParams p100 = p50;
        p100.N = 100;
        const auto times = time_grid(0.0, 10.0, 0.1);
        const std::vector<EchoCurve> curves{echo_curve(p50, times), echo_curve(p100, times)};
        TempFile tmp("isingecho_svg_overlay.svg");
        emit_svg(curves, tmp.path.string());
        const std::string body = slurp(tmp.path);
        CHECK(body.find("N=50") != std::string::npos);
        CHECK(body.find("N=100") != std::string::npos);
        CHECK(body.find("#c0392b") != std::string::npos);  // second palette color
    }
}

}  // TEST_SUITE
