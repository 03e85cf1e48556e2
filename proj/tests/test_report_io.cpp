#include "szego_lab/report_io.h"

#include <doctest.h>
#include <json.hpp>

#include <clocale>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace szego;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("format_double round-trips")
{
    for (double v : {0.1, -2.5e-300, 1.0 / 3.0, 6.02214076e23, 4.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(INFINITY) == "inf");
    CHECK(format_double(-INFINITY) == "-inf");
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("format_fixed12")
{
    CHECK(format_fixed12(4.0) == "4.0");
    CHECK(format_fixed12(4.0 / 3.0) == "1.333333333333");
    CHECK(format_fixed12(1.0) == "1.0");
    CHECK(format_fixed12(0.25) == "0.25");
    CHECK(format_fixed12(INFINITY) == "inf");
}

TEST_CASE("JsonObject keeps insertion order and parses")
{
    JsonObject obj;
    obj.add("b", 1.5).add("a", 3).add("flag", true).add("name", "x\"y").add_null("none");
    obj.add("big", std::uint64_t{18446744073709551615ull}).add("inf", INFINITY);
    const std::string text = obj.str();
    CHECK(text.find("\"b\"") < text.find("\"a\""));
    const json parsed = json::parse(text);
    CHECK(parsed["b"].get<double>() == 1.5);
    CHECK(parsed["a"].get<int>() == 3);
    CHECK(parsed["flag"].get<bool>());
    CHECK(parsed["name"].get<std::string>() == "x\"y");
    CHECK(parsed["none"].is_null());
    CHECK(parsed["big"].get<std::uint64_t>() == 18446744073709551615ull);
    CHECK(parsed["inf"].get<std::string>() == "inf");
}

TEST_CASE("samples CSV")
{
    const CircleGrid g(4);
    const BoundarySamples f(g, {cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(7, 8)});
    std::ostringstream out;
    write_samples_csv(out, f);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "theta,re,im");
    CHECK(std::stod(rows[1].substr(0, rows[1].find(','))) == g.node(0));
    CHECK(rows[4].substr(rows[4].find(',')) == ",7,8");
}

TEST_CASE("projection CSV")
{
    const std::vector<cplx> z = {cplx(0.5, 0.0)}, v = {cplx(-2.0, 0.0)};
    std::ostringstream out;
    write_projection_csv(out, z, v);
    CHECK(out.str() == "re_z,im_z,re_val,im_val\n0.5,0,-2,0\n");
}

TEST_CASE("ap scan CSV with JSON footer")
{
    const ApScanReport report = ap_scan(0.5, 6.0, {0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625});
    std::ostringstream out;
    write_ap_scan(out, report);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == report.ladder.size() + 2);
    CHECK(rows[0] == "delta,quotient");
    const json footer = json::parse(rows.back());
    CHECK(footer["s"].get<double>() == doctest::Approx(-2.0));
    CHECK(footer["predicted_slope"].get<double>() == doctest::Approx(-1.0));
    CHECK(footer["verdict"].get<std::string>() == "Outside");
    CHECK(footer["fitted_slope"].get<double>() == report.fitted_slope);

    const ApScanReport boundary = ap_scan(0.5, 4.0, {0.0625, 0.03125, 0.015625, 0.0078125});
    CHECK(ap_scan_footer(boundary).str().find("\"predicted_slope\": null") != std::string::npos);
}

TEST_CASE("blowup CSV with verdict footer")
{
    const BlowupReport report{0.5, 3.0, {512, 1024}, {1.25, 1.5}, BlowupVerdict::Inconclusive};
    std::ostringstream out;
    write_blowup(out, report);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n_points,lower_bound");
    CHECK(rows[1] == "512,1.25");
    const json footer = json::parse(rows[3]);
    CHECK(footer["verdict"].get<std::string>() == "Inconclusive");
    CHECK(footer["alpha"].get<double>() == 0.5);
}

TEST_CASE("representation JSON")
{
    const json parsed = json::parse(representation_json({0.5, 3.0, 1e-9, 20, 7, true}).str());
    CHECK(parsed["max_residual"].get<double>() == 1e-9);
    CHECK(parsed["seed"].get<std::uint64_t>() == 7);
    CHECK(parsed["pass"].get<bool>());
}
