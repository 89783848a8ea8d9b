#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "cext/cli.hpp"
#include "cext/diagram.hpp"
#include "cext/report.hpp"
#include "cext/spectrum.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace cext;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(json::parse(line));
  }
  return lines;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run_cli({"classify", "--alpha0", "0", "--alpha1", "6"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["spectrum_type"]["label"] == "I.1.2");
  CHECK(j["oracle_agrees"] == true);
  CHECK(j["alphas"] == json({"0", "6", "-6"}));

  r = run_cli({"classify", "--alpha0", "0", "--alpha1", "0", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("label: I.1.1") != std::string::npos);

  r = run_cli({"classify", "--alpha0", "-1", "--alpha1", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("F(1) = 0") != std::string::npos);

  // decimals are exact
  CHECK(json::parse(run_cli({"classify", "--alpha0", "0.5", "--alpha1", "-0.25"}).out)["alphas"] ==
        json({"1/2", "-1/4", "-1/4"}));

  r = run_cli({"classify", "--lambda", "4", "--alphas", "1,1/2,-1"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["spectrum_type"].is_null());
  CHECK(j["lambda"] == 4);
  CHECK(j["degeneracy"]["descriptor"].get<std::string>().rfind("0 ", 0) == 0);

  CHECK(run_cli({"classify", "--alpha0", "1/0", "--alpha1", "0"}).code == 2);
  CHECK(run_cli({"classify", "--alpha0", "x", "--alpha1", "0"}).code == 2);
  CHECK(run_cli({"classify", "--alpha0", "1"}).code == 2);
  CHECK(run_cli({"classify", "--alphas", "1,2", "--alpha0", "1"}).code == 2);
  CHECK(run_cli({"classify", "--alpha0", "0", "--alpha1", "0", "--format", "xml"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
  CHECK(run_cli({"--version"}).out.find(tool_version()) != std::string::npos);
}

TEST_CASE("spectrum table") {
  auto r = run_cli({"spectrum", "--alpha0", "0", "--alpha1", "6", "--count", "3"});
  REQUIRE(r.code == 0);
  const auto rows = json::parse(r.out)["levels"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["energy"] == "1/2");
  CHECK(rows[1]["energy"] == "9/2");
  CHECK(rows[1]["subspace"] == 1);
  CHECK(rows[2]["energy"] == "11/2");
  CHECK(rows[2]["energy_float"] == 5.5);

  r = run_cli({"spectrum", "--alpha0", "0", "--alpha1", "0", "--count", "2", "--format", "text"});
  CHECK(r.out.find("1/2") != std::string::npos);
  CHECK(r.out.find("3/2") != std::string::npos);

  const auto abc = json::parse(run_cli({"spectrum", "--alpha0", "2", "--alpha1", "8", "--count", "3"}).out)["levels"];
  CHECK(abc[1]["energy"] == abc[2]["energy"]);
  CHECK(run_cli({"spectrum", "--alpha0", "-2", "--alpha1", "0"}).code == 2);
}

TEST_CASE("susy") {
  auto r = run_cli({"susy", "--alpha0", "0", "--alpha1", "1/2"});
  REQUIRE(r.code == 0);
  auto s = json::parse(r.out)["susy"];
  CHECK(s["omegas"] == json({"1", "3/2", "1/2"}));
  CHECK(s["ground_energies"] == json({"0", "1", "5/2", "3"}));
  CHECK(s["pass"] == true);
  CHECK(s["truncation"] == 60);

  r = run_cli({"susy", "--alpha0", "0", "--alpha1", "0", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("susy omegas: 1 1 1") != std::string::npos);

  r = run_cli({"susy", "--alpha0", "0", "--alpha1", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\xcf\x89_2 = -5 \xe2\x89\xa4 0") != std::string::npos);

  // an impossible tolerance turns every residual check into a failure
  CHECK(run_cli({"susy", "--alpha0", "0", "--alpha1", "1/3", "--tol", "1e-300"}).code == 3);

  r = run_cli({"susy", "--alpha0", "0", "--alpha1", "1/2", "--omega-scale", "2"});
  CHECK(json::parse(r.out)["susy"]["omegas"] == json({"2", "3", "1"}));
  CHECK(run_cli({"susy", "--alpha0", "0", "--alpha1", "0", "--omega-scale", "-1"}).code == 2);
  CHECK(run_cli({"susy", "--lambda", "4", "--alphas", "0,0,0", "--truncation", "7"}).code == 2);
}

TEST_CASE("truncation default from the environment") {
  setenv("CEXT_OSC_DEFAULT_TRUNCATION", "24", 1);
  auto r = run_cli({"susy", "--alpha0", "0", "--alpha1", "0"});
  CHECK(json::parse(r.out)["susy"]["truncation"] == 24);
  r = run_cli({"susy", "--alpha0", "0", "--alpha1", "0", "--truncation", "30"});
  CHECK(json::parse(r.out)["susy"]["truncation"] == 30);
  setenv("CEXT_OSC_DEFAULT_TRUNCATION", "many", 1);
  CHECK(run_cli({"susy", "--alpha0", "0", "--alpha1", "0"}).code == 2);
  unsetenv("CEXT_OSC_DEFAULT_TRUNCATION");
}

TEST_CASE("sweep") {
  auto r = run_cli({"sweep", "--grid", "10:10:1,4:4:1"});
  REQUIRE(r.code == 0);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["spectrum_type"]["label"] == "II.1.2.2");
  CHECK(lines[0]["point"] == 0);
  CHECK(lines[1]["summary"]["disagreements"].empty());

  r = run_cli({"sweep", "--grid", "-1/2:3/2:1/2,-1/2:3/2:1/2"});
  REQUIRE(r.code == 0);
  lines = json_lines(r.out);
  REQUIRE(lines.size() == 26);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    CHECK(lines[i]["point"] == i);
    const auto a0 = Rational::parse(lines[i]["alphas"][0].get<std::string>());
    const auto a1 = Rational::parse(lines[i]["alphas"][1].get<std::string>());
    const auto t = SpectrumType::parse(lines[i]["spectrum_type"]["label"].get<std::string>());
    CHECK(in_window(t, a0, a1));
  }
  CHECK(lines.back()["summary"]["points"] == 25);

  r = run_cli({"sweep", "--grid", "-2:0:1,0:0:1"});
  CHECK(r.code == 0);
  lines = json_lines(r.out);
  CHECK(lines[0].contains("error"));
  CHECK(lines.back()["summary"]["inadmissible"] == 2);

  r = run_cli({"sweep", "--random", "1000", "--seed", "1"});
  CHECK(r.code == 0);
  lines = json_lines(r.out);
  REQUIRE(lines.size() == 1001);
  CHECK(lines.back()["summary"]["admissible"] == 1000);
  CHECK(lines.back()["summary"]["disagreements"].empty());

  // same seed, same stream, whatever the thread count
  CHECK(run_cli({"sweep", "--random", "50", "--seed", "9", "--threads", "1"}).out ==
        run_cli({"sweep", "--random", "50", "--seed", "9", "--threads", "4"}).out);

  CHECK(run_cli({"sweep"}).code == 2);
  CHECK(run_cli({"sweep", "--grid", "0:1:0,0:1:1"}).code == 2);
  CHECK(run_cli({"sweep", "--grid", "0:1:1"}).code == 2);
}

TEST_CASE("diagram layout") {
  const auto spec = spectrum_diagram(make_params3(0, 6));
  REQUIRE(spec.columns.size() == 3);
  CHECK(spec.ticks.front() == Rational(1, 2));
  CHECK(spec.ticks.back() == Rational(31, 2));
  CHECK(spec.columns[0].levels.size() == 6);
  CHECK(spec.columns[1].levels.size() == 4);
  CHECK(spec.columns[2].levels.size() == 4);
  CHECK(spec.columns[0].levels[1].energy == Rational(7, 2));
  CHECK(spec.columns[0].levels[2].energy == Rational(13, 2));

  const auto harmonic = spectrum_diagram(make_params3(0, 0));
  CHECK(harmonic.columns[1].levels.front().energy == Rational(3, 2));
  CHECK(harmonic.columns[2].levels.front().index == 2);

  const auto half_point = hierarchy_diagram(make_params3(0, Rational(1, 2)));
  REQUIRE(half_point.columns.size() == 4);
  std::vector<std::size_t> counts;
  for (const auto& c : half_point.columns) counts.push_back(c.levels.size());
  CHECK(counts == std::vector<std::size_t>{10, 9, 8, 7});
  CHECK(half_point.columns[0].levels[2].energy == Rational(5, 2));
  CHECK_THROWS_AS(hierarchy_diagram(make_params3(0, 6)), WindowViolation);
  CHECK_THROWS_AS(spectrum_diagram(make_params3(0, 0), 1), std::invalid_argument);
}

TEST_CASE("diagram y is affine in energy") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_admissible3(rng);
    const auto spec = spectrum_diagram(p);
    std::vector<DiagramLevel> all;
    for (const auto& c : spec.columns) all.insert(all.end(), c.levels.begin(), c.levels.end());
    const double y0 = spec.y_of(spec.bottom);
    const double slope = spec.y_of(spec.bottom + Rational(1)) - y0;
    CHECK(slope < 0);
    for (const auto& a : all) {
      CHECK(spec.y_of(a.energy) == doctest::Approx(y0 + slope * (a.energy - spec.bottom).to_double()));
      for (const auto& b : all) CHECK((spec.y_of(a.energy) == spec.y_of(b.energy)) == (a.energy == b.energy));
    }
  }
}

TEST_CASE("diagram output") {
  auto r = run_cli({"diagram", "--alpha0", "0", "--alpha1", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find(">31/2</text>") != std::string::npos);
  CHECK(r.out.find("stroke-dasharray") != std::string::npos);
  const std::regex column("class=\"column\"");
  CHECK(std::distance(std::sregex_iterator(r.out.begin(), r.out.end(), column), std::sregex_iterator()) == 3);
  const std::regex level("class=\"level\"");
  CHECK(std::distance(std::sregex_iterator(r.out.begin(), r.out.end(), level), std::sregex_iterator()) == 14);

  r = run_cli({"diagram", "--alpha0", "0", "--alpha1", "1/2", "--susy", "--ascii"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("H^(3)") != std::string::npos);
  CHECK(r.out.find(" 5/2 |") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "cext_osc_test_diagram.svg";
  r = run_cli({"diagram", "--alpha0", "0", "--alpha1", "0", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::file_size(path) > 500);
  std::filesystem::remove(path);

  r = run_cli({"diagram", "--alpha0", "0", "--alpha1", "0", "--out", "/nonexistent-dir/x.svg"});
  CHECK(r.code == 1);
  CHECK(run_cli({"diagram", "--alpha0", "0", "--alpha1", "6", "--susy"}).code == 2);
}

TEST_CASE("reports round-trip through JSON") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int lambda = 2 + trial % 4;
    const bool susy = trial % 3 == 0;
    const auto p = susy ? oracle::random_susy(rng, lambda)
                        : (lambda == 3 ? oracle::random_admissible3(rng) : oracle::random_admissible(rng, lambda));
    auto r = make_report(p, 20);
    if (susy) r.susy = make_susy_entry(build_hierarchy(p, 16), 1e-12, Rational(3, 7));
    const auto text = to_json(r).dump();
    CHECK(report_from_json(json::parse(text)) == r);
  }
  auto j = to_json(make_report(make_params3(0, 0), 5));
  j["schema"] = 2;
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
  j.erase("schema");
  CHECK_THROWS_AS(report_from_json(j), json::exception);
}
