#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "qblocks/json_io.hpp"
#include "qblocks/selfcheck.hpp"

using namespace qt;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "qblocks_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string kExample =
    R"({"n": 7, "coords": ["1/5", "1", "0+pi*-1", "3/2", "0+pi*1", "-3/2", "0+pi*-1"], "symbols": ["pi"]})";
const std::string kQ2 = R"({"n": 2, "coords": ["0+s*1", "0+s*-1"], "symbols": ["s"]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("reduce") {
    const auto path = write_file("example.json", kExample);
    const auto r = run({"reduce", path});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["levi_sizes"] == Json::array({1, 2, 1, 3}));
    CHECK(weight_from_json(j["reduced"]) == Weight{q(1), q(3, 2), q(-3, 2), q(1, 5), pi - q(1), q(1) - pi, -pi});
    CHECK(j["parity_undetermined"] == true);
    const auto text = run({"reduce", path, "--format", "text"});
    CHECK(text.out.find("levi: q(1) x q(2) x q(1) x q(3)") != std::string::npos);
  }

  TEST_CASE("zigzag table") {
    const auto r = run({"zigzag", "--window", "1", "--table", "--format", "text"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() > 10);
    for (std::size_t k = 0; k < 10; ++k) CHECK(lines[k].find('=') == std::string::npos);
    CHECK(std::find(lines.begin(), lines.end(), "X0*Y0 = Z1") != lines.end());
    const Json j = Json::parse(run({"zigzag", "--window", "1", "--radical", "--submodules", "0"}).out);
    CHECK(j["dim"] == 10);
    CHECK(j["radical"]["loewy_length"] == 3);
    CHECK(j["submodules"]["proper"].size() == 4);
  }

  TEST_CASE("linked with identical files") {
    const auto a = write_file("a.json", kQ2);
    const auto b = write_file("b.json", kQ2);
    const auto r = run({"linked", a, b, "--relation", "approx"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["linked"] == true);
    CHECK(j["witness"]["w"] == Json::array({1, 2}));
    CHECK(j["witness"]["pairs"].empty());
    CHECK(Json::parse(run({"linked", a, b}).out)["linked"] == true);
    CHECK(Json::parse(run({"linked", a, b, "--relation", "central"}).out)["linked"] == true);
  }

  TEST_CASE("weight-level commands") {
    const auto q2 = write_file("q2.json", kQ2);
    CHECK(Json::parse(run({"atyp", q2}).out)["atypicality"] == 1);
    CHECK(run({"wt", q2, "--ell", "1", "--format", "text"}).out == "0\n");
    CHECK(Json::parse(run({"glmap", q2, "--ell", "1"}).out)["coords"] == Json::array({1, -1}));
    const Json lm = Json::parse(run({"lambda-minus", q2, "--ell", "1"}).out);
    CHECK(weight_from_json(lm["weight"]) == Weight{s - q(1), q(1) - s});
    CHECK(lm["k"] == 1);
    const Json lp = Json::parse(run({"lambda-plus", q2, "--ell", "1", "--s", "s"}).out);
    CHECK(weight_from_json(lp["weight"]) == Weight{s + q(1), -s - q(1)});
    const Json chart = Json::parse(run({"block-quiver", q2, "--ell", "1", "--window", "3"}).out);
    CHECK(chart["comparison"]["passed"] == true);
    CHECK(chart["D"].size() == 7);
  }

  TEST_CASE("characters") {
    const auto q2 = write_file("q2.json", kQ2);
    const Json m = Json::parse(run({"char", "M", q2, "--depth", "2"}).out);
    const Json k = Json::parse(run({"char", "K", q2, "--ell", "1", "--depth", "2"}).out);
    CHECK(m == k);
    CHECK(m["terms"].size() == 3);
    const auto text = lines_of(run({"char", "M", q2, "--depth", "3", "--format", "text"}).out);
    CHECK(std::is_sorted(text.begin() + 1, text.end()));
    const auto tr = run({"translate", "F", q2, "--a", "0", "--ell", "1", "--depth", "3", "--verify"});
    REQUIRE(tr.code == 0);
    CHECK(Json::parse(tr.out)["verify"]["ok"] == true);
  }

  TEST_CASE("selfcheck") {
    const auto r = run({"selfcheck", "--cases", "0", "--format", "text"});
    CHECK(r.code == 0);
    for (const auto& name : selfcheck_suite_names()) CHECK(r.out.find(name + ": 0 passed") != std::string::npos);
    CHECK(r.out.find("selfcheck: OK") != std::string::npos);
    const auto full = run({"selfcheck", "--seed", "3", "--cases", "5"});
    CHECK(full.code == 0);
    CHECK(Json::parse(full.out)["ok"] == true);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"zigzag", "--window", "1", "--bogus"}).code == 2);
    CHECK(run({"zigzag", "--window", "0"}).code == 2);
    CHECK(run({"linked", "a.json"}).code == 2);
    CHECK(run({"atyp", "/nonexistent/weight.json"}).code == 1);
    const auto bad = write_file("bad.json", R"({"coords": ["1/0"]})");
    const auto r = run({"atyp", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);
    const auto undeclared = write_file("undeclared.json", R"({"coords": ["0+s*1"], "symbols": ["t"]})");
    CHECK(run({"atyp", undeclared}).code == 1);
    const auto typical = write_file("typical.json", R"({"coords": ["0+s*1", "1+s*-1"]})");
    const auto lm = run({"lambda-minus", typical, "--ell", "1"});
    CHECK(lm.code == 1);
    CHECK(lm.err.find("atypicality") != std::string::npos);
    const auto two = write_file("two.json", R"({"coords": ["0+s*1", "0+t*1"]})");
    CHECK(run({"wt", two, "--ell", "1"}).code == 1);
  }

  TEST_CASE("deterministic output and JSON round trip") {
    const auto path = write_file("example.json", kExample);
    const auto q2 = write_file("q2.json", kQ2);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"reduce", path},
             {"block-quiver", q2, "--ell", "1", "--window", "2"},
             {"char", "K", q2, "--ell", "1", "--depth", "3"},
             {"selfcheck", "--cases", "3", "--seed", "9"}}) {
      const auto a = run(args);
      const auto b = run(args);
      CHECK(a.out == b.out);
      CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
    }
    const Json reduced = Json::parse(run({"reduce", path}).out)["reduced"];
    CHECK(weight_to_json(weight_from_json(reduced)) == reduced);
  }
}
