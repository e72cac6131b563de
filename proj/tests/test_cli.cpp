#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;
using mpchoice::cli::CommandResult;

namespace {

CommandResult call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return mpchoice::cli::run(args, in);
}

json ok(std::vector<std::string> args, const std::string& input = "") {
  const auto res = call(std::move(args), input);
  INFO(res.payload << res.diagnostics);
  REQUIRE(res.exit_code == 0);
  REQUIRE(!res.payload.empty());
  REQUIRE(res.payload.back() == '\n');
  return json::parse(res.payload);
}

}  // namespace

TEST_CASE("x0 and estimate") {
  const json x = ok({"x0", "--sizes", "1024,1024"});
  CHECK(x["x0"] == 2.0);
  const json phi = ok({"x0", "--sizes", "4,16"});
  CHECK(phi["x0"].get<double>() == doctest::Approx(2.6180339887499).epsilon(1e-12));
  const json e = ok({"estimate", "--sizes", "log2:30,log2:30,log2:30"});
  CHECK(e["estimate"].get<double>() == doctest::Approx(51.2853387).epsilon(1e-8));
  CHECK(e["x0"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("upper and lower") {
  const json u = ok({"upper", "--sizes", "log2:10,log2:10"});
  CHECK(u["r"] == 11);
  CHECK(u["union_bound_value"] == 1.0);
  CHECK(u["valid"] == true);

  const json l = ok({"lower", "--sizes", "log2:64,log2:64"});
  CHECK(l["prescription"]["t"] == 1600);
  CHECK(l["prescription"]["l"] == json::array({800, 800}));
  CHECK(l["certificate"]["r"] == 52);
  CHECK(l["certificate"]["valid"] == true);

  const json degenerate = ok({"lower", "--sizes", "log2:4,log2:64"});
  CHECK(degenerate["prescription"].is_null());
  CHECK(degenerate["prescription_error"].get<std::string>().rfind("RegimeDegenerate", 0) == 0);
  CHECK(degenerate["certificate"]["valid"].is_boolean());
}

TEST_CASE("certify") {
  const json c = ok({"certify", "--sizes", "100,100", "--r", "2", "--t", "4", "--l", "2,2"});
  CHECK(c["lhs_log"].get<double>() == doctest::Approx(-13.200931).epsilon(1e-6));
  CHECK(c["valid"] == true);
  const json huge = ok({"certify", "--sizes", "log2:1000000,log2:1000000", "--r", "3", "--t", "12",
                        "--l", "6,6"});
  CHECK(huge["lhs_log"] == "-inf");
}

TEST_CASE("decide and cover read list assignments") {
  const std::string witness = R"({"t":4,"parts":[[[0,1],[2,3]],[[0,2],[0,3],[1,2],[1,3]]]})";
  const json d = ok({"decide"}, witness);
  CHECK(d["colorable"] == false);

  const json c = ok({"cover", "--l", "2,2"}, witness);
  CHECK(c["covers"][0]["size"] == 2);
  CHECK(c["covers"][1]["size"] == 2);
  CHECK(c["witness_verified"] == false);

  const json easy = ok({"decide"}, R"({"t":2,"parts":[[[0,1]],[[0,1]]]})");
  CHECK(easy["colorable"] == true);
}

TEST_CASE("sample feeds decide") {
  const json s = ok({"sample", "--sizes", "3,4", "--r", "2", "--t", "5", "--seed", "9"});
  CHECK(s["t"] == 5);
  CHECK(s["parts"].size() == 2);
  CHECK(s["parts"][1].size() == 4);
  const json again = ok({"sample", "--sizes", "3,4", "--r", "2", "--t", "5", "--seed", "9"});
  CHECK(s == again);
  const json d = ok({"decide"}, s.dump());
  CHECK(d.contains("colorable"));
}

TEST_CASE("oracle") {
  CHECK(ok({"oracle", "--sizes", "2,4"})["choice_number"] == 3);
  CHECK(ok({"oracle", "--sizes", "1,1"})["choice_number"] == 2);
  CHECK(ok({"oracle", "--sizes", "2,2", "--r", "2"})["choosable"] == true);
  const auto big = call({"oracle", "--sizes", "5,5"});
  CHECK(big.exit_code == 2);
  CHECK(json::parse(big.payload)["error"] == "InstanceTooLarge");
}

TEST_CASE("monte carlo commands") {
  const json m = ok({"mc-split", "--sizes", "2,2", "--r", "2", "--p", "0.5,0.5", "--t", "4",
                     "--trials", "20000", "--seed", "3"});
  CHECK(m["theoretical_expectation"] == 1.0);
  CHECK(std::abs(m["mean_bad_events"].get<double>() - 1.0) <= 4 * m["std_error"].get<double>());
  const json dflt = ok({"mc-split", "--sizes", "4,16", "--r", "4", "--trials", "1000"});
  CHECK(dflt["universe"] == 8);
  CHECK(dflt["p"].size() == 2);

  const json c = ok({"mc-cover", "--sizes", "100,100", "--r", "2", "--t", "4", "--l", "2,2",
                     "--trials", "200"});
  CHECK(c["mean_bad_events"] == 0.0);
}

TEST_CASE("report and table") {
  const json r = ok({"report", "--sizes", "log2:1000,log2:1000"});
  CHECK(r["estimate"] == 1000.0);
  CHECK(r["upper"]["r"] == 1001);
  CHECK(r["lower"]["r"] == 980);
  CHECK(r["ratio"].get<double>() <= 1.12);

  const auto csv = call({"table", "--sweep", "10:30:10"});
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.payload ==
        "log2_n0,log2_n1,estimate,upper_r,lower_r,ratio\n"
        "10,10,10,11,4,2.75\n"
        "20,20,20,21,12,1.75\n"
        "30,30,30,31,21,1.4761904761904763\n");

  const json tj = ok({"table", "--sweep", "10:20:10", "--format", "json"});
  REQUIRE(tj["rows"].is_array());
  CHECK(tj["rows"].size() == 2);
  CHECK(tj["rows"][1]["upper_r"] == 21);
}

TEST_CASE("errors and exit codes") {
  const auto bad = call({"upper", "--sizes", "1,4"});
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.payload)["error"] == "SizeTooSmall");
  CHECK_FALSE(bad.diagnostics.empty());

  CHECK(call({"upper", "--sizes", "4"}).exit_code == 1);
  CHECK(call({"upper", "--sizes", "abc,4"}).exit_code == 1);
  CHECK(call({"nonsense"}).exit_code == 1);
  CHECK(call({}).exit_code == 1);
  CHECK(call({"decide"}, "not json").exit_code == 1);
  CHECK(call({"decide"}, R"({"t":2,"parts":[[[0,5]],[[1]]]})").exit_code == 1);
  CHECK(call({"x0", "--sizes", "4,4", "--format", "csv"}).exit_code == 1);
  CHECK(call({"sample", "--sizes", "log2:3,log2:3", "--r", "2", "--t", "4"}).exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  const auto h = call({"--help"});
  CHECK(h.exit_code == 0);
  CHECK(h.payload.find("oracle") != std::string::npos);
}
