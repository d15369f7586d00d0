#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hapdisc/cli.hpp"
#include "hapdisc/serialize.hpp"

using namespace hapdisc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = call(args);
  INFO(r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("classify") {
  const auto r = call({"classify", "-s", "1,2,3"});
  CHECK(r.code == 1);
  const auto j = call_json({"classify", "-s", "1,2,3"});
  CHECK(j["forces"] == true);
  CHECK(j["rule"] == "size3");
  CHECK(j["cycle"]["pattern"] == "[+2 +1 -3]");
  CHECK(j["cycle"]["start"] == 0);
  CHECK(call({"classify", "-s", "1,3,4"}).code == 0);
  CHECK(call({"classify", "-s", "3,9,16,18,19,20"}).code == 2);
}

TEST_CASE("color and cycle") {
  const auto ok = call({"color", "-s", "2,3,4"});
  CHECK(ok.code == 0);
  CHECK(Coloring::parse(ok.out).period() == 24);
  const auto forced = call_json({"color", "-s", "1,2,3"});
  CHECK(forced["bipartite"] == false);
  CHECK(forced["cycle"]["length"] == 3);
  CHECK(call({"color", "-s", "1,2,3"}).code == 1);
  CHECK(call({"color", "-s", "1,2,3", "--max-period", "4"}).code == 2);

  const auto c = call_json({"cycle", "-s", "3,9,16,18,19,20"});
  CHECK(c["cycle"]["length"].get<int>() % 2 == 1);
  CHECK(call_json({"cycle", "-s", "1,3"})["cycle"].is_null());
}

TEST_CASE("check") {
  const auto v = call_json({"check", "-p", "[5 1 10]"});
  CHECK(v["status"] == "forbidden");
  CHECK(v["failure"]["reason"] == "divisibility");
  const auto p = call_json({"check", "-p", "[+4 +3 -1 +2]"});
  CHECK(p["status"] == "forbidden");
  CHECK(p["failure"]["reason"] == "parity");
  CHECK(p["failure"]["i"] == 0);
  CHECK(p["failure"]["j"] == 3);
  const auto cyc = call_json({"check", "--kind", "cycle", "-p", "[+18+9-3+16+20+3-9-18+3-19-20]"});
  CHECK(cyc["valid"] == true);
  CHECK(cyc["start"] == 360);
  CHECK(call({"check", "-p", "[+2 1]"}).code == 2);
}

TEST_CASE("realize round-trips through JSON") {
  const auto j = call_json({"realize", "-p", "[2 1 3]", "--start", "0"});
  CHECK(j["signs"] == Json::array({1, 1, -1}));
  CHECK(j["terms"] == Json::array({0, 2, 3, 0}));
  const Realization r = realization_from_json(j);
  CHECK(to_json(r) == Json({{"start", j["start"]}, {"signs", j["signs"]}, {"skips", j["skips"]}, {"terms", j["terms"]}}));
  CHECK(call({"realize", "-p", "[5]", "--start", "7"}).code == 2);
}

TEST_CASE("longest") {
  CHECK(call({"longest", "-s", "1,3", "--kind", "path"}).out == "2 path 3 1 [1 3 1]\n");
  CHECK(call({"longest", "-s", "1,5,7", "--kind", "path"}).out == "3 path 7 11 [1 5 1 7 1 5 1]\n");
  CHECK(call({"longest", "-s", "1,3,5,8", "--kind", "cycle"}).out == "4 cycle 7 48 [8 1 3 1 5 1 3]\n");
  const auto j = call_json({"longest", "-s", "1,2,3", "--kind", "cycle"});
  CHECK(j["result"]["pattern"] == "[2 1 3]");
  CHECK(j["exhaustive"] == true);
}

TEST_CASE("reduce") {
  const auto j = call_json({"reduce", "-a", "1,2"});
  CHECK(j["M"] == "30");
  CHECK(j["r"] == "6");
  CHECK(j["t"] == "151");
  CHECK(j["s"] == Json::array({"241", "301"}));
  CHECK(j["ess"]["answer"] == false);
  CHECK_FALSE(j.contains("cycle"));

  const auto k = call_json({"reduce", "-a", "1,2,3"});
  CHECK(k["ess"]["X"] == Json::array({"1", "2"}));
  CHECK(k["ess"]["Y"] == Json::array({"3"}));
  CHECK(k["cycle"] == "[+25201 -35281 +30241 -18481 -1680]");
  CHECK(call({"reduce", "-a", "1,1"}).code == 2);
}

TEST_CASE("verify") {
  const auto file = std::filesystem::temp_directory_path() / "hapdisc_cli_test_coloring.txt";
  {
    std::ofstream(file) << call({"color", "-s", "2,3,4"}).out;
  }
  const auto j = call_json({"verify", "--coloring", file.string(), "-s", "2,3,4", "--horizon", "240"});
  CHECK(j["max_discrepancy"] == 1);
  {
    std::ofstream(file) << call({"color", "-s", "2,3,4", "--erdos-indexing"}).out;
  }
  const auto e =
      call_json({"verify", "--coloring", file.string(), "-s", "2,3,4", "--horizon", "240", "--erdos-indexing"});
  CHECK(e["max_discrepancy"] == 1);
  std::filesystem::remove(file);
  CHECK(call({"verify", "--coloring", "/nonexistent", "-s", "1", "--horizon", "5"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"classify"}).code == 2);
  CHECK(call({"longest", "-s", "1,3", "--kind", "tree"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
