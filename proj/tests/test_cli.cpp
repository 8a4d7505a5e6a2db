#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "kummer/cli.hpp"

using namespace kummer;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("digits")
{
  const Run r = run({"digits", "2932", "--base", "9"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4017 (base 9)"));
  CHECK(contains(r.out, "digit sum: 12"));
  CHECK(contains(run({"digits", "1892", "--base", "7"}).out, "5342 (base 7)"));
  CHECK(contains(run({"digits", "0", "--base", "7"}).out, "0 (base 7)"));

  const auto doc = nlohmann::json::parse(run({"digits", "2932", "--base", "9", "--json"}).out);
  CHECK(doc["base"] == 9);
  CHECK(doc["digits"] == nlohmann::json::array({7, 1, 0, 4}));
  CHECK(doc["display"] == "4017 (base 9)");
  CHECK(doc["digit_sum"] == 12);
}

TEST_CASE("add with a trace, numbers typed in base 7")
{
  const Run r = run({"add", "253", "415", "--base", "7", "--input-base", "7", "--trace"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "= 1001 (base 7)"));
  CHECK(contains(r.out, "carries: 3"));
  CHECK(contains(r.out, "c = (I+J-N)/(b-1) = (10+10-2)/6 = 3"));
  CHECK(contains(r.out, "stopping places: {3}"));

  const auto doc = nlohmann::json::parse(run({"--json", "add", "11", "9", "--base", "2"}).out);
  CHECK(doc["carry_count"] == 3);
  CHECK(doc["stopping_places"] == nlohmann::json::array({2, 4}));
  CHECK(doc["sum_n"] == nlohmann::json::array({0, 0, 1, 0, 1}));
  CHECK(doc["digit_formula"]["carries"] == 3);
}

TEST_CASE("valuation factorial and binomial")
{
  const Run all = run({"valuation", "factorial", "132", "--prime", "5", "--method", "all"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "brute force: 32"));
  CHECK(contains(all.out, "Legendre's formula: 32"));
  CHECK(contains(all.out, "(p-1): 32"));
  CHECK(contains(all.out, "agree: 32"));

  const auto doc = nlohmann::json::parse(run({"valuation", "factorial", "365", "--prime", "7", "--json"}).out);
  CHECK(doc["brute"] == 60);
  CHECK(doc["legendre"] == 60);
  CHECK(doc["digits"] == 60);
  CHECK(doc["agree"] == true);

  CHECK(run({"valuation", "factorial", "10", "--prime", "4"}).code == 1);
  CHECK(run({"valuation", "factorial", "10", "--prime", "5", "--method", "guess"}).code == 1);
  CHECK(run({"--oracle-cap", "5", "valuation", "factorial", "10", "--prime", "5", "--method", "brute"}).code == 1);

  const Run bin = run({"valuation", "binomial", "8", "5", "--prime", "2"});
  CHECK(bin.code == 0);
  CHECK(contains(bin.out, "by carry count: 3"));
  CHECK(contains(bin.out, "7 - 3 - 1 = 3"));
  const auto bdoc = nlohmann::json::parse(run({"valuation", "binomial", "49", "1", "--prime", "7", "--json"}).out);
  CHECK(bdoc["carry_count"] == 2);
  CHECK(bdoc["legendre"]["difference"] == 2);
  CHECK(run({"valuation", "binomial", "3", "5", "--prime", "2"}).code == 1);
}

TEST_CASE("divisible")
{
  const Run six = run({"divisible", "4", "2", "--mod", "6"});
  CHECK(six.code == 0);
  CHECK(contains(six.out, "divisible: true"));
  CHECK(contains(run({"divisible", "4", "2", "--mod", "4"}).out, "divisible: false"));
  const auto doc = nlohmann::json::parse(run({"divisible", "4", "2", "--mod", "12", "--json"}).out);
  CHECK(doc["divisible"] == false);
  CHECK(doc["factors"].size() == 2);
}

TEST_CASE("triangle")
{
  const Run ascii = run({"triangle", "--mod", "3", "--rows", "4"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out == "   1\n  1 1\n 1 2 1\n1 . . 1\n");
  for (const char* method : {"recurrence", "lucas"}) {
    const auto doc = nlohmann::json::parse(run({"triangle", "--mod", "7", "--rows", "8", "--method", method, "--format", "json"}).out);
    CHECK(doc["modulus"] == 7);
    CHECK(doc["rows"][7] == nlohmann::json::array({1, 0, 0, 0, 0, 0, 0, 1}));
  }
  const auto kdoc = nlohmann::json::parse(run({"--json", "triangle", "--mod", "2", "--rows", "3", "--method", "kummer"}).out);
  CHECK(kdoc["cells"][2] == nlohmann::json::array({1, 0, 1}));
  CHECK(run({"triangle", "--mod", "6", "--rows", "3", "--method", "lucas"}).code == 1);
  CHECK(run({"triangle", "--mod", "6", "--rows", "10"}).code == 0);
}

TEST_CASE("render and stripes")
{
  CHECK(run({"render", "--mod", "2", "--rows", "2", "--format", "pbm"}).out == "P1\n2 2\n1 0\n1 1\n");
  CHECK(run({"render", "--mod", "2", "--rows", "3", "--format", "pbm", "--centered"}).out ==
        "P1\n5 3\n0 0 1 0 0\n0 1 0 1 0\n1 0 0 0 1\n");
  CHECK(run({"render", "--mod", "3", "--rows", "3", "--format", "pgm"}).out ==
        "P2\n3 3\n255\n170 255 255\n170 170 255\n170 85 170\n");
  CHECK(run({"render", "--mod", "6", "--rows", "4", "--format", "pbm"}).out == "P1\n4 4\n1 0 0 0\n1 1 0 0\n1 1 1 0\n1 1 1 1\n");
  CHECK(nlohmann::json::accept(run({"render", "--mod", "5", "--rows", "6", "--json"}).out));
  CHECK(run({"render", "--mod", "2", "--rows", "4", "--format", "gif"}).code == 1);
  CHECK(run({"render", "--mod", "2", "--rows", "4", "--out", "/nonexistent/dir/x.pbm"}).code == 1);

  CHECK(run({"stripes", "--place", "1", "--rows", "4"}).out == "P1\n4 4\n0 0 0 0\n0 0 0 0\n0 1 0 0\n0 0 0 0\n");
  const Run zero = run({"stripes", "--place", "0", "--rows", "4"});
  CHECK(zero.code == 1);
  CHECK(contains(zero.err, "place 0"));
  const auto doc = nlohmann::json::parse(run({"stripes", "--place", "2", "--rows", "8", "--layers", "row", "--json"}).out);
  CHECK(doc["place"] == 2);
  CHECK(doc["layers"]["row"] == true);
  CHECK(doc["layers"]["i"] == false);
}

TEST_CASE("verify subcommand")
{
  const Run r = run({"verify", "--max-n", "32", "--rows", "40", "--primes", "2,3,5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "failed"));
  CHECK(contains(r.out, "0 failed"));
  const auto doc = nlohmann::json::parse(run({"--json", "verify", "--max-n", "16", "--rows", "20"}).out);
  CHECK(doc["passed"] == true);
  CHECK(run({"verify", "--primes", "2,9"}).code == 1);
}

TEST_CASE("usage errors exit 1")
{
  const Run bad_base = run({"digits", "--base", "1", "5"});
  CHECK(bad_base.code == 1);
  CHECK(contains(bad_base.err, "invalid base"));
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"digits", "5", "--base", "7", "--bogus"}).code == 1);
  CHECK(run({"digits", "12x", "--base", "7"}).code == 1);
  CHECK(run({"digits", "9", "--base", "7", "--input-base", "8"}).code == 1);
  CHECK(run({"add", "18446744073709551615", "1", "--base", "10"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "digits"));
}
