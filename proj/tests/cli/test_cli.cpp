#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "generators.hpp"
#include "serialize.hpp"

using namespace instanton;
using namespace instanton::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "instanton");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  set_modulus(kDefaultPrime);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("instanton_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

json result_of(const Result& r) { return json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("serialization round trip is exact and canonical") {
  testing::for_cases(141, 20, [](Rng& rng, std::size_t k) {
    HyperwebCoeffs c(1 + k % 4);
    for (std::size_t s = 0; s < c.size(); ++s)
      if (rng.below(3) != 0) c[s] = rng.field();
    const Hyperweb h(c);
    const std::string text = dump_hyperweb(h);
    const HyperwebFile f = parse_hyperweb(text);
    CHECK(f.web == h);
    CHECK(f.prime == kDefaultPrime);
    CHECK(dump_hyperweb(f.web) == text);
  });
}

TEST_CASE("sample writes a 6-coefficient file for n = 1") {
  const auto r = invoke({"sample", "--n", "1", "--r", "1", "--strategy", "invertible"});
  CHECK(r.code == kExitPass);
  const json file = json::parse(r.out);
  CHECK(file.at("coeffs").size() == 6);
  CHECK(file.at("format_version") == "1");
}

TEST_CASE("sample and verify an (n, n) instanton") {
  const fs::path out = scratch() / "inv.json";
  const auto s = invoke({"sample", "--n", "3", "--r", "3", "--strategy", "invertible", "--seed", "7", "--out", out.string()});
  CHECK(s.code == kExitPass);
  CHECK(result_of(s).at("membership").at("overall") == true);
  CHECK(fs::exists(scratch() / "inv.report.json"));
  const auto v = invoke({"verify", out.string()});
  CHECK(v.code == kExitPass);
  const json rep = json::parse(v.out);
  CHECK(rep.at("result").at("overall") == true);
  CHECK(rep.at("provenance").at("parameters").at("r") == 3);
  CHECK(rep.at("provenance").at("library_version") == "1.0.0");
}

TEST_CASE("same command line and seed give identical files") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  for (const auto& p : {a, b})
    CHECK(invoke({"sample", "--n", "3", "--r", "2", "--strategy", "vacuous", "--seed", "1", "--out", p.string()}).code ==
          kExitPass);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(scratch() / "a.report.json") == slurp(scratch() / "b.report.json"));
}

TEST_CASE("cohomology of a charge-4 file") {
  const fs::path f = scratch() / "c4.json";
  REQUIRE(invoke({"sample", "--n", "3", "--r", "2", "--strategy", "vacuous", "--seed", "1", "--out", f.string()}).code ==
          kExitPass);
  const auto r = invoke({"cohomology", f.string(), "--r", "2", "--tmin", "-4", "--tmax", "1"});
  CHECK(r.code == kExitPass);
  const json res = result_of(r);
  CHECK(res.at("charge") == 4);
  for (const auto& row : res.at("rows")) {
    CHECK(row.at("euler") == row.at("euler_expected"));
    if (row.at("t") == -1) CHECK(row.at("h")[1] == 4);
    if (row.at("t") == 0) CHECK(row.at("h")[1] == 4);
  }
  CHECK(res.at("h1_tensor_omega") == 12);
  const auto t = invoke({"tangent", f.string()});
  CHECK(t.code == kExitPass);
  CHECK(result_of(t).at("expected_mi") == 54);
  CHECK(result_of(t).at("measured_tangent").get<int>() >= 54);
}

TEST_CASE("gl then verify gives the same verdict") {
  const fs::path f = scratch() / "g0.json", g = scratch() / "g1.json";
  REQUIRE(invoke({"sample", "--n", "2", "--r", "1", "--strategy", "vacuous", "--seed", "3", "--out", f.string()}).code ==
          kExitPass);
  CHECK(invoke({"gl", f.string(), "--seed", "4", "--out", g.string()}).code == kExitPass);
  const json v0 = result_of(invoke({"verify", f.string(), "--seed", "2"}));
  const json v1 = result_of(invoke({"verify", g.string(), "--seed", "2"}));
  CHECK(v0.at("overall") == v1.at("overall"));
  CHECK(v0.at("condition_i") == v1.at("condition_i"));
  CHECK(v0.at("condition_iii") == v1.at("condition_iii"));
  CHECK(slurp(f) != slurp(g));
}

TEST_CASE("star and restrict") {
  const fs::path f = scratch() / "s.json", b = scratch() / "s_b.json";
  REQUIRE(invoke({"sample", "--n", "3", "--r", "2", "--strategy", "vacuous", "--seed", "5", "--out", f.string()}).code ==
          kExitPass);
  const auto star = invoke({"star", f.string(), "--n", "3"});
  CHECK(star.code == kExitPass);
  CHECK(result_of(star).at("verdict") == "found");
  CHECK(invoke({"restrict", f.string(), "--tau-spec", "coords:0,1,2", "--out", b.string()}).code == kExitPass);
  CHECK(invoke({"verify", b.string(), "--r", "3"}).code == kExitPass);
  CHECK(invoke({"restrict", f.string(), "--tau-spec", "random:2:9"}).code == kExitPass);
  CHECK(invoke({"restrict", f.string(), "--tau-spec", "coords:0,0"}).code == kExitFail);  // not injective
  CHECK(invoke({"restrict", f.string(), "--tau-spec", "coords:7"}).code == kExitUsage);
  CHECK(invoke({"restrict", f.string(), "--tau-spec", "bogus"}).code == kExitUsage);
}

TEST_CASE("zero hyperweb: verify fails, star is inconclusive") {
  const fs::path f = scratch() / "zero.json";
  spit(f, dump_hyperweb(Hyperweb::zero(2)));
  CHECK(invoke({"verify", f.string(), "--r", "1"}).code == kExitFail);
  CHECK(invoke({"star", f.string(), "--n", "1", "--trials", "5"}).code == kExitInconclusive);
  CHECK(invoke({"cohomology", f.string(), "--r", "1"}).code == kExitFail);
}

TEST_CASE("parse errors carry context") {
  const std::string good = dump_hyperweb(Hyperweb::standard_form());
  auto err_of = [](const std::string& text) {
    try {
      parse_hyperweb(text);
    } catch (const ParseError& e) {
      set_modulus(kDefaultPrime);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err_of("{\n  \"prime\": 5,\n  oops\n}").find("line 3") != std::string::npos);
  json j = json::parse(good);
  j["coeffs"][1].erase("value");
  CHECK(err_of(j.dump()).find("$.coeffs[1].value") != std::string::npos);
  j = json::parse(good);
  std::swap(j["coeffs"][0], j["coeffs"][1]);
  CHECK(err_of(j.dump()).find("canonical order") != std::string::npos);
  j = json::parse(good);
  j["coeffs"][0]["value"] = "0";
  CHECK(err_of(j.dump()).find("omitted") != std::string::npos);
  j = json::parse(good);
  j["prime"] = 9;
  CHECK(err_of(j.dump()).find("$.prime") != std::string::npos);
  j = json::parse(good);
  j["coeffs"][0]["a"] = 2;
  CHECK(err_of(j.dump()).find("$.coeffs[0]") != std::string::npos);
  j = json::parse(good);
  j["format_version"] = "2";
  CHECK(err_of(j.dump()).find("format_version") != std::string::npos);
  CHECK(err_of(good).empty());
}

TEST_CASE("file prime governs the session; a differing --prime is refused") {
  const fs::path f = scratch() / "p7.json";
  REQUIRE(invoke({"sample", "--n", "1", "--prime", "7", "--seed", "2", "--out", f.string()}).code == kExitPass);
  CHECK(json::parse(slurp(f)).at("prime") == 7);
  CHECK(invoke({"verify", f.string(), "--ext", "2"}).code == kExitPass);
  const auto r = invoke({"verify", f.string(), "--prime", "11"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("prime mismatch") != std::string::npos);
  CHECK(invoke({"sample", "--n", "1", "--prime", "2"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"sample"}).code == kExitUsage);
  CHECK(invoke({"sample", "--n", "2", "--strategy", "nope"}).code == kExitUsage);
  CHECK(invoke({"verify", (scratch() / "missing.json").string()}).code == kExitUsage);
  CHECK(invoke({"sample", "--n", "3", "--r", "1", "--strategy", "vacuous"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitPass);
}

TEST_CASE("tau-restrict and ansatz strategies") {
  const auto t = invoke({"sample", "--n", "3", "--r", "2", "--strategy", "tau-restrict", "--seed", "4"});
  CHECK(t.code == kExitPass);
  CHECK(json::parse(t.out).at("charge") == 4);
  const auto a = invoke({"sample", "--n", "4", "--r", "2", "--strategy", "ansatz", "--seed", "4", "--trials", "100"});
  CHECK(a.code == kExitPass);
  CHECK(json::parse(a.out).at("charge") == 6);
}
