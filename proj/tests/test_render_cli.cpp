#include <doctest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "dmult/error.hpp"
#include "dmult/render.hpp"
#include "helpers.hpp"

using namespace dmult;
using testing_support::ctx;
using testing_support::W;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DMULT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("text rendering") {
  const TypeContext& a1 = ctx("A1");
  CHECK(render_character(a1.group, a1.dem.character(W("-1")).series, Format::Text) == "e^{-1} + e^{1}\n");
  CHECK(render_e_t(a1.group, W("-1"), a1.mac.e_limit_q(W("-1")), Format::Text) == "e^{-1} + (1 - t^{-1})*e^{1}\n");
  const TypeContext& a2 = ctx("A2");
  CHECK(render_character(a2.group, a2.dem.character(W("0,0")).series, Format::Text) == "1\n");
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("JSON schemas round-trip") {
  const TypeContext& a2 = ctx("A2");
  const CharSeries chi = a2.dem.character(W("-1,-1")).series;
  auto doc = nlohmann::json::parse(render_character(a2.group, chi, Format::Json));
  REQUIRE(doc.is_array());
  CharSeries back;
  for (const auto& term : doc) back.add(Weight(term["weight"].get<std::vector<int>>()), term["mult"].get<long>());
  CHECK(back == chi);

  auto e = nlohmann::json::parse(render_e_t(a2.group, W("-1,0"), a2.mac.e_limit_q(W("-1,0")), Format::Json));
  CHECK(e["lambda"] == std::vector<int>{-1, 0});
  CHECK(e["terms"].size() == 3);
  CHECK(e["terms"][0]["coeff"] == "1");

  auto recs = nlohmann::json::parse(
      render_predictions("A1", ctx("A1").geo.predict_all(W("-1")), Format::Json));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["m"] == 1);
  CHECK(recs[0]["checks_passed"] == true);
}

TEST_CASE("CSV prediction table") {
  std::string csv = render_predictions("A1", ctx("A1").geo.predict_all(W("-1")), Format::Csv);
  CHECK(csv ==
        "type,lambda,mu,m,n,vol_poly,checks_passed\n"
        "A1,-1,1,1,1,-1 + t,true\n"
        "A1,-1,-1,1,2,t^{2},true\n");
  std::string csv2 = render_predictions("A2", ctx("A2").geo.predict_all(W("-1,0")), Format::Csv);
  CHECK(csv2.find("A2,\"-1,0\",\"-1,0\",1,") != std::string::npos);
}

TEST_CASE("command line examples") {
  RunResult a = run("char --type A1 --weight -1");
  CHECK(a.code == 0);
  CHECK(a.out == "e^{-1} + e^{1}\n");
  CHECK(run("char --type A1 --weight 1").out == "e^{1}\n");
  CHECK(run("char --type A2 --weight 0,0").out == "1\n");
  CHECK(run("macdonald --type A1 --weight -1 --stage t").out == "e^{-1} + (1 - t^{-1})*e^{1}\n");
  CHECK(run("macdonald --type A1 --weight -1 --stage char").out == a.out);
  CHECK(run("macdonald --type A1 --weight 0 --stage qt").out == "1\n");
  RunResult p = run("predict --type A1 --lambda -1 --all-mu --format csv");
  CHECK(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 3);
  CHECK(run("predict --type A1 --lambda 1 --mu 1 --format csv").out.find("A1,1,1,1,0,1,true") != std::string::npos);
  CHECK(run("predict --type A2 --lambda 1,0 --mu 0,-1").code == 3);
  CHECK(run("verify --type A1 --radius 0").code == 0);
}

TEST_CASE("command line exit codes") {
  CHECK(run("char --type Q7 --weight 1").code == 2);
  CHECK(run("char --type A2 --weight 1").code == 2);
  CHECK(run("char --type A2 --weight x,y").code == 2);
  CHECK(run("char --type A2 --weight 1,0 --format yaml").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("verify --type A3 --radius 9").code == 1);
  CHECK(run("char --type A1 --weight -30").code == 1);
  CHECK(run("predict --type A2 --lambda 1,-1 --mu 0,0 --irreducible").code == 3);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output file and threads") {
  const std::string path = "render_cli_test_out.json";
  CHECK(run("predict --type B2 --lambda -1,-1 --all-mu --format json --jobs 4 --out " + path).code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string body;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) body.append(buf.data(), n);
  fclose(f);
  std::remove(path.c_str());
  CHECK(body == run("predict --type B2 --lambda -1,-1 --all-mu --format json --jobs 1").out);
}
