#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "grado/fixtures.hpp"

using namespace grado;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(GRADO_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string verdict_of(const Result& r, std::size_t k = 0) {
  return Json::parse(r.out)["tasks"][k]["verdict"].get<std::string>();
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("fixtures --emit is byte-identical") {
  for (const auto& name : fixture_names()) {
    auto r = run("fixtures --emit " + name);
    CHECK(r.code == 0);
    CHECK(r.out == fixture_bytes(name));
  }
}

TEST_CASE("fixtures --list") {
  auto r = run("fixtures --list");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).size() >= 6);
}

TEST_CASE("run: required verdicts and exit codes") {
  auto e = run("--json run " + fixture_path("endv") + " --task epsilon");
  CHECK(e.code == 0);
  CHECK(verdict_of(e) == "pass");
  CHECK(Json::parse(e.out)["tasks"][0]["witness"]["eps"].size() == 5);
  auto t = run("--json run " + fixture_path("tri") + " --task crossed");
  CHECK(t.code == 0);
  CHECK(verdict_of(t) == "fail");
  auto p = run("--json run " + fixture_path("pcp2") + " --task tpa-roundtrip");
  CHECK(p.code == 0);
  CHECK(verdict_of(p) == "pass");
}

TEST_CASE("reports are deterministic given document, seed and budget") {
  auto a = run("--json --seed 9 run endv");
  auto b = run("--json --seed 9 run endv");
  auto strip = [](const std::string& s) {
    Json j = Json::parse(s);
    for (auto& t : j["tasks"]) t.erase("ms");
    return j;
  };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(Json::parse(a.out)["seed"] == 9);
}

TEST_CASE("an exhausted budget exits with 2") {
  auto r = run("--json --budget 0 run endv --task crossed");
  CHECK(r.code == 2);
  CHECK(verdict_of(r) == "undecided");
}

TEST_CASE("invalid input exits with 1") {
  CHECK(run("run /nonexistent/doc.json").code == 1);
  CHECK(run("run " + temp_file("grado_bad.json", "{ not json")).code == 1);
  CHECK(run("run " + temp_file("grado_schema.json", R"({"version": "grado/1", "name": "x", "field": {"GF": 4}})")).code == 1);
  CHECK(run("run endv --task bogus").code == 1);
  CHECK(run("graded").code == 1);
  CHECK(run("matrix analyze endv --n 0").code == 1);
}

TEST_CASE("every subcommand runs") {
  const char* cases[] = {"graded verify endv",       "graded epsilon endv",      "graded crossed-decide endv",
                         "matrix analyze endv --n 2", "crossed verify pcp2",      "crossed build pcp2",
                         "crossed extract pcp2",     "pic membership endv",      "pic rep-check endv",
                         "pic isomul endv",          "center action swap-galois", "center invariants swap-galois",
                         "center galois swap-galois", "center azumaya swap-galois", "end build endv",
                         "end classify endv",        "module induce tri",        "module astor tri",
                         "semiperfect analyze block-swap", "semiperfect orbits block-swap"};
  for (const char* c : cases) {
    INFO(c);
    auto r = run(std::string("--json ") + c);
    CHECK(r.code == 0);
    CHECK(verdict_of(r) == "pass");
  }
  auto m = run("--json matrix analyze endv --n 1");
  CHECK(Json::parse(m.out)["tasks"][0]["witness"]["sizes"][0]["n"] == 1);
}
