#include <doctest.h>

#include <fstream>
#include <sstream>

#include "grado/errors.hpp"
#include "grado/tasks.hpp"
#include "support.hpp"

using namespace grado;

namespace {

Json minimal_doc() {
  return Json::parse(R"({
    "version": "grado/1",
    "name": "k2",
    "field": {"GF": 3},
    "algebra": {"dim": 2, "basis": ["a", "b"],
                "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                "unit": [1, 0]},
    "grading": {"group": {"finite": {"table": [[0, 1], [1, 0]], "identity": 0}}, "degrees": [0, 1]}
  })");
}

std::string error_of(const Json& doc) {
  try {
    parse_instance(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal document") {
  Instance inst = parse_instance(minimal_doc());
  REQUIRE(inst.graded);
  CHECK(inst.graded->support().size() == 2);
  CHECK(is_strongly_graded(*inst.graded));
  // The serializer output parses back to the same document.
  CHECK(to_json(parse_instance(to_json(inst))) == to_json(inst));
}

TEST_CASE("alternative input forms") {
  Json doc = minimal_doc();
  doc["field"] = {{"p", 3}};
  doc["algebra"].erase("mul");
  doc["algebra"]["products"] = Json::parse(R"([["a", "a", {"a": 1}], ["a", "b", {"b": 1}], ["b", "a", {"b": 1}], ["b", "b", {"a": 1}]])");
  doc["grading"]["degrees"] = {{"a", 0}, {"b", 1}};
  doc["grading"]["group"] = {{"cyclic", 2}};
  Instance inst = parse_instance(doc);
  CHECK(to_json(inst)["algebra"] == to_json(parse_instance(minimal_doc()))["algebra"]);
}

TEST_CASE("rational scalars") {
  Json doc = minimal_doc();
  doc["field"] = "Q";
  doc["algebra"]["mul"][1][1] = {"1", "0"};
  doc.erase("grading");
  Instance inst = parse_instance(doc);
  CHECK(!inst.field.is_finite());
  CHECK(inst.algebra->is_commutative());
}

TEST_CASE("schema violations carry JSON pointers") {
  Json doc = minimal_doc();
  doc["algebra"]["mul"][1].erase(1);
  CHECK(error_of(doc).find("/algebra/mul/1") != std::string::npos);
  doc = minimal_doc();
  doc["grading"]["degrees"] = {0};
  CHECK(error_of(doc).find("/grading/degrees") != std::string::npos);
  doc = minimal_doc();
  doc["version"] = "other";
  CHECK(error_of(doc).find("/version") != std::string::npos);
  doc = minimal_doc();
  doc["grading"]["degrees"] = {1, 1};
  CHECK(error_of(doc).find("/grading") != std::string::npos);
  doc = minimal_doc();
  doc["modules"] = Json::parse(R"([{"name": "M", "kind": "left", "dim": 1, "left": [[[1]], [[1]]]}])");
  CHECK(error_of(doc).find("/modules/0/left") != std::string::npos);
  doc["modules"][0]["left"] = Json::parse("[[[2]]]");
  CHECK(error_of(doc).find("/modules/0") != std::string::npos);
  doc = minimal_doc();
  doc["algebra"]["unit"] = {0, 1};
  CHECK(!error_of(doc).empty());
}

TEST_CASE("module kinds") {
  Json doc = minimal_doc();
  doc["modules"] = Json::parse(R"([
    {"name": "R", "kind": "left", "dim": 1, "left": [[[1]]]},
    {"name": "B", "kind": "bimodule", "dim": 1, "left": [[[1]]], "right": [[[1]]]},
    {"name": "A", "kind": "graded", "degrees": [0, 1],
     "left": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]},
    {"name": "W", "kind": "graded_vector_space", "degrees": [0, 1, 1]}
  ])");
  Instance inst = parse_instance(doc);
  REQUIRE(inst.modules.size() == 4);
  CHECK(inst.modules[0].plain->dim() == 1);
  CHECK(inst.modules[1].plain->has_right());
  CHECK(inst.modules[2].graded->support().size() == 2);
  CHECK(inst.modules[3].graded->dim() == 3);
  CHECK(to_json(parse_instance(to_json(inst))) == to_json(inst));
}

TEST_CASE("fixture list") {
  CHECK(fixture_names().size() >= 6);
  CHECK_THROWS_AS(build_fixture("nope"), InputError);
}

TEST_CASE("fixtures: built, shipped and emitted forms agree") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    const Instance built = build_fixture(name);
    CHECK(dump_document(to_json(built)) == fixture_bytes(name));
    CHECK(to_json(load_fixture(name)) == to_json(built));
  }
}

TEST_CASE("fixtures: stored reports replay and their witnesses re-verify") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    const Instance inst = load_fixture(name);
    RunOptions opt;
    opt.timing = false;
    const Json report = run_report(inst, opt);
    std::ifstream in(expected_path(name));
    REQUIRE(in);
    const Json expected = Json::parse(in);
    CHECK(report == expected);
    CHECK(run_report(inst, opt) == report);
    for (const auto& t : report["tasks"]) {
      INFO(t["task"].get<std::string>());
      CHECK(reverify(inst, t));
    }
  }
}

TEST_CASE("reverify rejects a tampered witness") {
  const Instance inst = load_fixture("endv");
  RunOptions opt;
  opt.tasks = {"crossed"};
  opt.timing = false;
  Json report = run_report(inst, opt);
  Json t = report["tasks"][0];
  REQUIRE(reverify(inst, t));
  t["witness"]["witnesses"][0]["inverse"][0] = 1;
  t["witness"]["witnesses"][0]["inverse"][1] = 1;
  CHECK(!reverify(inst, t));
}

TEST_CASE("tasks run in dependency order with unknown tasks rejected") {
  const Instance inst = load_fixture("pcp2");
  RunOptions opt;
  opt.tasks = {"crossed", "tpa", "epsilon"};
  const Json r = run_report(inst, opt);
  REQUIRE(r["tasks"].size() == 3);
  CHECK(r["tasks"][0]["task"] == "tpa");
  CHECK(r["tasks"][1]["task"] == "epsilon");
  CHECK(r["tasks"][2]["task"] == "crossed");
  opt.tasks = {"bogus"};
  CHECK_THROWS_AS(run_report(inst, opt), InputError);
}

TEST_CASE("required report verdicts") {
  auto verdict = [](const char* name, const char* task) {
    RunOptions opt;
    opt.tasks = {task};
    return run_report(load_fixture(name), opt)["tasks"][0]["verdict"].get<std::string>();
  };
  CHECK(verdict("endv", "epsilon") == "pass");
  CHECK(verdict("tri", "crossed") == "fail");
  CHECK(verdict("pcp2", "tpa-roundtrip") == "pass");
}
