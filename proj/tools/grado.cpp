// grado: command-line front end for graded-ring instance documents.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "grado/fixtures.hpp"
#include "grado/tasks.hpp"

using namespace grado;

namespace {

struct Global {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  bool json = false;
};

/// A path, or the name of a bundled fixture.
Instance open_document(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_instance(arg);
  for (const auto& n : fixture_names())
    if (n == arg) return load_fixture(n);
  throw InputError("no such document or fixture: " + arg);
}

void print_human(const Json& report) {
  std::cerr << report["document"].get<std::string>() << " (seed " << report["seed"] << ")\n";
  for (const auto& t : report["tasks"]) {
    std::cerr << "  " << t["task"].get<std::string>() << ": " << t["verdict"].get<std::string>();
    if (t.contains("detail")) std::cerr << "  [" << t["detail"].get<std::string>() << "]";
    std::cerr << "\n";
  }
}

int run_tasks(const Global& g, const std::string& doc, std::vector<std::string> tasks,
              std::vector<std::size_t> sizes = {1, 2}) {
  Instance inst = open_document(doc);
  RunOptions opt;
  opt.tasks = std::move(tasks);
  opt.seed = g.seed;
  opt.budget = g.budget;
  opt.matrix_sizes = std::move(sizes);
  Json report = run_report(inst, opt);
  std::cout << report.dump(2) << "\n";
  if (!g.json) print_human(report);
  return exit_code(report);
}

int fixtures_command(const Global& g, const std::string& emit, const std::string& write_dir,
                     const std::string& expected_dir) {
  if (!emit.empty()) {
    std::cout << fixture_bytes(emit);
    return 0;
  }
  if (!write_dir.empty()) {
    std::filesystem::create_directories(write_dir);
    for (const auto& n : fixture_names()) {
      if (!g.json) std::cerr << "writing " << write_dir << "/" << n << ".json\n";
      std::ofstream out(write_dir + "/" + n + ".json", std::ios::binary);
      out << dump_document(to_json(build_fixture(n)));
    }
  }
  if (!expected_dir.empty()) {
    std::filesystem::create_directories(expected_dir);
    for (const auto& n : fixture_names()) {
      if (!g.json) std::cerr << "writing " << expected_dir << "/" << n << ".json\n";
      RunOptions opt;
      opt.timing = false;
      std::ofstream out(expected_dir + "/" + n + ".json", std::ios::binary);
      out << dump_document(run_report(load_fixture(n), opt));
    }
  }
  if (write_dir.empty() && expected_dir.empty()) {
    Json list = Json::array();
    for (const auto& n : fixture_names()) list.push_back({{"name", n}, {"path", fixture_path(n)}});
    std::cout << list.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with group-graded rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  std::uint64_t seed = 0, budget = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized searches")->expected(1);
  auto* budget_opt = app.add_option("--budget", budget, "Candidate budget for searches (also caps random trials)")->expected(1);
  app.add_flag("--json", g.json, "JSON only: suppress the human summary on stderr");

  std::string doc;
  std::vector<std::string> tasks;
  struct Action {
    const char* name;
    const char* task;
  };
  struct CmdGroup {
    const char* name;
    const char* help;
    std::vector<Action> actions;
  };
  const std::vector<CmdGroup> groups = {
      {"graded", "Gradings, epsilon-strong detection, crossed-product decision",
       {{"verify", "grading"}, {"epsilon", "epsilon"}, {"crossed-decide", "crossed"}}},
      {"crossed", "Twisted partial actions and their crossed products",
       {{"verify", "tpa"}, {"build", "build"}, {"extract", "tpa-roundtrip"}}},
      {"pic", "Picard semigroup membership and partial representations",
       {{"membership", "pics"}, {"rep-check", "phi"}, {"isomul", "isomul"}}},
      {"center", "Partial action on the centre, Galois and Azumaya checks",
       {{"action", "gamma"}, {"invariants", "invariants"}, {"galois", "galois"}, {"azumaya", "azumaya"}}},
      {"end", "Graded endomorphism rings", {{"build", "end-build"}, {"classify", "classify"}}},
      {"module", "Induced modules", {{"induce", "induce"}, {"astor", "astor"}}},
      {"semiperfect", "Idempotent frames, G_E and the index partial action",
       {{"analyze", "semiperfect"}, {"orbits", "index-action"}}},
  };
  std::map<CLI::App*, const char*> by_app;
  for (const auto& grp : groups) {
    auto* sub = app.add_subcommand(grp.name, grp.help);
    sub->require_subcommand(1);
    for (const auto& a : grp.actions) {
      auto* leaf = sub->add_subcommand(a.name);
      leaf->add_option("document", doc, "Instance document or fixture name")->required();
      by_app[leaf] = a.task;
    }
  }
  std::size_t matrix_n = 2;
  auto* matrix = app.add_subcommand("matrix", "Matrix rings over a graded ring");
  matrix->require_subcommand(1);
  auto* analyze = matrix->add_subcommand("analyze");
  analyze->add_option("document", doc, "Instance document or fixture name")->required();
  analyze->add_option("--n", matrix_n, "Matrix size")->check(CLI::Range(1, 8));
  auto* run = app.add_subcommand("run", "Run tasks on a document");
  run->add_option("document", doc, "Instance document or fixture name")->required();
  run->add_option("--task", tasks, "Task to run (repeatable); default: the document's list");
  auto* fx = app.add_subcommand("fixtures", "List, emit or regenerate the bundled fixtures");
  std::string emit, write_dir, expected_dir;
  fx->add_flag("--list", "List the bundled fixtures (the default)");
  fx->add_option("--emit", emit, "Write the named fixture document to stdout");
  fx->add_option("--write", write_dir, "Regenerate every fixture document into a directory");
  fx->add_option("--expected", expected_dir, "Regenerate every expected report into a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (*seed_opt) g.seed = seed;
  if (*budget_opt) g.budget = budget;

  try {
    for (const auto& [leaf, task] : by_app)
      if (*leaf) return run_tasks(g, doc, {task});
    if (*analyze) return run_tasks(g, doc, {"matcro"}, {matrix_n});
    if (*run) return run_tasks(g, doc, tasks);
    if (*fx) return fixtures_command(g, emit, write_dir, expected_dir);
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
