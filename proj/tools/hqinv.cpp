// hqinv: run the checks of the Hermitian invariant library and write JSON reports.
//
// Exit status: 0 when every selected check passes, 1 when one fails, 2 on
// usage or configuration errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermitian/hq.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<uint64_t> q, p, h, m, k, seed, points, elements, word_length, args, threads, budget;
  std::vector<std::string> checks;
  std::string out;
  bool no_timestamp = false;
  bool quiet = false;
};

nlohmann::ordered_json to_config(const Options& o) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  auto put = [&](const char* key, const std::optional<uint64_t>& v) {
    if (v) j[key] = *v;
  };
  put("q", o.q);
  put("p", o.p);
  put("h", o.h);
  put("m", o.m);
  put("k", o.k);
  put("seed", o.seed);
  put("points", o.points);
  put("elements", o.elements);
  put("word_length", o.word_length);
  put("args", o.args);
  put("threads", o.threads);
  put("max_sylvester_dim_sq", o.budget);
  if (!o.checks.empty()) j["checks"] = o.checks;
  if (o.no_timestamp) j["timestamp"] = false;
  return j;
}

std::string default_name(const std::string& sub, const nlohmann::json& doc) {
  return sub + "-q" + std::to_string(doc.value("q", 0)) + "-seed" + std::to_string(doc.value("seed", 0ull)) + ".json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for the invariant t of PGU(3,q) on the Hermitian curve"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(hq_version()));
  app.set_config("--config", "", "key=value file; flags given on the command line win");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--q", o.q, "q = p^h");
  app.add_option("--p", o.p, "characteristic (with --h instead of --q)");
  app.add_option("--h", o.h, "q = p^h");
  app.add_option("--m", o.m, "ambient degree over F_p (per-check default when omitted)");
  app.add_option("--k", o.k, "count points over F_{q^{2k}}");
  app.add_option("--seed", o.seed, "64-bit seed");
  app.add_option("--points", o.points, "sampled curve points");
  app.add_option("--elements", o.elements, "sampled group elements");
  app.add_option("--word-length", o.word_length, "generators per random group element");
  app.add_option("--args", o.args, "arguments per map for pgl2-invariance");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_option("--budget", o.budget, "cap on the squared Sylvester dimension");
  app.add_option("--checks", o.checks, "subset for verify-symbolic: dm4 dm6 i ii iii")->delimiter(',');
  app.add_option("--out", o.out, "report path (default: $HQ_REPORT_DIR/<name>.json, else stdout)");
  app.add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
  app.add_flag("--quiet", o.quiet, "no summary lines");

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"field-info", "field model and modulus"},
      {"count-points", "point counts over F_{q^{2k}}"},
      {"verify-invariance", "pointwise invariance of t under random group elements"},
      {"verify-symbolic", "determinant identity and consistency of t, u, t_x, t_y modulo the curve"},
      {"degree-census", "reduced degrees of t_x, t_y and the PGL(2, q) invariant"},
      {"zero-locus", "roots of the reduced numerators of t_x and t_y"},
      {"quotient-eliminate", "eliminants and plane models by resultants"},
      {"group-order", "BFS closure of the generators of PGU(3, q)"},
      {"pgl2-invariance", "invariance of the PGL(2, q) invariant"},
      {"all", "every check that fits at this q"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  const std::string config = to_config(o).dump();

  hq_report* report = nullptr;
  const hq_status st = hq_run(sub.c_str(), config.c_str(), &report);
  if (st != HQ_OK) {
    std::cerr << "hqinv: " << hq_last_error() << "\n";
    return kExitUsage;
  }
  const std::string text = std::string(hq_report_json(report, 2)) + "\n";
  const bool pass = hq_report_pass(report) != 0;
  const nlohmann::json doc = nlohmann::json::parse(text);
  hq_report_free(report);

  std::string path = o.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("HQ_REPORT_DIR"); dir != nullptr && *dir != '\0')
      path = (std::filesystem::path(dir) / default_name(sub, doc)).string();
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::error_code ec;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    std::ofstream os(path, std::ios::binary);
    if (!os || !(os << text)) {
      std::cerr << "hqinv: cannot write " << path << "\n";
      return kExitUsage;
    }
    if (!o.quiet) {
      for (const auto& r : doc["reports"])
        std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["check"].get<std::string>() << " q=" << r["q"]
                  << "\n";
      for (const auto& s : doc["skipped"]) std::cout << "SKIP " << s["check"].get<std::string>() << "\n";
      std::cout << "report: " << path << "\n";
    }
  }
  return pass ? 0 : kExitFail;
}
