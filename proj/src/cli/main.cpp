#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bhh/cli/runner.hpp"

namespace bhh {

namespace {

struct Common {
  std::string config, example, format = "json", out, cache_dir;
  std::optional<std::size_t> max_degree, max_columns;
  std::optional<unsigned long> seed;
};

void add_common(CLI::App* app, Common& c) {
  auto* cfg = app->add_option("--config", c.config, "Job configuration (JSON)");
  auto* ex = app->add_option("--example", c.example, "Catalog example name");
  cfg->excludes(ex);
  app->add_option("--max-degree", c.max_degree, "Degree cap N (complexes through degree N)");
  app->add_option("--max-columns", c.max_columns, "Largest cochain space to materialize");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", c.out, "Write the report here instead of stdout");
  app->add_option("--cache-dir", c.cache_dir, "Result cache (default: $BHH_CACHE_DIR)");
  app->add_option("--seed", c.seed, "Seed for random spot checks");
}

JobConfig resolve(const Common& c) {
  JobConfig cfg;
  if (!c.config.empty()) cfg = load_config(c.config);
  else if (!c.example.empty()) cfg = parse_config(example_config(c.example));
  else throw ConfigError("one of --config and --example is required");
  if (c.max_degree) {
    if (*c.max_degree < 1) throw ConfigError("--max-degree must be >= 1");
    cfg.max_degree = *c.max_degree;
  }
  if (c.max_columns) cfg.max_columns = *c.max_columns;
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

std::string cache_dir(const Common& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  const char* env = std::getenv("BHH_CACHE_DIR");
  return env ? env : "";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else atomic_write(out, text);
}

void summarize(const JobReport& r) {
  for (const auto& s : r.suites)
    for (const auto& c : s.checks.checks()) {
      std::cerr << status_name(c.status) << "  " << s.suite << ": " << c.name;
      if (!c.detail.empty()) std::cerr << "  (" << c.detail << ")";
      std::cerr << "\n";
    }
}

// "a..b" or "n"
std::pair<int, int> parse_degrees(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stoi(s), std::stoi(s)};
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw ConfigError("--degrees: expected a..b, got '" + s + "'");
  }
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Braided Hochschild cohomology with exact arithmetic"};
  app.require_subcommand(1);

  Common vc;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_common(verify, vc);

  Common cc;
  std::vector<std::string> complexes;
  std::string degrees;
  auto* compute = app.add_subcommand("compute", "Cohomology dimension tables");
  add_common(compute, cc);
  compute->add_option("--complex", complexes, "braided, relative, classical, normalized, invariant, crossed")
      ->delimiter(',');
  compute->add_option("--degrees", degrees, "Degree range a..b (default 0..N-1)");

  bool list = false;
  std::string show, ex_out;
  auto* examples = app.add_subcommand("examples", "List catalog examples or print one as a config");
  examples->add_flag("--list", list, "List the catalog");
  examples->add_option("name", show, "Example to print");
  examples->add_option("--out", ex_out, "Write the config here instead of stdout");

  std::string report_path, ex_format = "json", exp_out;
  auto* exp = app.add_subcommand("export", "Convert a JSON report");
  exp->add_option("--report", report_path, "Report written by verify or compute")->required();
  exp->add_option("--format", ex_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", exp_out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed() || compute->parsed()) {
      bool is_verify = verify->parsed();
      const Common& c = is_verify ? vc : cc;
      Job job = make_job(resolve(c));
      ComputeRequest req;
      req.complexes = complexes;
      if (!degrees.empty()) std::tie(req.lo, req.hi) = parse_degrees(degrees);
      std::string key = config_hash(job.config) + (is_verify ? "-verify" : "-compute");
      if (!is_verify) {
        std::string request;
        for (const auto& x : req.complexes) request += x + ",";
        key += "-" + fnv1a_hex(request + std::to_string(req.lo) + ".." + std::to_string(req.hi));
      }
      JobReport r = cached_run(cache_dir(c), key, [&] { return is_verify ? run_verify(job) : run_compute(job, req); });
      if (is_verify) summarize(r);
      emit(export_report(r, c.format), c.out);
      return r.ok() ? 0 : 1;
    }
    if (examples->parsed()) {
      if (list || show.empty()) {
        std::ostringstream s;
        for (const auto& e : example_catalog()) s << e.name << "\t" << e.summary << "\n";
        emit(s.str(), ex_out);
        return 0;
      }
      emit(pretty_json(example_config(show)) + "\n", ex_out);
      return 0;
    }
    std::ifstream in(report_path);
    if (!in) throw ConfigError("cannot read report '" + report_path + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("report: ") + e.what());
    }
    emit(export_report(report_from_json(j), ex_format), exp_out);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCap& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bhh
