// gwa: Hochschild (co)homology dimensions of generalized Weyl algebras k[h](a, σ).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwa/gwacli.hpp"

namespace {

using gwa::cli::JobConfig;
using gwa::cli::RunReport;

enum class Format { Table, Json, Csv };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gwa::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_common(CLI::App* sub, JobConfig& c, std::optional<int>& dmax, bool& json, bool& csv) {
  sub->add_option("--a", c.a, "defining polynomial in h, e.g. \"h^2 - 1\"")->capture_default_str();
  sub->add_option("--h0", c.h0, "shift of σ(h) = h - h0 (rational)")->capture_default_str();
  sub->add_option("--p-max", c.p_max, "highest degree reported")->capture_default_str();
  sub->add_option("--d0", c.d0, "first truncation bound");
  sub->add_option("--step", c.step, "truncation bound increment");
  sub->add_option("--window", c.window, "consecutive equal values required");
  sub->add_option("--dmax", dmax, "truncation cap (overrides GWA_DMAX)");
  sub->add_flag("--json", json, "emit a JSON report");
  sub->add_flag("--csv", csv, "emit CSV rows");
}

void add_twist(CLI::App* sub, JobConfig& c) {
  sub->add_option("--m", c.twist_order, "order m of w = zeta_m^power")->capture_default_str();
  sub->add_option("--power", c.twist_power, "power of zeta_m")->capture_default_str();
}

std::optional<int> env_dmax() {
  const char* v = std::getenv("GWA_DMAX");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    int d = std::stoi(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw gwa::ParseError(std::string("GWA_DMAX must be an integer, got '") + v + "'");
  }
}

void emit(const std::vector<RunReport>& reports, Format format, bool as_array) {
  if (format == Format::Csv) {
    std::cout << gwa::cli::to_csv(reports);
  } else if (format == Format::Json) {
    if (!as_array) {
      std::cout << gwa::cli::to_json(reports.front()) << '\n';
    } else {
      std::cout << "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::cout << gwa::cli::to_json(reports[i]) << (i + 1 < reports.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << gwa::cli::to_table(reports[i]);
    }
  }
  for (const auto& r : reports) {
    if (!r.error.empty() && format != Format::Table) std::cerr << "error: " << r.error << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild (co)homology of generalized Weyl algebras: closed forms and a resolution-based oracle"};
  app.require_subcommand(0, 1);

  JobConfig c;
  std::optional<int> dmax;
  bool json = false, csv = false;
  std::string sweep_file, classes_file;

  app.add_option("--sweep", sweep_file, "JSON array of job configurations, run concurrently");
  app.add_flag("--json", json, "emit JSON reports");
  app.add_flag("--csv", csv, "emit CSV rows");

  auto* hh = app.add_subcommand("hh", "Hochschild homology dimensions");
  auto* coh = app.add_subcommand("coh", "Hochschild cohomology dimensions");
  auto* twisted = app.add_subcommand("twisted", "(co)homology with coefficients twisted by x -> wx, y -> w^-1 y");
  auto* invariants = app.add_subcommand("invariants", "invariant subalgebra under a cyclic torus group of order r");
  auto* group = app.add_subcommand("group", "HH^* of A^G from conjugacy-class data");
  auto* verify = app.add_subcommand("verify", "compare closed forms with the oracle");
  auto* selftest = app.add_subcommand("selftest", "run the property suite");

  for (auto* sub : {hh, coh, twisted, invariants, group, verify, selftest}) add_common(sub, c, dmax, json, csv);
  for (auto* sub : {hh, coh, twisted}) sub->add_flag("--oracle", c.oracle, "also run the oracle");
  add_twist(twisted, c);
  add_twist(verify, c);
  verify->add_option("--kind", c.kind, "homology, cohomology, twisted-homology, twisted-cohomology or all")
      ->capture_default_str();
  invariants->add_option("--r", c.r, "group order")->capture_default_str();
  group->add_option("--classes", classes_file, "file with one \"order=<m> omega=<yes|no>\" line per class");
  group->add_option("--classes-text", c.classes, "class block given inline (lines separated by ';')");
  selftest->add_option("--seed", c.seed, "seed of the random samples")->capture_default_str();
  selftest->add_option("--samples", c.samples, "random chains for the homotopy check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gwa::cli::kInvalidInput;
  }

  const Format format = json ? Format::Json : csv ? Format::Csv : Format::Table;
  try {
    std::optional<int> cap = dmax ? dmax : env_dmax();
    if (!sweep_file.empty()) {
      if (!app.get_subcommands().empty()) throw gwa::ParseError("--sweep cannot be combined with a command");
      std::vector<JobConfig> jobs = gwa::cli::sweep_from_json(read_file(sweep_file));
      for (auto& j : jobs) {
        if (!j.d_max) j.d_max = cap;
      }
      std::vector<RunReport> reports = gwa::cli::run_sweep(jobs);
      emit(reports, format, true);
      int code = 0;
      for (const auto& r : reports) code = std::max(code, r.exit_code);
      return code;
    }
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return gwa::cli::kInvalidInput;
    }
    c.command = app.get_subcommands().front()->get_name();
    c.d_max = cap;
    if (!classes_file.empty()) c.classes = read_file(classes_file);
    for (auto& ch : c.classes) {
      if (ch == ';') ch = '\n';
    }
    RunReport report = gwa::cli::run(c);
    emit({report}, format, false);
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gwa::cli::kInvalidInput;
  }
}
