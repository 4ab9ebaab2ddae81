#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "koopman/compare.hpp"
#include "koopman/presets.hpp"
#include "koopman/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::filesystem::path output_root() {
  if (const char* env = std::getenv("KWSIM_OUTPUT_ROOT"); env && *env)
    return env;
  return ".";
}

int report_violations(const std::vector<koopman::ConfigViolation>& v) {
  for (const auto& x : v)
    std::cerr << "config error [" << x.code << "] " << x.where << ": "
              << x.message << "\n";
  return kExitConfig;
}

// Reads the file (or expands --preset) and parses; nullopt means the caller
// should exit with kExitConfig.
std::optional<koopman::ExperimentConfig> load_config(
    const std::string& path, const std::string& preset) {
  std::string text;
  if (!preset.empty()) {
    text = "[run]\npreset = " + preset + "\n";
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "config error [unreadable-file] " << path
                << ": cannot open\n";
      return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::vector<koopman::ConfigViolation> violations;
  koopman::ExperimentConfig cfg = koopman::parse_config(text, violations);
  if (!violations.empty()) {
    report_violations(violations);
    return std::nullopt;
  }
  return cfg;
}

int finish_run(const koopman::RunResult& res) {
  if (res.abort) {
    std::cerr << "numerical abort [" << res.abort->invariant
              << "] value " << res.abort->value << " exceeds limit "
              << res.abort->limit << " at t = " << res.abort->time << "\n";
    if (!res.directory.empty())
      std::cerr << "partial outputs in " << res.directory.string() << "\n";
    return kExitNumerical;
  }
  std::cout << res.source << ": " << res.records.size() << " checkpoints in "
            << res.wall_time_s << " s";
  if (!res.directory.empty()) std::cout << " -> " << res.directory.string();
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koopman wavefunction phase-space simulator"};
  app.require_subcommand(1);

  std::string config_path, preset_name, run_out;
  std::string dir_a, dir_b, compare_out = "compare_out", convention = "auto";

  auto add_config_opts = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "INI experiment description");
    cmd->add_option("--preset", preset_name,
                    "expand a named preset instead of reading a file");
    cmd->add_option("--out", run_out,
                    "output directory name, overrides [output] directory");
  };

  CLI::App* run = app.add_subcommand("run", "execute the configured model");
  add_config_opts(run);
  CLI::App* oracle = app.add_subcommand(
      "oracle", "execute the reference counterpart of the configured model");
  add_config_opts(oracle);
  CLI::App* validate =
      app.add_subcommand("validate", "parse and check a configuration");
  add_config_opts(validate);

  CLI::App* compare =
      app.add_subcommand("compare", "compare two run directories");
  compare->add_option("dir_a", dir_a, "first run directory")->required();
  compare->add_option("dir_b", dir_b, "second run directory")->required();
  compare->add_option("--out", compare_out, "report directory");
  compare->add_option("--convention", convention,
                      "density reading of run A: auto|primary|modulus");

  CLI::App* preset = app.add_subcommand("preset", "print a preset or list all");
  std::string wanted;
  bool list_presets = false;
  preset->add_option("name", wanted, "preset name");
  preset->add_flag("--list", list_presets, "list preset names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed() || oracle->parsed() || validate->parsed()) {
      if (config_path.empty() && preset_name.empty()) {
        std::cerr << "config error [missing-input] provide a config file or "
                     "--preset\n";
        return kExitConfig;
      }
      auto cfg = load_config(config_path, preset_name);
      if (!cfg) return kExitConfig;
      if (!run_out.empty()) cfg->directory = run_out;
      if (validate->parsed()) {
        std::cout << "valid: model " << koopman::to_string(cfg->model)
                  << ", t_final " << cfg->t_final << ", grid " << cfg->nq
                  << "x" << cfg->np << "\n";
        return 0;
      }
      const koopman::RunResult res =
          run->parsed() ? koopman::run_experiment(*cfg, output_root())
                        : koopman::run_oracle(*cfg, output_root());
      return finish_run(res);
    }
    if (compare->parsed()) {
      koopman::CompareOptions opts;
      opts.convention = convention;
      const koopman::ComparisonReport rep =
          koopman::compare_directories(dir_a, dir_b, compare_out, opts);
      std::cout << "compared " << rep.rows.size() << " checkpoints ("
                << rep.convention_used
                << " density): max bloch deviation " << rep.max_bloch_deviation
                << ", max density L1 " << rep.max_density_l1
                << ", min purity gap " << rep.min_purity_gap << " -> "
                << compare_out << "\n";
      return 0;
    }
    if (preset->parsed()) {
      if (list_presets || wanted.empty()) {
        for (const auto& n : koopman::preset_names()) std::cout << n << "\n";
        return 0;
      }
      if (!koopman::preset_exists(wanted)) {
        std::cerr << "config error [unknown-preset] run.preset: no preset "
                     "named '"
                  << wanted << "'\n";
        return kExitConfig;
      }
      std::cout << koopman::emit_config(koopman::preset_config(wanted));
      return 0;
    }
  } catch (const koopman::ConfigError& e) {
    return report_violations(e.violations());
  } catch (const koopman::NumericalAbort& e) {
    std::cerr << "numerical abort [" << e.record().invariant << "] "
              << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
