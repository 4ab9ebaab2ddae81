#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cmd(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kBin = KWSIM_BIN;

}  // namespace

TEST_CASE("cli: preset listing and expansion") {
  const fs::path dir = fresh_dir("kw_cli_preset");
  CHECK(run_cmd(kBin + " preset --list > " + (dir / "list.txt").string()) == 0);
  const std::string names = slurp(dir / "list.txt");
  CHECK(names.find("figure1") != std::string::npos);
  CHECK(names.find("kvh_oscillator") != std::string::npos);

  CHECK(run_cmd(kBin + " preset figure1 > " + (dir / "fig.ini").string()) == 0);
  CHECK(slurp(dir / "fig.ini").find("model = qcwe") != std::string::npos);

  CHECK(run_cmd(kBin + " preset nope 2> /dev/null") == 2);
}

TEST_CASE("cli: validate reports configuration problems via exit code") {
  CHECK(run_cmd(kBin + " validate --preset figure1 > /dev/null") == 0);
  CHECK(run_cmd(kBin + " validate /no/such/file.ini 2> /dev/null") == 2);
  CHECK(run_cmd(kBin + " validate 2> /dev/null") == 2);  // no input at all

  const fs::path dir = fresh_dir("kw_cli_validate");
  std::ofstream(dir / "bad.ini") << "[run]\ndt = 0\n";
  const std::string err = (dir / "err.txt").string();
  CHECK(run_cmd(kBin + " validate " + (dir / "bad.ini").string() + " 2> " +
                err) == 2);
  CHECK(slurp(err).find("nonpositive-dt") != std::string::npos);
}

TEST_CASE("cli: run, oracle, compare round trip") {
  const fs::path dir = fresh_dir("kw_cli_flow");
  std::ofstream(dir / "exp.ini") << "[run]\n"
                                    "preset = free_particle\n"
                                    "t_final = 0.25\n"
                                    "checkpoint_interval = 0.25\n"
                                    "dt = 2.5e-3\n"
                                    "[grid]\n"
                                    "nq = 64\n"
                                    "np = 64\n"
                                    "[output]\n"
                                    "directory = run_a\n";
  const std::string env = "KWSIM_OUTPUT_ROOT=" + dir.string() + " ";
  const std::string cfg = (dir / "exp.ini").string();

  CHECK(run_cmd(env + kBin + " run " + cfg + " > /dev/null") == 0);
  CHECK(run_cmd(env + kBin + " oracle " + cfg + " --out run_b > /dev/null") ==
        0);
  CHECK(fs::exists(dir / "run_a" / "manifest.json"));
  CHECK(fs::exists(dir / "run_b" / "manifest.json"));

  const std::string report = (dir / "cmp").string();
  CHECK(run_cmd(kBin + " compare " + (dir / "run_a").string() + " " +
                (dir / "run_b").string() + " --out " + report +
                " > /dev/null") == 0);
  CHECK(fs::exists(dir / "cmp" / "report.json"));
  CHECK(fs::exists(dir / "cmp" / "metrics.csv"));
}

TEST_CASE("cli: numerical aborts exit with their own code") {
  const fs::path dir = fresh_dir("kw_cli_abort");
  std::ofstream(dir / "exp.ini") << "[run]\n"
                                    "preset = free_particle\n"
                                    "t_final = 0.25\n"
                                    "checkpoint_interval = 0.25\n"
                                    "dt = 2.5e-3\n"
                                    "[grid]\n"
                                    "nq = 64\n"
                                    "np = 64\n"
                                    "[solver]\n"
                                    "boundary_mass_limit = 1e-30\n";
  const std::string env = "KWSIM_OUTPUT_ROOT=" + dir.string() + " ";
  const std::string err = (dir / "err.txt").string();
  CHECK(run_cmd(env + kBin + " run " + (dir / "exp.ini").string() +
                " > /dev/null 2> " + err) == 3);
  CHECK(slurp(err).find("boundary_mass") != std::string::npos);
}
