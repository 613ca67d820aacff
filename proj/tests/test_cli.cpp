// Drives the CLI binary end to end: exit codes, artifact shapes, and
// byte-identical reruns. The binary path comes from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef CURVEFT_CLI_PATH
#error "CURVEFT_CLI_PATH must be defined by the build"
#endif

const char* cli_path() { return CURVEFT_CLI_PATH; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("curveft_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
  std::string cmd = std::string(cli_path()) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream os(p);
  os << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("surface-info: pass, validation failure, malformed config") {
  TempDir tmp;
  fs::path good = tmp.path / "fig1.json";
  write_file(good, R"({"surface": {"kind": "figure1_curve", "params": {}}})");
  CHECK(run("surface-info --config " + good.string() + " --out " + tmp.path.string()) == 0);
  std::string report = read_file(tmp.path / "surface_info.json");
  CHECK(report.find("\"pass\": true") != std::string::npos);
  CHECK(report.find("total_mass") != std::string::npos);

  fs::path flat = tmp.path / "flat.json";
  write_file(flat, R"({"surface": {"kind": "flat_segment", "params": {"length": 1.0}}})");
  CHECK(run("surface-info --config " + flat.string() + " --out " + tmp.path.string()) == 2);

  fs::path bad = tmp.path / "bad.json";
  write_file(bad, "{broken");
  CHECK(run("surface-info --config " + bad.string()) == 1);

  fs::path unknown = tmp.path / "unknown.json";
  write_file(unknown, R"({"surface": {"kind": "circle", "params": {}}, "bogus_key": 1})");
  CHECK(run("surface-info --config " + unknown.string()) == 1);

  CHECK(run("surface-info --config /nonexistent.json") == 1);
}

TEST_CASE("ft-scan: CSV shape, trailing hash comment, reproducibility") {
  TempDir tmp;
  fs::path cfg = tmp.path / "scan.json";
  write_file(cfg, R"({
    "surface": {"kind": "circle", "params": {"r": 1.0}},
    "frequencies": {"kind": "ray", "direction": [1.0, 0.0],
                    "from": 1.0, "to": 20.0, "count": 20, "spacing": "linear"}
  })");
  CHECK(run("ft-scan --config " + cfg.string() + " --out " + tmp.path.string()) == 0);
  std::string csv = read_file(tmp.path / "ft_scan.csv");
  CHECK(count_lines(csv) == 22);  // header + 20 rows + hash comment
  CHECK(csv.rfind("# config_hash=") != std::string::npos);
  CHECK(csv.substr(0, csv.find('\n')) == "xi_1,xi_2,re,im,abs,nodes,err_est");

  // Byte-identical rerun.
  fs::path out2 = tmp.path / "second";
  CHECK(run("ft-scan --config " + cfg.string() + " --out " + out2.string()) == 0);
  CHECK(read_file(out2 / "ft_scan.csv") == csv);
}

TEST_CASE("sp-compare and hemisphere produce fit reports") {
  TempDir tmp;
  fs::path cfg = tmp.path / "sp.json";
  write_file(cfg, R"({
    "surface": {"kind": "cap_graph", "params": {"d": 2,
        "height": {"kind": "sphere", "r": 1.0}, "box": {"lo": [-0.35], "hi": [0.35]}}},
    "window": {"kind": "bump", "chart": 0, "support": {"lo": [-0.3], "hi": [0.3]}, "floor": 0.25},
    "direction": [0.0, 1.0],
    "radii": {"from": 10.0, "to": 60.0, "count": 10, "spacing": "log"}
  })");
  CHECK(run("sp-compare --config " + cfg.string() + " --out " + tmp.path.string()) == 0);
  std::string fit = read_file(tmp.path / "sp_compare.json");
  CHECK(fit.find("\"slope\"") != std::string::npos);
  CHECK(count_lines(read_file(tmp.path / "sp_compare.csv")) == 12);

  fs::path hemi = tmp.path / "hemi.json";
  write_file(hemi, R"({
    "d": 4,
    "profile": {"from": 10.0, "to": 100.0, "count": 17, "spacing": "log"}
  })");
  CHECK(run("hemisphere --config " + hemi.string() + " --out " + tmp.path.string()) == 0);
  std::string rep = read_file(tmp.path / "hemisphere.json");
  CHECK(rep.find("axis_decay") != std::string::npos);

  fs::path hemi3 = tmp.path / "hemi3.json";
  write_file(hemi3, R"({
    "d": 3,
    "symmetry": {"count": 8, "max_norm": 10.0},
    "output": {"json": "hemisphere3.json"}
  })");
  CHECK(run("hemisphere --config " + hemi3.string() + " --out " + tmp.path.string()) == 0);
  CHECK(read_file(tmp.path / "hemisphere3.json").find("symmetry") != std::string::npos);
}

TEST_CASE("coverage and frame run from configs") {
  TempDir tmp;
  fs::path cov = tmp.path / "cov.json";
  write_file(cov, R"({
    "surface": {"kind": "figure1_curve", "params": {}},
    "resolution": 0.2
  })");
  CHECK(run("coverage --config " + cov.string() + " --out " + tmp.path.string()) == 0);
  std::string rep = read_file(tmp.path / "coverage.json");
  CHECK(rep.find("\"fraction\": 1.0") != std::string::npos);

  fs::path frame = tmp.path / "frame.json";
  write_file(frame, R"({
    "surface": {"kind": "circle", "params": {"r": 1.0}},
    "spectrum": {"kind": "lattice_ball", "spacing": 1.0, "radius": 4.0},
    "test_grid": {"kind": "list", "points": [[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]]}
  })");
  CHECK(run("frame --config " + frame.string() + " --out " + tmp.path.string()) == 0);
  std::string fr = read_file(tmp.path / "frame.json");
  CHECK(fr.find("alpha_min") != std::string::npos);
  CHECK(fr.find("cond_G") != std::string::npos);
  std::string sp_csv = read_file(tmp.path / "spectrum.csv");
  CHECK(sp_csv.substr(0, sp_csv.find('\n')) == "lambda_1,lambda_2");
  CHECK(count_lines(sp_csv) == 51);  // header + 49 lattice points + hash
}

TEST_CASE("verify: unknown suite exits 1") {
  CHECK(run("verify nosuchsuite") == 1);
  CHECK(run("nonsense-command") == 1);
}
