// curveft command-line front end. Talks to the library exclusively through the
// C API in curveft.h; configs are JSON documents, outputs CSV/JSON artifacts.

#include <curveft.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw CliError{kExitUsage, msg}; }

void check(int status, const std::string& what) {
  if (status != CURVEFT_OK)
    throw CliError{status == CURVEFT_ERR_VALIDATION ? kExitValidation : kExitUsage,
                   what + ": " + curveft_status_name(status) + " (" + curveft_last_error() + ")"};
}

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Ctx {
  Json config;
  std::string config_text;
  fs::path out_dir = ".";

  std::string config_hash() const { return hex64(fnv1a(config_text)); }

  void write_atomic(const std::string& filename, const std::string& content) const {
    fs::create_directories(out_dir);
    fs::path final_path = out_dir / filename;
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (!os) throw CliError{kExitUsage, "cannot open " + tmp.string()};
      os << content;
    }
    fs::rename(tmp, final_path);
  }

  void write_csv(const std::string& filename, const std::string& body) const {
    write_atomic(filename, body + "# config_hash=" + config_hash() + "\n");
  }

  std::string out_name(const std::string& key, const std::string& fallback) const {
    if (config.contains("output") && config["output"].is_object() &&
        config["output"].contains(key))
      return config["output"][key].get<std::string>();
    return fallback;
  }
};

void expect_keys(const Json& obj, const std::vector<std::string>& allowed,
                 const std::string& where) {
  if (!obj.is_object()) usage_error(where + ": expected a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) usage_error(where + ": unknown key '" + it.key() + "'");
  }
}

Ctx load_config(const std::string& path, const std::string& out_dir,
                const std::vector<std::string>& allowed_keys) {
  Ctx ctx;
  std::ifstream is(path, std::ios::binary);
  if (!is) usage_error("cannot read config file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  ctx.config_text = buf.str();
  ctx.config = Json::parse(ctx.config_text, nullptr, false);
  if (ctx.config.is_discarded()) usage_error("malformed JSON in " + path);
  expect_keys(ctx.config, allowed_keys, "config");
  ctx.out_dir = out_dir;
  return ctx;
}

using SurfacePtr = std::unique_ptr<curveft_surface, decltype(&curveft_surface_destroy)>;
using WindowPtr = std::unique_ptr<curveft_window, decltype(&curveft_window_destroy)>;
using SpectrumPtr = std::unique_ptr<curveft_spectrum, decltype(&curveft_spectrum_destroy)>;

SurfacePtr make_surface(const Json& spec) {
  curveft_surface* s = nullptr;
  check(curveft_surface_create(spec.dump().c_str(), &s), "surface");
  return SurfacePtr(s, &curveft_surface_destroy);
}

WindowPtr make_window(const curveft_surface* s, const Json& spec) {
  curveft_window* w = nullptr;
  check(curveft_window_create(s, spec.dump().c_str(), &w), "window");
  return WindowPtr(w, &curveft_window_destroy);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  curveft_string_free(s);
  return out;
}

int surface_dim(const curveft_surface* s) {
  int d = 0;
  check(curveft_surface_dim(s, &d), "surface_dim");
  return d;
}

std::vector<double> expand_radii(const Json& spec, const std::string& where) {
  expect_keys(spec, {"from", "to", "count", "spacing"}, where);
  double from = spec.at("from").get<double>();
  double to = spec.at("to").get<double>();
  int count = spec.at("count").get<int>();
  bool log_spacing = spec.value("spacing", "linear") == "log";
  if (count < 1) usage_error(where + ": count must be >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = from;
    return out;
  }
  for (int i = 0; i < count; ++i) {
    if (log_spacing)
      out[i] = std::exp(std::log(from) + (std::log(to) - std::log(from)) * i / (count - 1));
    else
      out[i] = from + (to - from) * i / (count - 1);
  }
  return out;
}

// Frequency list expansion mirroring the library's "frequencies" spec; the CLI
// keeps its own copy so scans stay a thin loop over the C API.
std::vector<double> expand_frequencies(const Json& spec, int d, const std::string& where) {
  expect_keys(spec, {"kind", "direction", "from", "to", "count", "spacing", "lo", "hi", "counts",
                     "points"},
              where);
  std::string kind = spec.value("kind", "");
  std::vector<double> flat;
  if (kind == "ray") {
    auto dir = spec.at("direction").get<std::vector<double>>();
    if (static_cast<int>(dir.size()) != d) usage_error(where + ": direction must have d entries");
    double norm = 0.0;
    for (double x : dir) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) usage_error(where + ": zero direction");
    Json radii_spec = spec;
    radii_spec.erase("kind");
    radii_spec.erase("direction");
    for (double q : expand_radii(radii_spec, where))
      for (int c = 0; c < d; ++c) flat.push_back(q * dir[c] / norm);
    return flat;
  }
  if (kind == "grid") {
    auto lo = spec.at("lo").get<std::vector<double>>();
    auto hi = spec.at("hi").get<std::vector<double>>();
    auto counts = spec.at("counts").get<std::vector<int>>();
    if (static_cast<int>(lo.size()) != d || hi.size() != lo.size() || counts.size() != lo.size())
      usage_error(where + ": lo/hi/counts must have d entries");
    std::vector<int> idx(d, 0);
    for (;;) {
      for (int a = 0; a < d; ++a)
        flat.push_back(counts[a] == 1 ? lo[a]
                                      : lo[a] + (hi[a] - lo[a]) * idx[a] / (counts[a] - 1.0));
      int a = 0;
      while (a < d && ++idx[a] == counts[a]) idx[a++] = 0;
      if (a == d) break;
    }
    return flat;
  }
  if (kind == "list") {
    for (const auto& p : spec.at("points")) {
      auto v = p.get<std::vector<double>>();
      if (static_cast<int>(v.size()) != d) usage_error(where + ": point dimension mismatch");
      for (double x : v) flat.push_back(x);
    }
    return flat;
  }
  usage_error(where + ": unknown kind '" + kind + "'");
}

// Deterministic seeded frequencies in a ball (Box-Muller on raw engine words).
std::vector<double> seeded_frequencies(int d, int count, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  std::vector<double> out;
  int have = 0;
  while (have < count) {
    std::vector<double> v(d);
    for (int i = 0; i < d; i += 2) {
      double u1 = std::max(unit(), 1e-16), u2 = unit();
      double r = std::sqrt(-2.0 * std::log(u1));
      v[i] = r * std::cos(2.0 * M_PI * u2);
      if (i + 1 < d) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n < 1e-9) continue;
    double radius = rmax * std::pow(unit(), 1.0 / d);
    for (double x : v) out.push_back(radius * x / n);
    ++have;
  }
  return out;
}

struct LsqFit {
  double slope = 0.0, intercept = 0.0;
};

LsqFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0) continue;
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) usage_error("log-log fit needs at least two positive samples");
  LsqFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

// --- commands -----------------------------------------------------------------

int cmd_surface_info(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx = load_config(config_path, out_dir,
                        {"surface", "window", "samples_per_axis", "output", "seed"});
  if (!ctx.config.contains("surface")) usage_error("config: missing 'surface'");
  SurfacePtr s = make_surface(ctx.config["surface"]);
  WindowPtr w(nullptr, &curveft_window_destroy);
  if (ctx.config.contains("window")) w = make_window(s.get(), ctx.config["window"]);

  int samples = ctx.config.value("samples_per_axis", 64);
  char* report_raw = nullptr;
  int vstatus = curveft_surface_validate(s.get(), samples, &report_raw);
  if (vstatus != CURVEFT_OK && vstatus != CURVEFT_ERR_VALIDATION) check(vstatus, "validate");
  Json report = Json::parse(take_string(report_raw));

  if (vstatus == CURVEFT_OK) {
    double mass = 0.0, err = 0.0;
    check(curveft_total_mass(s.get(), w.get(), &mass, &err), "total_mass");
    report["total_mass"] = mass;
    report["total_mass_est_error"] = err;
  }
  report["config_hash"] = ctx.config_hash();
  ctx.write_atomic(ctx.out_name("json", "surface_info.json"), report.dump(2) + "\n");
  std::cout << "surface-info: " << (vstatus == CURVEFT_OK ? "pass" : "FAIL")
            << " charts=" << report["charts"].size();
  if (report.contains("total_mass")) std::cout << " mass=" << fmt(report["total_mass"]);
  std::cout << "\n";
  return vstatus == CURVEFT_OK ? kExitOk : kExitValidation;
}

int cmd_ft_scan(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx =
      load_config(config_path, out_dir, {"surface", "window", "frequencies", "output", "seed"});
  if (!ctx.config.contains("surface") || !ctx.config.contains("frequencies"))
    usage_error("config: ft-scan needs 'surface' and 'frequencies'");
  SurfacePtr s = make_surface(ctx.config["surface"]);
  WindowPtr w(nullptr, &curveft_window_destroy);
  if (ctx.config.contains("window")) w = make_window(s.get(), ctx.config["window"]);
  const int d = surface_dim(s.get());

  std::vector<double> flat = expand_frequencies(ctx.config["frequencies"], d, "frequencies");
  const int count = static_cast<int>(flat.size()) / d;
  std::vector<double> re(count), im(count), err(count);
  std::vector<int64_t> nodes(count);
  std::vector<int> failed(count);
  check(curveft_ft_scan(s.get(), w.get(), flat.data(), count, re.data(), im.data(), err.data(),
                        nodes.data(), failed.data()),
        "ft_scan");

  std::ostringstream csv;
  for (int c = 0; c < d; ++c) csv << "xi_" << (c + 1) << ",";
  csv << "re,im,abs,nodes,err_est\n";
  Json failures = Json::array();
  int n_failed = 0;
  for (int i = 0; i < count; ++i) {
    if (failed[i]) {
      ++n_failed;
      failures.push_back(i);
      continue;
    }
    for (int c = 0; c < d; ++c) csv << fmt(flat[i * d + c]) << ",";
    csv << fmt(re[i]) << "," << fmt(im[i]) << "," << fmt(std::hypot(re[i], im[i])) << ","
        << nodes[i] << "," << fmt(err[i]) << "\n";
  }
  ctx.write_csv(ctx.out_name("csv", "ft_scan.csv"), csv.str());
  Json summary = {{"samples", count}, {"failures", failures}, {"config_hash", ctx.config_hash()}};
  ctx.write_atomic(ctx.out_name("json", "ft_scan.json"), summary.dump(2) + "\n");
  std::cout << "ft-scan: " << count - n_failed << "/" << count << " samples ok\n";
  return n_failed == count && count > 0 ? kExitValidation : kExitOk;
}

int cmd_sp_compare(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx = load_config(config_path, out_dir,
                        {"surface", "window", "direction", "radii", "output", "seed"});
  for (const char* key : {"surface", "direction", "radii"})
    if (!ctx.config.contains(key))
      usage_error(std::string("config: sp-compare needs '") + key + "'");
  SurfacePtr s = make_surface(ctx.config["surface"]);
  WindowPtr w(nullptr, &curveft_window_destroy);
  if (ctx.config.contains("window")) w = make_window(s.get(), ctx.config["window"]);
  const int d = surface_dim(s.get());

  auto dir = ctx.config["direction"].get<std::vector<double>>();
  if (static_cast<int>(dir.size()) != d) usage_error("config: direction must have d entries");
  std::vector<double> radii = expand_radii(ctx.config["radii"], "radii");
  const int count = static_cast<int>(radii.size());
  std::vector<double> ft_re(count), ft_im(count), sp_re(count), sp_im(count), nd(count);
  char* report_raw = nullptr;
  check(curveft_sp_compare(s.get(), w.get(), dir.data(), radii.data(), count, ft_re.data(),
                           ft_im.data(), sp_re.data(), sp_im.data(), nd.data(), &report_raw),
        "sp_compare");
  Json fit = Json::parse(take_string(report_raw));

  std::ostringstream csv;
  csv << "q,ft_re,ft_im,sp_re,sp_im,abs_dev,normalized_dev\n";
  for (int i = 0; i < count; ++i) {
    double dev = std::hypot(ft_re[i] - sp_re[i], ft_im[i] - sp_im[i]);
    csv << fmt(radii[i]) << "," << fmt(ft_re[i]) << "," << fmt(ft_im[i]) << "," << fmt(sp_re[i])
        << "," << fmt(sp_im[i]) << "," << fmt(dev) << "," << fmt(nd[i]) << "\n";
  }
  ctx.write_csv(ctx.out_name("csv", "sp_compare.csv"), csv.str());
  fit["config_hash"] = ctx.config_hash();
  ctx.write_atomic(ctx.out_name("json", "sp_compare.json"), fit.dump(2) + "\n");
  std::cout << "sp-compare: " << count << " samples, deviation slope "
            << fmt(fit["slope"].get<double>()) << "\n";
  return kExitOk;
}

int cmd_hemisphere(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx = load_config(config_path, out_dir, {"d", "r", "profile", "symmetry", "output", "seed"});
  int d = ctx.config.value("d", 3);
  double r = ctx.config.value("r", 1.0);
  Json report;
  report["d"] = d;

  if (ctx.config.contains("profile")) {
    std::vector<double> q = expand_radii(ctx.config["profile"], "profile");
    std::vector<double> re(q.size()), im(q.size());
    check(curveft_hemisphere_axis_profile(d, q.data(), static_cast<int>(q.size()), re.data(),
                                          im.data()),
          "hemisphere_axis_profile");
    std::ostringstream csv;
    csv << "q,re,im,abs,scaled_abs\n";
    std::vector<double> absv(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      absv[i] = std::hypot(re[i], im[i]);
      csv << fmt(q[i]) << "," << fmt(re[i]) << "," << fmt(im[i]) << "," << fmt(absv[i]) << ","
          << fmt(q[i] * absv[i]) << "\n";
    }
    ctx.write_csv(ctx.out_name("csv", "hemisphere_profile.csv"), csv.str());
    LsqFit fit = loglog_fit(q, absv);
    report["axis_decay"] = {{"slope", fit.slope}, {"intercept", fit.intercept}};
  }

  if (ctx.config.contains("symmetry")) {
    const Json& sym = ctx.config["symmetry"];
    expect_keys(sym, {"count", "max_norm"}, "symmetry");
    Json spec = {{"kind", "hemisphere"}, {"params", {{"d", d}, {"r", r}}}};
    curveft_surface *full = nullptr, *half = nullptr;
    check(curveft_hemisphere_create(spec.dump().c_str(), &full, &half), "hemisphere pair");
    SurfacePtr full_p(full, &curveft_surface_destroy), half_p(half, &curveft_surface_destroy);
    int count = sym.value("count", 50);
    double max_norm = sym.value("max_norm", 30.0);
    std::uint64_t seed = ctx.config.value("seed", 0);
    std::vector<double> freqs = seeded_frequencies(d, count, max_norm, seed);
    std::vector<double> re_f(count), im_f(count), re_h(count), im_h(count);
    check(curveft_ft_scan(full, nullptr, freqs.data(), count, re_f.data(), im_f.data(), nullptr,
                          nullptr, nullptr),
          "ft_scan full");
    check(curveft_ft_scan(half, nullptr, freqs.data(), count, re_h.data(), im_h.data(), nullptr,
                          nullptr, nullptr),
          "ft_scan half");
    double max_dev = 0.0;
    for (int i = 0; i < count; ++i)
      max_dev = std::max(max_dev, std::hypot(2.0 * re_h[i] - re_f[i], -im_f[i]));
    report["symmetry"] = {{"count", count}, {"max_deviation", max_dev}};
  }

  report["config_hash"] = ctx.config_hash();
  ctx.write_atomic(ctx.out_name("json", "hemisphere.json"), report.dump(2) + "\n");
  std::cout << "hemisphere: d=" << d;
  if (report.contains("axis_decay"))
    std::cout << " slope=" << fmt(report["axis_decay"]["slope"].get<double>());
  if (report.contains("symmetry"))
    std::cout << " symmetry_dev=" << fmt(report["symmetry"]["max_deviation"].get<double>());
  std::cout << "\n";
  return kExitOk;
}

int cmd_coverage(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx = load_config(
      config_path, out_dir,
      {"surface", "window", "use_floor", "resolution", "membership_tol", "output", "seed"});
  if (!ctx.config.contains("surface") || !ctx.config.contains("resolution"))
    usage_error("config: coverage needs 'surface' and 'resolution'");
  SurfacePtr s = make_surface(ctx.config["surface"]);
  WindowPtr w(nullptr, &curveft_window_destroy);
  if (ctx.config.contains("window")) w = make_window(s.get(), ctx.config["window"]);

  double fraction = 0.0;
  char* csv_raw = nullptr;
  check(curveft_coverage(s.get(), w.get(), ctx.config.value("use_floor", 1),
                         ctx.config["resolution"].get<double>(),
                         ctx.config.value("membership_tol", 1e-3), &fraction, &csv_raw),
        "coverage");
  ctx.write_csv(ctx.out_name("csv", "coverage.csv"), take_string(csv_raw));
  Json report = {{"fraction", fraction}, {"config_hash", ctx.config_hash()}};
  ctx.write_atomic(ctx.out_name("json", "coverage.json"), report.dump(2) + "\n");
  std::cout << "coverage: fraction=" << fmt(fraction) << "\n";
  return kExitOk;
}

int cmd_frame(const std::string& config_path, const std::string& out_dir) {
  Ctx ctx = load_config(config_path, out_dir,
                        {"surface", "window", "spectrum", "test_grid", "sizes", "output", "seed"});
  for (const char* key : {"surface", "spectrum", "test_grid"})
    if (!ctx.config.contains(key)) usage_error(std::string("config: frame needs '") + key + "'");
  SurfacePtr s = make_surface(ctx.config["surface"]);
  WindowPtr w(nullptr, &curveft_window_destroy);
  if (ctx.config.contains("window")) w = make_window(s.get(), ctx.config["window"]);
  const int d = surface_dim(s.get());

  curveft_spectrum* sp = nullptr;
  check(curveft_spectrum_create(ctx.config["spectrum"].dump().c_str(), d, &sp), "spectrum");
  SpectrumPtr sp_p(sp, &curveft_spectrum_destroy);
  int64_t lambda_size = 0;
  check(curveft_spectrum_size(sp, &lambda_size), "spectrum_size");

  // Spectrum file: one row per point, d columns.
  {
    std::vector<double> pts(lambda_size * d);
    check(curveft_spectrum_points(sp, pts.data()), "spectrum_points");
    std::ostringstream csv;
    for (int c = 0; c < d; ++c) csv << "lambda_" << (c + 1) << (c + 1 == d ? "\n" : ",");
    for (int64_t i = 0; i < lambda_size; ++i)
      for (int c = 0; c < d; ++c) csv << fmt(pts[i * d + c]) << (c + 1 == d ? "\n" : ",");
    ctx.write_csv(ctx.out_name("spectrum_csv", "spectrum.csv"), csv.str());
  }

  std::vector<double> grid = expand_frequencies(ctx.config["test_grid"], d, "test_grid");
  const int h_full = static_cast<int>(grid.size()) / d;
  std::vector<int> sizes;
  if (ctx.config.contains("sizes"))
    sizes = ctx.config["sizes"].get<std::vector<int>>();
  else
    sizes.push_back(h_full);

  Json estimates = Json::array();
  for (int size : sizes) {
    if (size < 1 || size > h_full) usage_error("config: sweep size out of range");
    double amin = 0.0, amax = 0.0, cond = 0.0;
    check(curveft_frame_bounds(s.get(), w.get(), sp, grid.data(), size, &amin, &amax, &cond),
          "frame_bounds");
    estimates.push_back({{"H_size", size},
                         {"lambda_size", lambda_size},
                         {"alpha_min", amin},
                         {"alpha_max", amax},
                         {"cond_G", cond}});
    std::cout << "frame: H=" << size << " alpha_min=" << fmt(amin) << " alpha_max=" << fmt(amax)
              << "\n";
  }
  Json report = {{"estimates", estimates}, {"config_hash", ctx.config_hash()}};
  ctx.write_atomic(ctx.out_name("json", "frame.json"), report.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& out_dir) {
  char* report_raw = nullptr;
  int status = curveft_verify(suite.c_str(), &report_raw);
  if (status != CURVEFT_OK && status != CURVEFT_ERR_VALIDATION) {
    curveft_string_free(report_raw);
    throw CliError{kExitUsage, std::string("verify: ") + curveft_status_name(status) + " (" +
                                   curveft_last_error() + ")"};
  }
  Json report = Json::parse(take_string(report_raw));
  for (const auto& c : report["criteria"])
    std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << " ("
              << fmt(c["seconds"].get<double>()) << "s) " << c["detail"].get<std::string>()
              << "\n";
  std::cout << (report["all_pass"].get<bool>() ? "verify: all criteria passed"
                                               : "verify: FAILURES present")
            << " [" << suite << ", " << fmt(report["total_seconds"].get<double>()) << "s]\n";
  if (!out_dir.empty()) {
    Ctx ctx;
    ctx.out_dir = out_dir;
    ctx.config_text = suite;
    ctx.write_atomic("verify_" + suite + ".json", report.dump(2) + "\n");
  }
  return report["all_pass"].get<bool>() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curveft: Fourier transforms of surface measures, stationary phase, normal cones "
               "and frame diagnostics"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", suite = "fast";

  auto add_standard = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON experiment config")->required();
    cmd->add_option("--out", out_dir, "output directory (default .)");
  };
  add_standard(app.add_subcommand("surface-info", "validate a surface, report mass + curvature"));
  add_standard(app.add_subcommand("ft-scan", "Fourier transform scan -> CSV"));
  add_standard(app.add_subcommand("sp-compare", "quadrature vs stationary phase along a ray"));
  add_standard(app.add_subcommand("hemisphere", "axis profile and symmetry identity"));
  add_standard(app.add_subcommand("coverage", "normal-cone coverage of the direction sphere"));
  add_standard(app.add_subcommand("frame", "frame-bound estimates on exponential subspaces"));
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("suite", suite, "fast | full");
  verify_cmd->add_option("--out", out_dir, "directory for the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("surface-info")) return cmd_surface_info(config_path, out_dir);
    if (app.got_subcommand("ft-scan")) return cmd_ft_scan(config_path, out_dir);
    if (app.got_subcommand("sp-compare")) return cmd_sp_compare(config_path, out_dir);
    if (app.got_subcommand("hemisphere")) return cmd_hemisphere(config_path, out_dir);
    if (app.got_subcommand("coverage")) return cmd_coverage(config_path, out_dir);
    if (app.got_subcommand("frame")) return cmd_frame(config_path, out_dir);
    if (app.got_subcommand("verify")) return cmd_verify(suite, out_dir);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
