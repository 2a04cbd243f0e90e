// realop: numerical ranges, spectra and invariant checks for real linear
// operators on C^n.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 I/O error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "realop/error.hpp"
#include "realop/io.hpp"
#include "realop/numrange.hpp"
#include "realop/spectrum.hpp"
#include "realop/verify.hpp"

namespace {

using realop::Complex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string input;
  std::string example;
  std::optional<long> dim;
  std::size_t samples = 1000;
  std::size_t circle_points = 256;
  std::uint64_t seed = realop::kDefaultSeed;
  std::string rect;
  std::optional<double> step;
  std::optional<double> tol;
  std::string format;
  std::string out;
  bool show_disks = false;
  int trials = 20;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("REALOP_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw realop::Error(realop::ErrorCode::parse, "REALOP_SEED is not an unsigned integer");
    }
  }
  return realop::kDefaultSeed;
}

realop::OperatorSpec load_spec(const Options& opt) {
  if (!opt.input.empty() && !opt.example.empty()) {
    throw realop::Error(realop::ErrorCode::parse, "give either --input or --example, not both");
  }
  if (!opt.example.empty()) {
    std::optional<Eigen::Index> dim;
    if (opt.dim) dim = static_cast<Eigen::Index>(*opt.dim);
    return realop::builtin_example(opt.example, dim);
  }
  if (!opt.input.empty()) return realop::read_operator_spec(opt.input);
  throw realop::Error(realop::ErrorCode::parse, "an operator is required: --input FILE or --example NAME");
}

realop::Rect parse_rect(const std::string& text) {
  std::stringstream in(text);
  double v[4];
  char sep = ',';
  for (int k = 0; k < 4; ++k) {
    if (k > 0 && (!(in >> sep) || sep != ',')) {
      throw realop::Error(realop::ErrorCode::parse, "--rect expects re_min,re_max,im_min,im_max");
    }
    if (!(in >> v[k])) throw realop::Error(realop::ErrorCode::parse, "--rect expects four numbers");
  }
  if (in >> sep) throw realop::Error(realop::ErrorCode::parse, "--rect has trailing characters");
  return {v[0], v[1], v[2], v[3]};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    realop::write_text_file(opt.out, text);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json complex_list(const std::vector<Complex>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back({p.real(), p.imag()});
  return out;
}

json spec_echo(const realop::OperatorSpec& spec) {
  json echo = realop::to_json(spec);
  if (!echo.contains("name")) echo["name"] = "";
  return echo;
}

int cmd_numrange(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto spec = load_spec(opt);
  const auto& op = spec.op;
  const std::string format = opt.format.empty() ? "csv" : opt.format;

  if (op.dim() == 1) {
    const auto circle = realop::circlet_range(op.linear()(0, 0), op.antilinear()(0, 0));
    const std::string note =
        "dimension 1: the numerical range of z -> a z + b conj(z) is the circle a + |b| e^{it}, "
        "which is not convex unless b = 0";
    std::cerr << note << "\n";
    if (format == "csv") {
      emit(opt, realop::circle_csv(circle));
    } else if (format == "json") {
      json doc{{"command", "numrange"},
               {"inputs", {{"operator", spec_echo(spec)}}},
               {"outputs",
                {{"kind", "circle"},
                 {"center", {circle.center.real(), circle.center.imag()}},
                 {"radius", circle.radius},
                 {"note", note}}},
               {"duration_s", seconds_since(start)}};
      emit(opt, doc.dump(2) + "\n");
    } else {
      realop::SvgScene scene;
      scene.circles.push_back(circle);
      scene.markers.push_back(circle.center);
      scene.title = "numerical range of " + spec.name;
      emit(opt, realop::render_svg(scene));
    }
    return kExitOk;
  }

  const auto disks = realop::sample_disks(op, opt.samples, opt.seed);
  const auto hull = realop::hull_of_disks(disks, opt.circle_points);
  const double radius = realop::numerical_radius_estimate(hull);
  std::cerr << "hull vertices: " << hull.size() << ", numerical radius estimate: " << radius << "\n";

  if (format == "csv") {
    emit(opt, realop::region_csv(hull));
  } else if (format == "json") {
    const auto bounds = realop::radius_bounds(op);
    json doc{{"command", "numrange"},
             {"inputs",
              {{"operator", spec_echo(spec)},
               {"samples", opt.samples},
               {"circle_points", opt.circle_points},
               {"seed", opt.seed}}},
             {"outputs",
              {{"kind", "hull"},
               {"vertices", complex_list(hull.vertices())},
               {"numerical_radius_estimate", radius},
               {"radius_bounds", {bounds.lower, bounds.upper}}}},
             {"duration_s", seconds_since(start)}};
    emit(opt, doc.dump(2) + "\n");
  } else {
    realop::SvgScene scene;
    scene.hull = hull.vertices();
    if (opt.show_disks) {
      for (const auto& d : disks) scene.circles.push_back({d.center, d.radius});
    }
    scene.title = "numerical range of " + spec.name;
    emit(opt, realop::render_svg(scene));
  }
  return kExitOk;
}

int cmd_spectrum(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto spec = load_spec(opt);
  realop::ScanOptions scan_opt;
  if (!opt.rect.empty()) scan_opt.rect = parse_rect(opt.rect);
  scan_opt.step = opt.step;
  scan_opt.tol = opt.tol;
  const auto sc = realop::scan(spec.op, scan_opt);
  const auto radius = realop::spectral_radius_estimate(sc);
  const std::string format = opt.format.empty() ? "csv" : opt.format;

  std::cerr << "detected points: " << sc.detected.size()
            << ", empty spectrum: " << (sc.empty_spectrum() ? "yes" : "no")
            << ", min grid sigma_min: " << sc.min_grid_value() << "\n";

  if (format == "csv") {
    if (opt.out.empty()) {
      std::cout << realop::scan_grid_csv(sc) << "\n" << realop::detected_csv(sc);
    } else {
      realop::write_text_file(opt.out, realop::scan_grid_csv(sc));
      realop::write_text_file(opt.out + ".detected.csv", realop::detected_csv(sc));
    }
  } else if (format == "json") {
    json grid = json::array();
    for (std::size_t j = 0; j < sc.n_im; ++j) {
      json row = json::array();
      for (std::size_t i = 0; i < sc.n_re; ++i) row.push_back(sc.value(i, j));
      grid.push_back(std::move(row));
    }
    json detected = json::array();
    for (const auto& p : sc.detected) detected.push_back({p.lambda.real(), p.lambda.imag(), p.sigma_min});
    json doc{{"command", "spectrum"},
             {"inputs",
              {{"operator", spec_echo(spec)},
               {"rect", {sc.rect.re_min, sc.rect.re_max, sc.rect.im_min, sc.rect.im_max}},
               {"step", sc.step},
               {"tol", sc.tol}}},
             {"outputs",
              {{"empty_spectrum", sc.empty_spectrum()},
               {"min_grid_sigma_min", sc.min_grid_value()},
               {"spectral_radius_estimate", radius.radius},
               {"detected", std::move(detected)},
               {"n_re", sc.n_re},
               {"n_im", sc.n_im},
               {"sigma_min_grid", std::move(grid)}}},
             {"duration_s", seconds_since(start)}};
    emit(opt, doc.dump(2) + "\n");
  } else {
    realop::SvgScene scene;
    for (const auto& p : sc.detected) scene.markers.push_back(p.lambda);
    scene.bounds = {Complex(sc.rect.re_min, sc.rect.im_min), Complex(sc.rect.re_max, sc.rect.im_max)};
    scene.title = "spectrum of " + spec.name;
    emit(opt, realop::render_svg(scene));
  }
  return kExitOk;
}

int cmd_info(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto spec = load_spec(opt);
  const auto& op = spec.op;
  const auto [sym, skew] = realop::self_adjoint_split(op);
  const auto bounds = realop::radius_bounds(op);
  const double norm = realop::operator_norm(op);
  const bool t_hermitian = (op.linear() - op.linear().adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
  const bool a_symmetric = (op.antilinear() - op.antilinear().transpose()).cwiseAbs().maxCoeff() <= 1e-12;
  const double a1_norm = realop::operator_norm(sym.antilinear_part());
  const double a2_norm = realop::operator_norm(skew);

  json doc{{"command", "info"},
           {"inputs", {{"operator", spec_echo(spec)}}},
           {"outputs",
            {{"dim", op.dim()},
             {"operator_norm", norm},
             {"linear_part_hermitian", t_hermitian},
             {"antilinear_part_symmetric", a_symmetric},
             {"self_adjoint", t_hermitian && a_symmetric},
             {"linear_part_norm", realop::operator_norm(op.linear_part())},
             {"antilinear_part_norm", realop::operator_norm(op.antilinear_part())},
             {"a1_norm", a1_norm},
             {"a2_norm", a2_norm},
             {"radius_lower_bound", bounds.lower},
             {"radius_upper_bound", bounds.upper}}},
           {"duration_s", seconds_since(start)}};
  if (op.dim() == 1) {
    const auto circle = realop::circlet_range(op.linear()(0, 0), op.antilinear()(0, 0));
    doc["outputs"]["circle"] = {{"center", {circle.center.real(), circle.center.imag()}},
                                {"radius", circle.radius}};
  }

  if (opt.format == "json") {
    emit(opt, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream text;
  text << "name: " << (spec.name.empty() ? "(unnamed)" : spec.name) << "\n";
  for (const auto& [key, value] : doc["outputs"].items()) text << key << ": " << value.dump() << "\n";
  emit(opt, text.str());
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  if (opt.trials < 1) throw realop::Error(realop::ErrorCode::parse, "--trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  realop::VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.trials = opt.trials;
  vopt.on_check = [](const realop::CheckResult& c) {
    std::printf("[%s] %-30s worst=%-12.4g threshold=%-10.4g n=%-6zu %s\n", c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.worst, c.threshold, c.instances, c.property.c_str());
    std::fflush(stdout);
  };
  const auto report = realop::run_verify(vopt);
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  std::printf("%zu checks, %zu failed, %.2f s\n", report.checks.size(), failed, seconds_since(start));
  if (!opt.out.empty()) realop::write_text_file(opt.out, report.to_json().dump(2) + "\n");
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

void add_operator_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "JSON operator file");
  cmd->add_option("--example", opt.example, "built-in operator")
      ->check(CLI::IsMember(realop::builtin_example_names()));
  cmd->add_option("--dim", opt.dim, "dimension for the conjugation and identity examples")
      ->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, Options& opt, std::vector<std::string> formats) {
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", opt.out, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical ranges and spectra of real linear operators on C^n"};
  app.require_subcommand(1);
  Options opt;

  try {
    opt.seed = default_seed();
  } catch (const realop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* numrange = app.add_subcommand("numrange", "sampled numerical range (convex hull of disk union)");
  add_operator_options(numrange, opt);
  numrange->add_option("--samples", opt.samples, "number of sampled unit vectors N")
      ->check(CLI::PositiveNumber);
  numrange->add_option("--circle-points", opt.circle_points, "points per disk boundary M")
      ->check(CLI::Range(3ul, 1ul << 20));
  numrange->add_option("--seed", opt.seed, "sampler seed (default 42 or $REALOP_SEED)");
  numrange->add_flag("--show-disks", opt.show_disks, "draw sampled disk boundaries in SVG output");
  add_output_options(numrange, opt, {"csv", "json", "svg"});

  auto* spectrum = app.add_subcommand("spectrum", "spectral set from a sigma_min grid scan");
  add_operator_options(spectrum, opt);
  spectrum->add_option("--rect", opt.rect, "re_min,re_max,im_min,im_max");
  spectrum->add_option("--step", opt.step, "grid pitch (default ‖Phi‖/100)");
  spectrum->add_option("--tol", opt.tol, "detection threshold (default ‖Phi‖/100)");
  add_output_options(spectrum, opt, {"csv", "json", "svg"});

  auto* info = app.add_subcommand("info", "norms, self-adjointness and radius bounds");
  add_operator_options(info, opt);
  add_output_options(info, opt, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "run the invariant suite on random operators");
  verify->add_option("--seed", opt.seed, "suite seed (default 42 or $REALOP_SEED)");
  verify->add_option("--trials", opt.trials, "random operators per property")->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*numrange) return cmd_numrange(opt);
    if (*spectrum) return cmd_spectrum(opt);
    if (*info) return cmd_info(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const realop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == realop::ErrorCode::io ? kExitIo : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
