#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mexneedlet/error.hpp"
#include "mexneedlet/export.hpp"
#include "mexneedlet/frame_ops.hpp"
#include "mexneedlet/kernel.hpp"
#include "mexneedlet/needlet.hpp"
#include "mexneedlet/spectral_core.hpp"
#include "mexneedlet/sphere_partition.hpp"
#include "mexneedlet/truncation.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mexneedlet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

/// Raised when a run completes but a checked property fails.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open output file '" + path + "'");
  return out;
}

// JSON to stdout, and to `out` when given.
void emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) open_output(out) << text;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

json window_json(int j_min, int j_max) { return json::array({j_min, j_max}); }

std::optional<ScaleWindow> window_option(const CLI::Option* lo, const CLI::Option* hi, int j_min,
                                         int j_max) {
  if (lo->count() == 0 && hi->count() == 0) return std::nullopt;
  require(lo->count() > 0 && hi->count() > 0, "--j-min and --j-max must be given together");
  require(j_min <= j_max, "--j-min must not exceed --j-max");
  return ScaleWindow{j_min, j_max};
}

// ---------------------------------------------------------------------------

struct DaubechiesArgs {
  double a = std::cbrt(2.0);
  std::string filter = "mexican:r=1";
  int grid = 256;
  std::string out;
};

int run_daubechies(const DaubechiesArgs& args) {
  require(args.a > 1.0, "--a must be > 1");
  require(args.grid >= 64, "--grid must be >= 64");
  const SpectralFilter f = SpectralFilter::parse(args.filter);
  const DaubechiesBounds db = daubechies_bounds(f, args.a, args.grid);
  json doc;
  doc["filter"] = f.name();
  doc["a"] = args.a;
  doc["A"] = db.lower;
  doc["B"] = db.upper;
  doc["ratio"] = db.ratio;
  doc["reference_level"] = db.reference_level;
  doc["argmin_lambda"] = db.argmin_lambda;
  doc["argmax_lambda"] = db.argmax_lambda;
  emit(doc, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct KernelArgs {
  double t = 0.1;
  std::string filter = "mexican:r=1";
  std::string method = "auto";
  int n = 10001;
  double tol = 1e-10;
  std::string convention = "laplacian";
  std::string out;
};

int run_kernel_profile(const KernelArgs& args) {
  require(args.t > 0.0 && std::isfinite(args.t), "--t must be > 0");
  require(args.n >= 2, "--n must be >= 2");
  require(args.tol > 0.0, "--tol must be > 0");
  const SpectralFilter f = SpectralFilter::parse(args.filter);
  KernelProfileOptions opts;
  opts.tol = args.tol;
  if (args.convention == "degree") {
    opts.convention = KernelConvention::degree;
  } else {
    require(args.convention == "laplacian", "--convention must be laplacian or degree");
  }
  const KernelProfile profile = kernel_profile(f, args.t, args.n, parse_method(args.method), opts);

  json summary;
  summary["t"] = args.t;
  summary["filter"] = f.name();
  summary["method"] = args.method;
  summary["n"] = args.n;
  double vmax = profile.values.front();
  for (double v : profile.values) vmax = std::max(vmax, v);
  summary["max_value"] = vmax;
  summary["sign_changes"] = sign_changes(profile.values);
  if (f.is_mexican(1) && opts.convention == KernelConvention::laplacian) {
    const KernelComparison cmp = compare_kernel_methods(f, args.t, args.n, opts);
    summary["max_abs_series_minus_gaussian"] = cmp.max_abs_diff;
  }

  if (args.out.empty()) {
    write_kernel_csv(std::cout, profile);
    std::cerr << summary.dump(2) << "\n";
  } else {
    std::ofstream os = open_output(args.out);
    write_kernel_csv(os, profile);
    std::cout << summary.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
  int j = 0;
  double a = 2.0;
  double b = 0.5;
  double greedy_t = 0.0;
  int candidates = 2000;
  int cubature = -1;
  std::string out;
};

json partition_summary(const ScalePartition& p) {
  json s;
  s["cells"] = p.size();
  s["target"] = p.target();
  s["total_measure"] = p.total_measure();
  s["min_measure"] = p.min_measure();
  s["max_diameter_bound"] = p.max_diameter_bound();
  s["achieved_c0"] = p.achieved_c0();
  return s;
}

int run_partition(const PartitionArgs& args) {
  if (args.cubature >= 0) {
    const CubatureRule rule = cubature_rule(args.cubature);
    json s;
    s["degree"] = rule.degree;
    s["nodes"] = rule.layout.size();
    s["total_weight"] = rule.layout.total_weight();
    if (args.out.empty()) {
      write_cubature_csv(std::cout, rule);
      std::cerr << s.dump(2) << "\n";
    } else {
      std::ofstream os = open_output(args.out);
      write_cubature_csv(os, rule);
      std::cout << s.dump(2) << "\n";
    }
    return kExitOk;
  }

  const bool greedy = args.greedy_t > 0.0;
  const ScalePartition p = greedy ? greedy_ball_partition(args.greedy_t, args.candidates)
                                  : build_partition(args.j, args.a, args.b);
  json s = partition_summary(p);
  if (greedy) {
    s["t"] = args.greedy_t;
    s["maximal_on_candidates"] = p.maximal_on_candidates();
    s["uncovered_grid_nodes"] = p.uncovered_grid_nodes();
    if (!p.maximal_on_candidates()) std::cerr << "warning: maximality not certified\n";
  }
  if (!args.out.empty()) {
    std::ofstream os = open_output(args.out);
    write_partition_json(os, p, greedy ? 0.0 : args.a, greedy ? 0.0 : args.b);
  }
  std::cout << s.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct FrameArgs {
  double a = std::cbrt(2.0);
  double b = 0.5;
  std::string filter = "mexican:r=1";
  int L = 32;
  int trials = 20;
  std::uint64_t seed = 1;
  int j_min = 0;
  int j_max = 0;
  bool needlet = false;
  std::string out;
  std::string coefficients;
  std::string field;
};

int run_frame_verify(const FrameArgs& args, const CLI::Option* jlo, const CLI::Option* jhi) {
  require(args.L >= 1 && args.L <= 64, "--L must lie in [1, 64]");
  require(args.trials >= 1, "--trials must be >= 1");
  json doc;
  doc["seed"] = args.seed;
  doc["L_max"] = args.L;
  doc["trials"] = args.trials;

  if (args.needlet) {
    // Scales covering 1 <= l <= L in the degree convention.
    const int j_min = -static_cast<int>(std::ceil(std::log2(args.L)));
    const NeedletFrame nf = build_needlet_frame(SpectralFilter::normalized_cutoff(), j_min - 1, 1,
                                                FrequencyConvention::degree);
    require(nf.covered_lo == 1 && nf.covered_hi >= args.L, "needlet scales do not cover 1..L");
    const EmpiricalBounds eb = empirical_frame_bounds(nf.frame, args.trials, args.seed, args.L);
    doc["mode"] = "needlet";
    doc["filter"] = nf.g.name();
    doc["j_range"] = window_json(nf.frame.j_min(), nf.frame.j_max());
    doc["A_emp"] = eb.min;
    doc["B_emp"] = eb.max;
    doc["ratio"] = eb.ratio;
    doc["A_theory"] = 1.0;
    doc["B_theory"] = 1.0;
    emit(doc, args.out);
    if (!(eb.min > 0.0)) throw VerificationFailure("A_emp <= 0");
    return kExitOk;
  }

  require(args.a > 1.0, "--a must be > 1");
  require(args.b > 0.0 && args.b <= 1.0, "--b must lie in (0, 1]");
  const SpectralFilter f = SpectralFilter::parse(args.filter);
  const FrameSpec spec =
      make_frame_spec(f, args.a, args.b, args.L, window_option(jlo, jhi, args.j_min, args.j_max));
  const SampledFrame frame = sampled_frame(spec);
  const EmpiricalBounds eb = empirical_frame_bounds(frame, args.trials, args.seed);
  const DaubechiesBounds db = daubechies_bounds(f, args.a);

  doc["mode"] = "frame";
  doc["filter"] = f.name();
  doc["a"] = args.a;
  doc["b"] = args.b;
  doc["j_range"] = window_json(spec.j_min, spec.j_max);
  doc["elements"] = frame.element_count();
  doc["band_limit_residual"] = band_limit_residual(spec);
  doc["A_emp"] = eb.min;
  doc["B_emp"] = eb.max;
  doc["ratio"] = eb.ratio;
  doc["A_theory"] = db.lower;
  doc["B_theory"] = db.upper;
  emit(doc, args.out);

  if (!args.coefficients.empty() || !args.field.empty()) {
    std::mt19937_64 rng(args.seed);
    const HarmonicField F = random_mean_zero_field(args.L, rng);
    if (!args.field.empty()) {
      std::ofstream os = open_output(args.field);
      write_field_csv(os, F);
    }
    if (!args.coefficients.empty()) {
      std::ofstream os = open_output(args.coefficients);
      write_coefficients_csv(os, frame, analyze(frame, F));
    }
  }
  if (!(eb.min > 0.0)) throw VerificationFailure("A_emp <= 0");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TruncationArgs {
  double a = std::cbrt(2.0);
  double b = 0.5;
  std::string filter = "mexican:r=1";
  int L = 32;
  int field_L = 8;
  std::uint64_t seed = 1;
  int M = 10;
  int N = 2;
  int l = 1;
  int J = 1;
  double level = -1.0;
  int j_min = 0;
  int j_max = 0;
  std::string out;
};

int run_truncation(const TruncationArgs& args, const CLI::Option* jlo, const CLI::Option* jhi) {
  require(args.a > 1.0, "--a must be > 1");
  require(args.b > 0.0 && args.b <= 1.0, "--b must lie in (0, 1]");
  require(args.L >= 1 && args.L <= 64, "--L must lie in [1, 64]");
  require(args.field_L >= 1 && args.field_L <= args.L, "--field-L must lie in [1, L]");
  const SpectralFilter f = SpectralFilter::parse(args.filter);
  const FrameSpec spec =
      make_frame_spec(f, args.a, args.b, args.L, window_option(jlo, jhi, args.j_min, args.j_max));
  const SampledFrame frame = sampled_frame(spec);

  std::mt19937_64 rng(args.seed);
  const HarmonicField F = random_mean_zero_field(args.field_L, rng);
  const double level = args.level > 0.0 ? args.level : sphere_eigenvalue(args.L);
  const double tail = spectral_tail_norm(F, level);
  FrequencyBoundReport r =
      frequency_bound(f, args.a, args.l, args.J, level, args.M, args.N, tail, F.norm());
  r.measured_error = measured_truncation_error(frame, F, args.M, args.N);

  json doc;
  doc["M"] = r.M;
  doc["N"] = r.N;
  doc["L"] = r.L;
  doc["l"] = r.l;
  doc["J"] = r.J;
  doc["a"] = r.a;
  doc["B_a"] = r.B_a;
  doc["f0_sup"] = r.f0_sup;
  doc["c_prime_L"] = r.c_prime_L;
  doc["C_prime_J"] = r.C_prime_J;
  doc["M_J"] = r.M_J;
  doc["tail_norm"] = r.tail_norm;
  doc["F_norm"] = r.F_norm;
  doc["bound_without_C0b"] = r.bound_without_C0b;
  doc["measured_error"] = r.measured_error;
  doc["seed"] = args.seed;
  doc["L_max"] = args.L;
  doc["j_range"] = window_json(spec.j_min, spec.j_max);
  doc["filter"] = f.name();
  doc["b"] = args.b;
  emit(doc, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SpatialArgs {
  double a = std::cbrt(2.0);
  double b = 0.5;
  int L = 24;
  std::uint64_t seed = 1;
  double cap_radius = 0.3;
  double cap_theta = 0.0;
  double cap_phi = 0.0;
  double width = 0.1;
  std::vector<double> c{0.25, 0.5, 1.0, 2.0, 4.0};
  double I_decay = 3.0;
  int M = 12;
  int N = 3;
  int trials = 10;
  std::string out;
};

int run_spatial(const SpatialArgs& args) {
  require(args.a > 1.0, "--a must be > 1");
  require(args.b > 0.0 && args.b <= 1.0, "--b must lie in (0, 1]");
  require(args.L >= 1 && args.L <= 64, "--L must lie in [1, 64]");
  require(args.width > 0.0, "--width must be > 0");
  require(!args.c.empty(), "--c needs at least one value");
  for (double c : args.c) require(c > 0.0, "--c values must be > 0");
  const SpectralFilter f = SpectralFilter::mexican(1);
  const FrameSpec spec = make_frame_spec(f, args.a, args.b, args.L, ScaleWindow{-args.M, args.N});
  const SampledFrame frame = sampled_frame(spec);
  const double B_emp = empirical_frame_bounds(frame, args.trials, args.seed).max;
  const double S_norm = frame_operator_norm(frame, args.seed, 200);
  const double B_upper = std::max(B_emp, S_norm);

  const SphericalCap cap{from_angles(args.cap_theta, args.cap_phi), args.cap_radius};
  const double w = args.width;
  HarmonicField F = zonal_field(args.L, cap.center,
                                [w](double theta) { return std::exp(-theta * theta / (2 * w * w)); });
  F *= 1.0 / F.norm();

  json doc;
  doc["a"] = args.a;
  doc["b"] = args.b;
  doc["L_max"] = args.L;
  doc["seed"] = args.seed;
  doc["j_range"] = window_json(-args.M, args.N);
  doc["cap"] = {{"center", {cap.center.x, cap.center.y, cap.center.z}}, {"radius", cap.radius}};
  doc["I_decay"] = args.I_decay;
  bool violations = false;
  doc["B_emp"] = B_emp;
  doc["S_norm"] = S_norm;
  json rows = json::array();
  for (double c : args.c) {
    const SpatialTruncationReport r = spatial_truncation_report(
        frame, args.a, F, cap, [c](int) { return c; }, args.I_decay, args.M, args.N, B_upper);
    rows.push_back({{"c", c},
                    {"measured_error", r.measured_error},
                    {"complement_energy", r.complement_energy},
                    {"structural_factor", r.structural_factor},
                    {"leakage", r.leakage},
                    {"ratio", r.ratio},
                    {"norm_chain_holds", r.measured_error * r.measured_error <=
                                       B_upper * r.complement_energy * (1.0 + 1e-12)}});
    if (!rows.back()["norm_chain_holds"].get<bool>()) violations = true;
  }
  doc["sweep"] = rows;
  emit(doc, args.out);
  if (violations) throw VerificationFailure("norm chain violated");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct NeedletDiagArgs {
  double a = std::cbrt(2.0);
  std::vector<double> N{4.0, 8.0, 12.0};
  int l_max = 64;
  int sweep = 50;
  std::uint64_t seed = 1;
  std::string out;
};

int run_needlet_diag(const NeedletDiagArgs& args) {
  require(args.a > 1.0, "--a must be > 1");
  require(args.l_max >= 1, "--l-max must be >= 1");
  require(args.sweep >= 0, "--sweep must be >= 0");
  for (double n : args.N) require(n >= 1.0, "--N values must be >= 1");

  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int tail_violations = 0;
  int bracket_violations = 0;
  for (int i = 0; i < args.sweep; ++i) {
    const double M = 0.5 + 1e-9 + 9.5 * unit(rng);
    const double b = std::exp(std::log(1e-3) + std::log(1e3) * unit(rng));
    const double a = 1.01 + 2.0 * unit(rng);
    const TailBound tb = tail_bound_lhs_rhs(M, b, a);
    if (!(tb.lhs <= tb.rhs)) ++tail_violations;
  }
  for (int i = 0; i < args.sweep; ++i) {
    const double N = 1.0 + 49.0 * unit(rng);
    const double r = 1.0 + 9.0 * unit(rng);
    const int l = 1 + static_cast<int>(200.0 * unit(rng)) % 200;
    const double a = std::pow(2.0, 1.0 / 6.0 + (5.0 / 6.0) * unit(rng));
    if (!crossing_index(N, r, l, a).in_bracket) ++bracket_violations;
  }

  std::string text;
  for (double n : args.N) {
    const HybridTailDiagnostics d = hybrid_tail_diagnostics(n, args.a, args.l_max);
    json rec;
    rec["N"] = d.N;
    rec["a"] = d.a;
    rec["l_max"] = d.l_max;
    rec["r"] = hybrid_rate(args.a);
    rec["eps3"] = d.eps3;
    rec["eps4"] = d.eps4;
    rec["eps3_ratio"] = d.eps3_ratio;
    rec["eps4_ratio"] = d.eps4_ratio;
    rec["cut_degree_j1"] = hybrid_cut_degree(1, n, args.a);
    rec["tail_bound_violations"] = tail_violations;
    rec["crossing_bracket_violations"] = bracket_violations;
    rec["sweep"] = args.sweep;
    rec["seed"] = args.seed;
    text += rec.dump() + "\n";
  }
  std::cout << text;
  if (!args.out.empty()) open_output(args.out) << text;
  if (tail_violations > 0 || bracket_violations > 0) {
    throw VerificationFailure("tail inequality or crossing bracket violated");
  }
  return kExitOk;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Fills options not given on the command line from "key = value" lines.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") throw ParameterError("config files cannot include other config files");
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw ParameterError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    if (opt->get_items_expected_max() > 1) {
      std::vector<std::string> parts;
      std::stringstream ss(value);
      for (std::string item; std::getline(ss, item, ',');) parts.push_back(trim(item));
      opt->add_result(parts);
    } else {
      opt->add_result(value);
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParameterError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mexican needlet frames on the sphere"};
  app.require_subcommand(1);
  std::string config_path;
  auto with_config = [&config_path](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value file; flags override it");
  };

  DaubechiesArgs daub;
  auto* c_daub = app.add_subcommand("daubechies", "Daubechies frame bounds A, B and B/A");
  with_config(c_daub);
  c_daub->add_option("--a", daub.a, "dilation a > 1");
  c_daub->add_option("--filter", daub.filter, "filter name");
  c_daub->add_option("--grid", daub.grid, "scan points per period");
  c_daub->add_option("--out", daub.out, "JSON output file");

  KernelArgs kern;
  auto* c_kern = app.add_subcommand("kernel-profile", "4 pi h_t(cos theta) on [-pi, pi]");
  with_config(c_kern);
  c_kern->add_option("--t", kern.t, "scale t > 0");
  c_kern->add_option("--filter", kern.filter, "filter name");
  c_kern->add_option("--method", kern.method, "series, gaussian or auto");
  c_kern->add_option("--n", kern.n, "grid points");
  c_kern->add_option("--tol", kern.tol, "series tolerance");
  c_kern->add_option("--convention", kern.convention, "laplacian or degree");
  c_kern->add_option("--out", kern.out, "CSV output file");

  PartitionArgs part;
  auto* c_part = app.add_subcommand("partition", "Scale partitions and cubature rules");
  with_config(c_part);
  c_part->add_option("--j", part.j, "scale index");
  c_part->add_option("--a", part.a, "dilation a > 1");
  c_part->add_option("--b", part.b, "fineness b in (0, 1]");
  c_part->add_option("--greedy-t", part.greedy_t, "greedy ball radius (greedy mode when > 0)");
  c_part->add_option("--candidates", part.candidates, "greedy candidate count");
  c_part->add_option("--cubature", part.cubature, "write the cubature rule of this degree");
  c_part->add_option("--out", part.out, "JSON (partition) or CSV (cubature) output file");

  FrameArgs frame;
  auto* c_frame = app.add_subcommand("frame-verify", "Empirical frame bounds");
  with_config(c_frame);
  c_frame->add_option("--a", frame.a, "dilation a > 1");
  c_frame->add_option("--b", frame.b, "fineness b in (0, 1]");
  c_frame->add_option("--filter", frame.filter, "filter name");
  c_frame->add_option("--L", frame.L, "band limit L_max");
  c_frame->add_option("--trials", frame.trials, "random fields");
  c_frame->add_option("--seed", frame.seed, "random seed");
  auto* f_jlo = c_frame->add_option("--j-min", frame.j_min, "first scale");
  auto* f_jhi = c_frame->add_option("--j-max", frame.j_max, "last scale");
  c_frame->add_flag("--needlet", frame.needlet, "cutoff needlet frame instead");
  c_frame->add_option("--out", frame.out, "JSON output file");
  c_frame->add_option("--coefficients", frame.coefficients, "coefficient CSV for one field");
  c_frame->add_option("--field", frame.field, "field CSV for that field");

  TruncationArgs trunc;
  auto* c_trunc = app.add_subcommand("truncation", "Frequency truncation report");
  with_config(c_trunc);
  c_trunc->add_option("--a", trunc.a, "dilation a > 1");
  c_trunc->add_option("--b", trunc.b, "fineness b in (0, 1]");
  c_trunc->add_option("--filter", trunc.filter, "filter name");
  c_trunc->add_option("--L", trunc.L, "band limit L_max");
  c_trunc->add_option("--field-L", trunc.field_L, "band limit of the random field");
  c_trunc->add_option("--seed", trunc.seed, "random seed");
  c_trunc->add_option("--M", trunc.M, "window start -M");
  c_trunc->add_option("--N", trunc.N, "window end N");
  c_trunc->add_option("--l", trunc.l, "vanishing order used in the bound");
  c_trunc->add_option("--J", trunc.J, "decay order used in the bound");
  c_trunc->add_option("--level", trunc.level, "spectral level of P_[0,L] (default L_max(L_max+1))");
  auto* t_jlo = c_trunc->add_option("--j-min", trunc.j_min, "first scale");
  auto* t_jhi = c_trunc->add_option("--j-max", trunc.j_max, "last scale");
  c_trunc->add_option("--out", trunc.out, "JSON output file");

  SpatialArgs spat;
  auto* c_spat = app.add_subcommand("spatial", "Spatial truncation sweep over c_j");
  with_config(c_spat);
  c_spat->add_option("--a", spat.a, "dilation a > 1");
  c_spat->add_option("--b", spat.b, "fineness b in (0, 1]");
  c_spat->add_option("--L", spat.L, "band limit L_max");
  c_spat->add_option("--seed", spat.seed, "random seed");
  c_spat->add_option("--cap-radius", spat.cap_radius, "cap radius");
  c_spat->add_option("--cap-theta", spat.cap_theta, "cap center colatitude");
  c_spat->add_option("--cap-phi", spat.cap_phi, "cap center longitude");
  c_spat->add_option("--width", spat.width, "bell width of the test field");
  c_spat->add_option("--c", spat.c, "c_j values (uniform in j)")->delimiter(',');
  c_spat->add_option("--I", spat.I_decay, "decay order I");
  c_spat->add_option("--M", spat.M, "window start -M");
  c_spat->add_option("--N", spat.N, "window end N");
  c_spat->add_option("--trials", spat.trials, "random fields for B_emp");
  c_spat->add_option("--out", spat.out, "JSON output file");

  NeedletDiagArgs ndiag;
  auto* c_ndiag = app.add_subcommand("needlet-diag", "Hybrid tail diagnostics");
  with_config(c_ndiag);
  c_ndiag->add_option("--a", ndiag.a, "dilation a > 1");
  c_ndiag->add_option("--N", ndiag.N, "N values")->delimiter(',');
  c_ndiag->add_option("--l-max", ndiag.l_max, "degree cap for eps4");
  c_ndiag->add_option("--sweep", ndiag.sweep, "random instances per inequality check");
  c_ndiag->add_option("--seed", ndiag.seed, "random seed");
  c_ndiag->add_option("--out", ndiag.out, "JSON lines output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      for (CLI::App* sub : app.get_subcommands()) apply_config(*sub, config_path);
    }
    if (c_daub->parsed()) return run_daubechies(daub);
    if (c_kern->parsed()) return run_kernel_profile(kern);
    if (c_part->parsed()) return run_partition(part);
    if (c_frame->parsed()) return run_frame_verify(frame, f_jlo, f_jhi);
    if (c_trunc->parsed()) return run_truncation(trunc, t_jlo, t_jhi);
    if (c_spat->parsed()) return run_spatial(spat);
    if (c_ndiag->parsed()) return run_needlet_diag(ndiag);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
