// Command-line front end for the favard shared library. Links the C API
// only; all numerics live behind include/favard.h.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "favard.h"

namespace {

struct CliFailure : std::runtime_error {
  int exit_code;
  CliFailure(int code, const std::string& message)
      : std::runtime_error(message), exit_code(code) {}
};

int exit_code_for(favard_status status) {
  switch (status) {
    case FAVARD_OK:
      return 0;
    case FAVARD_ERROR_ARGUMENT:
    case FAVARD_ERROR_PARSE:
      return 2;
    case FAVARD_ERROR_PRECONDITION:
      return 3;
    default:
      return 1;
  }
}

void check(favard_status status) {
  if (status != FAVARD_OK) {
    throw CliFailure(exit_code_for(status), favard_last_error());
  }
}

struct GenerationHandle {
  favard_generation* ptr = nullptr;
  explicit GenerationHandle(int n) { check(favard_generation_create(n, &ptr)); }
  ~GenerationHandle() { favard_generation_destroy(ptr); }
  GenerationHandle(const GenerationHandle&) = delete;
  GenerationHandle& operator=(const GenerationHandle&) = delete;
};

struct CurveHandle {
  favard_curve* ptr = nullptr;
  explicit CurveHandle(const std::string& spec) {
    check(favard_curve_parse(spec.c_str(), &ptr));
  }
  ~CurveHandle() { favard_curve_destroy(ptr); }
  CurveHandle(const CurveHandle&) = delete;
  CurveHandle& operator=(const CurveHandle&) = delete;
};

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_csv(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw CliFailure(2, "cannot open output file: " + path);
  return FilePtr(f);
}

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_given) {
  if (seed_given) return seed;
  if (const char* env = std::getenv("FAVARD_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

double default_pitch(int n) { return std::ldexp(1.0, -2 * (n + 2)); }

std::string dyadic(std::int64_t num, int n) {
  char buf[64];
  check(favard_dyadic_decimal(num, n, buf, sizeof buf));
  return buf;
}

// ----------------------------------------------------------------- cantor

int run_cantor(int n, const std::string& out) {
  GenerationHandle gen(n);
  const std::uint64_t count = favard_generation_square_count(gen.ptr);
  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,ix,iy,x0,y0,side\n");
    const std::string side = dyadic(1, n);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::int64_t ix = 0;
      std::int64_t iy = 0;
      check(favard_generation_square(gen.ptr, i, &ix, &iy));
      std::fprintf(f.get(), "%d,%" PRId64 ",%" PRId64 ",%s,%s,%s\n", n, ix, iy,
                   dyadic(ix, n).c_str(), dyadic(iy, n).c_str(), side.c_str());
    }
  }
  std::printf("summary cmd=cantor n=%d method=exact squares=%" PRIu64
              " side=%s out=%s seed=- error=0\n",
              n, count, dyadic(1, n).c_str(), out.empty() ? "-" : out.c_str());
  return 0;
}

// -------------------------------------------------------------------- fav

int run_fav(int n, int quad_points, const std::string& out, const std::string& trace_out) {
  GenerationHandle gen(n);
  double value = 0.0;
  double error = 0.0;
  check(favard_fav_linear(gen.ptr, quad_points, &value, &error));
  if (!trace_out.empty()) {
    std::vector<double> thetas(quad_points);
    std::vector<double> measures(quad_points);
    check(favard_fav_linear_trace(gen.ptr, quad_points, thetas.data(), measures.data()));
    FilePtr f = open_csv(trace_out);
    std::fprintf(f.get(), "theta,measure\n");
    for (int i = 0; i < quad_points; ++i) {
      std::fprintf(f.get(), "%.17g,%.17g\n", thetas[i], measures[i]);
    }
  }
  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,favard,error\n%d,%.17g,%.17g\n", n, value, error);
  }
  std::printf("summary cmd=fav n=%d method=quadrature quad-points=%d "
              "convention=integral_theta_0_pi value=%.17g error=%.17g seed=-\n",
              n, quad_points, value, error);
  return 0;
}

// ------------------------------------------------------------------- favc

int run_favc(int n, const std::string& curve_spec, const std::string& method,
             int quad_points, double pitch, bool pitch_given, std::uint64_t samples,
             std::uint64_t seed, const std::string& out, const std::string& trace_out) {
  GenerationHandle gen(n);
  CurveHandle curve(curve_spec);
  if (!pitch_given) pitch = default_pitch(n);

  double value = 0.0;
  double error = 0.0;
  std::string seed_field = "-";
  if (method == "quadrature") {
    check(favard_favc_quadrature(gen.ptr, curve.ptr, quad_points, &value, &error));
    if (!trace_out.empty()) {
      std::vector<double> alphas(quad_points);
      std::vector<double> measures(quad_points);
      check(favard_favc_quadrature_trace(gen.ptr, curve.ptr, quad_points, alphas.data(),
                                         measures.data()));
      FilePtr f = open_csv(trace_out);
      std::fprintf(f.get(), "alpha,measure\n");
      for (int i = 0; i < quad_points; ++i) {
        std::fprintf(f.get(), "%.17g,%.17g\n", alphas[i], measures[i]);
      }
    }
  } else if (method == "grid") {
    check(favard_favc_grid(gen.ptr, curve.ptr, pitch, &value, &error));
  } else if (method == "mc") {
    check(favard_favc_mc(gen.ptr, curve.ptr, samples, seed, &value, &error));
    seed_field = std::to_string(seed);
  } else {
    throw CliFailure(2, "unknown method '" + method + "' (quadrature|grid|mc)");
  }

  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,method,value,error,seed\n%d,%s,%.17g,%.17g,%s\n", n,
                 method.c_str(), value, error, seed_field.c_str());
  }
  std::printf("summary cmd=favc n=%d curve=\"%s\" method=%s quad-points=%d pitch=%.17g "
              "samples=%" PRIu64 " value=%.17g error=%.17g seed=%s\n",
              n, curve_spec.c_str(), method.c_str(), quad_points, pitch, samples, value,
              error, seed_field.c_str());
  return 0;
}

// ----------------------------------------------------------------- buffon

int run_buffon(int n, const std::string& curve_spec, int order, std::uint64_t samples,
               std::uint64_t seed, const std::string& out, const std::string& raw_out) {
  GenerationHandle gen(n);
  CurveHandle curve(curve_spec);
  double value = 0.0;
  double std_error = 0.0;
  check(favard_moment(gen.ptr, curve.ptr, order, samples, seed, &value, &std_error));
  if (!raw_out.empty()) {
    std::vector<double> z1(samples);
    std::vector<double> z2(samples);
    std::vector<std::int64_t> fn(samples);
    check(favard_mc_trace(gen.ptr, curve.ptr, samples, seed, z1.data(), z2.data(), fn.data()));
    FilePtr f = open_csv(raw_out);
    std::fprintf(f.get(), "z1,z2,fn\n");
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::fprintf(f.get(), "%.17g,%.17g,%" PRId64 "\n", z1[i], z2[i], fn[i]);
    }
  }
  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,order,value,stderr,samples,seed\n");
    std::fprintf(f.get(), "%d,%d,%.17g,%.17g,%" PRIu64 ",%" PRIu64 "\n", n, order, value,
                 std_error, samples, seed);
  }
  std::printf("summary cmd=buffon n=%d curve=\"%s\" method=mc order=%d samples=%" PRIu64
              " value=%.17g error=%.17g seed=%" PRIu64 "\n",
              n, curve_spec.c_str(), order, samples, value, std_error, seed);
  return 0;
}

// ------------------------------------------------------------------ pairs

int run_pairs(int n, bool check_mode, const std::string& out) {
  std::vector<std::int64_t> formula(static_cast<std::size_t>(n + 1) * (n + 1));
  check(favard_pair_counts_2d(n, 0, formula.data()));

  const bool have_exhaustive = n <= 5;
  std::vector<std::int64_t> brute;
  if (have_exhaustive) {
    brute.resize(formula.size());
    check(favard_pair_counts_2d(n, 1, brute.data()));
  }

  if (check_mode) {
    if (!have_exhaustive) {
      throw CliFailure(2, "--check needs n <= 5 for the exhaustive 2-d scan");
    }
    std::vector<std::int64_t> f1(n + 1);
    std::vector<std::int64_t> b1(n + 1);
    check(favard_pair_counts_1d(n, 0, f1.data()));
    check(favard_pair_counts_1d(n, 1, b1.data()));
    if (f1 != b1 || formula != brute) {
      throw CliFailure(1, "pair-count formula disagrees with exhaustive enumeration");
    }
  }

  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,k,ell,count_formula,count_exhaustive\n");
    for (int k = 0; k <= n; ++k) {
      for (int ell = 0; ell <= n; ++ell) {
        const std::int64_t fc = formula[static_cast<std::size_t>(k) * (n + 1) + ell];
        if (have_exhaustive) {
          std::fprintf(f.get(), "%d,%d,%d,%" PRId64 ",%" PRId64 "\n", n, k, ell, fc,
                       brute[static_cast<std::size_t>(k) * (n + 1) + ell]);
        } else {
          std::fprintf(f.get(), "%d,%d,%d,%" PRId64 ",\n", n, k, ell, fc);
        }
      }
    }
  }
  if (check_mode) {
    std::printf("formula == exhaustive\n");
  }
  std::printf("summary cmd=pairs n=%d method=%s classes=%d check=%s seed=- error=0\n", n,
              have_exhaustive ? "formula+exhaustive" : "formula", (n + 1) * (n + 1),
              check_mode ? "pass" : "off");
  return 0;
}

// --------------------------------------------------------------- counting

int run_counting(int n, const std::string& curve_spec, const std::string& z_text,
                 std::uint64_t samples, std::uint64_t seed, const std::string& out) {
  GenerationHandle gen(n);
  CurveHandle curve(curve_spec);
  if (!z_text.empty()) {
    double z1 = 0.0;
    double z2 = 0.0;
    if (std::sscanf(z_text.c_str(), "%lf,%lf", &z1, &z2) != 2) {
      throw CliFailure(2, "--z expects 'x,y'");
    }
    std::int64_t count = 0;
    check(favard_counting_function(gen.ptr, curve.ptr, z1, z2, &count));
    std::printf("summary cmd=counting n=%d curve=\"%s\" method=point z=%.17g,%.17g "
                "fn=%" PRId64 " seed=- error=0\n",
                n, curve_spec.c_str(), z1, z2, count);
    return 0;
  }
  std::vector<double> z1(samples);
  std::vector<double> z2(samples);
  std::vector<std::int64_t> fn(samples);
  check(favard_mc_trace(gen.ptr, curve.ptr, samples, seed, z1.data(), z2.data(), fn.data()));
  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "z1,z2,fn\n");
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::fprintf(f.get(), "%.17g,%.17g,%" PRId64 "\n", z1[i], z2[i], fn[i]);
    }
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) hits += fn[i] > 0 ? 1 : 0;
  std::printf("summary cmd=counting n=%d curve=\"%s\" method=mc samples=%" PRIu64
              " hit-fraction=%.17g seed=%" PRIu64 " error=0\n",
              n, curve_spec.c_str(), samples,
              static_cast<double>(hits) / static_cast<double>(samples), seed);
  return 0;
}

// ----------------------------------------------------------- compare-local

int run_compare_local(int n, const std::string& curve_spec, std::int64_t block,
                      int alpha_samples, const std::string& out) {
  CurveHandle curve(curve_spec);
  std::int64_t block_count = 0;
  check(favard_block_count(n, &block_count));

  std::vector<std::int64_t> blocks;
  if (block >= 0) {
    blocks.push_back(block);
  } else {
    for (std::int64_t j = 0; j < block_count; ++j) blocks.push_back(j);
  }

  FilePtr f;
  if (!out.empty()) {
    f = open_csv(out);
    std::fprintf(f.get(), "alpha,lhs,rhs,ratio\n");
  }
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  bool first = true;
  std::vector<double> rows(4 * static_cast<std::size_t>(alpha_samples));
  for (std::int64_t j : blocks) {
    int written = 0;
    check(favard_local_block_comparison(curve.ptr, n, j, alpha_samples, rows.data(),
                                        &written));
    for (int i = 0; i < written; ++i) {
      const double ratio = rows[4 * i + 3];
      if (first || ratio < ratio_min) ratio_min = ratio;
      if (first || ratio > ratio_max) ratio_max = ratio;
      first = false;
      if (f) {
        std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g\n", rows[4 * i + 0], rows[4 * i + 1],
                     rows[4 * i + 2], rows[4 * i + 3]);
      }
    }
  }
  if (first) throw CliFailure(3, "no sampled alpha met the block support");
  std::printf("summary cmd=compare-local n=%d curve=\"%s\" method=block-comparison "
              "blocks=%zu alpha-samples=%d ratio-min=%.17g ratio-max=%.17g band=%.17g "
              "seed=- error=0\n",
              n, curve_spec.c_str(), blocks.size(), alpha_samples, ratio_min, ratio_max,
              ratio_max / ratio_min);
  return 0;
}

// ------------------------------------------------------------------ decay

int run_decay(const std::string& curve_spec, int n_min, int n_max, const std::string& method,
              int quad_points, double pitch, bool pitch_given, std::uint64_t samples,
              std::uint64_t seed, const std::string& out) {
  if (n_min < 0 || n_max < n_min) throw CliFailure(2, "need 0 <= n-min <= n-max");
  CurveHandle curve(curve_spec);

  std::vector<double> ns;
  std::vector<double> values;
  std::vector<double> errors;
  for (int n = n_min; n <= n_max; ++n) {
    GenerationHandle gen(n);
    double value = 0.0;
    double error = 0.0;
    if (method == "quadrature") {
      check(favard_favc_quadrature(gen.ptr, curve.ptr, quad_points, &value, &error));
    } else if (method == "grid") {
      check(favard_favc_grid(gen.ptr, curve.ptr, pitch_given ? pitch : default_pitch(n),
                             &value, &error));
    } else if (method == "mc") {
      check(favard_favc_mc(gen.ptr, curve.ptr, samples, seed, &value, &error));
    } else {
      throw CliFailure(2, "unknown method '" + method + "' (quadrature|grid|mc)");
    }
    ns.push_back(n);
    values.push_back(value);
    errors.push_back(error);
  }

  double exponent = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double min_nv = 0.0;
  check(favard_fit_decay(ns.data(), values.data(), ns.size(), &exponent, &intercept, &r2,
                         &min_nv));

  if (!out.empty()) {
    FilePtr f = open_csv(out);
    std::fprintf(f.get(), "n,method,value,error,seed\n");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      std::fprintf(f.get(), "%d,%s,%.17g,%.17g,%s\n", static_cast<int>(ns[i]),
                   method.c_str(), values[i], errors[i],
                   method == "mc" ? std::to_string(seed).c_str() : "-");
    }
  }
  std::printf("summary cmd=decay curve=\"%s\" method=%s n=[%d,%d] quad-points=%d "
              "samples=%" PRIu64 " exponent=%.17g intercept=%.17g r2=%.17g "
              "min-n-value=%.17g seed=%" PRIu64 " error=%.17g\n",
              curve_spec.c_str(), method.c_str(), n_min, n_max, quad_points, samples,
              exponent, intercept, r2, min_nv, seed, 1.0 - r2);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Favard length and Favard curve length of four-corner Cantor generations"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = automatic)");

  auto* cantor = app.add_subcommand("cantor", "emit the squares of a generation");
  int ca_n = 1;
  std::string ca_out;
  cantor->add_option("--n", ca_n, "generation")->required();
  cantor->add_option("--out", ca_out, "squares CSV path");

  auto* fav = app.add_subcommand("fav", "classical Favard length by quadrature");
  int fa_n = 1;
  int fa_points = 4096;
  std::string fa_out, fa_trace;
  fav->add_option("--n", fa_n, "generation")->required();
  fav->add_option("--quad-points", fa_points, "quadrature nodes");
  fav->add_option("--out", fa_out, "summary CSV path");
  fav->add_option("--trace-out", fa_trace, "per-angle trace CSV path");

  auto* favc = app.add_subcommand("favc", "Favard curve length estimators");
  int fc_n = 1;
  std::string fc_curve, fc_method = "quadrature", fc_out, fc_trace;
  int fc_points = 4096;
  double fc_pitch = 0.0;
  std::uint64_t fc_samples = 1000000;
  std::uint64_t fc_seed = 0;
  favc->add_option("--n", fc_n, "generation")->required();
  favc->add_option("--curve", fc_curve, "curve spec")->required();
  favc->add_option("--method", fc_method, "quadrature|grid|mc");
  favc->add_option("--quad-points", fc_points, "quadrature nodes");
  auto* fc_pitch_opt = favc->add_option("--pitch", fc_pitch, "grid pitch (default 4^-(n+2))");
  favc->add_option("--samples", fc_samples, "monte carlo samples");
  auto* fc_seed_opt = favc->add_option("--seed", fc_seed, "master seed (env FAVARD_SEED)");
  favc->add_option("--out", fc_out, "summary CSV path");
  favc->add_option("--trace-out", fc_trace, "alpha,measure trace CSV (quadrature)");

  auto* buffon = app.add_subcommand("buffon", "counting-function moments by simulation");
  int bu_n = 1;
  std::string bu_curve, bu_out, bu_raw;
  int bu_order = 1;
  std::uint64_t bu_samples = 1000000;
  std::uint64_t bu_seed = 0;
  buffon->add_option("--n", bu_n, "generation")->required();
  buffon->add_option("--curve", bu_curve, "curve spec")->required();
  buffon->add_option("--order", bu_order, "moment order (1 or 2)");
  buffon->add_option("--samples", bu_samples, "monte carlo samples");
  auto* bu_seed_opt = buffon->add_option("--seed", bu_seed, "master seed (env FAVARD_SEED)");
  buffon->add_option("--out", bu_out, "summary CSV path");
  buffon->add_option("--raw-out", bu_raw, "raw z1,z2,fn CSV path");

  auto* pairs = app.add_subcommand("pairs", "pair-class counting");
  int pa_n = 2;
  bool pa_check = false;
  std::string pa_out;
  pairs->add_option("--n", pa_n, "generation")->required();
  pairs->add_flag("--check", pa_check, "verify formula against exhaustive enumeration");
  pairs->add_option("--out", pa_out, "counts CSV path");

  auto* counting = app.add_subcommand("counting", "evaluate the counting function");
  int co_n = 1;
  std::string co_curve, co_z, co_out;
  std::uint64_t co_samples = 1000;
  std::uint64_t co_seed = 0;
  counting->add_option("--n", co_n, "generation")->required();
  counting->add_option("--curve", co_curve, "curve spec")->required();
  counting->add_option("--z", co_z, "drop point 'x,y'");
  counting->add_option("--samples", co_samples, "random drops when --z is absent");
  auto* co_seed_opt = counting->add_option("--seed", co_seed, "master seed (env FAVARD_SEED)");
  counting->add_option("--out", co_out, "z1,z2,fn CSV path");

  auto* local = app.add_subcommand("compare-local", "block projection comparison");
  int lo_n = 2;
  std::string lo_curve, lo_out;
  std::int64_t lo_block = -1;
  int lo_samples = 64;
  local->add_option("--n", lo_n, "even generation")->required();
  local->add_option("--curve", lo_curve, "curve spec")->required();
  local->add_option("--block", lo_block, "block index (default: all blocks)");
  local->add_option("--alpha-samples", lo_samples, "alpha samples per block");
  local->add_option("--out", lo_out, "alpha,lhs,rhs,ratio CSV path");

  auto* decay = app.add_subcommand("decay", "estimate the decay of the curve length");
  std::string de_curve, de_method = "quadrature", de_out;
  int de_min = 2, de_max = 6, de_points = 4096;
  double de_pitch = 0.0;
  std::uint64_t de_samples = 1000000;
  std::uint64_t de_seed = 0;
  decay->add_option("--curve", de_curve, "curve spec")->required();
  decay->add_option("--n-min", de_min, "first generation");
  decay->add_option("--n-max", de_max, "last generation");
  decay->add_option("--method", de_method, "quadrature|grid|mc");
  decay->add_option("--quad-points", de_points, "quadrature nodes");
  auto* de_pitch_opt = decay->add_option("--pitch", de_pitch, "grid pitch");
  decay->add_option("--samples", de_samples, "monte carlo samples");
  auto* de_seed_opt = decay->add_option("--seed", de_seed, "master seed (env FAVARD_SEED)");
  decay->add_option("--out", de_out, "summary CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  favard_set_threads(threads);
  try {
    if (*cantor) return run_cantor(ca_n, ca_out);
    if (*fav) return run_fav(fa_n, fa_points, fa_out, fa_trace);
    if (*favc) {
      return run_favc(fc_n, fc_curve, fc_method, fc_points, fc_pitch,
                      fc_pitch_opt->count() > 0, fc_samples,
                      seed_or_env(fc_seed, fc_seed_opt->count() > 0), fc_out, fc_trace);
    }
    if (*buffon) {
      return run_buffon(bu_n, bu_curve, bu_order, bu_samples,
                        seed_or_env(bu_seed, bu_seed_opt->count() > 0), bu_out, bu_raw);
    }
    if (*pairs) return run_pairs(pa_n, pa_check, pa_out);
    if (*counting) {
      return run_counting(co_n, co_curve, co_z, co_samples,
                          seed_or_env(co_seed, co_seed_opt->count() > 0), co_out);
    }
    if (*local) return run_compare_local(lo_n, lo_curve, lo_block, lo_samples, lo_out);
    if (*decay) {
      return run_decay(de_curve, de_min, de_max, de_method, de_points, de_pitch,
                       de_pitch_opt->count() > 0, de_samples,
                       seed_or_env(de_seed, de_seed_opt->count() > 0), de_out);
    }
  } catch (const CliFailure& e) {
    std::fprintf(stderr, "favard: %s\n", e.what());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "favard: %s\n", e.what());
    return 1;
  }
  return 2;
}
