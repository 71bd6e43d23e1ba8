#include "pathnoise/cli.hpp"

#include <omp.h>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pathnoise/errors.hpp"
#include "pathnoise/io.hpp"

namespace pathnoise::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

Band band_of(const RunConfig& cfg) {
  if (!cfg.band) throw ValidationError("--band <center>,<half_width> is required");
  if (cfg.band->size() != 2) throw ValidationError("--band takes exactly two values");
  return Band((*cfg.band)[0], (*cfg.band)[1]);
}

void write_coefficients_csv(const fs::path& path, std::span<const Complex> y) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file " + path.string());
  out << "k,re,im\n";
  const auto k0 = -static_cast<std::int64_t>((y.size() - 1) / 2);
  for (std::size_t i = 0; i < y.size(); ++i) {
    out << k0 + static_cast<std::int64_t>(i) << ',' << io::format_double(y[i].real()) << ','
        << io::format_double(y[i].imag()) << '\n';
  }
}

int cmd_analyze(const RunConfig& cfg) {
  const TwoSidedSequence x = io::read_sequence_csv(cfg.input);
  const SpectrumGrid spectrum = ztransform(x, cfg.grid);
  io::write_json(cfg.out / "report.json", io::to_json(sigma_of(spectrum)));
  io::write_spectrum_csv(cfg.out / "spectrum.csv", spectrum);
  return kOk;
}

int cmd_decompose2(const RunConfig& cfg) {
  const TwoSidedSequence x = io::read_sequence_csv(cfg.input);
  const GammaDecomposition g = gamma_decompose(x, cfg.eps, cfg.grid);
  const SigmaReport s = sigma_of(ztransform(x, cfg.grid));
  Json report = io::to_json(s);
  report["epsilon"] = g.epsilon;
  report["degenerate"] = g.degenerate;
  report["arc_half_width"] = g.arc ? g.arc->half_width() : 0.0;
  report["noise_l1"] = norms(g.noise).l1;
  report["predictable_l1"] = norms(g.predictable).l1;
  report["Y_path"] = "Y.csv";
  report["N_path"] = "N.csv";
  io::write_json(cfg.out / "report.json", report);
  io::write_spectrum_csv(cfg.out / "Y.csv", g.predictable);
  io::write_spectrum_csv(cfg.out / "N.csv", g.noise);
  io::write_sequence_csv(cfg.out / "noise_sequence.csv", g.noise_sequence(x.t_min(), x.t_max()));
  return kOk;
}

int cmd_recover(const RunConfig& cfg) {
  if (!cfg.m) throw ValidationError("recover: --m is required");
  if (cfg.omega0.has_value() != cfg.sigma.has_value()) {
    throw ValidationError("recover: --omega0 and --sigma must be given together");
  }
  const TwoSidedSequence x = io::read_sequence_csv(cfg.input);
  std::optional<RecoveryClass> cls;
  if (cfg.omega0) cls = RecoveryClass{*cfg.omega0, *cfg.sigma};
  io::write_json(cfg.out / "report.json", io::to_json(recover_missing(x, *cfg.m, cfg.grid, cls)));
  return kOk;
}

int cmd_project(const RunConfig& cfg) {
  const OneSidedSequence x = io::read_one_sided_csv(cfg.input);
  const LblProjector p = build_projector(band_of(cfg), cfg.coeffs, cfg.horizon_T, cfg.reg);
  const ProjectionResult r = p.project(x, cfg.horizon);
  io::write_sequence_csv(cfg.out / "x_hat.csv", r.x_hat.as_two_sided());
  write_coefficients_csv(cfg.out / "coefficients.csv", r.coefficients);
  Json summary{{"residual", r.residual},
               {"norm_x", r.norm_x},
               {"coefficients_path", "coefficients.csv"},
               {"rank", p.rank()},
               {"contraction_violated", r.contraction_violated},
               {"projector", io::to_json(p.config())}};
  if (r.extrapolation) {
    io::write_sequence_csv(cfg.out / "extrapolation.csv", *r.extrapolation);
    summary["extrapolation_path"] = "extrapolation.csv";
  }
  io::write_json(cfg.out / "summary.json", summary);
  return kOk;
}

EstimatorConfig estimator_config(const RunConfig& cfg) {
  EstimatorConfig e;
  e.window = cfg.window;
  e.lambda = cfg.reg;
  return e;
}

int cmd_estimate_band(const RunConfig& cfg, std::ostream& err) {
  const OneSidedSequence x = io::read_one_sided_csv(cfg.input);
  const BandEstimate e = estimate_band(x, cfg.nu, cfg.tau_split.value_or(0), estimator_config(cfg));
  io::write_json(cfg.out / "report.json", io::to_json(e));
  if (e.status == BandStatus::ambiguous) {
    err << "error code=" << kAmbiguous << " kind=ambiguous message=\"no candidate arc reached the residual threshold\"\n";
    return kAmbiguous;
  }
  return kOk;
}

int cmd_predict(const RunConfig& cfg) {
  const OneSidedSequence x = io::read_one_sided_csv(cfg.input);
  PredictRequest req;
  req.tau_split = cfg.tau_split.value_or(-64);
  req.nu = cfg.nu;
  req.taps = cfg.taps;
  req.horizon = cfg.horizon;
  req.estimator = estimator_config(cfg);
  if (cfg.band) req.half_width = band_of(cfg).half_width();
  const PredictionRun run = predict_with_estimated_band(x, req);
  io::write_json(cfg.out / "predictor.json", io::to_json(run.predictor));
  Json report{{"band_estimate", io::to_json(run.estimate)},
              {"predictor_path", "predictor.json"},
              {"pseudo_history", run.pseudo_history}};
  if (!run.predictions.empty()) {
    io::write_sequence_csv(cfg.out / "predictions.csv", TwoSidedSequence(1, run.predictions));
    report["predictions_path"] = "predictions.csv";
  }
  io::write_json(cfg.out / "report.json", report);
  return kOk;
}

int cmd_multistep(const RunConfig& cfg) {
  const OneSidedSequence x = io::read_one_sided_csv(cfg.input);
  MultistepConfig m;
  m.bands = {band_of(cfg)};
  m.max_steps = cfg.max_steps;
  m.stop_tol = cfg.stop_tol;
  m.decrease_tol = cfg.decrease_tol;
  m.K = cfg.coeffs;
  m.T = cfg.horizon_T;
  m.lambda = cfg.reg;
  const MultistepResult r = decompose(x, m);
  Json ledger = io::to_json(r);
  ledger["randomness"] = quantify_randomness(r);
  ledger["predictable_path"] = "predictable.csv";
  ledger["noise_path"] = "noise.csv";
  io::write_json(cfg.out / "ledger.json", ledger);
  io::write_sequence_csv(cfg.out / "predictable.csv", r.predictable_part.as_two_sided());
  io::write_sequence_csv(cfg.out / "noise.csv", r.noise_part.as_two_sided());
  return kOk;
}

std::string quoted(std::string s) {
  for (auto& c : s) {
    if (c == '"' || c == '\n') c = '\'';
  }
  return '"' + s + '"';
}

// JSON config keys mirror flag names (without the leading dashes).
void merge_config(const fs::path& path, RunConfig& cfg, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  const auto given = [&](const std::string& flag) { return app.get_option(flag)->count() > 0; };
  const std::vector<std::pair<std::string, std::function<void(const Json&)>>> fields{
      {"input", [&](const Json& v) { cfg.input = v.get<std::string>(); }},
      {"out", [&](const Json& v) { cfg.out = v.get<std::string>(); }},
      {"grid", [&](const Json& v) { cfg.grid = v.get<std::size_t>(); }},
      {"band", [&](const Json& v) { cfg.band = v.get<std::vector<double>>(); }},
      {"coeffs", [&](const Json& v) { cfg.coeffs = v.get<int>(); }},
      {"horizon-T", [&](const Json& v) { cfg.horizon_T = v.get<std::size_t>(); }},
      {"reg", [&](const Json& v) { cfg.reg = v.get<double>(); }},
      {"eps", [&](const Json& v) { cfg.eps = v.get<double>(); }},
      {"nu", [&](const Json& v) { cfg.nu = v.get<double>(); }},
      {"taps", [&](const Json& v) { cfg.taps = v.get<std::size_t>(); }},
      {"horizon", [&](const Json& v) { cfg.horizon = v.get<std::size_t>(); }},
      {"max-steps", [&](const Json& v) { cfg.max_steps = v.get<std::size_t>(); }},
      {"stop-tol", [&](const Json& v) { cfg.stop_tol = v.get<double>(); }},
      {"decrease-tol", [&](const Json& v) { cfg.decrease_tol = v.get<double>(); }},
      {"tau-split", [&](const Json& v) { cfg.tau_split = v.get<std::int64_t>(); }},
      {"window", [&](const Json& v) { cfg.window = v.get<std::size_t>(); }},
      {"m", [&](const Json& v) { cfg.m = v.get<std::int64_t>(); }},
      {"omega0", [&](const Json& v) { cfg.omega0 = v.get<double>(); }},
      {"sigma", [&](const Json& v) { cfg.sigma = v.get<double>(); }},
      {"threads", [&](const Json& v) { cfg.threads = v.get<int>(); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = std::find_if(fields.begin(), fields.end(),
                                 [&](const auto& f) { return f.first == key; });
    if (it == fields.end()) throw ValidationError("config: unknown key '" + key + "'");
    if (given("--" + key)) continue;
    try {
      it->second(value);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"analyze", "decompose2",    "recover", "project",
                                              "estimate-band", "predict", "multistep"};
  return names;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  std::string config_path;
  CLI::App app{"Pathwise randomness, band-limited projection and prediction of sequences",
               "pathnoise"};
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--input", cfg.input, "Sequence CSV (t,re,im)");
  app.add_option("--out", cfg.out, "Output directory");
  app.add_option("--config", config_path, "JSON config mirroring the flags; flags win");
  app.add_option("--grid", cfg.grid, "Spectrum grid size N");
  app.add_option("--band", cfg.band, "Band as <center>,<half_width>")->delimiter(',')->expected(2);
  app.add_option("--coeffs", cfg.coeffs, "Coefficient range K");
  app.add_option("--horizon-T", cfg.horizon_T, "Projector time horizon T");
  app.add_option("--reg", cfg.reg, "Tikhonov regularization lambda");
  app.add_option("--eps", cfg.eps, "Arc radius epsilon for the noise split");
  app.add_option("--nu", cfg.nu, "Spectral gap bound nu in (0, 2 pi)");
  app.add_option("--taps", cfg.taps, "Predictor length L");
  app.add_option("--horizon", cfg.horizon, "Extrapolation / prediction horizon H");
  app.add_option("--max-steps", cfg.max_steps, "Multistep budget");
  app.add_option("--stop-tol", cfg.stop_tol, "Relative zero-residual tolerance");
  app.add_option("--decrease-tol", cfg.decrease_tol, "Relative zero-decrease tolerance");
  app.add_option("--tau-split", cfg.tau_split, "Last time used for band estimation");
  app.add_option("--window", cfg.window, "Band-estimation window length");
  app.add_option("--m", cfg.m, "Time index of the missing sample");
  app.add_option("--omega0", cfg.omega0, "Class frequency for recovery (with --sigma)");
  app.add_option("--sigma", cfg.sigma, "Class sigma for recovery (with --omega0)");
  app.add_option("--threads", cfg.threads, "OpenMP threads (0: runtime default)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }
  if (!config_path.empty()) merge_config(config_path, cfg, app);
  if (cfg.input.empty()) throw ValidationError("--input is required");
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    fs::create_directories(cfg.out);
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "decompose2") return cmd_decompose2(cfg);
    if (cfg.command == "recover") return cmd_recover(cfg);
    if (cfg.command == "project") return cmd_project(cfg);
    if (cfg.command == "estimate-band") return cmd_estimate_band(cfg, err);
    if (cfg.command == "predict") return cmd_predict(cfg);
    if (cfg.command == "multistep") return cmd_multistep(cfg);
    throw ValidationError("unknown command '" + cfg.command + "'");
  } catch (const ValidationError& e) {
    err << "error code=" << kValidation << " kind=validation message=" << quoted(e.what()) << '\n';
    return kValidation;
  } catch (const NumericalError& e) {
    err << "error code=" << kNumerical << " kind=numerical message=" << quoted(e.what()) << '\n';
    return kNumerical;
  } catch (const AmbiguousBandError& e) {
    err << "error code=" << kAmbiguous << " kind=ambiguous message=" << quoted(e.what()) << '\n';
    return kAmbiguous;
  } catch (const fs::filesystem_error& e) {
    err << "error code=" << kValidation << " kind=validation message=" << quoted(e.what()) << '\n';
    return kValidation;
  }
}

}  // namespace pathnoise::cli
