#include "barbell/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "barbell/asymptotics.hpp"
#include "barbell/csv.hpp"
#include "barbell/experiments.hpp"
#include "barbell/graph.hpp"
#include "barbell/svg.hpp"

namespace barbell {

double RunConfig::gamma() const { return gamma_flag.value_or(critical_gamma(n)); }

double RunConfig::resolved_t_max() const {
  return t_max > 0.0 ? t_max : 6.0 * std::sqrt(double(n));
}

int RunConfig::cap() const { return cap_flag.value_or(default_fullspace_cap()); }

namespace {

namespace fs = std::filesystem;

std::string fixed3(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, 3);
  return std::string(buffer, result.ptr);
}

const std::map<std::string, WalkKind> kKindMap{
    {"laplacian", WalkKind::Laplacian}, {"adjacency", WalkKind::Adjacency}};
const std::map<std::string, Observable> kObservableMap{
    {"vertex", Observable::MarkedVertex}, {"clique", Observable::MarkedClique}};

std::unique_ptr<CLI::App> build_app(RunConfig& config) {
  auto app = std::make_unique<CLI::App>(
      "Continuous-time quantum-walk search on weighted barbell graphs");
  app->require_subcommand(1);

  const auto add_instance_flags = [&](CLI::App* cmd, bool with_weight) {
    cmd->add_option("-n,--n", config.n, "number of vertices (even, >= 6)");
    if (with_weight) cmd->add_option("-w,--w", config.w, "bridge weight");
    cmd->add_option("--gamma", config.gamma_flag,
                    "jumping rate (default 2/N)");
    cmd->add_option("--kind", config.kind, "walk kind")
        ->transform(CLI::CheckedTransformer(kKindMap, CLI::ignore_case));
  };
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", config.out, "output basename");
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    cmd->add_option("--samples", config.n_samples, "series sample count")
        ->check(CLI::PositiveNumber);
  };

  auto* evolve = app->add_subcommand(
      "evolve", "sample per-type probabilities over time");
  add_instance_flags(evolve, true);
  evolve->add_option("--tmax", config.t_max, "time horizon (default 6 sqrt N)")
      ->check(CLI::PositiveNumber);
  add_output_flags(evolve);

  auto* peak =
      app->add_subcommand("peak", "locate the first probability maximum");
  add_instance_flags(peak, true);
  peak->add_option("--tmax", config.t_max, "scan horizon (default 6 sqrt N)")
      ->check(CLI::PositiveNumber);
  peak->add_option("--observable", config.observable,
                   "vertex (marked vertex) or clique (marked clique)")
      ->transform(CLI::CheckedTransformer(kObservableMap, CLI::ignore_case));

  auto* sweep = app->add_subcommand(
      "sweep", "first-peak data for a list of bridge weights");
  add_instance_flags(sweep, false);
  sweep->add_option("--weights", config.weights, "comma-separated weights")
      ->required()
      ->delimiter(',');
  add_output_flags(sweep);

  auto* two_stage = app->add_subcommand(
      "two-stage", "resonant first stage, then a switched bridge weight");
  two_stage->add_option("-n,--n", config.n, "number of vertices (even, >= 6)");
  two_stage->add_option("--stage2-w", config.stage2_w,
                        "bridge weight after the switch");
  two_stage->add_option("--switch-time", config.switch_time,
                        "override the analytic switch time")
      ->check(CLI::PositiveNumber);
  two_stage->add_flag("--numeric-switch", config.numeric_switch,
                      "switch at the numerically detected clique peak");
  two_stage->add_option("--tmax", config.t_max,
                        "time horizon (default 6 sqrt N)")
      ->check(CLI::PositiveNumber);
  add_output_flags(two_stage);

  app->add_subcommand("constants",
                      "print the schedule constants and baselines");

  auto* oracle = app->add_subcommand(
      "oracle-check", "full-space vs subspace per-type deviation");
  oracle->add_option("-n,--n", config.n, "number of vertices (even, >= 6)");
  oracle->add_option("-w,--w", config.w, "bridge weight");
  oracle->add_option("--kind", config.kind, "walk kind")
      ->transform(CLI::CheckedTransformer(kKindMap, CLI::ignore_case));
  oracle->add_option("--times", config.n_times, "number of sample times")
      ->check(CLI::Range(2, 100000));
  oracle->add_option("--cap", config.cap_flag,
                     "full-space size cap (overrides BARBELL_FULLSPACE_CAP)");

  auto* figure = app->add_subcommand(
      "figure", "reproduce a bundled reference figure (CSV + SVG)");
  figure->add_option("k", config.figure, "figure number")
      ->required()
      ->check(CLI::Range(4, 10));
  figure->add_option("--outdir", config.outdir, "output directory");

  for (auto* cmd : app->get_subcommands({})) {
    cmd->callback([&config, cmd] { config.subcommand = cmd->get_name(); });
  }
  return app;
}

// ---------------------------------------------------------------------------
// subcommand implementations
// ---------------------------------------------------------------------------

SvgCurve type_curve(const TimeSeries& series, int type, std::string label) {
  static const char* kNames[5] = {"a", "b", "c", "d", "e"};
  if (label.empty()) label = kNames[type];
  return SvgCurve{std::move(label), series.times, series.aggregate[type]};
}

SvgCurve clique_curve(const TimeSeries& series) {
  return SvgCurve{"a+b+c", series.times, series.clique};
}

SvgCurve marked_curve(const TimeSeries& series, std::string label) {
  return SvgCurve{std::move(label), series.times, series.aggregate[0]};
}

std::vector<SvgCurve> type_breakdown(const TimeSeries& series) {
  std::vector<SvgCurve> curves;
  for (int k = 0; k < 5; ++k) curves.push_back(type_curve(series, k, ""));
  curves.push_back(clique_curve(series));
  return curves;
}

void report_written(const fs::path& path) {
  std::cout << "wrote " << path.string() << "\n";
}

void write_outputs(const TimeSeries& series, const std::string& format,
                   const fs::path& base, std::vector<SvgCurve> curves,
                   SvgOptions options) {
  if (format != "svg") {
    emit_csv(series, base.string() + ".csv");
    report_written(base.string() + ".csv");
  }
  if (format != "csv") {
    emit_svg(curves, options, base.string() + ".svg");
    report_written(base.string() + ".svg");
  }
}

int cmd_evolve(const RunConfig& config) {
  const BarbellParams params =
      validate_params(config.n, config.w, config.gamma(), config.kind);
  const TimeSeries series =
      sample_series(params, config.resolved_t_max(), config.n_samples);
  SvgOptions options;
  options.title = std::string(to_string(config.kind)) +
                  " walk, N=" + std::to_string(config.n) +
                  ", w=" + format_number(config.w, 6);
  write_outputs(series, config.format, config.out, type_breakdown(series),
                options);
  return 0;
}

int cmd_peak(const RunConfig& config) {
  const BarbellParams params =
      validate_params(config.n, config.w, config.gamma(), config.kind);
  const PeakResult peak =
      find_first_peak(params, config.observable, config.resolved_t_max());
  std::cout << (config.observable == Observable::MarkedVertex
                    ? "marked-vertex"
                    : "marked-clique")
            << " peak: t = " << format_number(peak.t_star, 9)
            << ", p = " << format_number(peak.p_star, 9) << "\n";
  return 0;
}

int cmd_sweep(const RunConfig& config) {
  for (const double w : config.weights) {
    validate_params(config.n, w, config.gamma(), config.kind);
  }
  const SweepResult result =
      sweep_weights(config.n, config.kind, config.weights, config.n_samples);

  std::vector<SvgCurve> curves;
  for (const auto& row : result.rows) {
    const std::string suffix = "w" + format_number(row.w, 6);
    if (config.format != "svg") {
      const fs::path path = config.out + "_" + suffix + ".csv";
      emit_csv(result.curves[row.curve_id], path);
      report_written(path);
    }
    curves.push_back(
        marked_curve(result.curves[row.curve_id], "w=" + format_number(row.w, 6)));
    std::cout << "w = " << format_number(row.w, 6)
              << "  t* = " << format_number(row.peak.t_star, 9)
              << "  p* = " << format_number(row.peak.p_star, 9) << "\n";
  }
  if (config.format != "csv") {
    SvgOptions options;
    options.title = std::string(to_string(config.kind)) +
                    " walk, N=" + std::to_string(config.n);
    emit_svg(curves, options, config.out + ".svg");
    report_written(config.out + ".svg");
  }
  return 0;
}

int cmd_two_stage(const RunConfig& config) {
  validate_params(config.n, config.stage2_w, critical_gamma(config.n),
                  WalkKind::Adjacency);
  std::optional<double> switch_time = config.switch_time;
  if (config.numeric_switch && !switch_time) {
    const auto stage1 = validate_params(config.n, config.n / 2.0,
                                        critical_gamma(config.n),
                                        WalkKind::Adjacency);
    switch_time = find_first_peak(stage1, Observable::MarkedClique,
                                  config.resolved_t_max())
                      .t_star;
  }
  const TwoStageResult result =
      run_two_stage(config.n, config.stage2_w, switch_time, config.t_max,
                    config.n_samples);
  std::cout << "switch time t' = " << format_number(result.switch_time, 9)
            << "\nfinal peak: t = " << format_number(result.final_peak.t_star, 9)
            << ", p = " << format_number(result.final_peak.p_star, 9) << "\n";
  SvgOptions options;
  options.title = "two-stage search, N=" + std::to_string(config.n);
  options.vlines = {result.switch_time};
  write_outputs(result.series, config.format, config.out,
                type_breakdown(result.series), options);
  return 0;
}

int cmd_constants() {
  const auto& c = schedule_constants();
  const auto line = [](const char* name, double rounded, double precise) {
    std::cout << name << fixed3(rounded) << "  (" << format_number(precise, 9)
              << ")\n";
  };
  line("single-stage peak time / sqrt(N):  ", c.single_peak_x, c.single_peak_x);
  line("clique peak time / sqrt(N):        ", c.clique_peak_x, c.clique_peak_x);
  line("second stage time / sqrt(N):       ", c.second_stage_x,
       c.second_stage_x);
  line("two-stage total time / sqrt(N):    ", c.total_x, c.total_x);
  line("single-stage peak probability:     ", c.single_peak_p, c.single_peak_p);
  line("two-stage peak probability:        ", c.two_stage_p, c.two_stage_p);
  line("stage-boundary phase:              ", c.boundary_phase,
       c.boundary_phase);
  const auto baseline = laplacian_baseline(1024);
  std::cout << "unweighted baseline (N=1024):      t* = "
            << format_number(baseline.t_star, 6)
            << ", expected total / sqrt(N) = "
            << format_number(baseline.expected_total / 32.0, 6) << "\n";
  return 0;
}

int cmd_oracle_check(const RunConfig& config) {
  const double deviation = oracle_crosscheck(config.n, config.w, config.kind,
                                             config.n_times, config.cap());
  std::cout << "max per-type probability deviation over " << config.n_times
            << " times: " << format_number(deviation, 6) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// figures
// ---------------------------------------------------------------------------

constexpr int kFigureSamples = 1601;

void figure_weight_family(const fs::path& dir, const std::string& stem,
                          WalkKind kind, const std::vector<double>& weights,
                          double t_max, const std::string& title) {
  std::vector<SvgCurve> curves;
  for (const double w : weights) {
    const BarbellParams params =
        validate_params(1024, w, critical_gamma(1024), kind);
    const TimeSeries series = sample_series(params, t_max, kFigureSamples);
    const fs::path csv = dir / (stem + "_w" + format_number(w, 6) + ".csv");
    emit_csv(series, csv);
    report_written(csv);
    curves.push_back(marked_curve(series, "w=" + format_number(w, 6)));
  }
  SvgOptions options;
  options.title = title;
  const fs::path svg = dir / (stem + ".svg");
  emit_svg(curves, options, svg);
  report_written(svg);
}

const std::vector<double> kCoarseWeights{1, 256, 512, 768, 1024, 2048};

void figure_types(const fs::path& dir, const std::string& stem) {
  const BarbellParams params =
      validate_params(1024, 512.0, critical_gamma(1024), WalkKind::Adjacency);
  const TimeSeries series = sample_series(params, 200.0, kFigureSamples);
  emit_csv(series, dir / (stem + ".csv"));
  report_written(dir / (stem + ".csv"));
  emit_per_vertex_csv(series, dir / (stem + "_pervertex.csv"));
  report_written(dir / (stem + "_pervertex.csv"));
  SvgOptions options;
  options.title = "adjacency walk by vertex type, N=1024, w=512";
  emit_svg(type_breakdown(series), options, dir / (stem + ".svg"));
  report_written(dir / (stem + ".svg"));
}

void figure_two_stage(const fs::path& dir, const std::string& stem, int n) {
  const TwoStageResult result =
      run_two_stage(n, 1.0, {}, 0.0, kFigureSamples);
  emit_csv(result.series, dir / (stem + ".csv"));
  report_written(dir / (stem + ".csv"));
  SvgOptions options;
  options.title = "two-stage search, N=" + std::to_string(n);
  options.vlines = {result.switch_time};
  emit_svg(type_breakdown(result.series), options, dir / (stem + ".svg"));
  report_written(dir / (stem + ".svg"));
}

void figure_resonant_sizes(const fs::path& dir, const std::string& stem) {
  std::vector<SvgCurve> curves;
  for (const int n : {1024, 2048, 4096}) {
    const BarbellParams params =
        validate_params(n, n / 2.0, critical_gamma(n), WalkKind::Adjacency);
    const TimeSeries series =
        sample_series(params, 6.0 * std::sqrt(double(n)), kFigureSamples);
    const fs::path csv = dir / (stem + "_n" + std::to_string(n) + ".csv");
    emit_csv(series, csv);
    report_written(csv);
    curves.push_back(marked_curve(series, "N=" + std::to_string(n)));
  }
  SvgOptions options;
  options.title = "resonant adjacency walk, w=N/2";
  emit_svg(curves, options, dir / (stem + ".svg"));
  report_written(dir / (stem + ".svg"));
}

void figure_transition(const fs::path& dir) {
  const std::map<std::string, std::vector<double>> panels{
      {"figure9a", {430, 460, 477, 484, 498}},
      {"figure9b", {512, 522, 532, 542, 552}},
      {"figure9c", {562, 576, 590, 615, 710}},
  };
  const double t_max = 6.0 * std::sqrt(1024.0);
  for (const auto& [stem, weights] : panels) {
    figure_weight_family(dir, stem, WalkKind::Adjacency, weights, t_max,
                         "adjacency walk near resonance, N=1024");
  }
}

void figure_two_stage_sizes(const fs::path& dir, const std::string& stem) {
  std::vector<SvgCurve> curves;
  SvgOptions options;
  options.title = "two-stage search across sizes";
  for (const int n : {1024, 2048, 4096}) {
    const TwoStageResult result = run_two_stage(n, 1.0, {}, 0.0, kFigureSamples);
    const fs::path csv = dir / (stem + "_n" + std::to_string(n) + ".csv");
    emit_csv(result.series, csv);
    report_written(csv);
    curves.push_back(
        marked_curve(result.series, "N=" + std::to_string(n)));
    options.vlines.push_back(result.switch_time);
  }
  emit_svg(curves, options, dir / (stem + ".svg"));
  report_written(dir / (stem + ".svg"));
}

int cmd_figure(const RunConfig& config) {
  const fs::path dir = config.outdir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  switch (config.figure) {
    case 4:
      figure_weight_family(dir, "figure4", WalkKind::Laplacian, kCoarseWeights,
                           100.0, "Laplacian walk, N=1024");
      break;
    case 5:
      figure_weight_family(dir, "figure5", WalkKind::Adjacency, kCoarseWeights,
                           200.0, "adjacency walk, N=1024");
      break;
    case 6:
      figure_types(dir, "figure6");
      break;
    case 7:
      figure_two_stage(dir, "figure7", 1024);
      break;
    case 8:
      figure_resonant_sizes(dir, "figure8");
      break;
    case 9:
      figure_transition(dir);
      break;
    case 10:
      figure_two_stage_sizes(dir, "figure10");
      break;
    default:
      throw Error(ErrorCode::UsageError,
                  "figure number must be between 4 and 10");
  }
  return 0;
}

int dispatch(const RunConfig& config) {
  if (config.subcommand == "evolve") return cmd_evolve(config);
  if (config.subcommand == "peak") return cmd_peak(config);
  if (config.subcommand == "sweep") return cmd_sweep(config);
  if (config.subcommand == "two-stage") return cmd_two_stage(config);
  if (config.subcommand == "constants") return cmd_constants();
  if (config.subcommand == "oracle-check") return cmd_oracle_check(config);
  if (config.subcommand == "figure") return cmd_figure(config);
  throw Error(ErrorCode::UsageError, "missing subcommand");
}

void parse_into(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<const char*> argv{"barbell"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  app.parse(static_cast<int>(argv.size()), argv.data());
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::OddN:
    case ErrorCode::NTooSmall:
    case ErrorCode::NegativeWeight:
    case ErrorCode::NonPositiveGamma:
      return true;
    default:
      return false;
  }
}

}  // namespace

RunConfig parse_cli(const std::vector<std::string>& args) {
  RunConfig config;
  auto app = build_app(config);
  try {
    parse_into(*app, args);
  } catch (const CLI::ParseError& error) {
    throw Error(ErrorCode::UsageError, error.what());
  }
  // surface bad parameter values at parse time
  if (config.subcommand == "evolve" || config.subcommand == "peak" ||
      config.subcommand == "oracle-check") {
    validate_params(config.n, config.w, config.gamma(), config.kind);
  } else if (config.subcommand == "sweep") {
    for (const double w : config.weights)
      validate_params(config.n, w, config.gamma(), config.kind);
  } else if (config.subcommand == "two-stage") {
    validate_params(config.n, config.stage2_w, critical_gamma(config.n),
                    WalkKind::Adjacency);
  }
  return config;
}

int run_cli(const std::vector<std::string>& args) {
  RunConfig config;
  auto app = build_app(config);
  try {
    parse_into(*app, args);
    return dispatch(config);
  } catch (const CLI::CallForHelp& help) {
    return app->exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 1;
  } catch (const Error& error) {
    std::cerr << to_string(error.code()) << ": " << error.what() << "\n";
    return is_usage_error(error.code()) ? 1 : 2;
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
}

}  // namespace barbell
