#include "barbell/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "barbell/graph.hpp"

namespace barbell {

SingleStageResult run_single_stage(const BarbellParams& params, double t_max,
                                   int n_samples) {
  return SingleStageResult{
      sample_series(params, t_max, n_samples),
      find_first_peak(params, Observable::MarkedVertex, t_max)};
}

TwoStageResult run_two_stage(int n_vertices, double stage2_weight,
                             std::optional<double> override_switch_time,
                             double t_max, int n_samples) {
  const double gamma = critical_gamma(n_vertices);
  const BarbellParams stage1 = validate_params(
      n_vertices, n_vertices / 2.0, gamma, WalkKind::Adjacency);
  const BarbellParams stage2 =
      validate_params(n_vertices, stage2_weight, gamma, WalkKind::Adjacency);

  const TwoStageSchedule schedule = two_stage_schedule(n_vertices);
  const double switch_time =
      override_switch_time.value_or(schedule.switch_time);
  if (t_max <= 0.0) t_max = 6.0 * std::sqrt(double(n_vertices));
  if (t_max <= switch_time) {
    t_max = switch_time + 2.5 * std::sqrt(double(n_vertices));
  }

  const EigenSystem eig1 = eigendecompose(build_search_hamiltonian(stage1));
  const EigenSystem eig2 = eigendecompose(build_search_hamiltonian(stage2));
  const Vector psi0 = build_initial_state(stage1);
  const Vector psi_switch = evolve(eig1, psi0, switch_time);

  // Uniform grid with the seam time inserted exactly.
  std::vector<double> times;
  times.reserve(n_samples + 1);
  const double step = t_max / (n_samples - 1);
  bool seam_inserted = false;
  for (int i = 0; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? t_max : i * step;
    if (!seam_inserted && t >= switch_time) {
      if (t > switch_time) times.push_back(switch_time);
      seam_inserted = true;
    }
    times.push_back(t);
  }
  if (!seam_inserted) times.push_back(switch_time);

  TimeSeries series;
  series.resize(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const Vector psi = t <= switch_time
                           ? evolve(eig1, psi0, t)
                           : evolve(eig2, psi_switch, t - switch_time);
    series.set_row(i, t, probabilities(psi, stage1));
  }

  const auto marked = [&](double delta_t) {
    return std::norm(evolve(eig2, psi_switch, delta_t)(0));
  };
  const double tolerance = 1e-6 * std::sqrt(double(n_vertices));
  const auto [delta_star, p_star] =
      find_tallest_peak_of(marked, t_max - switch_time, tolerance);

  return TwoStageResult{
      switch_time, std::move(series),
      PeakResult{switch_time + delta_star, p_star, Observable::MarkedVertex},
      schedule};
}

namespace {

SweepResult sweep_impl(int n_vertices, WalkKind kind,
                       std::vector<double> weights, int n_samples,
                       bool parallel) {
  std::sort(weights.begin(), weights.end());
  const double gamma = critical_gamma(n_vertices);
  const double t_max = 6.0 * std::sqrt(double(n_vertices));

  SweepResult result;
  result.rows.resize(weights.size());
  result.curves.resize(weights.size());

  const auto n_rows = static_cast<std::ptrdiff_t>(weights.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
    const BarbellParams params =
        validate_params(n_vertices, weights[i], gamma, kind);
    result.curves[i] = sample_series_serial(params, t_max, n_samples);
    result.rows[i] =
        SweepRow{weights[i],
                 find_first_peak(params, Observable::MarkedVertex, t_max),
                 static_cast<std::size_t>(i)};
  }
  return result;
}

}  // namespace

SweepResult sweep_weights(int n_vertices, WalkKind kind,
                          std::vector<double> weights, int n_samples) {
  return sweep_impl(n_vertices, kind, std::move(weights), n_samples, true);
}

SweepResult sweep_weights_serial(int n_vertices, WalkKind kind,
                                 std::vector<double> weights, int n_samples) {
  return sweep_impl(n_vertices, kind, std::move(weights), n_samples, false);
}

int default_fullspace_cap() {
  if (const char* env = std::getenv("BARBELL_FULLSPACE_CAP")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1024;
}

double oracle_crosscheck(int n_vertices, double w, WalkKind kind, int n_times,
                         std::optional<int> cap) {
  const int effective_cap = cap.value_or(default_fullspace_cap());
  if (n_vertices > effective_cap) {
    throw Error(ErrorCode::CapExceeded,
                "N=" + std::to_string(n_vertices) +
                    " exceeds the full-space cap " +
                    std::to_string(effective_cap));
  }
  const BarbellParams params =
      validate_params(n_vertices, w, critical_gamma(n_vertices), kind);

  const EigenSystem eig_sub = eigendecompose(build_search_hamiltonian(params));
  const Vector psi0_sub = build_initial_state(params);
  const EigenSystem eig_full =
      eigendecompose(build_fullspace_hamiltonian(params));
  const Vector psi0_full = fullspace_uniform_state(n_vertices);

  const int half = n_vertices / 2;
  const double t_max = 5.0 * std::sqrt(double(n_vertices));

  double deviation = 0.0;
#pragma omp parallel for schedule(static) reduction(max : deviation)
  for (int i = 0; i < n_times; ++i) {
    const double t = t_max * i / (n_times - 1);
    const Vector psi_sub = evolve(eig_sub, psi0_sub, t);
    const Vector psi_full = evolve(eig_full, psi0_full, t);

    std::array<double, 5> by_type{};
    by_type[0] = std::norm(psi_full(0));
    by_type[2] = std::norm(psi_full(1));
    for (int v = 2; v < half; ++v) by_type[1] += std::norm(psi_full(v));
    by_type[3] = std::norm(psi_full(half));
    for (int v = half + 1; v < n_vertices; ++v)
      by_type[4] += std::norm(psi_full(v));

    for (int k = 0; k < 5; ++k) {
      deviation =
          std::max(deviation, std::abs(by_type[k] - std::norm(psi_sub(k))));
    }
  }
  return deviation;
}

}  // namespace barbell
