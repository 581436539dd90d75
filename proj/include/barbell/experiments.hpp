#ifndef BARBELL_EXPERIMENTS_HPP
#define BARBELL_EXPERIMENTS_HPP

#include <optional>
#include <vector>

#include "barbell/asymptotics.hpp"
#include "barbell/propagator.hpp"
#include "barbell/types.hpp"

namespace barbell {

struct SingleStageResult {
  TimeSeries series;
  PeakResult peak;  // first marked-vertex maximum
};

SingleStageResult run_single_stage(const BarbellParams& params, double t_max,
                                   int n_samples = 1201);

/// Two-stage run: resonant walk (w = N/2, gamma = 2/N) until the marked-clique
/// peak at t' = clique_peak_x*sqrt(N) (or the override), then the Hamiltonian
/// switches to stage2_weight with the state carried across the seam.
struct TwoStageResult {
  double switch_time;
  TimeSeries series;      // spans both stages; contains the seam time exactly
  PeakResult final_peak;  // first stage-2 marked-vertex maximum, absolute time
  TwoStageSchedule schedule;
};

TwoStageResult run_two_stage(int n_vertices, double stage2_weight = 1.0,
                             std::optional<double> override_switch_time = {},
                             double t_max = 0.0,  // 0 -> 6*sqrt(N)
                             int n_samples = 1201);

struct SweepRow {
  double w;
  PeakResult peak;       // first marked-vertex maximum over (0, 6*sqrt(N)]
  std::size_t curve_id;  // index into SweepResult::curves
};

struct SweepResult {
  std::vector<SweepRow> rows;       // sorted by w
  std::vector<TimeSeries> curves;   // one per row
};

/// Rows are independent; the default variant distributes them over OpenMP
/// threads, the serial variant is the reference. Results are identical.
SweepResult sweep_weights(int n_vertices, WalkKind kind,
                          std::vector<double> weights, int n_samples = 1201);
SweepResult sweep_weights_serial(int n_vertices, WalkKind kind,
                                 std::vector<double> weights,
                                 int n_samples = 1201);

/// Default cap on full-space sizes for the brute-force comparison; the
/// BARBELL_FULLSPACE_CAP environment variable overrides it.
int default_fullspace_cap();

/// Evolves the uniform state in the full N-dimensional space, sums the
/// probabilities by vertex type, and returns the maximum absolute deviation
/// from the 5D model over n_times uniform samples of [0, 5*sqrt(N)].
double oracle_crosscheck(int n_vertices, double w, WalkKind kind, int n_times,
                         std::optional<int> cap = {});

}  // namespace barbell

#endif  // BARBELL_EXPERIMENTS_HPP
