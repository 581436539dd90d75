// Acceptance suite: runs every headline criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "barbell/asymptotics.hpp"
#include "barbell/experiments.hpp"
#include "barbell/graph.hpp"
#include "barbell/perturbation.hpp"
#include "barbell/propagator.hpp"

using namespace barbell;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

BarbellParams make(int n, double w, WalkKind kind) {
  return validate_params(n, w, critical_gamma(n), kind);
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "  FAILED: " << what << "\n";
    }
  }
  void expect_near(double actual, double expected, double tolerance,
                   const std::string& what) {
    if (!(std::abs(actual - expected) <= tolerance)) {
      ok = false;
      detail << "  FAILED: " << what << " = " << actual << ", expected "
             << expected << " +- " << tolerance << "\n";
    }
  }
};

// 1. Laplacian invariance to w (N = 1024)
void criterion_1(Check& check) {
  const std::vector<double> weights{1, 256, 512, 768, 1024, 2048};
  std::vector<TimeSeries> curves;
  for (const double w : weights) {
    const auto params = make(1024, w, WalkKind::Laplacian);
    const auto peak = find_first_peak(params, Observable::MarkedVertex, 100.0);
    check.expect_near(peak.t_star, 35.54, 0.5,
                      "peak time at w=" + std::to_string(int(w)));
    check.expect_near(peak.p_star, 0.50, 0.02,
                      "peak probability at w=" + std::to_string(int(w)));
    curves.push_back(sample_series(params, 100.0, 501));
  }
  double pairwise = 0.0;
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b)
      for (std::size_t i = 0; i < curves[a].size(); ++i)
        pairwise = std::max(pairwise,
                            std::abs(curves[a].aggregate[0][i] -
                                     curves[b].aggregate[0][i]));
  check.expect(pairwise < 0.02, "max pairwise curve deviation " +
                                    std::to_string(pairwise) + " >= 0.02");
}

// 2. Adjacency resonance peaks at 0.820, independent of N
void criterion_2(Check& check) {
  const double x = 6.0;
  std::vector<double> heights;
  const std::vector<std::pair<int, std::pair<double, double>>> cases{
      {1024, {80.6, 0.5}}, {2048, {114.0, 0.7}}, {4096, {161.2, 1.0}}};
  for (const auto& [n, expected] : cases) {
    const auto params = make(n, n / 2.0, WalkKind::Adjacency);
    const auto peak = find_first_peak(params, Observable::MarkedVertex,
                                      x * std::sqrt(double(n)));
    check.expect_near(peak.t_star, expected.first, expected.second,
                      "resonant peak time at N=" + std::to_string(n));
    heights.push_back(peak.p_star);
  }
  check.expect_near(heights[0], 0.820, 0.005, "peak probability at N=1024");
  for (std::size_t i = 1; i < heights.size(); ++i)
    check.expect(std::abs(heights[i] - heights[0]) < 0.005,
                 "peak probabilities differ across N");
}

// 3. Marked-clique accumulation reaches 0.996 at 104.4 (N = 1024)
void criterion_3(Check& check) {
  const auto peak = find_first_peak(make(1024, 512, WalkKind::Adjacency),
                                    Observable::MarkedClique, 192.0);
  check.expect_near(peak.t_star, 104.4, 0.7, "clique peak time");
  check.expect_near(peak.p_star, 0.996, 0.003, "clique peak probability");
}

// 4. Two-stage algorithm reaches 0.996 at 4.610 sqrt(N)
void criterion_4(Check& check) {
  const std::vector<std::pair<int, std::pair<double, double>>> cases{
      {1024, {147.5, 1.0}}, {2048, {208.6, 1.5}}, {4096, {295.0, 2.0}}};
  for (const auto& [n, expected] : cases) {
    const auto result = run_two_stage(n);
    check.expect_near(result.final_peak.t_star, expected.first,
                      expected.second,
                      "two-stage total time at N=" + std::to_string(n));
    check.expect_near(result.final_peak.p_star, 0.996, 0.003,
                      "two-stage success at N=" + std::to_string(n));
  }
}

// 5. Transcendental constants
void criterion_5(Check& check) {
  const double single = solve_single_peak_constant();
  const double clique = solve_clique_peak_constant();
  check.expect_near(single, 2.518, 1e-3, "single-stage constant");
  check.expect_near(clique, 3.265, 1e-3, "clique constant");

  const double single_residual =
      std::abs((2.0 - kSqrt2) * std::cos(std::sqrt(2.0 - kSqrt2) * single) -
               (2.0 + kSqrt2) * std::cos(std::sqrt(2.0 + kSqrt2) * single));
  const double clique_residual =
      std::abs(std::sqrt(2.0 - kSqrt2) * std::sin(std::sqrt(2.0 - kSqrt2) * clique) +
               std::sqrt(2.0 + kSqrt2) * std::sin(std::sqrt(2.0 + kSqrt2) * clique));
  check.expect(single_residual < 1e-9, "single-stage equation residual");
  check.expect(clique_residual < 1e-9, "clique equation residual");

  const auto& constants = schedule_constants();
  check.expect_near(constants.second_stage_x, 1.345, 1e-3,
                    "second-stage constant");
  check.expect_near(constants.total_x, 4.610, 1e-3, "total constant");
}

// 6. Stage-boundary state and its eigenbasis expansion
void criterion_6(Check& check) {
  const Vector state = stage_boundary_state(1024);
  check.expect(std::abs(state(0) - Complex(0.0, -0.324)) < 2e-3,
               "amplitude on the marked vertex");
  check.expect(std::abs(state(1) - Complex(0.944)) < 2e-3, "amplitude on b");
  check.expect(std::abs(state(2)) < 2e-3, "amplitude on c");
  check.expect(std::abs(state(3)) < 2e-3, "amplitude on d");
  check.expect(std::abs(state(4) - Complex(0.060)) < 2e-3, "amplitude on e");

  const Complex c1 = (state(0) + state(1)) / kSqrt2;
  const Complex c2 = (-state(0) + state(1)) / kSqrt2;
  check.expect(std::abs(std::abs(c1) - 0.706) < 2e-3, "psi1 coefficient");
  check.expect(std::abs(std::abs(c2) - 0.706) < 2e-3, "psi2 coefficient");
  check.expect(std::abs(std::arg(c1) - (-0.331)) < 2e-3, "psi1 phase");
  check.expect(std::abs(std::arg(c2) - 0.331) < 2e-3, "psi2 phase");
  check.expect(std::abs(std::abs(state(4)) - 0.060) < 2e-3,
               "psi3 coefficient");
}

// 7. Full-space oracle equivalence
void criterion_7(Check& check, double& n1024_seconds) {
  n1024_seconds = 0.0;
  for (const int n : {64, 256, 1024}) {
    const auto start = std::chrono::steady_clock::now();
    for (const WalkKind kind : {WalkKind::Laplacian, WalkKind::Adjacency}) {
      for (const double w :
           {1.0, n / 4.0, n / 2.0, 2.0 * n}) {
        const double deviation = oracle_crosscheck(n, w, kind, 50, 4096);
        check.expect(deviation < 1e-8,
                     "deviation " + std::to_string(deviation) + " at N=" +
                         std::to_string(n) + ", w=" + std::to_string(w) +
                         ", " + to_string(kind));
      }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (n == 1024) n1024_seconds = elapsed;
  }
}

// 8. Perturbation validation
void criterion_8(Check& check) {
  // printed effective matrices, entrywise
  const double s = std::sqrt(2.0 / 1024);
  const double u = 1.0 / 32.0;

  const auto lap = make(1024, 1, WalkKind::Laplacian);
  const auto lap_split = split_hamiltonian(lap, Regime::LaplacianSmall);
  const Matrix lap_effective = effective_degenerate_matrix(
      lap_split.h0, lap_split.h1,
      degenerate_marked_subset(Regime::LaplacianSmall, lap));
  Matrix lap_expected = Matrix::Zero(3, 3);
  lap_expected(0, 1) = lap_expected(1, 0) = -s;
  check.expect((lap_effective - lap_expected).cwiseAbs().maxCoeff() < 1e-12,
               "3x3 effective matrix mismatch");

  const auto res = make(1024, 512, WalkKind::Adjacency);
  const auto res_split = split_hamiltonian(res, Regime::AdjacencyResonant);
  const Matrix res_effective = effective_degenerate_matrix(
      res_split.h0, res_split.h1,
      degenerate_marked_subset(Regime::AdjacencyResonant, res));
  Matrix res_expected = -Matrix::Identity(4, 4);
  res_expected(0, 1) = res_expected(1, 0) = -s;
  res_expected(1, 2) = res_expected(2, 1) = -u;
  res_expected(2, 3) = res_expected(3, 2) = -u;
  check.expect((res_effective - res_expected).cwiseAbs().maxCoeff() < 1e-12,
               "4x4 effective matrix mismatch");

  // closed forms track the exact 5x5 spectrum; doubling N at least halves
  // the error (within the stated 50% slack). The resonant case follows the
  // expected ~2.4/N; the unweighted laplacian case converges faster (4/N^2).
  for (const auto& [regime, kind, resonant] :
       std::vector<std::tuple<Regime, WalkKind, bool>>{
           {Regime::LaplacianSmall, WalkKind::Laplacian, false},
           {Regime::AdjacencyResonant, WalkKind::Adjacency, true}}) {
    double previous = 0.0;
    for (const int n : {4096, 8192}) {
      const double w = resonant ? n / 2.0 : 1.0;
      const auto report = verify_regime(regime, make(n, w, kind));
      check.expect(report.exact_eigenvalue_dev < 5.0 / n,
                   std::string(to_string(regime)) + " exact deviation " +
                       std::to_string(report.exact_eigenvalue_dev) +
                       " at N=" + std::to_string(n));
      if (previous > 0.0) {
        const double ratio = report.exact_eigenvalue_dev / previous;
        check.expect(ratio < 0.5 * 1.5,
                     std::string(to_string(regime)) +
                         " error ratio on doubling N: " +
                         std::to_string(ratio));
      }
      previous = report.exact_eigenvalue_dev;
    }
  }
}

// 9. Unitarity across randomized draws
void criterion_9(Check& check) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> half_n(3, 2048);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 10000; ++draw) {
    const int n = 2 * half_n(rng);
    const double w = 2.0 * n * unit(rng);
    const double gamma = (4.0 / n) * (1e-3 + 0.999 * unit(rng));
    const WalkKind kind = unit(rng) < 0.5 ? WalkKind::Laplacian
                                          : WalkKind::Adjacency;
    const double t = 10.0 * std::sqrt(double(n)) * unit(rng);
    const auto params = validate_params(n, w, gamma, kind);
    const EigenSystem sys = eigendecompose(build_search_hamiltonian(params));
    const Vector psi = evolve(sys, build_initial_state(params), t);
    worst = std::max(worst, std::abs(psi.norm() - 1.0));
  }
  check.expect(worst < 1e-10, "worst norm drift " + std::to_string(worst));
}

// 10. Transition scan around the resonant weight. The second (resonance)
// maximum lives between the unweighted walk's first maximum at 1.11 sqrt(N)
// and its first recurrence at 3.33 sqrt(N); at the wings of the scan it
// flattens out and disappears as a local maximum.
std::optional<double> resonance_feature_height(double w) {
  const auto params = make(1024, w, WalkKind::Adjacency);
  const EigenSystem sys = eigendecompose(build_search_hamiltonian(params));
  const Vector psi0 = build_initial_state(params);
  const auto marked = [&](double t) { return std::norm(evolve(sys, psi0, t)(0)); };
  std::optional<double> height;
  for (const auto& [t, p] : scan_peaks(marked, 192.0, 1e-6 * 32.0)) {
    if (t > 1.3 * 32.0 && t < 3.1 * 32.0) {
      height = std::max(height.value_or(0.0), p);
    }
  }
  return height;
}

void criterion_10(Check& check) {
  const std::vector<double> weights{430, 460, 477, 484, 498, 512,
                                    522, 532, 542, 552, 562, 576,
                                    590, 615, 710};
  std::vector<std::optional<double>> heights;
  for (const double w : weights) heights.push_back(resonance_feature_height(w));

  const std::size_t resonant_index = 5;  // w = 512
  check.expect(heights[resonant_index].has_value(),
               "no resonance maximum at w=512");
  if (heights[resonant_index]) {
    check.expect_near(*heights[resonant_index], 0.820, 0.005,
                      "resonance maximum at w=512");
    for (const auto& height : heights) {
      check.expect(!height || *height <= *heights[resonant_index],
                   "resonance maximum exceeds the w=512 height");
    }
  }

  for (std::size_t i = 0; i + 1 < heights.size(); ++i) {
    if (!heights[i] || !heights[i + 1]) continue;
    const bool rising = i < resonant_index;
    check.expect(rising ? *heights[i + 1] > *heights[i]
                        : *heights[i + 1] < *heights[i],
                 "second maximum not " +
                     std::string(rising ? "rising" : "falling") +
                     " between w=" + std::to_string(weights[i]) + " and w=" +
                     std::to_string(weights[i + 1]));
  }

  // the feature spans the transition core and has melted away at the wings
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const bool core = weights[i] >= 477 && weights[i] <= 552;
    if (core) {
      check.expect(heights[i].has_value(),
                   "missing resonance maximum at w=" +
                       std::to_string(weights[i]));
    }
  }
  check.expect(!heights.front().has_value(),
               "unexpected resonance maximum at w=430");
  check.expect(!heights.back().has_value(),
               "unexpected resonance maximum at w=710");
}

struct Criterion {
  int id;
  const char* name;
  double time_budget;  // seconds; 0 = unlimited
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  double n1024_seconds = 0.0;
  const std::vector<Criterion> criteria{
      {1, "Laplacian invariance to w (N=1024)", 5.0, criterion_1},
      {2, "adjacency resonance at w=N/2", 5.0, criterion_2},
      {3, "marked-clique accumulation", 0.0, criterion_3},
      {4, "two-stage algorithm", 0.0, criterion_4},
      {5, "transcendental constants", 0.0, criterion_5},
      {6, "stage-boundary state", 0.0, criterion_6},
      {7, "full-space oracle equivalence", 0.0,
       [&n1024_seconds](Check& check) { criterion_7(check, n1024_seconds); }},
      {8, "perturbation validation", 0.0, criterion_8},
      {9, "unitarity property suite", 0.0, criterion_9},
      {10, "transition scan", 0.0, criterion_10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(check);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.time_budget > 0.0 && elapsed >= criterion.time_budget) {
      check.ok = false;
      check.detail << "  FAILED: runtime " << elapsed << " s exceeds budget "
                   << criterion.time_budget << " s\n";
    }
    if (criterion.id == 7 && n1024_seconds >= 60.0) {
      check.ok = false;
      check.detail << "  FAILED: N=1024 block took " << n1024_seconds
                   << " s (budget 60 s)\n";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)\n",
                check.ok ? "PASS" : "FAIL", criterion.id, criterion.name,
                elapsed);
    if (!check.ok) {
      std::fputs(check.detail.str().c_str(), stdout);
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
