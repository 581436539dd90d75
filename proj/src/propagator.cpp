#include "barbell/propagator.hpp"

#include <cmath>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "barbell/graph.hpp"

namespace barbell {

namespace {

// Small systems go through Eigen; larger ones through LAPACK's divide and
// conquer driver, which is several times faster at N ~ 1000.
constexpr int kLapackThreshold = 16;

void fix_phases(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double mag = std::abs(vectors(i, j));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best > 0.0) {
      vectors.col(j) *= std::conj(vectors(pivot, j)) / best;
    }
  }
}

}  // namespace

EigenSystem eigendecompose(const Matrix& hamiltonian) {
  const int n = static_cast<int>(hamiltonian.rows());
  EigenSystem result;

  if (n <= kLapackThreshold) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "eigensolver failed to converge (n=" + std::to_string(n) +
                      ")");
    }
    result.eigenvalues = solver.eigenvalues();
    result.eigenvectors = solver.eigenvectors();
  } else {
    result.eigenvectors = hamiltonian;
    result.eigenvalues.resize(n);
    const int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', n,
        reinterpret_cast<lapack_complex_double*>(result.eigenvectors.data()),
        n, result.eigenvalues.data());
    if (info != 0) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "zheevd failed with info=" + std::to_string(info));
    }
  }

  fix_phases(result.eigenvectors);
  return result;
}

Vector evolve(const EigenSystem& eigsys, const Vector& psi0, double t) {
  if (psi0.size() != eigsys.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state dimension " + std::to_string(psi0.size()) +
                    " does not match eigensystem dimension " +
                    std::to_string(eigsys.dimension()));
  }
  Vector coeffs = eigsys.eigenvectors.adjoint() * psi0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(Complex(0.0, -eigsys.eigenvalues(k) * t));
  }
  return eigsys.eigenvectors * coeffs;
}

TypeProbabilities probabilities(const Vector& state,
                                const BarbellParams& params) {
  const auto counts = multiplicities(params).as_array();
  TypeProbabilities p{};
  for (int i = 0; i < 5; ++i) {
    p.aggregate[i] = std::norm(state(i));
    p.per_vertex[i] = p.aggregate[i] / counts[i];
  }
  p.clique = p.aggregate[0] + p.aggregate[1] + p.aggregate[2];
  return p;
}

void TimeSeries::resize(std::size_t n) {
  times.resize(n);
  clique.resize(n);
  for (auto& column : aggregate) column.resize(n);
  for (auto& column : per_vertex) column.resize(n);
}

void TimeSeries::set_row(std::size_t i, double t, const TypeProbabilities& p) {
  times[i] = t;
  clique[i] = p.clique;
  for (int k = 0; k < 5; ++k) {
    aggregate[k][i] = p.aggregate[k];
    per_vertex[k][i] = p.per_vertex[k];
  }
}

namespace {

TimeSeries sample_series_impl(const BarbellParams& params, double t_max,
                              int n_samples, bool parallel) {
  const EigenSystem eigsys = eigendecompose(build_search_hamiltonian(params));
  const Vector psi0 = build_initial_state(params);
  const double step = t_max / (n_samples - 1);

  TimeSeries series;
  series.resize(static_cast<std::size_t>(n_samples));

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? t_max : i * step;
    series.set_row(i, t, probabilities(evolve(eigsys, psi0, t), params));
  }
  return series;
}

}  // namespace

TimeSeries sample_series(const BarbellParams& params, double t_max,
                         int n_samples) {
  return sample_series_impl(params, t_max, n_samples, true);
}

TimeSeries sample_series_serial(const BarbellParams& params, double t_max,
                                int n_samples) {
  return sample_series_impl(params, t_max, n_samples, false);
}

namespace {

constexpr int kScanSamples = 2000;
constexpr double kPeakProminence = 1e-6;
const double kInvGolden = (std::sqrt(5.0) - 1.0) / 2.0;

double golden_section_maximize(const std::function<double(double)>& f,
                               double lo, double hi, double tolerance) {
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<std::pair<double, double>> scan_peaks(
    const std::function<double(double)>& f, double t_max,
    double refine_tolerance) {
  const double step = t_max / kScanSamples;
  std::vector<double> values(kScanSamples + 1);
  for (int k = 0; k <= kScanSamples; ++k) values[k] = f(k * step);

  std::vector<std::pair<double, double>> peaks;
  for (int k = 1; k < kScanSamples; ++k) {
    const bool is_max = values[k] >= values[k - 1] && values[k] >= values[k + 1];
    const bool prominent =
        values[k] - std::min(values[k - 1], values[k + 1]) > kPeakProminence;
    if (is_max && prominent) {
      const double t_star = golden_section_maximize(
          f, (k - 1) * step, (k + 1) * step, refine_tolerance);
      peaks.emplace_back(t_star, f(t_star));
    }
  }
  return peaks;
}

std::pair<double, double> find_peak_of(const std::function<double(double)>& f,
                                       double t_max, double refine_tolerance,
                                       int peak_index) {
  const auto peaks = scan_peaks(f, t_max, refine_tolerance);
  if (peak_index < 0 || static_cast<std::size_t>(peak_index) >= peaks.size()) {
    throw Error(ErrorCode::NoPeakFound,
                "observable has no interior local maximum (index " +
                    std::to_string(peak_index) + ") over (0, " +
                    std::to_string(t_max) + "]");
  }
  return peaks[peak_index];
}

std::pair<double, double> find_tallest_peak_of(
    const std::function<double(double)>& f, double t_max,
    double refine_tolerance) {
  const auto peaks = scan_peaks(f, t_max, refine_tolerance);
  if (peaks.empty()) {
    throw Error(ErrorCode::NoPeakFound,
                "observable is monotone over (0, " + std::to_string(t_max) +
                    "]");
  }
  double tallest = 0.0;
  for (const auto& peak : peaks) tallest = std::max(tallest, peak.second);
  for (const auto& peak : peaks) {
    if (peak.second >= tallest - 1e-9) return peak;
  }
  return peaks.back();  // unreachable
}

namespace {

std::function<double(double)> observable_function(const EigenSystem& eigsys,
                                                  const Vector& psi0,
                                                  Observable observable) {
  return [&eigsys, psi0, observable](double t) {
    const Vector psi = evolve(eigsys, psi0, t);
    return observable == Observable::MarkedVertex
               ? std::norm(psi(0))
               : std::norm(psi(0)) + std::norm(psi(1)) + std::norm(psi(2));
  };
}

}  // namespace

PeakResult find_first_peak(const BarbellParams& params, Observable observable,
                           double t_hint_max) {
  const EigenSystem eigsys = eigendecompose(build_search_hamiltonian(params));
  const Vector psi0 = build_initial_state(params);
  const double tolerance = 1e-6 * std::sqrt(double(params.n_vertices));
  const auto [t_star, p_star] = find_tallest_peak_of(
      observable_function(eigsys, psi0, observable), t_hint_max, tolerance);
  return PeakResult{t_star, p_star, observable};
}

PeakResult find_peak(const BarbellParams& params, Observable observable,
                     double t_hint_max, int peak_index) {
  const EigenSystem eigsys = eigendecompose(build_search_hamiltonian(params));
  const Vector psi0 = build_initial_state(params);
  const double tolerance = 1e-6 * std::sqrt(double(params.n_vertices));
  const auto [t_star, p_star] =
      find_peak_of(observable_function(eigsys, psi0, observable), t_hint_max,
                   tolerance, peak_index);
  return PeakResult{t_star, p_star, observable};
}

}  // namespace barbell
