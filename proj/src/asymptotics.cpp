#include "barbell/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace barbell {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
const double kFreqPlus = std::sqrt(2.0 + kSqrt2);   // sqrt(2+sqrt2)
const double kFreqMinus = std::sqrt(2.0 - kSqrt2);  // sqrt(2-sqrt2)

// Scaled amplitudes at resonance as functions of x = t/sqrt(N); the system
// size drops out entirely.
struct ScaledAmplitudes {
  double a_imag;  // amplitude on |a> is i * a_imag
  double b;
  double cd_imag;  // amplitude on |cd> is i * cd_imag
  double e;
};

ScaledAmplitudes scaled_amplitudes(double x) {
  const double sp = std::sin(kFreqPlus * x);
  const double sm = std::sin(kFreqMinus * x);
  const double cp = std::cos(kFreqPlus * x);
  const double cm = std::cos(kFreqMinus * x);
  const double norm = 1.0 / (2.0 * kSqrt2);
  return ScaledAmplitudes{
      norm * (kFreqPlus * sp - kFreqMinus * sm),
      norm * ((1.0 + kSqrt2) * cp + (1.0 - kSqrt2) * cm),
      norm * (kFreqPlus * sp + kFreqMinus * sm),
      norm * (cp + cm),
  };
}

double scaled_marked_probability(double x) {
  const auto amp = scaled_amplitudes(x);
  return amp.a_imag * amp.a_imag;
}

double scaled_clique_probability(double x) {
  const auto amp = scaled_amplitudes(x);
  // p_a + p_b + p_c, with |cd> contributing half its weight to c
  return amp.a_imag * amp.a_imag + amp.b * amp.b +
         0.5 * amp.cd_imag * amp.cd_imag;
}

// All roots of f on (0, x_max], located by sign-change bracketing on a
// uniform grid and polished by bisection to an interval below 1e-10.
std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    double x_max) {
  constexpr double kGridStep = 1e-3;
  constexpr double kBisectTolerance = 1e-10;
  std::vector<double> roots;
  double x_prev = kGridStep;
  double f_prev = f(x_prev);
  for (double x = 2.0 * kGridStep; x <= x_max + 0.5 * kGridStep;
       x += kGridStep) {
    const double fx = f(x);
    if (f_prev == 0.0) {
      roots.push_back(x_prev);
    } else if (f_prev * fx < 0.0) {
      double lo = x_prev, hi = x, f_lo = f_prev;
      while (hi - lo > kBisectTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_lo * f_mid <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          f_lo = f_mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

double best_root(const std::function<double(double)>& equation,
                 const std::function<double(double)>& objective) {
  const auto roots = bracketed_roots(equation, 8.0);
  double best_x = 0.0;
  double best_value = -1.0;
  for (const double root : roots) {
    const double value = objective(root);
    if (value > best_value) {
      best_value = value;
      best_x = root;
    }
  }
  return best_x;
}

ScheduleConstants compute_schedule_constants() {
  ScheduleConstants c{};
  c.single_peak_x = solve_single_peak_constant();
  c.clique_peak_x = solve_clique_peak_constant();
  c.single_peak_p = scaled_marked_probability(c.single_peak_x);

  // Expansion of the switch-time state over the second-stage eigenvectors
  // (|a>+|b>)/sqrt2, (-|a>+|b>)/sqrt2, |e>.
  const auto amp = scaled_amplitudes(c.clique_peak_x);
  const Complex c1 = (Complex(0.0, amp.a_imag) + amp.b) / kSqrt2;
  c.boundary_phase = -std::arg(c1);
  c.two_stage_p = 2.0 * std::norm(c1);
  c.second_stage_x =
      (std::numbers::pi / 2.0 + c.boundary_phase) / kSqrt2;
  c.total_x = c.clique_peak_x + c.second_stage_x;
  return c;
}

}  // namespace

std::array<double, 5> unweighted_probabilities(int n_vertices, double t) {
  const double phase = std::sqrt(2.0 / n_vertices) * t;
  const double s = std::sin(phase);
  const double c = std::cos(phase);
  return {0.5 * s * s, 0.5 * c * c, 0.0, 0.0, 0.5};
}

std::array<Complex, 4> resonant_amplitudes(int n_vertices, double t) {
  const auto amp = scaled_amplitudes(t / std::sqrt(double(n_vertices)));
  return {Complex(0.0, amp.a_imag), Complex(amp.b, 0.0),
          Complex(0.0, amp.cd_imag), Complex(amp.e, 0.0)};
}

std::array<double, 5> resonant_probabilities(int n_vertices, double t) {
  const auto amp = scaled_amplitudes(t / std::sqrt(double(n_vertices)));
  const double p_bridge = 0.5 * amp.cd_imag * amp.cd_imag;
  return {amp.a_imag * amp.a_imag, amp.b * amp.b, p_bridge, p_bridge,
          amp.e * amp.e};
}

double solve_single_peak_constant() {
  const auto equation = [](double x) {
    return (2.0 - kSqrt2) * std::cos(kFreqMinus * x) -
           (2.0 + kSqrt2) * std::cos(kFreqPlus * x);
  };
  return best_root(equation, scaled_marked_probability);
}

double solve_clique_peak_constant() {
  const auto equation = [](double x) {
    return kFreqMinus * std::sin(kFreqMinus * x) +
           kFreqPlus * std::sin(kFreqPlus * x);
  };
  return best_root(equation, scaled_clique_probability);
}

Vector stage_boundary_state(int n_vertices) {
  const auto amps = resonant_amplitudes(
      n_vertices,
      schedule_constants().clique_peak_x * std::sqrt(double(n_vertices)));
  Vector state(5);
  state << amps[0], amps[1], amps[2] / kSqrt2, amps[2] / kSqrt2, amps[3];
  return state;
}

std::array<double, 5> second_stage_probabilities(int n_vertices,
                                                 double delta_t) {
  const auto& constants = schedule_constants();
  const double angle =
      std::sqrt(2.0 / n_vertices) * delta_t - constants.boundary_phase;
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  const double tail = 1.0 - constants.two_stage_p;
  return {constants.two_stage_p * s * s, constants.two_stage_p * c * c, 0.0,
          0.0, tail};
}

const ScheduleConstants& schedule_constants() {
  static const ScheduleConstants constants = compute_schedule_constants();
  return constants;
}

TwoStageSchedule two_stage_schedule(int n_vertices) {
  const auto& constants = schedule_constants();
  const double scale = std::sqrt(double(n_vertices));
  return TwoStageSchedule{constants, constants.clique_peak_x * scale,
                          constants.second_stage_x * scale,
                          constants.total_x * scale};
}

LaplacianBaseline laplacian_baseline(int n_vertices) {
  const double scale = std::sqrt(double(n_vertices));
  const double t_star = std::numbers::pi * scale / (2.0 * kSqrt2);
  return LaplacianBaseline{t_star, 0.5, 2.0 * t_star};
}

}  // namespace barbell
