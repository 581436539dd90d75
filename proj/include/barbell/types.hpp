#ifndef BARBELL_TYPES_HPP
#define BARBELL_TYPES_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace barbell {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Which generator drives the walk: H = -gamma*(A - D) + V or H = -gamma*A + V.
enum class WalkKind { Laplacian, Adjacency };

const char* to_string(WalkKind kind);

enum class ErrorCode {
  OddN,
  NTooSmall,
  NegativeWeight,
  NonPositiveGamma,
  BadMarkedIndex,
  DimensionMismatch,
  ConvergenceFailure,
  NotDegenerate,
  RegimeMismatch,
  NoPeakFound,
  CapExceeded,
  IoError,
  UsageError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One barbell instance: two cliques of n/2 vertices joined by a single
/// bridge edge of weight w, searched at jumping rate gamma.
struct BarbellParams {
  int n_vertices = 0;
  double bridge_weight = 0.0;
  double gamma = 0.0;
  WalkKind kind = WalkKind::Laplacian;
};

/// Critical jumping rate 2/N at which the search couples.
inline double critical_gamma(int n_vertices) { return 2.0 / n_vertices; }

/// Checks N even and >= 6, w >= 0, gamma > 0. Throws Error on violation.
BarbellParams validate_params(int n_vertices, double bridge_weight,
                              double gamma, WalkKind kind);

/// Vertex counts per type. Type order everywhere is (a, b, c, d, e):
/// a = marked vertex, b = rest of the marked clique, c/d = bridge endpoints,
/// e = rest of the unmarked clique.
struct Multiplicities {
  int a, b, c, d, e;

  std::array<int, 5> as_array() const { return {a, b, c, d, e}; }
  int total() const { return a + b + c + d + e; }
};

Multiplicities multiplicities(const BarbellParams& params);

/// Max |A - A^dagger| entry; zero for exactly Hermitian matrices.
double hermiticity_error(const Matrix& m);

}  // namespace barbell

#endif  // BARBELL_TYPES_HPP
