#include "barbell/types.hpp"

namespace barbell {

const char* to_string(WalkKind kind) {
  return kind == WalkKind::Laplacian ? "laplacian" : "adjacency";
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorCode::BadMarkedIndex: return "BadMarkedIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::NoPeakFound: return "NoPeakFound";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

BarbellParams validate_params(int n_vertices, double bridge_weight,
                              double gamma, WalkKind kind) {
  if (n_vertices % 2 != 0) {
    throw Error(ErrorCode::OddN,
                "n_vertices must be even, got " + std::to_string(n_vertices));
  }
  if (n_vertices < 6) {
    throw Error(ErrorCode::NTooSmall,
                "n_vertices must be at least 6, got " +
                    std::to_string(n_vertices));
  }
  if (bridge_weight < 0.0) {
    throw Error(ErrorCode::NegativeWeight,
                "bridge_weight must be non-negative, got " +
                    std::to_string(bridge_weight));
  }
  if (!(gamma > 0.0)) {
    throw Error(ErrorCode::NonPositiveGamma,
                "gamma must be positive, got " + std::to_string(gamma));
  }
  return BarbellParams{n_vertices, bridge_weight, gamma, kind};
}

Multiplicities multiplicities(const BarbellParams& params) {
  const int half = params.n_vertices / 2;
  return Multiplicities{1, half - 2, 1, 1, half - 1};
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace barbell
