#include "barbell/graph.hpp"

#include <cmath>

namespace barbell {

Matrix build_subspace_adjacency(const BarbellParams& params) {
  const double half = params.n_vertices / 2.0;
  const double w = params.bridge_weight;
  const double sb = std::sqrt(half - 2.0);  // |b| normalization coupling
  const double se = std::sqrt(half - 1.0);  // |e| normalization coupling

  Matrix a = Matrix::Zero(5, 5);
  a(0, 1) = a(1, 0) = sb;
  a(0, 2) = a(2, 0) = 1.0;
  a(1, 1) = half - 3.0;
  a(1, 2) = a(2, 1) = sb;
  a(2, 3) = a(3, 2) = w;
  a(3, 4) = a(4, 3) = se;
  a(4, 4) = half - 2.0;
  return a;
}

Matrix build_subspace_degree(const BarbellParams& params) {
  const double half = params.n_vertices / 2.0;
  const double w = params.bridge_weight;
  Vector diag(5);
  diag << half - 1.0, half - 1.0, half - 1.0 + w, half - 1.0 + w, half - 1.0;
  return diag.asDiagonal();
}

Matrix build_subspace_laplacian(const BarbellParams& params) {
  return build_subspace_adjacency(params) - build_subspace_degree(params);
}

Matrix build_oracle() {
  Matrix v = Matrix::Zero(5, 5);
  v(0, 0) = -1.0;
  return v;
}

Matrix build_search_hamiltonian(const BarbellParams& params) {
  const Matrix generator = params.kind == WalkKind::Laplacian
                               ? build_subspace_laplacian(params)
                               : build_subspace_adjacency(params);
  return -params.gamma * generator + build_oracle();
}

Vector build_initial_state(const BarbellParams& params) {
  const double half = params.n_vertices / 2.0;
  Vector psi(5);
  psi << 1.0, std::sqrt(half - 2.0), 1.0, 1.0, std::sqrt(half - 1.0);
  return psi / std::sqrt(static_cast<double>(params.n_vertices));
}

namespace {

void check_fullspace_args(const BarbellParams& params, int marked_index) {
  const int n = params.n_vertices;
  if (n > kFullspaceBuildCap) {
    throw Error(ErrorCode::CapExceeded,
                "full-space build for N=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(kFullspaceBuildCap));
  }
  if (marked_index < 0 || marked_index >= n / 2 || marked_index == 1) {
    throw Error(ErrorCode::BadMarkedIndex,
                "marked vertex " + std::to_string(marked_index) +
                    " must lie in the marked clique 0.." +
                    std::to_string(n / 2 - 1) +
                    " and differ from the bridge endpoint 1");
  }
}

}  // namespace

Matrix build_fullspace_hamiltonian(const BarbellParams& params,
                                   int marked_index) {
  check_fullspace_args(params, marked_index);
  const int n = params.n_vertices;
  const int half = n / 2;
  const double w = params.bridge_weight;

  Matrix adjacency = Matrix::Zero(n, n);
  for (int i = 0; i < half; ++i)
    for (int j = i + 1; j < half; ++j) adjacency(i, j) = adjacency(j, i) = 1.0;
  for (int i = half; i < n; ++i)
    for (int j = i + 1; j < n; ++j) adjacency(i, j) = adjacency(j, i) = 1.0;
  adjacency(1, half) = adjacency(half, 1) = w;  // bridge c -- d

  Matrix h = -params.gamma * adjacency;
  if (params.kind == WalkKind::Laplacian) {
    for (int i = 0; i < n; ++i) {
      double degree = half - 1.0;
      if (i == 1 || i == half) degree += w;
      h(i, i) += params.gamma * degree;  // -gamma*(A - D)
    }
  }
  h(marked_index, marked_index) += -1.0;
  return h;
}

Vector fullspace_uniform_state(int n_vertices) {
  return Vector::Constant(n_vertices,
                          Complex(1.0 / std::sqrt(double(n_vertices)), 0.0));
}

Matrix symmetric_basis(const BarbellParams& params) {
  const int n = params.n_vertices;
  const int half = n / 2;
  const double nb = 1.0 / std::sqrt(half - 2.0);
  const double ne = 1.0 / std::sqrt(half - 1.0);

  Matrix basis = Matrix::Zero(n, 5);
  basis(0, 0) = 1.0;                                    // a
  for (int i = 2; i < half; ++i) basis(i, 1) = nb;      // b
  basis(1, 2) = 1.0;                                    // c
  basis(half, 3) = 1.0;                                 // d
  for (int i = half + 1; i < n; ++i) basis(i, 4) = ne;  // e
  return basis;
}

Projection project_to_subspace(const Vector& full_state,
                               const BarbellParams& params) {
  if (full_state.size() != params.n_vertices) {
    throw Error(ErrorCode::DimensionMismatch,
                "state dimension " + std::to_string(full_state.size()) +
                    " does not match N=" + std::to_string(params.n_vertices));
  }
  const Matrix basis = symmetric_basis(params);
  Projection result;
  result.amplitudes = basis.adjoint() * full_state;
  result.residual_norm = (full_state - basis * result.amplitudes).norm();
  return result;
}

}  // namespace barbell
