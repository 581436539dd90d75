#ifndef BARBELL_GRAPH_HPP
#define BARBELL_GRAPH_HPP

#include "barbell/types.hpp"

namespace barbell {

// ---------------------------------------------------------------------------
// 5D symmetric subspace, basis order (|a>, |b>, |c>, |d>, |e>).
// ---------------------------------------------------------------------------

/// Quotient adjacency matrix on the type basis. Off-diagonal couplings are
/// sqrt(N/2-2), 1, w, sqrt(N/2-1); diagonals (0, N/2-3, 0, 0, N/2-2).
Matrix build_subspace_adjacency(const BarbellParams& params);

/// Diagonal weighted-degree matrix (N/2-1, N/2-1, N/2-1+w, N/2-1+w, N/2-1).
Matrix build_subspace_degree(const BarbellParams& params);

/// L = A - D. Note the sign convention: this follows the kinetic-energy
/// form (A - D), which is the negative of the combinatorial Laplacian D - A
/// found in most graph-theory texts.
Matrix build_subspace_laplacian(const BarbellParams& params);

/// Oracle potential V = -|a><a| as a 5x5 diagonal.
Matrix build_oracle();

/// H = -gamma*L + V (Laplacian kind) or H = -gamma*A + V (Adjacency kind).
Matrix build_search_hamiltonian(const BarbellParams& params);

/// Uniform superposition over all vertices expressed on the type basis:
/// (1, sqrt(N/2-2), 1, 1, sqrt(N/2-1)) / sqrt(N).
Vector build_initial_state(const BarbellParams& params);

// ---------------------------------------------------------------------------
// Full N-dimensional space, used as the brute-force oracle.
//
// Canonical vertex layout: 0..N/2-1 is the marked clique with vertex 0 the
// marked vertex a and vertex 1 the bridge endpoint c; N/2..N-1 is the
// unmarked clique with vertex N/2 the bridge endpoint d.
// ---------------------------------------------------------------------------

/// Dense full-space builds refuse N above this (O(N^2) storage, O(N^3) solve).
inline constexpr int kFullspaceBuildCap = 4096;

/// Full N x N search Hamiltonian. marked_index must lie in the marked clique
/// and differ from the bridge endpoint c (vertex 1).
Matrix build_fullspace_hamiltonian(const BarbellParams& params,
                                   int marked_index = 0);

/// Uniform superposition over N vertices.
Vector fullspace_uniform_state(int n_vertices);

/// N x 5 matrix whose columns are the orthonormal type states of the
/// canonical layout (marked vertex 0).
Matrix symmetric_basis(const BarbellParams& params);

struct Projection {
  Vector amplitudes;     // 5 inner products with the type states
  double residual_norm;  // norm of the component outside the subspace
};

/// Projects a full-space state onto the 5D type basis (canonical layout).
Projection project_to_subspace(const Vector& full_state,
                               const BarbellParams& params);

}  // namespace barbell

#endif  // BARBELL_GRAPH_HPP
