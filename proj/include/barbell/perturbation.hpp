#ifndef BARBELL_PERTURBATION_HPP
#define BARBELL_PERTURBATION_HPP

#include <string>
#include <vector>

#include "barbell/types.hpp"

namespace barbell {

/// Weight-scaling classes analyzed separately. Classification is explicit:
/// asymptotic scaling cannot be inferred from a single finite instance, so
/// the caller names the regime and only hard constraints are checked
/// (walk kind; w == N/2 and gamma == 2/N for Resonant, w != N/2 for
/// LargeOffResonant).
enum class Regime {
  LaplacianSmall,             // w = o(sqrt(N))
  LaplacianMedium,            // w = Omega(sqrt(N)), o(N)
  LaplacianLarge,             // w = Omega(N)
  AdjacencySmall,             // w = o(sqrt(N))
  AdjacencyMedium,            // w = Omega(sqrt(N)), o(N)
  AdjacencyResonant,          // w = N/2, gamma = 2/N
  AdjacencyLargeOffResonant,  // w = Omega(N), w != N/2
};

const char* to_string(Regime regime);

/// Throws Error(RegimeMismatch) if params violate the regime's hard
/// constraints.
void check_regime(Regime regime, const BarbellParams& params);

struct HamiltonianSplit {
  Matrix h0;  // leading order
  Matrix h1;  // first-order perturbation
};

/// Leading- and first-order truncation of the search Hamiltonian for the
/// given regime, with gamma, w, N substituted.
HamiltonianSplit split_hamiltonian(const BarbellParams& params, Regime regime);

struct LabeledEigenpair {
  std::string label;
  double eigenvalue;
  Vector vector;  // unit norm, on the (a, b, c, d, e) basis
};

/// Eigenpairs of H0 in closed form, including the bridge combinations
/// |cd> = (|c>+|d>)/sqrt(2) and |cd-> for the large-weight regimes.
std::vector<LabeledEigenpair> h0_eigensystem(Regime regime,
                                             const BarbellParams& params);

/// Matrix of <u_i|(H0+H1)|u_j> over a degenerate eigenspace of H0. The
/// vectors must be orthonormal eigenvectors of H0 sharing one eigenvalue
/// within 1e-10 of H0's spectral radius, else Error(NotDegenerate).
Matrix effective_degenerate_matrix(const Matrix& h0, const Matrix& h1,
                                   const std::vector<Vector>& degenerate_set);

/// The degenerate eigenvectors of H0 containing |a> at gamma = 2/N:
/// {|a>,|b>,|e>} everywhere except AdjacencyResonant's {|a>,|b>,|cd>,|e>}.
std::vector<Vector> degenerate_marked_subset(Regime regime,
                                             const BarbellParams& params);

/// The closed-form eigenvectors and eigenvalues of H0+H1 on the degenerate
/// space, evaluated at the given N and normalized. Requires gamma = 2/N.
std::vector<LabeledEigenpair> closed_form_perturbed_eigensystem(
    Regime regime, const BarbellParams& params);

struct RegimeReport {
  // closed-form eigenvalues vs numeric diagonalization of the effective matrix
  double effective_eigenvalue_dev;
  // 1 - |<closed|numeric>| maximized over eigenvalue-matched pairs
  double eigenvector_overlap_deficit;
  // closed-form eigenvalues vs nearest exact eigenvalue of the full 5x5 H
  double exact_eigenvalue_dev;
};

/// Numerically validates the closed forms at finite N.
RegimeReport verify_regime(Regime regime, const BarbellParams& params);

}  // namespace barbell

#endif  // BARBELL_PERTURBATION_HPP
