#include "barbell/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "barbell/graph.hpp"
#include "barbell/propagator.hpp"

namespace barbell {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

bool is_laplacian(Regime regime) {
  return regime == Regime::LaplacianSmall || regime == Regime::LaplacianMedium ||
         regime == Regime::LaplacianLarge;
}

bool has_bridge_block_h0(Regime regime) {
  return regime == Regime::LaplacianLarge ||
         regime == Regime::AdjacencyResonant ||
         regime == Regime::AdjacencyLargeOffResonant;
}

Vector basis_vector(int index) {
  Vector v = Vector::Zero(5);
  v(index) = 1.0;
  return v;
}

Vector bridge_sum() {
  Vector v = Vector::Zero(5);
  v(2) = v(3) = 1.0 / kSqrt2;
  return v;
}

Vector bridge_diff() {
  Vector v = Vector::Zero(5);
  v(2) = 1.0 / kSqrt2;
  v(3) = -1.0 / kSqrt2;
  return v;
}

void require_critical_gamma(const BarbellParams& params, const char* what) {
  if (params.gamma != critical_gamma(params.n_vertices)) {
    throw Error(ErrorCode::RegimeMismatch,
                std::string(what) + " requires gamma = 2/N");
  }
}

}  // namespace

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::LaplacianSmall: return "laplacian-small";
    case Regime::LaplacianMedium: return "laplacian-medium";
    case Regime::LaplacianLarge: return "laplacian-large";
    case Regime::AdjacencySmall: return "adjacency-small";
    case Regime::AdjacencyMedium: return "adjacency-medium";
    case Regime::AdjacencyResonant: return "adjacency-resonant";
    case Regime::AdjacencyLargeOffResonant: return "adjacency-large-offresonant";
  }
  return "unknown";
}

void check_regime(Regime regime, const BarbellParams& params) {
  const bool laplacian_kind = params.kind == WalkKind::Laplacian;
  if (is_laplacian(regime) != laplacian_kind) {
    throw Error(ErrorCode::RegimeMismatch,
                std::string("walk kind does not match regime ") +
                    to_string(regime));
  }
  const double half = params.n_vertices / 2.0;
  if (regime == Regime::AdjacencyResonant) {
    if (params.bridge_weight != half ||
        params.gamma != critical_gamma(params.n_vertices)) {
      throw Error(ErrorCode::RegimeMismatch,
                  "resonant regime requires w = N/2 and gamma = 2/N exactly");
    }
  }
  if (regime == Regime::AdjacencyLargeOffResonant &&
      params.bridge_weight == half) {
    throw Error(ErrorCode::RegimeMismatch,
                "off-resonant regime requires w != N/2");
  }
}

HamiltonianSplit split_hamiltonian(const BarbellParams& params, Regime regime) {
  check_regime(regime, params);
  const double half = params.n_vertices / 2.0;
  const double w = params.bridge_weight;
  const double coupling = std::sqrt(half);
  const double gamma = params.gamma;

  Matrix h0 = Matrix::Zero(5, 5);
  if (is_laplacian(regime)) {
    h0(0, 0) = -half + 1.0 / gamma;
    h0(2, 2) = h0(3, 3) = -half;
  } else {
    h0(0, 0) = 1.0 / gamma;
    h0(1, 1) = h0(4, 4) = half;
  }
  if (has_bridge_block_h0(regime)) {
    if (regime == Regime::LaplacianLarge) {
      h0(2, 2) = h0(3, 3) = -half - w;
    } else {
      h0(2, 2) = h0(3, 3) = 0.0;
    }
    h0(2, 3) = h0(3, 2) = w;
  }

  Matrix h1 = Matrix::Zero(5, 5);
  h1(0, 1) = h1(1, 0) = coupling;
  h1(1, 2) = h1(2, 1) = coupling;
  h1(3, 4) = h1(4, 3) = coupling;
  if (regime == Regime::LaplacianMedium || regime == Regime::AdjacencyMedium) {
    h1(2, 2) = h1(3, 3) = -w;
    h1(2, 3) = h1(3, 2) = w;
  }

  return HamiltonianSplit{-gamma * h0, -gamma * h1};
}

std::vector<LabeledEigenpair> h0_eigensystem(Regime regime,
                                             const BarbellParams& params) {
  check_regime(regime, params);
  const double gn2 = params.gamma * params.n_vertices / 2.0;
  const double gw = params.gamma * params.bridge_weight;

  std::vector<LabeledEigenpair> pairs;
  if (is_laplacian(regime)) {
    pairs.push_back({"|a>", gn2 - 1.0, basis_vector(0)});
    pairs.push_back({"|b>", 0.0, basis_vector(1)});
    if (regime == Regime::LaplacianLarge) {
      pairs.push_back({"|cd> = (|c>+|d>)/sqrt(2)", gn2, bridge_sum()});
      pairs.push_back({"|cd-> = (|c>-|d>)/sqrt(2)", gn2 + 2.0 * gw,
                       bridge_diff()});
    } else {
      pairs.push_back({"|c>", gn2, basis_vector(2)});
      pairs.push_back({"|d>", gn2, basis_vector(3)});
    }
    pairs.push_back({"|e>", 0.0, basis_vector(4)});
  } else {
    pairs.push_back({"|a>", -1.0, basis_vector(0)});
    pairs.push_back({"|b>", -gn2, basis_vector(1)});
    if (has_bridge_block_h0(regime)) {
      pairs.push_back({"|cd> = (|c>+|d>)/sqrt(2)", -gw, bridge_sum()});
      pairs.push_back({"|cd-> = (|c>-|d>)/sqrt(2)", gw, bridge_diff()});
    } else {
      pairs.push_back({"|c>", 0.0, basis_vector(2)});
      pairs.push_back({"|d>", 0.0, basis_vector(3)});
    }
    pairs.push_back({"|e>", -gn2, basis_vector(4)});
  }
  return pairs;
}

Matrix effective_degenerate_matrix(const Matrix& h0, const Matrix& h1,
                                   const std::vector<Vector>& degenerate_set) {
  const auto k = degenerate_set.size();
  if (k == 0) {
    throw Error(ErrorCode::NotDegenerate, "degenerate set is empty");
  }

  const double scale = eigendecompose(h0).eigenvalues.cwiseAbs().maxCoeff();
  const double tolerance = 1e-10 * std::max(scale, 1.0);

  std::vector<double> values(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vector& u = degenerate_set[i];
    values[i] = (u.adjoint() * h0 * u).value().real();
    const double residual = (h0 * u - values[i] * u).cwiseAbs().maxCoeff();
    if (residual > tolerance) {
      throw Error(ErrorCode::NotDegenerate,
                  "vector " + std::to_string(i) +
                      " is not an eigenvector of H0 (residual " +
                      std::to_string(residual) + ")");
    }
    if (std::abs(values[i] - values[0]) > tolerance) {
      throw Error(ErrorCode::NotDegenerate,
                  "eigenvalues " + std::to_string(values[0]) + " and " +
                      std::to_string(values[i]) + " are not degenerate");
    }
  }

  const Matrix h = h0 + h1;
  Matrix effective(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      effective(i, j) = (degenerate_set[i].adjoint() * h * degenerate_set[j]).value();
  return effective;
}

std::vector<Vector> degenerate_marked_subset(Regime regime,
                                             const BarbellParams& params) {
  check_regime(regime, params);
  std::vector<Vector> set{basis_vector(0), basis_vector(1)};
  if (regime == Regime::AdjacencyResonant) set.push_back(bridge_sum());
  set.push_back(basis_vector(4));
  return set;
}

std::vector<LabeledEigenpair> closed_form_perturbed_eigensystem(
    Regime regime, const BarbellParams& params) {
  check_regime(regime, params);
  require_critical_gamma(params, "closed-form perturbed eigensystem");
  const double n = params.n_vertices;
  const double s = std::sqrt(2.0 / n);
  const double shift = is_laplacian(regime) ? 0.0 : -1.0;

  std::vector<LabeledEigenpair> pairs;
  if (regime == Regime::AdjacencyResonant) {
    const double up = std::sqrt(2.0 + kSqrt2);
    const double um = std::sqrt(2.0 - kSqrt2);
    const double bp = 1.0 + kSqrt2;
    const double bm = 1.0 - kSqrt2;
    // (alpha_a, alpha_b, alpha_cd, alpha_e), unnormalized
    const std::array<std::array<double, 4>, 4> coefficients{{
        {up, bp, up, 1.0},
        {-up, bp, -up, 1.0},
        {-um, bm, um, 1.0},
        {um, bm, -um, 1.0},
    }};
    const std::array<double, 4> eigenvalues{
        -1.0 - up / std::sqrt(n), -1.0 + up / std::sqrt(n),
        -1.0 - um / std::sqrt(n), -1.0 + um / std::sqrt(n)};
    const std::array<const char*, 4> labels{
        "psi1 = sqrt(2+sqrt2)|a> + (1+sqrt2)|b> + sqrt(2+sqrt2)|cd> + |e>",
        "psi2 = -sqrt(2+sqrt2)|a> + (1+sqrt2)|b> - sqrt(2+sqrt2)|cd> + |e>",
        "psi3 = -sqrt(2-sqrt2)|a> + (1-sqrt2)|b> + sqrt(2-sqrt2)|cd> + |e>",
        "psi4 = sqrt(2-sqrt2)|a> + (1-sqrt2)|b> - sqrt(2-sqrt2)|cd> + |e>"};
    for (int i = 0; i < 4; ++i) {
      const auto& c = coefficients[i];
      Vector v = Vector::Zero(5);
      v(0) = c[0];
      v(1) = c[1];
      v(2) = v(3) = c[2] / kSqrt2;
      v(4) = c[3];
      v.normalize();
      pairs.push_back({labels[i], eigenvalues[i], v});
    }
  } else {
    Vector psi1 = Vector::Zero(5), psi2 = Vector::Zero(5);
    psi1(0) = psi1(1) = 1.0 / kSqrt2;
    psi2(0) = -1.0 / kSqrt2;
    psi2(1) = 1.0 / kSqrt2;
    pairs.push_back({"psi1 = (|a>+|b>)/sqrt(2)", shift - s, psi1});
    pairs.push_back({"psi2 = (-|a>+|b>)/sqrt(2)", shift + s, psi2});
    pairs.push_back({"psi3 = |e>", shift, basis_vector(4)});
  }
  return pairs;
}

RegimeReport verify_regime(Regime regime, const BarbellParams& params) {
  const auto split = split_hamiltonian(params, regime);
  const auto subset = degenerate_marked_subset(regime, params);
  const Matrix effective =
      effective_degenerate_matrix(split.h0, split.h1, subset);
  const EigenSystem numeric = eigendecompose(effective);

  auto closed = closed_form_perturbed_eigensystem(regime, params);
  std::sort(closed.begin(), closed.end(),
            [](const auto& lhs, const auto& rhs) {
              return lhs.eigenvalue < rhs.eigenvalue;
            });

  RegimeReport report{0.0, 0.0, 0.0};
  const auto k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    report.effective_eigenvalue_dev =
        std::max(report.effective_eigenvalue_dev,
                 std::abs(closed[i].eigenvalue - numeric.eigenvalues(i)));
    // express the closed-form vector in the degenerate-set coordinates
    Vector coords(k);
    for (std::size_t j = 0; j < k; ++j)
      coords(j) = (subset[j].adjoint() * closed[i].vector).value();
    const double overlap =
        std::abs((numeric.eigenvectors.col(i).adjoint() * coords).value());
    report.eigenvector_overlap_deficit =
        std::max(report.eigenvector_overlap_deficit, 1.0 - overlap);
  }

  const EigenSystem exact = eigendecompose(build_search_hamiltonian(params));
  for (const auto& pair : closed) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < exact.eigenvalues.size(); ++j)
      best = std::min(best, std::abs(exact.eigenvalues(j) - pair.eigenvalue));
    report.exact_eigenvalue_dev = std::max(report.exact_eigenvalue_dev, best);
  }
  return report;
}

}  // namespace barbell
