#include "balviz/spectral.hpp"

#include <cmath>
#include <limits>

namespace balviz {

namespace {

bool exactly_symmetric(const SignedMatrix& l) {
  const Eigen::Index n = l.rows();
  if (l.cols() != n) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (l(i, j) != l(j, i)) return false;
    }
  }
  return true;
}

// Orientation rule: largest-|entry| coordinate non-negative, ties broken
// by lowest index.
void apply_sign_convention(Eigen::VectorXd& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  }
  if (v(best) < 0.0) v = -v;
}

SpectralResult finalize(const SignedMatrix& l, double lambda,
                        Eigen::VectorXd v, double tol, int multiplicity) {
  if (lambda < 0.0 && lambda >= -tol) lambda = 0.0;
  apply_sign_convention(v);
  SpectralResult r;
  r.lambda_min = lambda;
  r.eigenvector = std::move(v);
  r.residual = (l * r.eigenvector - lambda * r.eigenvector).norm();
  r.multiplicity = multiplicity;
  if (r.residual > tol) {
    throw convergence_error("eigenpair residual " + std::to_string(r.residual) +
                                " exceeds tolerance",
                            r.residual);
  }
  return r;
}

SpectralResult dense_path(const SignedMatrix& l, double tol) {
  Eigen::SelfAdjointEigenSolver<SignedMatrix> solver(l);
  if (solver.info() != Eigen::Success) {
    throw convergence_error("dense eigendecomposition failed",
                            std::numeric_limits<double>::infinity());
  }
  const auto& values = solver.eigenvalues();  // ascending
  const double lambda = values(0);
  int multiplicity = 1;
  while (multiplicity < values.size() &&
         values(multiplicity) - lambda <= tol) {
    ++multiplicity;
  }
  return finalize(l, lambda, solver.eigenvectors().col(0), tol, multiplicity);
}

// Shift-and-invert Lanczos with full reorthogonalization. Plain inverse
// iteration with a fixed factorization stalls when the two smallest
// eigenvalues are clustered; the growing Krylov space resolves such
// clusters while reusing the same regularized solve each step.
SpectralResult iterative_path(const SignedMatrix& l, double tol, int budget) {
  const Eigen::Index n = l.rows();

  // Fixed regularization keeps the factorization nonsingular when the
  // smallest eigenvalue is 0; it does not move the eigenvectors.
  const double sigma = 1e-8 * (1.0 + l.cwiseAbs().rowwise().sum().maxCoeff());
  SignedMatrix regularized = l;
  regularized.diagonal().array() += sigma;
  Eigen::LDLT<SignedMatrix> factorization(regularized);
  if (factorization.info() != Eigen::Success) {
    throw convergence_error("LDLT factorization failed",
                            std::numeric_limits<double>::infinity());
  }

  const int max_steps =
      static_cast<int>(std::min<Eigen::Index>(n, std::min(budget, 200)));
  Eigen::MatrixXd basis(n, max_steps);
  Eigen::VectorXd alpha(max_steps);
  Eigen::VectorXd beta(max_steps);

  Eigen::VectorXd q = Eigen::VectorXd::Ones(n);
  q(0) += 1.0;  // deterministic start, not orthogonal to switching vectors
  q.normalize();
  basis.col(0) = q;

  // Inner acceptance at tol/2 leaves room for the clamp adjustment in
  // finalize().
  const double accept = 0.5 * tol;
  double best_residual = std::numeric_limits<double>::infinity();
  int steps = 0;

  for (int j = 0; j < max_steps; ++j) {
    steps = j + 1;
    Eigen::VectorXd w = factorization.solve(basis.col(j));
    alpha(j) = basis.col(j).dot(w);
    w -= alpha(j) * basis.col(j);
    if (j > 0) w -= beta(j - 1) * basis.col(j - 1);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass) {
      w -= basis.leftCols(steps) * (basis.leftCols(steps).transpose() * w);
    }
    beta(j) = w.norm();

    // Ritz pair for the largest eigenvalue of the inverted operator.
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
    for (int i = 0; i < steps; ++i) {
      tri(i, i) = alpha(i);
      if (i + 1 < steps) {
        tri(i, i + 1) = beta(i);
        tri(i + 1, i) = beta(i);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
    Eigen::VectorXd ritz =
        basis.leftCols(steps) * small.eigenvectors().col(steps - 1);
    ritz.normalize();
    const double lambda = ritz.dot(l * ritz);
    const double residual = (l * ritz - lambda * ritz).norm();
    best_residual = std::min(best_residual, residual);
    if (residual <= accept) {
      // Multiplicity estimate from the Ritz values mapped back to l.
      int multiplicity = 0;
      for (int i = steps - 1; i >= 0; --i) {
        const double theta = small.eigenvalues()(i);
        if (theta <= 0.0 || 1.0 / theta - sigma > lambda + tol) break;
        ++multiplicity;
      }
      return finalize(l, lambda, std::move(ritz), tol,
                      std::max(multiplicity, 1));
    }

    if (beta(j) <= 1e-14 || j + 1 >= max_steps) break;
    basis.col(j + 1) = w / beta(j);
  }

  throw convergence_error(
      "Lanczos did not converge within " + std::to_string(steps) +
          " steps (best residual " + std::to_string(best_residual) + ")",
      best_residual);
}

}  // namespace

double default_residual_tol(const SignedMatrix& l) {
  double linf = 0.0;
  if (l.size() > 0) linf = l.cwiseAbs().rowwise().sum().maxCoeff();
  return 1e-9 * (1.0 + linf);
}

SpectralResult smallest_eigenpair(const SignedMatrix& l,
                                  const SpectralOptions& opts) {
  if (l.rows() < 1) {
    throw std::invalid_argument("matrix order must be at least 1");
  }
  if (!exactly_symmetric(l)) {
    throw std::invalid_argument("matrix is not symmetric");
  }
  const double tol =
      opts.tol_residual > 0.0 ? opts.tol_residual : default_residual_tol(l);
  if (l.rows() <= opts.dense_cutoff) {
    return dense_path(l, tol);
  }
  const int budget = opts.iteration_multiplier * static_cast<int>(l.rows());
  return iterative_path(l, tol, budget);
}

SpectralResult smallest_eigenpair(const SignedMatrix& l, double tol_residual) {
  SpectralOptions opts;
  opts.tol_residual = tol_residual;
  return smallest_eigenpair(l, opts);
}

double verify_residual(const SignedMatrix& l, const SpectralResult& r) {
  if (l.rows() != l.cols() || l.rows() != r.eigenvector.size()) {
    throw std::invalid_argument("matrix and eigenvector dimensions disagree");
  }
  return (l * r.eigenvector - r.lambda_min * r.eigenvector).norm();
}

}  // namespace balviz
