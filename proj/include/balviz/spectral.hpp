#pragma once

#include "balviz/signed_graph.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace balviz {

// Smallest eigenpair of a signed Laplacian.
//
// The eigenvector has unit Euclidean norm and a fixed orientation: its
// entry of largest absolute value is non-negative (ties broken by lowest
// index), so repeated runs and v/-v ambiguity cannot change a layout.
struct SpectralResult {
  double lambda_min = 0.0;     // clamped at 0 when within -tol of 0
  Eigen::VectorXd eigenvector; // unit norm
  double residual = 0.0;       // ||L v - lambda v||_2
  int multiplicity = 1;        // eigenvalues within tol of lambda_min (dense path)
};

struct SpectralOptions {
  // Residual acceptance bound; <= 0 selects 1e-9 * (1 + ||L||_inf).
  double tol_residual = 0.0;
  // Orders above this use inverse iteration instead of a full dense
  // symmetric eigendecomposition.
  int dense_cutoff = 2048;
  // Iteration budget for inverse iteration, as a multiple of the order.
  int iteration_multiplier = 10;
};

class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, double best_residual)
      : std::runtime_error(msg), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

double default_residual_tol(const SignedMatrix& l);

// Smallest eigenvalue and unit eigenvector of a symmetric matrix.
// Deterministic for a fixed input. Throws std::invalid_argument when l is
// not symmetric or has order 0, convergence_error when the iterative path
// exhausts its budget without meeting the residual bound.
SpectralResult smallest_eigenpair(const SignedMatrix& l,
                                  const SpectralOptions& opts = {});
SpectralResult smallest_eigenpair(const SignedMatrix& l, double tol_residual);

// Recomputes ||L v - lambda v||_2 from the stored fields, independent of
// the solver path. Throws std::invalid_argument on dimension mismatch.
double verify_residual(const SignedMatrix& l, const SpectralResult& r);

}  // namespace balviz
