#pragma once

#include <Eigen/Dense>

namespace onesided {

/// Largest singular value by power iteration on A^T A.
double power_iteration_norm(const Eigen::MatrixXd& A, double tol = 1e-8, int max_iter = 10000);

/// Largest singular value. Dense SVD up to n = 4096, power iteration above.
double spectral_norm(const Eigen::MatrixXd& A);

}  // namespace onesided
