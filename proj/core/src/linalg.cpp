#include "onesided/linalg.hpp"

#include <cmath>

namespace onesided {

double power_iteration_norm(const Eigen::MatrixXd& A, double tol, int max_iter) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    Eigen::VectorXd v = Eigen::VectorXd::Ones(A.cols());
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd u = A * v;
        Eigen::VectorXd w = A.transpose() * u;
        double norm = w.norm();
        if (norm == 0.0) return 0.0;
        double next = std::sqrt(norm);  // |A^T A v| ~ sigma^2 for unit v
        w /= norm;
        double delta = std::abs(next - sigma);
        sigma = next;
        v = w;
        if (it > 0 && delta <= tol * std::max(1.0, sigma)) break;
    }
    return sigma;
}

double spectral_norm(const Eigen::MatrixXd& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    if (A.rows() <= 4096 && A.cols() <= 4096) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
        return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
    return power_iteration_norm(A);
}

}  // namespace onesided
