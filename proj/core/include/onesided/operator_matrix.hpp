#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "onesided/kernel.hpp"
#include "onesided/weight.hpp"

namespace onesided {

enum class MatrixFlavor { plain, mu_weighted };

/// Dense midpoint-rule discretization of a causal kernel. Entries vanish
/// inside the truncation band |i-j| < band and on the causally forbidden
/// triangle.
struct OperatorMatrix {
    Eigen::MatrixXd entries;
    Grid grid;
    int band = 1;
    MatrixFlavor flavor = MatrixFlavor::plain;
    KernelDirection direction = KernelDirection::up;
};

OperatorMatrix discretize(const CausalKernel& kernel, const Grid& grid, int band = 1);

/// T_mu = T(chi_H w^{-1} .): plain matrix times diag(mu)/cell_width.
OperatorMatrix mu_weighted(const OperatorMatrix& plain, const MeasurePair& mp);

OperatorMatrix transpose(const OperatorMatrix& T);

std::vector<double> apply(const OperatorMatrix& T, const std::vector<double>& f);

/// T_mu applied to the indicator of a union of spans.
std::vector<double> apply_mu_indicator(const OperatorMatrix& plain, const MeasurePair& mp,
                                       const std::vector<CellSpan>& spans);

enum class NormMode { L2w, bilinear_mu_nu };

/// Weighted operator norm of a plain matrix, restricted to the support of w.
double weighted_operator_norm(const OperatorMatrix& T, const Weight& w, NormMode mode);

/// Poisson average P_I(d lambda) = sum_j lambda_j l^eps / (l + |c(I)-x_j|)^(1+eps).
double poisson_average(const Grid& g, CellSpan I, const std::vector<double>& masses, double eps);

/// For J2 = [b,c) inside J1 = [a,d), returns ([a,b), [c,d)); either may be empty.
std::pair<CellSpan, CellSpan> lower_upper_components(CellSpan J1, CellSpan J2);

void save_matrix_csv(const OperatorMatrix& T, const std::string& path);

}  // namespace onesided
