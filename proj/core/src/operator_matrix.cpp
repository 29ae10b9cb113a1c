#include "onesided/operator_matrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "onesided/linalg.hpp"

namespace onesided {

OperatorMatrix discretize(const CausalKernel& kernel, const Grid& grid, int band) {
    if (band < 1) throw std::invalid_argument("discretize: band must be >= 1");
    long n = grid.n();
    OperatorMatrix T;
    T.grid = grid;
    T.band = band;
    T.direction = kernel.direction;
    T.entries = Eigen::MatrixXd::Zero(n, n);
    double h = grid.cell();
    bool up = kernel.direction == KernelDirection::up;
    for (long i = 0; i < n; ++i) {
        double x = grid.mid(i);
        for (long j = 0; j < n; ++j) {
            if (std::abs(i - j) < band) continue;
            if (up ? (i < j) : (i > j)) continue;  // causally forbidden
            double v = kernel.K(x, grid.mid(j)) * h;
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "discretize: kernel non-finite at (" << x << ", " << grid.mid(j) << ")";
                throw std::runtime_error(msg.str());
            }
            T.entries(i, j) = v;
        }
    }
    return T;
}

OperatorMatrix mu_weighted(const OperatorMatrix& plain, const MeasurePair& mp) {
    if (plain.flavor != MatrixFlavor::plain)
        throw std::invalid_argument("mu_weighted: input must be a plain matrix");
    OperatorMatrix T = plain;
    T.flavor = MatrixFlavor::mu_weighted;
    double h = plain.grid.cell();
    for (long j = 0; j < plain.grid.n(); ++j)
        T.entries.col(j) *= mp.mu[static_cast<size_t>(j)] / h;
    return T;
}

OperatorMatrix transpose(const OperatorMatrix& T) {
    OperatorMatrix Tt = T;
    Tt.entries = T.entries.transpose();
    Tt.direction = T.direction == KernelDirection::up ? KernelDirection::down : KernelDirection::up;
    return Tt;
}

std::vector<double> apply(const OperatorMatrix& T, const std::vector<double>& f) {
    Eigen::Map<const Eigen::VectorXd> v(f.data(), static_cast<long>(f.size()));
    Eigen::VectorXd out = T.entries * v;
    return std::vector<double>(out.data(), out.data() + out.size());
}

std::vector<double> apply_mu_indicator(const OperatorMatrix& plain, const MeasurePair& mp,
                                       const std::vector<CellSpan>& spans) {
    double h = plain.grid.cell();
    std::vector<double> f(static_cast<size_t>(plain.grid.n()), 0.0);
    for (const auto& s : spans)
        for (long j = s.begin; j < s.end; ++j)
            f[static_cast<size_t>(j)] = mp.mu[static_cast<size_t>(j)] / h;  // = w^{-1} chi
    return onesided::apply(plain, f);
}

double weighted_operator_norm(const OperatorMatrix& T, const Weight& w, NormMode mode) {
    long sc = w.support_cells();
    if (sc == 0) throw std::domain_error("weighted_operator_norm: empty support");
    Eigen::MatrixXd M(sc, sc);
    if (mode == NormMode::L2w) {
        for (long i = 0; i < sc; ++i)
            for (long j = 0; j < sc; ++j)
                M(i, j) = std::sqrt(w[i]) * T.entries(i, j) / std::sqrt(w[j]);
    } else {
        auto mp = MeasurePair::from_weight(w);
        double h = w.grid().cell();
        for (long i = 0; i < sc; ++i)
            for (long j = 0; j < sc; ++j)
                M(i, j) = std::sqrt(mp.nu[static_cast<size_t>(i)]) * (T.entries(i, j) / h) *
                          std::sqrt(mp.mu[static_cast<size_t>(j)]);
    }
    return spectral_norm(M);
}

double poisson_average(const Grid& g, CellSpan I, const std::vector<double>& masses, double eps) {
    if (I.empty()) throw std::domain_error("poisson_average: empty interval");
    double h = g.cell();
    double len = h * static_cast<double>(I.cells());
    double c = g.lo + h * 0.5 * static_cast<double>(I.begin + I.end);
    double total = 0.0;
    for (long j = 0; j < g.n(); ++j) {
        double m = masses[static_cast<size_t>(j)];
        if (m == 0.0) continue;
        total += m * std::pow(len, eps) / std::pow(len + std::abs(c - g.mid(j)), 1.0 + eps);
    }
    return total;
}

std::pair<CellSpan, CellSpan> lower_upper_components(CellSpan J1, CellSpan J2) {
    if (J2.begin < J1.begin || J2.end > J1.end || J2.empty())
        throw std::invalid_argument("lower_upper_components: need nonempty J2 inside J1");
    return {CellSpan{J1.begin, J2.begin}, CellSpan{J2.end, J1.end}};
}

void save_matrix_csv(const OperatorMatrix& T, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_matrix_csv: cannot open " + path);
    os.precision(17);
    for (long i = 0; i < T.entries.rows(); ++i) {
        for (long j = 0; j < T.entries.cols(); ++j) {
            if (j) os << ",";
            os << T.entries(i, j);
        }
        os << "\n";
    }
}

}  // namespace onesided
