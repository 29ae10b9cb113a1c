#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "onesided/operator_matrix.hpp"
#include "onesided/weight.hpp"

namespace onesided {

/// Lattices every dyadic supremum scans: the aligned lattice and the
/// one-third shift snapped to whole cells.
std::vector<Lattice> standard_lattices(const Grid& g);

enum class TestScope { local, semilocal, global };

/// sup over dyadic Q inside the support, both lattices, of
/// (integral of |T_mu chi_Q|^2 dnu over the scope region) / mu(Q).
/// Regions: Q itself, the concentric double 2Q, or the whole grid.
double local_testing(const OperatorMatrix& T_plain, const MeasurePair& mp, TestScope scope);

struct WbpReport {
    double K_WB = 0.0;       // sup over disjoint near pairs (dist <= max side)
    double tail_bound = 0.0; // size-estimate bound covering the far pairs
};

/// Weak boundedness: sup |<T_mu chi_Q, chi_P>_nu| / (mu(Q)^1/2 nu(P)^1/2)
/// over disjoint dyadic pairs with dist(P,Q) <= max(l(P), l(Q)).
WbpReport wbp_constant(const OperatorMatrix& T_plain, const MeasurePair& mp, double C_size);

/// Lower estimate of the L^p(w) -> L^{p,inf}(w) norm of T, maximized over
/// dyadic indicators (both lattices), random Haar combinations, and
/// single-cell spikes. Never an upper bound.
double weak_norm(const OperatorMatrix& T_plain, const Weight& w, double p,
                 uint64_t seed = 1, int random_trials = 20);

struct TestingReport {
    double K_chi = 0.0;
    double K_sl = 0.0;
    double K_gl = 0.0;
    double K_WB = 0.0;
    double norm_L2w = 0.0;
    double weak_norm_T = 0.0;       // lower estimates
    double weak_norm_Tprime = 0.0;
    double characteristic = 0.0;
};

TestingReport testing_report(const OperatorMatrix& T_plain, const Weight& w, double C_size,
                             uint64_t seed = 1);

struct SweepRow {
    std::string weight_id;
    int m = 0;
    double characteristic = 0.0;
    double norm = 0.0;
    double K_chi = 0.0;
    double K_sl = 0.0;
    double K_gl = 0.0;
    double K_WB = 0.0;
    double weak2 = 0.0;
    double weak2_dual = 0.0;
    double ratio1 = 0.0;  // norm / (c (1 + log c))
    double ratio2 = 0.0;  // sqrt(K_gl) / (c log(e + c))
    double ratio3 = 0.0;  // norm / (c + sqrt(K_gl))
};

/// One full report per weight; rows sorted by characteristic. Rows are
/// independent, so `threads` workers may share the sweep.
std::vector<SweepRow> a2_theorem_sweep(const CausalKernel& kernel,
                                       const std::vector<std::pair<std::string, Weight>>& weights,
                                       int band = 1, uint64_t seed = 1, int threads = 1);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);
void write_sweep_csv_file(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace onesided
