#pragma once

#include <vector>

#include "onesided/operator_matrix.hpp"
#include "onesided/weight.hpp"

namespace onesided {

/// Maximal components {I_j} of the discrete super-level set
/// {x in I0 : max_up f(x) > lambda}, as cell spans.
std::vector<CellSpan> maximal_level_set(const std::vector<double>& f, double lambda, CellSpan I0);

struct CZDecomposition {
    double lambda = 0.0;
    std::vector<CellSpan> omega_intervals;   // maximal level-set components I_j
    std::vector<CellSpan> extended;          // I_j+ = [b_j, min(b_0, b_j + 2|I_j|))
    std::vector<double> g;                   // f off Omega, lambda on each I_j
    std::vector<double> h;                   // sum of the mean-zero parts h_j
    std::vector<std::vector<double>> h_parts;
};

/// f = g + h with g <= lambda off the level set (up to one-cell averaging
/// error), each h_j supported on I_j with zero integral.
CZDecomposition cz_split(const std::vector<double>& f, double lambda, CellSpan I0, const Grid& g);

struct Weak11Instance {
    double lambda = 0.0;
    double weak_value = 0.0;   // lambda * w({|Tf| > lambda}) / ||f||_L1(w)
    double w_omega_tilde = 0.0;
    double w_E1 = 0.0;
    double w_E2 = 0.0;
    double omega_bound_ratio = 0.0;   // w(Omega~) * lambda / ([w] ||f||_L1(w))
    bool extended_check = true;       // w(I_j+) <= 3 |I_j| Mdown w(x) on each I_j
};

struct Weak11Report {
    double characteristic = 0.0;      // [w]_{A1^(I0)}
    double sup_weak = 0.0;            // sup over instances of weak_value
    double bound = 0.0;               // [w] log(e + [w])
    std::vector<Weak11Instance> instances;
};

/// Localized weak (1,1) experiment for T on I0 = support of w: for each
/// nonnegative f and a ladder of lambdas, measures the weak-type quotient
/// and the level-set pieces Omega~ (extended intervals), E1, E2.
Weak11Report weak11_experiment(const OperatorMatrix& T_plain, const Weight& w,
                               const std::vector<std::vector<double>>& f_corpus);

struct RubioReport {
    std::vector<double> Rh;
    double C = 1.0;                // measured ||S|| / [w], floored at 1
    double norm_ratio = 0.0;       // ||Rh||_L2(w) / ||h||_L2(w)
    double tail_bound = 0.0;       // geometric remainder of the truncation
    double a1_ratio = 0.0;         // sup S(Rh) / Rh over the support
};

/// Truncated Rubio de Francia series Rh = sum_k S^k h / (2 C [w])^k with
/// Sh = w^{-1} Mdown(|h| w); Rh >= h always.
RubioReport rubio_de_francia(const std::vector<double>& h, const Weight& w, int terms);

struct ExtrapolationReport {
    double char_w = 0.0;           // [w]_{A2^}
    double char_wRh = 0.0;         // [w Rh]_{A1^(H)}
    double f_l1_wRh = 0.0;         // ||f||_L1(w Rh)
    double rh_norm_ratio = 0.0;
    bool positive = true;          // w Rh > 0 on the support
};

/// Extrapolation chain: [w Rh]_{A1^} against [w]_{A2^}, and the
/// Cauchy-Schwarz step ||f||_L1(w Rh) <= ||f||_L2(w) ||Rh||_L2(w).
ExtrapolationReport extrapolation_check(const Weight& w, const std::vector<double>& f,
                                        const std::vector<double>& h, int terms);

struct TwoWeightInterval {
    CellSpan I;
    bool w_nonincreasing = true;
    bool mass_dominated = true;    // u(I) <= w_aux(I)
    bool prefix_at_least = true;   // prefix averages of f on I stay >= lambda
    bool weighted_avg = true;      // integral f w_aux >= lambda integral w_aux
};

struct TwoWeightReport {
    double C = 0.0;                // sup Mdown_{I0} u / v
    double sup_weak = 0.0;         // sup lambda u({Mup f > lambda}) / ||f||_L1(v)
    std::vector<TwoWeightInterval> intervals;
    bool all_checks = true;
};

/// Two-weight weak (1,1) for the backward maximal operator under
/// Mdown_{I0} u <= C v, via the decreasing auxiliary weight
/// w_aux(x) = min over y in [a,x] of Mdown(chi_I u)(y).
TwoWeightReport two_weight_maximal_check(const Weight& u, const Weight& v, CellSpan I0,
                                         const std::vector<std::vector<double>>& f_corpus);

/// The proof's scalar factor (p p' (r')^(1/p'))^p with p = 1 + 1/log(e+c)
/// and r = 1 + 1/(C c); compared against log(e+c) in tests.
double proof_parameter_factor(double c, double C = 1.0);

}  // namespace onesided
