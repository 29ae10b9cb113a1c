#pragma once

#include <vector>

#include "onesided/operator_matrix.hpp"
#include "onesided/weight.hpp"

namespace onesided {

/// sum_a [P_{I_a}(chi_L(I\I_a) dmu)]^2 nu(I_a) / mu(I) for a disjoint
/// family inside I; only the part of I below each I_a feeds the Poisson
/// average.
double pivotal_ratio(const Grid& g, CellSpan I, const std::vector<CellSpan>& family,
                     const MeasurePair& mp, double eps);

/// Maximal dyadic Q strictly inside S whose stopping value
/// [P_Q(chi_L(S\Q) dmu)]^2 nu(Q) reaches multiplier*K*mu(Q).
std::vector<DyadicInterval> stopping_children(const Grid& g, const DyadicInterval& S, double K,
                                              const MeasurePair& mp, double eps,
                                              double multiplier = 100.0);

struct SparseTree {
    struct Node {
        DyadicInterval iv;
        int parent = -1;  // index into nodes; -1 for the root
        int generation = 0;
        double stopping_value = 0.0;
    };
    std::vector<Node> nodes;  // nodes[0] is the root

    /// Tree distance from nodes[child] up to nodes[ancestor]; -1 if the
    /// ancestor is not on the parent chain.
    int tree_distance(int child, int ancestor) const;
};

SparseTree build_sparse(const Grid& g, const DyadicInterval& I0, double K,
                        const MeasurePair& mp, double eps, double multiplier = 100.0);

/// Empirical pivotal constant: max over levels of the pivotal_ratio of the
/// full dyadic partition of I0 at that level. Normalized by mu(I0), so the
/// stopping threshold multiplier*K*mu(Q) is attainable by concentrated Q.
double empirical_pivotal_constant(const Grid& g, const DyadicInterval& I0,
                                  const MeasurePair& mp, double eps);

/// Carleson coefficient a_S^j: sum over tree nodes S' below S at tree
/// distance j of || P_{nu, D(S')} T_mu chi_{parent(S) \ S} ||_nu^2.
double carleson_a(const Grid& g, const SparseTree& tree, int node_index, int j,
                  const OperatorMatrix& T_plain, const MeasurePair& mp);

/// LHS / sum a_I^2 for the layer-to-layer averaging bound: J at level k,
/// I at level k-n on the opposing lattice, I < J (or I > J when mirrored).
double lemma_avg_ratio(const Grid& g, int k, int n, const std::vector<double>& a,
                       const MeasurePair& mp, double eps, bool mirrored = false,
                       const Lattice& mu_lat = {}, const Lattice& nu_lat = {});

/// Double integral of dmu(y) dnu(x) over {x in Q+, x - l(Q)/2 < y < x},
/// the region of the averaging-operator bound, computed by cell sums.
double averaging_region_integral(const Grid& g, const DyadicInterval& Q, const MeasurePair& mp);

}  // namespace onesided
