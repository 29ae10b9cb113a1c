#include "onesided/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "onesided/haar.hpp"

namespace onesided {

namespace {

// Poisson average of mu restricted to the part of `outer` below Q.
double lower_poisson(const Grid& g, CellSpan outer, const DyadicInterval& Q,
                     const MeasurePair& mp, double eps) {
    std::vector<double> restricted(mp.mu.size(), 0.0);
    for (long j = outer.begin; j < Q.start && j < outer.end; ++j)
        restricted[static_cast<size_t>(j)] = mp.mu[static_cast<size_t>(j)];
    return poisson_average(g, span_of(Q), restricted, eps);
}

double stopping_value_of(const Grid& g, const DyadicInterval& S, const DyadicInterval& Q,
                         const MeasurePair& mp, double eps) {
    double P = lower_poisson(g, span_of(S), Q, mp, eps);
    return P * P * mass(mp.nu, span_of(Q));
}

struct Stop {
    DyadicInterval iv;
    double value;
};

// Maximal dyadic Q strictly inside S with value >= threshold * mu(Q) > 0.
std::vector<Stop> stopping_scan(const Grid& g, const DyadicInterval& S, double threshold,
                                const MeasurePair& mp, double eps) {
    std::vector<Stop> out;
    std::deque<DyadicInterval> work;
    if (S.level > 0) {
        auto [lo_half, hi_half] = halves(S);
        work.push_back(lo_half);
        work.push_back(hi_half);
    }
    while (!work.empty()) {
        DyadicInterval Q = work.front();
        work.pop_front();
        double muQ = mass(mp.mu, span_of(Q));
        if (muQ > 0.0) {
            double v = stopping_value_of(g, S, Q, mp, eps);
            if (v >= threshold * muQ) {
                out.push_back({Q, v});
                continue;
            }
        }
        if (Q.level > 0) {
            auto [lo_half, hi_half] = halves(Q);
            work.push_back(lo_half);
            work.push_back(hi_half);
        }
    }
    return out;
}

}  // namespace

double pivotal_ratio(const Grid& g, CellSpan I, const std::vector<CellSpan>& family,
                     const MeasurePair& mp, double eps) {
    double muI = mass(mp.mu, I);
    if (muI <= 0.0) throw std::domain_error("pivotal_ratio: mu(I) vanishes");
    double lhs = 0.0;
    for (const auto& Ia : family) {
        if (Ia.begin < I.begin || Ia.end > I.end || Ia.empty())
            throw std::invalid_argument("pivotal_ratio: family member not inside I");
        std::vector<double> restricted(mp.mu.size(), 0.0);
        for (long j = I.begin; j < Ia.begin; ++j)
            restricted[static_cast<size_t>(j)] = mp.mu[static_cast<size_t>(j)];
        double P = poisson_average(g, Ia, restricted, eps);
        lhs += P * P * mass(mp.nu, Ia);
    }
    return lhs / muI;
}

std::vector<DyadicInterval> stopping_children(const Grid& g, const DyadicInterval& S, double K,
                                              const MeasurePair& mp, double eps,
                                              double multiplier) {
    std::vector<DyadicInterval> out;
    for (const auto& s : stopping_scan(g, S, multiplier * K, mp, eps)) out.push_back(s.iv);
    return out;
}

double empirical_pivotal_constant(const Grid& g, const DyadicInterval& I0,
                                  const MeasurePair& mp, double eps) {
    double muI0 = mass(mp.mu, span_of(I0));
    if (muI0 <= 0.0) throw std::domain_error("empirical_pivotal_constant: no mass inside I0");
    double sup = 0.0;
    for (int level = 0; level < I0.level; ++level) {
        long len = 1L << level;
        double level_sum = 0.0;
        for (long s = I0.start; s + len <= I0.end(); s += len)
            level_sum += stopping_value_of(g, I0, DyadicInterval{level, s}, mp, eps);
        sup = std::max(sup, level_sum / muI0);
    }
    if (sup <= 0.0) throw std::domain_error("empirical_pivotal_constant: no mass inside I0");
    return sup;
}

int SparseTree::tree_distance(int child, int ancestor) const {
    int d = 0;
    int cur = child;
    while (cur != -1) {
        if (cur == ancestor) return d;
        cur = nodes[static_cast<size_t>(cur)].parent;
        ++d;
    }
    return -1;
}

SparseTree build_sparse(const Grid& g, const DyadicInterval& I0, double K,
                        const MeasurePair& mp, double eps, double multiplier) {
    if (K <= 0.0) throw std::invalid_argument("build_sparse: K must be positive");
    SparseTree tree;
    tree.nodes.push_back({I0, -1, 0, 0.0});
    for (size_t head = 0; head < tree.nodes.size(); ++head) {
        // Children are proper subintervals, so generations terminate at cells.
        SparseTree::Node S = tree.nodes[head];
        for (const auto& s : stopping_scan(g, S.iv, multiplier * K, mp, eps))
            tree.nodes.push_back({s.iv, static_cast<int>(head), S.generation + 1, s.value});
    }
    return tree;
}

double carleson_a(const Grid& g, const SparseTree& tree, int node_index, int j,
                  const OperatorMatrix& T_plain, const MeasurePair& mp) {
    (void)g;
    const auto& S = tree.nodes.at(static_cast<size_t>(node_index));
    if (S.parent < 0) throw std::invalid_argument("carleson_a: node needs a parent");
    const auto& hat = tree.nodes[static_cast<size_t>(S.parent)];
    auto [lower, upper] = lower_upper_components(span_of(hat.iv), span_of(S.iv));
    std::vector<CellSpan> spans;
    if (!lower.empty()) spans.push_back(lower);
    if (!upper.empty()) spans.push_back(upper);
    std::vector<double> v = apply_mu_indicator(T_plain, mp, spans);
    double total = 0.0;
    for (int k = 0; k < static_cast<int>(tree.nodes.size()); ++k) {
        if (tree.tree_distance(k, node_index) != j) continue;
        auto proj = project_tree(v, tree.nodes[static_cast<size_t>(k)].iv, mp.nu);
        total += norm_sq(proj, mp.nu);
    }
    return total;
}

double lemma_avg_ratio(const Grid& g, int k, int n, const std::vector<double>& a,
                       const MeasurePair& mp, double eps, bool mirrored,
                       const Lattice& mu_lat, const Lattice& nu_lat) {
    if (n < 0 || k - n < 0 || k > g.m)
        throw std::invalid_argument("lemma_avg_ratio: bad levels");
    auto Js = intervals_at_level(g, nu_lat, k);
    auto Is = intervals_at_level(g, mu_lat, k - n);
    if (a.size() != Is.size())
        throw std::invalid_argument("lemma_avg_ratio: coefficient count mismatch");
    double lhs = 0.0;
    for (const auto& J : Js) {
        double lJ = length(g, J);
        double b = 0.0;
        for (size_t i = 0; i < Is.size(); ++i) {
            const auto& I = Is[i];
            bool ordered = mirrored ? (I.start >= J.end()) : (I.end() <= J.start);
            if (!ordered) continue;
            double muI = mass(mp.mu, span_of(I));
            b += std::sqrt(muI) * std::pow(lJ, eps) /
                 std::pow(dist(g, I, J) + lJ, 1.0 + eps) * a[i];
        }
        lhs += mass(mp.nu, span_of(J)) * b * b;
    }
    double denom = 0.0;
    for (double ai : a) denom += ai * ai;
    if (denom <= 0.0) throw std::domain_error("lemma_avg_ratio: zero coefficients");
    return lhs / denom;
}

double averaging_region_integral(const Grid& g, const DyadicInterval& Q, const MeasurePair& mp) {
    if (Q.level < 1) throw std::invalid_argument("averaging_region_integral: Q too small");
    long half = Q.len_cells() / 2;
    double total = 0.0;
    for (long i = Q.start + half; i < Q.end(); ++i) {
        long j_lo = std::max(i - half + 1, 0L);
        for (long j = j_lo; j < i; ++j)
            total += mp.nu[static_cast<size_t>(i)] * mp.mu[static_cast<size_t>(j)];
    }
    return total;
}

}  // namespace onesided
