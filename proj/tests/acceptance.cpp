// Acceptance gate: one pass/fail line per criterion. Fitted constants were
// calibrated once on the frozen corpus (run with --calibrate to reproduce
// the measurements) and are enforced with 10% slack.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "onesided/corpus.hpp"
#include "onesided/haar.hpp"
#include "onesided/maximal.hpp"
#include "onesided/operator_matrix.hpp"
#include "onesided/sparse.hpp"
#include "onesided/testing.hpp"
#include "onesided/weaktype.hpp"
#include "onesided/weight.hpp"

using namespace onesided;

namespace {

bool g_calibrate = false;

// Pinned fitted constants. corpus_hash(standard_corpus(Grid(0,1,6))) at
// calibration time is recorded next to each sweep in sweep_meta.json.
constexpr double kPivotalC1 = 0.0053;     // pivotal_ratio <= C1 [w]^2
constexpr double kAvgC2 = 0.21;           // lemma_avg_ratio <= C2 [mu,nu]
constexpr double kCarlesonC3 = 8.8;       // a_S^j <= C3 2^{-j} K mu(I)
constexpr double kReverseHolderC = 7.7;   // r = 1 + 1/(C [w]_{A1^})
constexpr double kSweepRatio1Max = 7.35;  // norm / (c (1 + log c))
constexpr double kSweepRatio2Max = 5.52;  // sqrt(K_gl) / (c log(e + c))
constexpr double kSweepSlopeMax = 1.15;   // log-log slope of norm vs c
constexpr double kScalarC4 = 16.9;        // (p p' r'^{1/p'})^p <= C4 log(e+c)

double now_s() {
    using clk = std::chrono::steady_clock;
    return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

void report(int id, const char* what, bool ok, double seconds) {
    std::printf("criterion %2d %-48s %s  (%.2f s)\n", id, what, ok ? "PASS" : "FAIL", seconds);
}

Weight rdyadic(const Grid& g, uint64_t seed, double beta = 4.0) {
    return family_generate(WeightKind::random_dyadic, {.beta = beta}, seed, g);
}

// 1. Machine-precision identities at m = 10.
bool criterion1() {
    Grid g(0.0, 1.0, 10);
    Weight w = rdyadic(g, 1);
    auto mp = MeasurePair::from_weight(w);

    double joint = joint_characteristic(mp);
    double ap2 = ap_up_characteristic(w, 2.0);
    bool ok = std::abs(joint - ap2) <= 1e-12 * ap2;

    double h2 = g.cell() * g.cell();
    for (long i = 0; i < mp.support_cells; ++i) {
        double prod = mp.mu[static_cast<size_t>(i)] * mp.nu[static_cast<size_t>(i)];
        ok = ok && std::abs(prod - h2) <= 1e-13 * h2;
    }

    // causality: below the cutoff cell the output only sees the input below
    auto T = discretize(causal_hilbert(), g);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> f(static_cast<size_t>(g.n()));
    for (auto& v : f) v = unif(rng);
    long zc = 700;
    std::vector<double> fz = f;
    for (long j = zc; j < g.n(); ++j) fz[static_cast<size_t>(j)] = 0.0;
    auto Tf = onesided::apply(T, f);
    auto Tfz = onesided::apply(T, fz);
    for (long i = 0; i < zc; ++i)
        ok = ok && Tf[static_cast<size_t>(i)] == Tfz[static_cast<size_t>(i)];

    // Haar reconstruction, Parseval, and pairwise orthogonality to 1e-10
    DyadicInterval root{g.m, 0};
    auto [f1, f2] = mean_split(f, mp.nu, span_of(root));
    auto proj = project_tree(f, root, mp.nu);
    for (long i = 0; i < g.n(); ++i)
        ok = ok && std::abs(f1[static_cast<size_t>(i)] + proj[static_cast<size_t>(i)] -
                            f[static_cast<size_t>(i)]) <= 1e-10;
    double total = norm_sq(f1, mp.nu);
    for (const auto& I : all_intervals(g, Lattice{0}, 1)) {
        auto d = haar_project(f, I, mp.nu);
        if (!d.degenerate) total += norm_sq(d.values, mp.nu);
    }
    double energy = norm_sq(f, mp.nu);
    ok = ok && std::abs(total - energy) <= 1e-10 * std::max(1.0, energy);

    Grid gs(0.0, 1.0, 4);
    Weight ws = rdyadic(gs, 2);
    auto mps = MeasurePair::from_weight(ws);
    auto ivs = all_intervals(gs, Lattice{0}, 1);
    for (size_t a = 0; a < ivs.size(); ++a)
        for (size_t b = a + 1; b < ivs.size(); ++b) {
            auto da = haar_project(f, ivs[a], mps.nu);
            auto db = haar_project(f, ivs[b], mps.nu);
            if (da.degenerate || db.degenerate) continue;
            ok = ok && std::abs(inner_product(da.values, db.values, mps.nu)) <= 1e-10;
        }
    return ok;
}

// 2. Exact discrete inequalities on the 100-weight corpus.
bool criterion2() {
    Grid g(0.0, 1.0, 6);
    auto corpus = standard_corpus(g);
    bool ok = corpus.size() == 100;
    std::vector<double> decay(static_cast<size_t>(g.n()));
    for (long i = 0; i < g.n(); ++i) decay[static_cast<size_t>(i)] = std::exp(-2.0 * g.mid(i));
    auto T = discretize(causal_hilbert(), g);
    std::vector<double> hfun(static_cast<size_t>(g.n()), 1.0);
    for (const auto& [id, w] : corpus) {
        for (double p : {1.5, 2.0, 3.0})
            ok = ok && ap_up_characteristic(w, p) <=
                           std::pow(2.0, p) * ap_classical(w, p) * (1.0 + 1e-12);
        ok = ok && ap_up_characteristic(w.scaled_by(decay), 2.0) <=
                       ap_up_characteristic(w, 2.0) * (1.0 + 1e-12);
        auto rep = testing_report(T, w, 1.0, 1);
        ok = ok && rep.K_chi <= rep.K_sl * (1.0 + 1e-12);
        ok = ok && rep.K_sl <= rep.K_gl * (1.0 + 1e-12);
        ok = ok && rep.weak_norm_T <= rep.norm_L2w * (1.0 + 1e-9);
        auto rubio = rubio_de_francia(hfun, w, 8);
        for (long i = 0; i < w.support_cells(); ++i)
            ok = ok && rubio.Rh[static_cast<size_t>(i)] >=
                           hfun[static_cast<size_t>(i)] * (1.0 - 1e-12);
    }
    return ok;
}

// 3. Monotone limit for the decreasing exponential weight.
bool criterion3() {
    double prev = 0.0, last = 0.0;
    bool ok = true;
    for (int m = 5; m <= 10; ++m) {
        Grid g(0.0, 1.0, m);
        Weight w = family_generate(WeightKind::exp_monotone, {.a = -1.0}, 0, g);
        double c = ap_up_characteristic(w, 2.0);
        ok = ok && c >= prev && c <= 1.0 + 1e-12;
        prev = c;
        last = c;
    }
    return ok && last > 0.9;
}

// 4. Sparse trees on the frozen random-dyadic corpus at m = 10.
bool criterion4() {
    Grid g(0.0, 1.0, 10);
    bool ok = true;
    for (const auto& [id, w] : sparse_corpus(g)) {
        auto mp = MeasurePair::from_weight(w);
        DyadicInterval root{g.m, 0};
        double K = empirical_pivotal_constant(g, root, mp, 1.0);
        auto tree = build_sparse(g, root, K, mp, 1.0, 100.0);
        for (size_t i = 0; i < tree.nodes.size(); ++i) {
            double child_sum = 0.0;
            for (size_t k = 0; k < tree.nodes.size(); ++k)
                if (tree.nodes[k].parent == static_cast<int>(i))
                    child_sum += mass(mp.mu, span_of(tree.nodes[k].iv));
            ok = ok && child_sum <=
                           0.5 * mass(mp.mu, span_of(tree.nodes[i].iv)) * (1.0 + 1e-12);
        }
        for (const auto& I : all_intervals(g, Lattice{0}, 0)) {
            double packed = 0.0;
            for (const auto& nd : tree.nodes)
                if (contains(I, nd.iv)) packed += mass(mp.mu, span_of(nd.iv));
            ok = ok && packed <= 2.0 * mass(mp.mu, span_of(I)) * (1.0 + 1e-12);
        }
    }
    return ok;
}

// 5. Fitted pivotal, averaging, and Carleson bounds.
bool criterion5() {
    bool ok = true;
    double worst_pivotal = 0.0, worst_avg = 0.0, worst_carleson = 0.0;
    {
        Grid g(0.0, 1.0, 6);
        std::mt19937_64 rng(19);
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Weight w = rdyadic(g, seed);
            auto mp = MeasurePair::from_weight(w);
            double c = ap_up_characteristic(w, 2.0);
            for (int t = 0; t < 10; ++t) {
                std::vector<CellSpan> family;
                long pos = static_cast<long>(rng() % 8);
                while (pos + 2 <= g.n()) {
                    long len = 1 + static_cast<long>(rng() % 8);
                    long end = std::min(pos + len, g.n());
                    family.push_back({pos, end});
                    pos = end + static_cast<long>(rng() % 8);
                }
                double ratio = pivotal_ratio(g, CellSpan{0, g.n()}, family, mp, 1.0);
                worst_pivotal = std::max(worst_pivotal, ratio / (c * c));
            }
        }
        ok = ok && worst_pivotal <= kPivotalC1;
    }
    {
        Grid g(0.0, 1.0, 6);
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            Weight w = rdyadic(g, seed);
            auto mp = MeasurePair::from_weight(w);
            double joint = joint_characteristic(mp);
            for (int n = 0; n <= 2; ++n) {
                auto Is = intervals_at_level(g, Lattice{0}, 4 - n);
                std::vector<double> a(Is.size());
                for (auto& v : a) v = unif(rng);
                double ratio = lemma_avg_ratio(g, 4, n, a, mp, 1.0);
                worst_avg = std::max(worst_avg, ratio / joint);
            }
        }
        ok = ok && worst_avg <= kAvgC2;
    }
    {
        Grid g(0.0, 1.0, 8);
        auto T = discretize(causal_hilbert(), g);
        for (uint64_t seed = 11; seed <= 15; ++seed) {
            Weight w = rdyadic(g, seed, 8.0);
            auto mp = MeasurePair::from_weight(w);
            DyadicInterval root{g.m, 0};
            double K = empirical_pivotal_constant(g, root, mp, 1.0);
            auto tree = build_sparse(g, root, K, mp, 1.0, 1.2);
            ok = ok && tree.nodes.size() > 1;
            double muI = mass(mp.mu, span_of(root));
            for (size_t s = 1; s < tree.nodes.size(); ++s)
                for (int j = 0; j <= 2; ++j) {
                    double a = carleson_a(g, tree, static_cast<int>(s), j, T, mp);
                    worst_carleson =
                        std::max(worst_carleson, a / (std::pow(2.0, -j) * K * muI));
                }
        }
        ok = ok && worst_carleson <= kCarlesonC3;
    }
    if (g_calibrate)
        std::printf("  [calibrate] pivotal %.6g  avg %.6g  carleson %.6g\n",
                    worst_pivotal, worst_avg, worst_carleson);
    return ok;
}

// 6. Double integral over the averaging region at m = 8.
bool criterion6() {
    Grid g(0.0, 1.0, 8);
    bool ok = true;
    for (const auto& [id, w] : standard_corpus(g)) {
        auto mp = MeasurePair::from_weight(w);
        ok = ok && averaging_region_integral(g, DyadicInterval{g.m, 0}, mp) <=
                       2.0 * joint_characteristic(mp) * (1.0 + 1e-12);
    }
    return ok;
}

// 7. CZ decomposition invariants on 100 random (f, lambda) pairs.
bool criterion7() {
    Grid g(0.0, 1.0, 6);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    CellSpan I0{0, g.n()};
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> f(static_cast<size_t>(g.n()));
        for (auto& v : f) v = unif(rng) < 0.3 ? 5.0 * unif(rng) : 0.1 * unif(rng);
        double lambda = 0.2 + unif(rng);
        auto cz = cz_split(f, lambda, I0, g);
        double f_l1 = 0.0, h_l1 = 0.0, fsup = 0.0;
        for (double v : f) {
            f_l1 += v;
            fsup = std::max(fsup, v);
        }
        for (long i = 0; i < g.n(); ++i)
            ok = ok && std::abs(cz.g[static_cast<size_t>(i)] + cz.h[static_cast<size_t>(i)] -
                                f[static_cast<size_t>(i)]) <= 1e-12;
        for (size_t j = 0; j < cz.omega_intervals.size(); ++j) {
            const auto& I = cz.omega_intervals[j];
            ok = ok && cell_average(f, I) >= lambda * (1.0 - 1e-12);
            double tol = fsup / static_cast<double>(I.cells());
            // the rising-sun cap at the right end exists only for
            // components ending strictly inside I0
            if (I.end < I0.end)
                ok = ok && std::abs(cell_average(f, I) - lambda) <= tol + 1e-12;
            double integral = 0.0;
            for (double v : cz.h_parts[j]) {
                integral += v;
                h_l1 += std::abs(v);
            }
            ok = ok && std::abs(integral) <= 1e-10;
        }
        ok = ok && h_l1 <= 2.0 * f_l1 * (1.0 + 1e-12);
    }
    return ok;
}

// 8. Reverse Holder inequality, lemma and pointwise forms, for every corpus
// weight and every dyadic (a,b) at m = 8.
bool criterion8() {
    Grid g(0.0, 1.0, 8);
    auto corpus = standard_corpus(g);
    auto holds_at = [&](double C) {
        for (const auto& [id, w] : corpus) {
            CellSpan I0 = w.support();
            if (I0.cells() < 2) continue;
            for (const auto& iv : all_intervals(g, Lattice{0}, 0)) {
                if (iv.end() > I0.end) continue;
                auto rep = reverse_holder_verify(w, I0, span_of(iv), C);
                if (!rep.holds || !rep.ptw_holds) return false;
            }
        }
        return true;
    };
    if (g_calibrate) {
        double lo = 0.05, hi = 64.0;
        if (!holds_at(hi)) {
            std::printf("  [calibrate] reverse Holder fails even at C = %g\n", hi);
            return false;
        }
        for (int it = 0; it < 30; ++it) {
            double mid = 0.5 * (lo + hi);
            (holds_at(mid) ? hi : lo) = mid;
        }
        std::printf("  [calibrate] reverse Holder minimal C %.6g\n", hi);
    }
    return holds_at(kReverseHolderC);
}

// 9. Scaling sweep over power weights at m = 10.
bool criterion9() {
    Grid g(0.0, 1.0, 10);
    auto weights = power_sweep_corpus(g, 12);
    auto T = discretize(causal_hilbert(), g);
    bool ok = true;
    double max_r1 = 0.0, max_r2 = 0.0, min_c = 1e300, max_c = 0.0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int npts = 0;
    for (const auto& [id, w] : weights) {
        double c = ap_up_characteristic(w, 2.0);
        double norm = weighted_operator_norm(T, w, NormMode::L2w);
        auto mp = MeasurePair::from_weight(w);
        double kgl = local_testing(T, mp, TestScope::global);
        max_r1 = std::max(max_r1, norm / (c * (1.0 + std::log(c))));
        max_r2 = std::max(max_r2, std::sqrt(kgl) / (c * std::log(std::exp(1.0) + c)));
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
        double x = std::log(c), y = std::log(norm);
        if (c > 1.5) {  // the flat region near c = 1 carries no slope information
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++npts;
        }
    }
    double slope = (static_cast<double>(npts) * sxy - sx * sy) /
                   (static_cast<double>(npts) * sxx - sx * sx);
    if (g_calibrate)
        std::printf("  [calibrate] sweep ratio1 %.6g  ratio2 %.6g  slope %.4f  span [%.3g, %.3g]\n",
                    max_r1, max_r2, slope, min_c, max_c);
    ok = ok && min_c <= 1.0 + 1e-9 && max_c >= 1e4;
    ok = ok && max_r1 <= kSweepRatio1Max && max_r2 <= kSweepRatio2Max;
    ok = ok && slope <= kSweepSlopeMax;
    return ok;
}

// 10. Scalar proof-parameter factor over six decades of characteristics.
bool criterion10() {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double c = std::pow(10.0, 6.0 * static_cast<double>(i) / 999.0);
        worst = std::max(worst, proof_parameter_factor(c) / std::log(std::exp(1.0) + c));
    }
    if (g_calibrate) std::printf("  [calibrate] scalar factor ratio %.6g\n", worst);
    ok = ok && worst <= kScalarC4;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--calibrate") g_calibrate = true;

    struct Entry {
        int id;
        const char* what;
        bool (*run)();
    };
    const Entry entries[] = {
        {1, "machine-precision identities", criterion1},
        {2, "exact corpus inequalities", criterion2},
        {3, "monotone exponential-weight limit", criterion3},
        {4, "sparse tree mass and packing", criterion4},
        {5, "pivotal / averaging / Carleson fitted bounds", criterion5},
        {6, "averaging region double integral", criterion6},
        {7, "Calderon-Zygmund decomposition invariants", criterion7},
        {8, "reverse Holder lemma and pointwise form", criterion8},
        {9, "power-weight scaling sweep", criterion9},
        {10, "scalar proof-parameter factor", criterion10},
    };
    bool all = true;
    for (const auto& e : entries) {
        double t0 = now_s();
        bool ok = false;
        try {
            ok = e.run();
        } catch (const std::exception& ex) {
            std::printf("criterion %2d threw: %s\n", e.id, ex.what());
        }
        report(e.id, e.what, ok, now_s() - t0);
        all = all && ok;
    }
    return all ? 0 : 1;
}
