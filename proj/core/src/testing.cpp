#include "onesided/testing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace onesided {

std::vector<Lattice> standard_lattices(const Grid& g) {
    return {Lattice{0}, Lattice::from_shift(g, (g.hi - g.lo) / 3.0)};
}

namespace {

// Visits every lattice interval Q with the vector sum of `base` columns
// over Q, built bottom-up so the whole scan is O(n^2).
void foreach_indicator_image(const Eigen::MatrixXd& base, const Grid& g, const Lattice& lat,
                             const std::function<void(const DyadicInterval&,
                                                      const Eigen::VectorXd&)>& fn) {
    long n = g.n();
    std::vector<long> starts(static_cast<size_t>(n));
    std::vector<Eigen::VectorXd> vecs(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
        starts[static_cast<size_t>(j)] = j;
        vecs[static_cast<size_t>(j)] = base.col(j);
    }
    for (int level = 0; level <= g.m && !vecs.empty(); ++level) {
        for (size_t i = 0; i < vecs.size(); ++i)
            fn(DyadicInterval{level, starts[i]}, vecs[i]);
        std::vector<long> nstarts;
        std::vector<Eigen::VectorXd> nvecs;
        long len = 1L << level;
        for (size_t i = 0; i + 1 < vecs.size(); ++i) {
            if (starts[i + 1] != starts[i] + len) continue;
            DyadicInterval merged{level + 1, starts[i]};
            if (!lat.member(merged)) continue;
            nstarts.push_back(starts[i]);
            nvecs.push_back(vecs[i] + vecs[i + 1]);
            ++i;
        }
        starts = std::move(nstarts);
        vecs = std::move(nvecs);
    }
}

Eigen::MatrixXd mu_columns(const OperatorMatrix& T_plain, const MeasurePair& mp) {
    Eigen::MatrixXd base = T_plain.entries;
    double h = T_plain.grid.cell();
    for (long j = 0; j < T_plain.grid.n(); ++j)
        base.col(j) *= mp.mu[static_cast<size_t>(j)] / h;
    return base;
}

// sup_lambda lambda * nu({|g| > lambda})^{1/p}.
double weak_quasinorm(const Eigen::VectorXd& g, const std::vector<double>& nu, double p) {
    std::vector<std::pair<double, double>> cells;
    for (long i = 0; i < g.size(); ++i) {
        double m = nu[static_cast<size_t>(i)];
        if (m > 0.0) cells.emplace_back(std::abs(g[i]), m);
    }
    std::sort(cells.begin(), cells.end(), std::greater<>());
    double best = 0.0, cum = 0.0;
    for (const auto& [v, m] : cells) {
        cum += m;
        best = std::max(best, v * std::pow(cum, 1.0 / p));
    }
    return best;
}

}  // namespace

double local_testing(const OperatorMatrix& T_plain, const MeasurePair& mp, TestScope scope) {
    const Grid& g = T_plain.grid;
    long n = g.n();
    Eigen::MatrixXd base = mu_columns(T_plain, mp);
    double sup = 0.0;
    bool found = false;
    for (const Lattice& lat : standard_lattices(g)) {
        foreach_indicator_image(base, g, lat, [&](const DyadicInterval& Q,
                                                  const Eigen::VectorXd& v) {
            if (Q.end() > mp.support_cells) return;
            double muQ = mass(mp.mu, span_of(Q));
            if (muQ <= 0.0) return;
            long lo = Q.start, hi = Q.end();
            if (scope == TestScope::semilocal) {
                long ext = (Q.len_cells() + 1) / 2;
                lo = std::max(0L, lo - ext);
                hi = std::min(n, hi + ext);
            } else if (scope == TestScope::global) {
                lo = 0;
                hi = n;
            }
            double integral = 0.0;
            for (long i = lo; i < hi; ++i)
                integral += v[i] * v[i] * mp.nu[static_cast<size_t>(i)];
            sup = std::max(sup, integral / muQ);
            found = true;
        });
    }
    if (!found) throw std::domain_error("local_testing: no interval with positive mu mass");
    return sup;
}

WbpReport wbp_constant(const OperatorMatrix& T_plain, const MeasurePair& mp, double C_size) {
    const Grid& g = T_plain.grid;
    long n = g.n();
    Eigen::MatrixXd base = mu_columns(T_plain, mp);
    std::vector<double> nu_pref(static_cast<size_t>(n) + 1, 0.0);
    for (long i = 0; i < n; ++i)
        nu_pref[static_cast<size_t>(i) + 1] = nu_pref[static_cast<size_t>(i)] + mp.nu[static_cast<size_t>(i)];

    auto lats = standard_lattices(g);
    WbpReport rep;
    std::vector<double> v_pref(static_cast<size_t>(n) + 1, 0.0);
    for (const Lattice& lat_q : lats) {
        foreach_indicator_image(base, g, lat_q, [&](const DyadicInterval& Q,
                                                    const Eigen::VectorXd& v) {
            if (Q.end() > mp.support_cells) return;
            double muQ = mass(mp.mu, span_of(Q));
            if (muQ <= 0.0) return;
            for (long i = 0; i < n; ++i)
                v_pref[static_cast<size_t>(i) + 1] = v_pref[static_cast<size_t>(i)] +
                                                     v[i] * mp.nu[static_cast<size_t>(i)];
            auto consider = [&](long pb, long pe) {
                if (pb < 0 || pe > n) return;
                double nuP = nu_pref[static_cast<size_t>(pe)] - nu_pref[static_cast<size_t>(pb)];
                if (nuP <= 0.0) return;
                double ip = v_pref[static_cast<size_t>(pe)] - v_pref[static_cast<size_t>(pb)];
                rep.K_WB = std::max(rep.K_WB, std::abs(ip) / std::sqrt(muQ * nuP));
            };
            for (const Lattice& lat_p : lats) {
                for (int lp = 0; lp <= g.m; ++lp) {
                    long lenP = 1L << lp;
                    long reach = std::max(lenP, Q.len_cells());
                    // P to the left of Q: gap = Q.start - P.end in [0, reach]
                    long first = Q.start - reach - lenP;
                    long r = ((first - lat_p.shift_cells) % lenP + lenP) % lenP;
                    for (long s = first + (r ? lenP - r : 0); s + lenP <= Q.start; s += lenP)
                        consider(s, s + lenP);
                    // P to the right: gap = P.start - Q.end in [0, reach]
                    first = Q.end();
                    r = ((first - lat_p.shift_cells) % lenP + lenP) % lenP;
                    for (long s = first + (r ? lenP - r : 0); s <= Q.end() + reach; s += lenP)
                        consider(s, s + lenP);
                }
            }
        });
    }
    rep.tail_bound = 2.0 * C_size * std::sqrt(joint_characteristic(mp));
    return rep;
}

double weak_norm(const OperatorMatrix& T_plain, const Weight& w, double p,
                 uint64_t seed, int random_trials) {
    const Grid& g = T_plain.grid;
    long n = g.n();
    auto mp = MeasurePair::from_weight(w);
    double best = 0.0;
    // dyadic indicators (single cells included), both lattices
    for (const Lattice& lat : standard_lattices(g)) {
        foreach_indicator_image(T_plain.entries, g, lat, [&](const DyadicInterval& Q,
                                                             const Eigen::VectorXd& v) {
            double nuQ = mass(mp.nu, span_of(Q));
            if (nuQ <= 0.0) return;
            best = std::max(best, weak_quasinorm(v, mp.nu, p) / std::pow(nuQ, 1.0 / p));
        });
    }
    // random Haar-type sign patterns at a random level
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> level_dist(1, g.m);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int t = 0; t < random_trials; ++t) {
        int level = level_dist(rng);
        Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
        for (const auto& I : intervals_at_level(g, Lattice{0}, level)) {
            double s = sign_dist(rng) ? 1.0 : -1.0;
            long half = I.len_cells() / 2;
            for (long i = I.start; i < I.start + half; ++i) f[i] = s;
            for (long i = I.start + half; i < I.end(); ++i) f[i] = -s;
        }
        double nf = 0.0;
        for (long i = 0; i < n; ++i)
            nf += std::pow(std::abs(f[i]), p) * mp.nu[static_cast<size_t>(i)];
        if (nf <= 0.0) continue;
        Eigen::VectorXd v = T_plain.entries * f;
        best = std::max(best, weak_quasinorm(v, mp.nu, p) / std::pow(nf, 1.0 / p));
    }
    return best;
}

TestingReport testing_report(const OperatorMatrix& T_plain, const Weight& w, double C_size,
                             uint64_t seed) {
    auto mp = MeasurePair::from_weight(w);
    TestingReport r;
    r.K_chi = local_testing(T_plain, mp, TestScope::local);
    r.K_sl = local_testing(T_plain, mp, TestScope::semilocal);
    r.K_gl = local_testing(T_plain, mp, TestScope::global);
    r.K_WB = wbp_constant(T_plain, mp, C_size).K_WB;
    r.norm_L2w = weighted_operator_norm(T_plain, w, NormMode::L2w);
    r.weak_norm_T = weak_norm(T_plain, w, 2.0, seed);
    r.weak_norm_Tprime = weak_norm(transpose(T_plain), w.reciprocal(), 2.0, seed + 1);
    r.characteristic = ap_up_characteristic(w, 2.0);
    return r;
}

std::vector<SweepRow> a2_theorem_sweep(const CausalKernel& kernel,
                                       const std::vector<std::pair<std::string, Weight>>& weights,
                                       int band, uint64_t seed, int threads) {
    std::vector<SweepRow> rows(weights.size());
    auto compute = [&](size_t i) {
        const auto& [id, w] = weights[i];
        OperatorMatrix T = discretize(kernel, w.grid(), band);
        TestingReport rep = testing_report(T, w, kernel.C_size, seed);
        SweepRow row;
        row.weight_id = id;
        row.m = w.grid().m;
        row.characteristic = rep.characteristic;
        row.norm = rep.norm_L2w;
        row.K_chi = rep.K_chi;
        row.K_sl = rep.K_sl;
        row.K_gl = rep.K_gl;
        row.K_WB = rep.K_WB;
        row.weak2 = rep.weak_norm_T;
        row.weak2_dual = rep.weak_norm_Tprime;
        double c = rep.characteristic;
        double sk = std::sqrt(rep.K_gl);
        row.ratio1 = rep.norm_L2w / (c * (1.0 + std::log(c)));
        row.ratio2 = sk / (c * std::log(std::exp(1.0) + c));
        row.ratio3 = rep.norm_L2w / (c + sk);
        rows[i] = std::move(row);
    };
    if (threads <= 1) {
        for (size_t i = 0; i < weights.size(); ++i) compute(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < weights.size(); i = next++) compute(i);
            });
        for (auto& th : pool) th.join();
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.characteristic < b.characteristic ||
               (a.characteristic == b.characteristic && a.weight_id < b.weight_id);
    });
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "weight_id,m,char,norm,K_chi,K_sl,K_gl,K_WB,weak2,weak2_dual,ratio1,ratio2,ratio3\n";
    os.precision(12);
    for (const auto& r : rows)
        os << r.weight_id << "," << r.m << "," << r.characteristic << "," << r.norm << ","
           << r.K_chi << "," << r.K_sl << "," << r.K_gl << "," << r.K_WB << "," << r.weak2
           << "," << r.weak2_dual << "," << r.ratio1 << "," << r.ratio2 << "," << r.ratio3
           << "\n";
}

void write_sweep_csv_file(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_sweep_csv_file: cannot open " + path);
    write_sweep_csv(rows, os);
}

}  // namespace onesided
