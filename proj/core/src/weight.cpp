#include "onesided/weight.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "onesided/maximal.hpp"

namespace onesided {

Weight::Weight(Grid grid, std::vector<double> values, std::optional<double> cutoff)
    : grid_(grid), values_(std::move(values)), cutoff_(cutoff) {
    if (static_cast<long>(values_.size()) != grid_.n())
        throw std::invalid_argument("Weight: values size must equal grid.n()");
    support_cells_ = grid_.n();
    if (cutoff_) {
        double z = *cutoff_;
        // cells entirely above z carry zero weight
        long sc = static_cast<long>(std::ceil((z - grid_.lo) / grid_.cell() - 1e-12));
        support_cells_ = std::clamp(sc, 0L, grid_.n());
        if (support_cells_ == 0)
            throw std::invalid_argument("Weight: cutoff leaves empty support");
    }
    for (long i = 0; i < support_cells_; ++i) {
        if (!(values_[static_cast<size_t>(i)] > 0.0) || !std::isfinite(values_[static_cast<size_t>(i)]))
            throw std::invalid_argument("Weight: values must be positive and finite on H");
    }
    for (long i = support_cells_; i < grid_.n(); ++i) values_[static_cast<size_t>(i)] = 0.0;
}

Weight Weight::reciprocal() const {
    std::vector<double> v(values_.size(), 0.0);
    for (long i = 0; i < support_cells_; ++i)
        v[static_cast<size_t>(i)] = 1.0 / values_[static_cast<size_t>(i)];
    return Weight(grid_, std::move(v), cutoff_);
}

Weight Weight::scaled_by(const std::vector<double>& factor) const {
    std::vector<double> v(values_);
    for (long i = 0; i < support_cells_; ++i)
        v[static_cast<size_t>(i)] *= factor[static_cast<size_t>(i)];
    return Weight(grid_, std::move(v), cutoff_);
}

MeasurePair MeasurePair::from_weight(const Weight& w) {
    MeasurePair mp;
    mp.grid = w.grid();
    mp.support_cells = w.support_cells();
    double h = mp.grid.cell();
    mp.mu.assign(static_cast<size_t>(mp.grid.n()), 0.0);
    mp.nu.assign(static_cast<size_t>(mp.grid.n()), 0.0);
    for (long i = 0; i < mp.support_cells; ++i) {
        mp.mu[static_cast<size_t>(i)] = h / w[i];
        mp.nu[static_cast<size_t>(i)] = h * w[i];
    }
    return mp;
}

double mass(const std::vector<double>& masses, CellSpan s) {
    double total = 0.0;
    for (long i = s.begin; i < s.end; ++i) total += masses[static_cast<size_t>(i)];
    return total;
}

double cell_average(const std::vector<double>& values, CellSpan s) {
    if (s.empty()) throw std::domain_error("cell_average: empty span");
    double total = 0.0;
    for (long i = s.begin; i < s.end; ++i) total += values[static_cast<size_t>(i)];
    return total / static_cast<double>(s.cells());
}

namespace {

// Candidate intervals for a characteristic: dyadic, >= 2 cells, inside H
// and the optional restriction.
std::vector<DyadicInterval> admissible(const Weight& w, std::optional<CellSpan> restrict_to,
                                       const Lattice& lat) {
    std::vector<DyadicInterval> out;
    CellSpan lim{0, w.support_cells()};
    if (restrict_to) {
        lim.begin = std::max(lim.begin, restrict_to->begin);
        lim.end = std::min(lim.end, restrict_to->end);
    }
    for (const auto& I : all_intervals(w.grid(), lat, 1)) {
        if (I.start >= lim.begin && I.end() <= lim.end) out.push_back(I);
    }
    if (out.empty()) throw std::domain_error("characteristic: no admissible intervals");
    return out;
}

double dual_average(const Weight& w, CellSpan s, double p) {
    // <w^{-1}>_{1/(p-1), s} = (avg of w^{-1/(p-1)})^{p-1}
    double q = 1.0 / (p - 1.0);
    double total = 0.0;
    for (long i = s.begin; i < s.end; ++i)
        total += std::pow(w[i], -q);
    return std::pow(total / static_cast<double>(s.cells()), p - 1.0);
}

}  // namespace

double ap_up_characteristic(const Weight& w, double p,
                            std::optional<CellSpan> restrict_to, const Lattice& lat) {
    if (p <= 1.0) throw std::domain_error("ap_up_characteristic: need p > 1");
    double sup = 0.0;
    for (const auto& I : admissible(w, restrict_to, lat)) {
        auto [lo_half, hi_half] = halves(I);
        double v = cell_average(w.values(), span_of(hi_half)) * dual_average(w, span_of(lo_half), p);
        sup = std::max(sup, v);
    }
    return sup;
}

double ap_classical(const Weight& w, double p,
                    std::optional<CellSpan> restrict_to, const Lattice& lat) {
    if (p <= 1.0) throw std::domain_error("ap_classical: need p > 1");
    double sup = 0.0;
    for (const auto& I : admissible(w, restrict_to, lat)) {
        double v = cell_average(w.values(), span_of(I)) * dual_average(w, span_of(I), p);
        sup = std::max(sup, v);
    }
    return sup;
}

double a1_up_local_characteristic(const Weight& w, CellSpan I0) {
    if (I0.end > w.support_cells())
        throw std::domain_error("a1_up_local_characteristic: w vanishes inside I0");
    auto md = max_down(w.values(), I0);
    double sup = 0.0;
    for (long i = I0.begin; i < I0.end; ++i)
        sup = std::max(sup, md[static_cast<size_t>(i)] / w[i]);
    return sup;
}

double a1_up_local_scan(const Weight& w, CellSpan I0) {
    if (I0.end > w.support_cells())
        throw std::domain_error("a1_up_local_scan: w vanishes inside I0");
    // sup over c <= x < d of avg(w over [x..d]) * (d-c+1 cells)^{-1} ... / min(w over [c..x])
    double sup = 0.0;
    for (long x = I0.begin; x < I0.end; ++x) {
        double fwd = 0.0;
        for (long d = x; d < I0.end; ++d) {
            fwd += w[d];
            double minw = std::numeric_limits<double>::infinity();
            for (long c = x; c >= I0.begin; --c) {
                minw = std::min(minw, w[c]);
                double ratio = fwd / static_cast<double>(d - c + 1) / minw;
                sup = std::max(sup, ratio);
            }
        }
    }
    return sup;
}

double joint_characteristic(const MeasurePair& mp, const Lattice& lat) {
    double sup = 0.0;
    double h = mp.grid.cell();
    bool any = false;
    for (const auto& Q : all_intervals(mp.grid, lat, 1)) {
        if (Q.end() > mp.support_cells) continue;
        any = true;
        auto [lo_half, hi_half] = halves(Q);
        double lenH = h * static_cast<double>(lo_half.len_cells());
        double v = mass(mp.mu, span_of(lo_half)) * mass(mp.nu, span_of(hi_half)) / (lenH * lenH);
        sup = std::max(sup, v);
    }
    if (!any) throw std::domain_error("joint_characteristic: no admissible intervals");
    return sup;
}

ReverseHolderReport reverse_holder_verify(const Weight& w, CellSpan I0, CellSpan I, double C) {
    if (C <= 0.0) throw std::domain_error("reverse_holder_verify: C must be positive");
    ReverseHolderReport rep;
    double char_a1 = a1_up_local_characteristic(w, I0);
    rep.r = 1.0 + 1.0 / (C * char_a1);
    double h = w.grid().cell();

    // chi_I w, and the backward-looking maximal of it at the right endpoint
    // of I (the largest suffix average of w over I).
    std::vector<double> chi_w(w.values().size(), 0.0);
    for (long i = I.begin; i < I.end; ++i) chi_w[static_cast<size_t>(i)] = w[i];
    double lambda0 = 0.0, sum = 0.0;
    for (long j = I.end - 1; j >= I.begin; --j) {
        sum += w[j];
        lambda0 = std::max(lambda0, sum / static_cast<double>(I.end - j));
    }

    double lhs = 0.0, base = 0.0;
    for (long i = I.begin; i < I.end; ++i) {
        lhs += std::pow(w[i], rep.r) * h;
        base += w[i] * h;
    }
    rep.lhs = lhs;
    rep.rhs = 2.0 * std::pow(lambda0, rep.r - 1.0) * base;
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-12);

    // pointwise form: M_r(chi_I w) <= 2 M(chi_I w) on I0
    auto mr = max_down_r(chi_w, I0, rep.r);
    auto m1 = max_down(chi_w, I0);
    double worst = 0.0;
    for (long i = I0.begin; i < I0.end; ++i) {
        double denom = m1[static_cast<size_t>(i)];
        if (denom > 0.0) worst = std::max(worst, mr[static_cast<size_t>(i)] / (2.0 * denom));
    }
    rep.ptw_worst = worst;
    rep.ptw_holds = worst <= 1.0 + 1e-12;
    return rep;
}

Weight family_generate(WeightKind kind, const WeightParams& params, uint64_t seed, const Grid& g) {
    long n = g.n();
    std::vector<double> v(static_cast<size_t>(n), 1.0);
    switch (kind) {
        case WeightKind::power: {
            // w(x) = t^a with t the normalized position in (0,1)
            for (long i = 0; i < n; ++i) {
                double t = (g.mid(i) - g.lo) / (g.hi - g.lo);
                v[static_cast<size_t>(i)] = std::pow(t, params.a);
            }
            return Weight(g, std::move(v));
        }
        case WeightKind::exp_monotone: {
            for (long i = 0; i < n; ++i)
                v[static_cast<size_t>(i)] = std::exp(params.a * g.mid(i));
            return Weight(g, std::move(v));
        }
        case WeightKind::cutoff: {
            for (long i = 0; i < n; ++i) {
                double t = (g.mid(i) - g.lo) / (g.hi - g.lo);
                v[static_cast<size_t>(i)] = std::pow(t, params.base_a);
            }
            return Weight(g, std::move(v), params.z);
        }
        case WeightKind::random_dyadic: {
            if (params.beta < 1.0)
                throw std::invalid_argument("family_generate: random_dyadic needs beta >= 1");
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> u(-std::log(params.beta), std::log(params.beta));
            // multiply an independent log-uniform factor per dyadic node,
            // from the root down to single cells
            for (int level = g.m - 1; level >= 0; --level) {
                long len = 1L << level;
                for (long s = 0; s + len <= n; s += len) {
                    double factor = std::exp(u(rng));
                    for (long i = s; i < s + len; ++i) v[static_cast<size_t>(i)] *= factor;
                }
            }
            return Weight(g, std::move(v));
        }
    }
    throw std::invalid_argument("family_generate: unknown kind");
}

void save_csv(const Weight& w, std::ostream& os) {
    os.precision(17);
    os << "# lo=" << w.grid().lo << " hi=" << w.grid().hi << " m=" << w.grid().m;
    if (w.cutoff()) os << " z=" << *w.cutoff();
    os << "\n";
    for (long i = 0; i < w.grid().n(); ++i) os << i << "," << w[i] << "\n";
}

Weight load_csv(std::istream& is) {
    std::string header;
    std::getline(is, header);
    double lo = 0, hi = 1, z = 0;
    int m = 0;
    bool has_z = false;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq);
            double val = std::stod(tok.substr(eq + 1));
            if (key == "lo") lo = val;
            else if (key == "hi") hi = val;
            else if (key == "m") m = static_cast<int>(val);
            else if (key == "z") { z = val; has_z = true; }
        }
    }
    Grid g(lo, hi, m);
    std::vector<double> v(static_cast<size_t>(g.n()), 0.0);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        long idx = std::stol(line.substr(0, comma));
        v[static_cast<size_t>(idx)] = std::stod(line.substr(comma + 1));
    }
    if (has_z) return Weight(g, std::move(v), z);
    return Weight(g, std::move(v));
}

void save_csv_file(const Weight& w, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_csv_file: cannot open " + path);
    save_csv(w, os);
}

Weight load_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_csv_file: cannot open " + path);
    return load_csv(is);
}

}  // namespace onesided
