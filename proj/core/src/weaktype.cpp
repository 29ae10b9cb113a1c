#include "onesided/weaktype.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "onesided/maximal.hpp"

namespace onesided {

namespace {

void require_nonnegative(const std::vector<double>& f, const char* who) {
    for (double v : f)
        if (!(v >= 0.0)) throw std::invalid_argument(std::string(who) + ": f must be >= 0");
}

double l1_weighted(const std::vector<double>& f, const std::vector<double>& masses, CellSpan s) {
    double total = 0.0;
    for (long i = s.begin; i < s.end; ++i)
        total += std::abs(f[static_cast<size_t>(i)]) * masses[static_cast<size_t>(i)];
    return total;
}

double l2_weighted(const std::vector<double>& f, const std::vector<double>& masses, CellSpan s) {
    double total = 0.0;
    for (long i = s.begin; i < s.end; ++i)
        total += f[static_cast<size_t>(i)] * f[static_cast<size_t>(i)] *
                 masses[static_cast<size_t>(i)];
    return std::sqrt(total);
}

// nu mass of {|g| > lambda} within I0 minus the excluded spans.
double super_level_mass(const std::vector<double>& g, double lambda,
                        const std::vector<double>& nu, CellSpan I0,
                        const std::vector<bool>& excluded) {
    double total = 0.0;
    for (long i = I0.begin; i < I0.end; ++i)
        if (!excluded[static_cast<size_t>(i)] && std::abs(g[static_cast<size_t>(i)]) > lambda)
            total += nu[static_cast<size_t>(i)];
    return total;
}

}  // namespace

std::vector<CellSpan> maximal_level_set(const std::vector<double>& f, double lambda, CellSpan I0) {
    if (lambda <= 0.0) throw std::invalid_argument("maximal_level_set: lambda must be positive");
    auto m = max_up(f, I0);
    std::vector<CellSpan> out;
    long i = I0.begin;
    while (i < I0.end) {
        if (m[static_cast<size_t>(i)] > lambda) {
            long b = i;
            while (b < I0.end && m[static_cast<size_t>(b)] > lambda) ++b;
            out.push_back({i, b});
            i = b;
        } else {
            ++i;
        }
    }
    return out;
}

CZDecomposition cz_split(const std::vector<double>& f, double lambda, CellSpan I0,
                         const Grid& grid) {
    (void)grid;
    require_nonnegative(f, "cz_split");
    CZDecomposition out;
    out.lambda = lambda;
    out.omega_intervals = maximal_level_set(f, lambda, I0);
    out.g = f;
    out.h.assign(f.size(), 0.0);
    long b0 = I0.end;
    for (const auto& I : out.omega_intervals) {
        out.extended.push_back({I.end, std::min(b0, I.end + 2 * I.cells())});
        // The component average replaces lambda so each h_j is exactly
        // mean-zero on the discrete grid.
        double avg = cell_average(f, I);
        std::vector<double> hj(f.size(), 0.0);
        for (long i = I.begin; i < I.end; ++i) {
            hj[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] - avg;
            out.g[static_cast<size_t>(i)] = avg;
            out.h[static_cast<size_t>(i)] = hj[static_cast<size_t>(i)];
        }
        out.h_parts.push_back(std::move(hj));
    }
    return out;
}

Weak11Report weak11_experiment(const OperatorMatrix& T_plain, const Weight& w,
                               const std::vector<std::vector<double>>& f_corpus) {
    CellSpan I0 = w.support();
    if (I0.empty()) throw std::domain_error("weak11_experiment: empty support");
    auto mp = MeasurePair::from_weight(w);
    Weak11Report rep;
    rep.characteristic = a1_up_local_characteristic(w, I0);
    rep.bound = rep.characteristic * std::log(std::exp(1.0) + rep.characteristic);
    auto mdw = max_down(w.values(), I0);
    for (const auto& f : f_corpus) {
        require_nonnegative(f, "weak11_experiment");
        double fn = l1_weighted(f, mp.nu, I0);
        if (fn <= 0.0) continue;
        auto mu_f = max_up(f, I0);
        double peak = 0.0;
        for (long i = I0.begin; i < I0.end; ++i)
            peak = std::max(peak, mu_f[static_cast<size_t>(i)]);
        if (peak <= 0.0) continue;
        auto Tf = onesided::apply(T_plain, f);
        for (int k = 1; k <= 6; ++k) {
            double lambda = peak / std::pow(2.0, k);
            Weak11Instance inst;
            inst.lambda = lambda;
            auto cz = cz_split(f, lambda, I0, w.grid());
            std::vector<bool> in_tilde(f.size(), false);
            for (size_t j = 0; j < cz.omega_intervals.size(); ++j) {
                for (long i = cz.omega_intervals[j].begin; i < cz.omega_intervals[j].end; ++i)
                    in_tilde[static_cast<size_t>(i)] = true;
                for (long i = cz.extended[j].begin; i < cz.extended[j].end; ++i)
                    in_tilde[static_cast<size_t>(i)] = true;
                // w(I_j+) <= 3 |I_j| Mdown w(x) for every x in I_j
                double wplus = mass(mp.nu, cz.extended[j]);
                double len = w.grid().cell() *
                             static_cast<double>(cz.omega_intervals[j].cells());
                for (long i = cz.omega_intervals[j].begin; i < cz.omega_intervals[j].end; ++i)
                    if (wplus > 3.0 * len * mdw[static_cast<size_t>(i)] * (1.0 + 1e-12))
                        inst.extended_check = false;
            }
            double w_tilde = 0.0;
            for (long i = I0.begin; i < I0.end; ++i)
                if (in_tilde[static_cast<size_t>(i)]) w_tilde += mp.nu[static_cast<size_t>(i)];
            inst.w_omega_tilde = w_tilde;
            auto Th = onesided::apply(T_plain, cz.h);
            auto Tg = onesided::apply(T_plain, cz.g);
            inst.w_E1 = super_level_mass(Th, lambda / 2.0, mp.nu, I0, in_tilde);
            inst.w_E2 = super_level_mass(Tg, lambda / 2.0, mp.nu, I0, in_tilde);
            std::vector<bool> none(f.size(), false);
            double w_level = super_level_mass(Tf, lambda, mp.nu, I0, none);
            inst.weak_value = lambda * w_level / fn;
            inst.omega_bound_ratio = rep.characteristic > 0.0
                                         ? w_tilde * lambda / (rep.characteristic * fn)
                                         : 0.0;
            rep.sup_weak = std::max(rep.sup_weak, inst.weak_value);
            rep.instances.push_back(std::move(inst));
        }
    }
    return rep;
}

namespace {

// Sh = w^{-1} Mdown(|h| w) on the support of w, zero elsewhere.
std::vector<double> apply_S(const std::vector<double>& h, const Weight& w, CellSpan I0) {
    std::vector<double> hw(h.size(), 0.0);
    for (long i = I0.begin; i < I0.end; ++i)
        hw[static_cast<size_t>(i)] = std::abs(h[static_cast<size_t>(i)]) * w[i];
    auto m = max_down(hw, I0);
    std::vector<double> out(h.size(), 0.0);
    for (long i = I0.begin; i < I0.end; ++i)
        out[static_cast<size_t>(i)] = m[static_cast<size_t>(i)] / w[i];
    return out;
}

}  // namespace

RubioReport rubio_de_francia(const std::vector<double>& h, const Weight& w, int terms) {
    if (terms < 1) throw std::invalid_argument("rubio_de_francia: terms must be >= 1");
    require_nonnegative(h, "rubio_de_francia");
    CellSpan I0 = w.support();
    auto mp = MeasurePair::from_weight(w);
    double cw = ap_up_characteristic(w, 2.0);
    RubioReport rep;
    // ||S||_{L2(w)} = ||Mdown||_{L2(w^{-1})}; a few power-style iterations
    // give the lower estimate that calibrates C.
    {
        std::vector<double> u(h.size(), 0.0);
        for (long i = I0.begin; i < I0.end; ++i) u[static_cast<size_t>(i)] = 1.0;
        double ratio = 1.0;
        for (int it = 0; it < 5; ++it) {
            auto su = apply_S(u, w, I0);
            double nu_ = l2_weighted(u, mp.nu, I0), ns = l2_weighted(su, mp.nu, I0);
            if (nu_ <= 0.0 || ns <= 0.0) break;
            ratio = ns / nu_;
            for (auto& v : su) v /= ns;
            u = std::move(su);
        }
        rep.C = std::max(1.0, ratio / cw);
    }
    double denom = 2.0 * rep.C * cw;
    std::vector<double> term = h;
    rep.Rh = h;
    double prev_norm = l2_weighted(term, mp.nu, I0);
    double last_norm = prev_norm;
    for (int k = 1; k < terms; ++k) {
        auto s = apply_S(term, w, I0);
        for (auto& v : s) v /= denom;
        double n = l2_weighted(s, mp.nu, I0);
        if (prev_norm > 0.0 && n > 0.9 * prev_norm)
            throw std::runtime_error("rubio_de_francia: series ratio above 0.9, C too small");
        for (size_t i = 0; i < s.size(); ++i) rep.Rh[i] += s[i];
        term = std::move(s);
        prev_norm = n;
        last_norm = n;
    }
    rep.tail_bound = last_norm;  // remaining terms halve at each step
    double hn = l2_weighted(h, mp.nu, I0);
    rep.norm_ratio = hn > 0.0 ? l2_weighted(rep.Rh, mp.nu, I0) / hn : 0.0;
    auto sr = apply_S(rep.Rh, w, I0);
    for (long i = I0.begin; i < I0.end; ++i)
        if (rep.Rh[static_cast<size_t>(i)] > 0.0)
            rep.a1_ratio = std::max(rep.a1_ratio, sr[static_cast<size_t>(i)] /
                                                      rep.Rh[static_cast<size_t>(i)]);
    return rep;
}

ExtrapolationReport extrapolation_check(const Weight& w, const std::vector<double>& f,
                                        const std::vector<double>& h, int terms) {
    CellSpan I0 = w.support();
    auto mp = MeasurePair::from_weight(w);
    double fn = l2_weighted(f, mp.nu, I0), hn = l2_weighted(h, mp.nu, I0);
    if (fn <= 0.0 || hn <= 0.0)
        throw std::invalid_argument("extrapolation_check: need nonzero f, h on the support");
    std::vector<double> fu = f, hu = h;
    for (auto& v : fu) v /= fn;
    for (auto& v : hu) v /= hn;
    auto rub = rubio_de_francia(hu, w, terms);
    ExtrapolationReport rep;
    rep.char_w = ap_up_characteristic(w, 2.0);
    rep.rh_norm_ratio = rub.norm_ratio;
    std::vector<double> vals(w.values().size(), 0.0);
    bool positive = true;
    for (long i = I0.begin; i < I0.end; ++i) {
        vals[static_cast<size_t>(i)] = w[i] * rub.Rh[static_cast<size_t>(i)];
        if (!(vals[static_cast<size_t>(i)] > 0.0)) positive = false;
    }
    rep.positive = positive;
    if (!positive)
        throw std::domain_error("extrapolation_check: w*Rh vanishes; use a positive seed h");
    Weight wRh(w.grid(), vals, w.cutoff());
    rep.char_wRh = a1_up_local_characteristic(wRh, I0);
    auto mpr = MeasurePair::from_weight(wRh);
    rep.f_l1_wRh = l1_weighted(fu, mpr.nu, I0);
    return rep;
}

TwoWeightReport two_weight_maximal_check(const Weight& u, const Weight& v, CellSpan I0,
                                         const std::vector<std::vector<double>>& f_corpus) {
    TwoWeightReport rep;
    auto mdu = max_down(u.values(), I0);
    for (long i = I0.begin; i < I0.end; ++i) {
        if (!(v[i] > 0.0)) throw std::domain_error("two_weight_maximal_check: v vanishes on I0");
        rep.C = std::max(rep.C, mdu[static_cast<size_t>(i)] / v[i]);
    }
    double h = u.grid().cell();
    const double rel = 1.0 + 1e-9;
    for (const auto& f : f_corpus) {
        require_nonnegative(f, "two_weight_maximal_check");
        double fv = 0.0;
        for (long i = I0.begin; i < I0.end; ++i)
            fv += f[static_cast<size_t>(i)] * v[i] * h;
        if (fv <= 0.0) continue;
        auto mf = max_up(f, I0);
        double peak = 0.0;
        for (long i = I0.begin; i < I0.end; ++i)
            peak = std::max(peak, mf[static_cast<size_t>(i)]);
        if (peak <= 0.0) continue;
        for (int k = 1; k <= 5; ++k) {
            double lambda = peak / std::pow(2.0, k);
            auto comps = maximal_level_set(f, lambda, I0);
            double u_omega = 0.0;
            for (const auto& I : comps) {
                TwoWeightInterval rec;
                rec.I = I;
                // auxiliary decreasing weight: running min of Mdown(chi_I u)
                std::vector<double> uI(u.values().size(), 0.0);
                for (long i = I.begin; i < I.end; ++i) uI[static_cast<size_t>(i)] = u[i];
                auto md = max_down(uI, I0);
                std::vector<double> waux(static_cast<size_t>(I.cells()));
                double running = md[static_cast<size_t>(I.begin)];
                double uw = 0.0, ww = 0.0, fwa = 0.0, wa = 0.0;
                double fsum = 0.0;
                for (long i = I.begin; i < I.end; ++i) {
                    running = std::min(running, md[static_cast<size_t>(i)]);
                    double wx = running;
                    waux[static_cast<size_t>(i - I.begin)] = wx;
                    uw += u[i] * h;
                    ww += wx * h;
                    fwa += f[static_cast<size_t>(i)] * wx * h;
                    wa += wx * h;
                    fsum += f[static_cast<size_t>(i)];
                    if (fsum * rel < lambda * static_cast<double>(i - I.begin + 1))
                        rec.prefix_at_least = false;
                }
                for (size_t t = 1; t < waux.size(); ++t)
                    if (waux[t] > waux[t - 1] * rel) rec.w_nonincreasing = false;
                if (uw > ww * rel) rec.mass_dominated = false;
                if (fwa * rel < lambda * wa) rec.weighted_avg = false;
                rep.all_checks = rep.all_checks && rec.w_nonincreasing && rec.mass_dominated &&
                                 rec.prefix_at_least && rec.weighted_avg;
                rep.intervals.push_back(rec);
                for (long i = I.begin; i < I.end; ++i) u_omega += u[i] * h;
            }
            rep.sup_weak = std::max(rep.sup_weak, lambda * u_omega / fv);
        }
    }
    return rep;
}

double proof_parameter_factor(double c, double C) {
    double p = 1.0 + 1.0 / std::log(std::exp(1.0) + c);
    double r = 1.0 + 1.0 / (C * c);
    double pp = p / (p - 1.0);
    double rp = r / (r - 1.0);
    return std::pow(p * pp * std::pow(rp, 1.0 / pp), p);
}

}  // namespace onesided
