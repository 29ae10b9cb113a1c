#include "onesided/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace onesided {

CausalKernel causal_hilbert() {
    CausalKernel k;
    k.K = [](double x, double y) { return x > y ? 1.0 / (x - y) : 0.0; };
    k.C_size = 1.0;
    k.eps = 1.0;
    k.name = "hilbert";
    return k;
}

CausalKernel causal_log_oscillating() {
    CausalKernel k;
    k.K = [](double x, double y) {
        if (x <= y) return 0.0;
        double t = x - y;
        double lg = std::log(t);
        return std::sin(lg) / (t * (1.0 + std::abs(lg)));
    };
    k.C_size = 1.0;
    k.eps = 0.5;
    k.name = "log_oscillating";
    return k;
}

CausalKernel transpose(const CausalKernel& k) {
    CausalKernel t = k;
    auto K = k.K;
    t.K = [K](double x, double y) { return K(y, x); };
    t.direction = k.direction == KernelDirection::up ? KernelDirection::down : KernelDirection::up;
    t.name = k.name + "_transposed";
    return t;
}

KernelAxiomReport kernel_axioms_check(const CausalKernel& k, int samples, uint64_t seed,
                                      double lo, double hi) {
    KernelAxiomReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::uniform_real_distribution<double> us(-1.0, 1.0);

    bool up = k.direction == KernelDirection::up;
    auto ordered = [&](double x, double y) { return up ? x > y : x < y; };

    double worst_smooth_x = 0, worst_smooth_y = 0, worst_smooth_h = 0;
    for (int s = 0; s < samples; ++s) {
        double x = u(rng), y = u(rng);
        if (x == y) continue;
        if (!ordered(x, y)) {
            rep.worst_causality = std::max(rep.worst_causality, std::abs(k.K(x, y)));
            continue;
        }
        double d = std::abs(x - y);
        rep.worst_size_ratio = std::max(rep.worst_size_ratio, std::abs(k.K(x, y)) * d / k.C_size);

        double h = us(rng) * 0.5 * d;
        if (!ordered(x + h, y)) continue;
        double num = std::abs(k.K(x, y) - k.K(x + h, y)) + std::abs(k.K(x, y) - k.K(x, y - h));
        if (!ordered(x, y - h)) continue;
        double ratio = num * std::pow(d, 1.0 + k.eps) / (std::pow(std::abs(h), k.eps) * k.C_size);
        if (ratio > rep.worst_smooth_ratio) {
            rep.worst_smooth_ratio = ratio;
            worst_smooth_x = x;
            worst_smooth_y = y;
            worst_smooth_h = h;
        }
    }

    // local refinement around the worst smoothness configuration
    if (rep.worst_smooth_ratio > 0.0) {
        std::normal_distribution<double> jitter(0.0, 1.0);
        double scale = 0.05 * (hi - lo);
        for (int s = 0; s < samples / 4; ++s) {
            double x = worst_smooth_x + scale * jitter(rng);
            double y = worst_smooth_y + scale * jitter(rng);
            double hh = worst_smooth_h * (1.0 + 0.2 * jitter(rng));
            if (!ordered(x, y)) continue;
            double d = std::abs(x - y);
            if (std::abs(hh) > 0.5 * d || hh == 0.0) continue;
            if (!ordered(x + hh, y) || !ordered(x, y - hh)) continue;
            double num = std::abs(k.K(x, y) - k.K(x + hh, y)) + std::abs(k.K(x, y) - k.K(x, y - hh));
            double ratio = num * std::pow(d, 1.0 + k.eps) / (std::pow(std::abs(hh), k.eps) * k.C_size);
            rep.worst_smooth_ratio = std::max(rep.worst_smooth_ratio, ratio);
        }
    }

    rep.causal_ok = rep.worst_causality == 0.0;
    rep.size_ok = rep.worst_size_ratio <= 1.0 + 1e-12;
    rep.smooth_ok = std::isfinite(rep.worst_smooth_ratio);
    return rep;
}

}  // namespace onesided
