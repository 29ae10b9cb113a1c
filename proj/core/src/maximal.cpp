#include "onesided/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace onesided {

namespace {

// Maximum average over suffix windows of each prefix of vals. For index q
// (0-based within the span), returns max over 0 <= j <= q of
// mean(vals[j..q]). Convex hull of prefix-sum points (j, P_j); the best j
// maximizes the slope to (q+1, P_{q+1}), located by binary search.
std::vector<double> best_suffix_average(const std::vector<double>& vals) {
    long n = static_cast<long>(vals.size());
    std::vector<double> prefix(static_cast<size_t>(n) + 1, 0.0);
    for (long i = 0; i < n; ++i)
        prefix[static_cast<size_t>(i) + 1] = prefix[static_cast<size_t>(i)] + std::abs(vals[static_cast<size_t>(i)]);

    std::vector<double> out(static_cast<size_t>(n));
    std::vector<long> hull;  // indices into prefix, lower convex hull
    auto cross = [&](long a, long b, long c) {
        // sign of (b-a) x (c-a) for points (i, prefix[i])
        double x1 = static_cast<double>(b - a), y1 = prefix[static_cast<size_t>(b)] - prefix[static_cast<size_t>(a)];
        double x2 = static_cast<double>(c - a), y2 = prefix[static_cast<size_t>(c)] - prefix[static_cast<size_t>(a)];
        return x1 * y2 - x2 * y1;
    };
    for (long q = 0; q < n; ++q) {
        // push point (q, prefix[q]) keeping the hull lower-convex
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0.0)
            hull.pop_back();
        hull.push_back(q);

        long rq = q + 1;
        double ry = prefix[static_cast<size_t>(rq)];
        auto slope = [&](size_t t) {
            long j = hull[t];
            return (ry - prefix[static_cast<size_t>(j)]) / static_cast<double>(rq - j);
        };
        size_t lo = 0, hi = hull.size() - 1;
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (slope(mid + 1) >= slope(mid))
                lo = mid + 1;
            else
                hi = mid;
        }
        out[static_cast<size_t>(q)] = slope(lo);
    }
    return out;
}

std::vector<double> masked(const std::vector<double>& f) {
    return std::vector<double>(f.size(), std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

std::vector<double> max_up(const std::vector<double>& f, CellSpan I0) {
    std::vector<double> out = masked(f);
    std::vector<double> window(f.begin() + I0.begin, f.begin() + I0.end);
    auto best = best_suffix_average(window);
    for (long i = 0; i < I0.cells(); ++i)
        out[static_cast<size_t>(I0.begin + i)] = best[static_cast<size_t>(i)];
    return out;
}

std::vector<double> max_down(const std::vector<double>& f, CellSpan I0) {
    std::vector<double> out = masked(f);
    std::vector<double> window(f.begin() + I0.begin, f.begin() + I0.end);
    std::vector<double> rev(window.rbegin(), window.rend());
    auto best = best_suffix_average(rev);
    for (long i = 0; i < I0.cells(); ++i)
        out[static_cast<size_t>(I0.end - 1 - i)] = best[static_cast<size_t>(i)];
    return out;
}

std::vector<double> max_up_naive(const std::vector<double>& f, CellSpan I0) {
    std::vector<double> out = masked(f);
    for (long i = I0.begin; i < I0.end; ++i) {
        double best = 0.0, sum = 0.0;
        for (long j = i; j >= I0.begin; --j) {
            sum += std::abs(f[static_cast<size_t>(j)]);
            best = std::max(best, sum / static_cast<double>(i - j + 1));
        }
        out[static_cast<size_t>(i)] = best;
    }
    return out;
}

std::vector<double> max_down_naive(const std::vector<double>& f, CellSpan I0) {
    std::vector<double> out = masked(f);
    for (long i = I0.begin; i < I0.end; ++i) {
        double best = 0.0, sum = 0.0;
        for (long j = i; j < I0.end; ++j) {
            sum += std::abs(f[static_cast<size_t>(j)]);
            best = std::max(best, sum / static_cast<double>(j - i + 1));
        }
        out[static_cast<size_t>(i)] = best;
    }
    return out;
}

namespace {
std::vector<double> power_of(const std::vector<double>& f, double r) {
    std::vector<double> g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = std::pow(std::abs(f[i]), r);
    return g;
}
std::vector<double> root_of(std::vector<double> g, double r) {
    for (auto& v : g) v = std::pow(v, 1.0 / r);
    return g;
}
}  // namespace

std::vector<double> max_up_r(const std::vector<double>& f, CellSpan I0, double r) {
    return root_of(max_up(power_of(f, r), I0), r);
}

std::vector<double> max_down_r(const std::vector<double>& f, CellSpan I0, double r) {
    return root_of(max_down(power_of(f, r), I0), r);
}

double maximal_opnorm_estimate(const Weight& w, int trials, uint64_t seed) {
    CellSpan sup = w.support();
    long n = sup.cells();
    double h = w.grid().cell();
    auto ratio = [&](const std::vector<double>& f) {
        double nf = 0.0;
        for (long i = sup.begin; i < sup.end; ++i)
            nf += f[static_cast<size_t>(i)] * f[static_cast<size_t>(i)] * w[i] * h;
        if (nf <= 0.0) return 0.0;
        auto mf = max_up(f, sup);
        double nm = 0.0;
        for (long i = sup.begin; i < sup.end; ++i)
            nm += mf[static_cast<size_t>(i)] * mf[static_cast<size_t>(i)] * w[i] * h;
        return std::sqrt(nm / nf);
    };
    double best = 0.0;
    std::vector<double> f(w.values().size(), 0.0);
    // spikes and prefix indicators
    for (long i = sup.begin; i < sup.end; ++i) {
        std::fill(f.begin(), f.end(), 0.0);
        f[static_cast<size_t>(i)] = 1.0;
        best = std::max(best, ratio(f));
    }
    for (long e = sup.begin + 1; e <= sup.end; e += std::max(1L, n / 64)) {
        std::fill(f.begin(), f.end(), 0.0);
        for (long i = sup.begin; i < e; ++i) f[static_cast<size_t>(i)] = 1.0;
        best = std::max(best, ratio(f));
    }
    // random positive profiles, including w^{-1}-shaped ones
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        std::fill(f.begin(), f.end(), 0.0);
        bool shape = t % 2 == 0;
        for (long i = sup.begin; i < sup.end; ++i)
            f[static_cast<size_t>(i)] = unif(rng) * (shape ? 1.0 / w[i] : 1.0);
        best = std::max(best, ratio(f));
    }
    return best;
}

}  // namespace onesided
