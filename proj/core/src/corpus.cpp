#include "onesided/corpus.hpp"

#include <cmath>
#include <cstring>
#include <random>

namespace onesided {

NamedWeights standard_corpus(const Grid& g) {
    NamedWeights out;
    auto add = [&](const std::string& id, WeightKind kind, const WeightParams& p, uint64_t seed) {
        out.emplace_back(id, family_generate(kind, p, seed, g));
    };
    for (int k = 0; k < 30; ++k) {
        double a = -0.9 + 1.85 * static_cast<double>(k) / 29.0;
        add("power_" + std::to_string(k), WeightKind::power, {.a = a}, 0);
    }
    for (int k = 0; k < 20; ++k) {
        double a = -10.0 + 20.0 * static_cast<double>(k) / 19.0;
        add("exp_" + std::to_string(k), WeightKind::exp_monotone, {.a = a}, 0);
    }
    {
        const double fracs[] = {0.3, 0.5, 0.7, 0.9};
        const double bases[] = {-0.9, -0.5, 0.0, 0.5, 0.9};
        int k = 0;
        for (double fr : fracs)
            for (double ba : bases) {
                double z = g.lo + fr * (g.hi - g.lo);
                add("cutoff_" + std::to_string(k++), WeightKind::cutoff,
                    {.z = z, .base_a = ba}, 0);
            }
    }
    {
        int k = 0;
        for (double beta : {2.0, 4.0, 8.0})
            for (uint64_t seed = 1; seed <= 10; ++seed)
                add("rdyadic_" + std::to_string(k++), WeightKind::random_dyadic,
                    {.beta = beta}, seed);
    }
    return out;
}

NamedWeights sparse_corpus(const Grid& g) {
    NamedWeights out;
    int k = 0;
    for (double beta : {2.0, 4.0, 8.0})
        for (uint64_t seed = 11; seed <= 15; ++seed)
            out.emplace_back("sparse_rdyadic_" + std::to_string(k++),
                             family_generate(WeightKind::random_dyadic, {.beta = beta}, seed, g));
    return out;
}

NamedWeights power_sweep_corpus(const Grid& g, int count, double max_exponent) {
    NamedWeights out;
    out.emplace_back("sweep_power_0", family_generate(WeightKind::power, {.a = 0.0}, 0, g));
    // exponents spaced linearly up to max_exponent; the characteristic grows
    // roughly geometrically in the exponent once it exceeds 1
    for (int k = 1; k < count; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(count - 1);
        double a = max_exponent * t;
        out.emplace_back("sweep_power_" + std::to_string(k),
                         family_generate(WeightKind::power, {.a = a}, 0, g));
    }
    return out;
}

std::vector<std::vector<double>> function_corpus(const Grid& g, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    long n = g.n();
    std::vector<std::vector<double>> out;
    for (int t = 0; t < count; ++t) {
        std::vector<double> f(static_cast<size_t>(n), 0.0);
        switch (t % 5) {
            case 0: {  // indicator of a random dyadic interval
                int level = 1 + static_cast<int>(rng() % static_cast<uint64_t>(g.m));
                long len = 1L << level;
                long start = static_cast<long>(rng() % static_cast<uint64_t>(n / len)) * len;
                for (long i = start; i < start + len; ++i) f[static_cast<size_t>(i)] = 1.0;
                break;
            }
            case 1: {  // triangular bump
                long c = static_cast<long>(rng() % static_cast<uint64_t>(n));
                long r = 1 + static_cast<long>(rng() % static_cast<uint64_t>(n / 4 + 1));
                for (long i = 0; i < n; ++i) {
                    double d = 1.0 - static_cast<double>(std::labs(i - c)) / static_cast<double>(r);
                    if (d > 0.0) f[static_cast<size_t>(i)] = d;
                }
                break;
            }
            case 2: {  // single spike
                long c = static_cast<long>(rng() % static_cast<uint64_t>(n));
                f[static_cast<size_t>(c)] = 1.0 + 9.0 * unif(rng);
                break;
            }
            case 3:  // uniform random profile
                for (long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = unif(rng);
                break;
            default: {  // sparse random spikes
                int spikes = 3 + static_cast<int>(rng() % 5);
                for (int s = 0; s < spikes; ++s) {
                    long c = static_cast<long>(rng() % static_cast<uint64_t>(n));
                    f[static_cast<size_t>(c)] += 1.0 + 4.0 * unif(rng);
                }
                break;
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

uint64_t corpus_hash(const NamedWeights& weights) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const void* data, size_t len) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [id, w] : weights) {
        mix(id.data(), id.size());
        for (double v : w.values()) {
            uint64_t bits;
            std::memcpy(&bits, &v, sizeof(bits));
            mix(&bits, sizeof(bits));
        }
    }
    return h;
}

}  // namespace onesided
