#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "onesided/weight.hpp"

namespace onesided {

using NamedWeights = std::vector<std::pair<std::string, Weight>>;

/// The frozen 100-weight corpus: power, exponential, cutoff, and
/// random-dyadic families with fixed seeds. Deterministic for a given grid.
NamedWeights standard_corpus(const Grid& g);

/// Random-dyadic weights with multiplier ranges beta in {2, 4, 8}, five
/// seeds each; the sparse-machinery corpus.
NamedWeights sparse_corpus(const Grid& g);

/// Power weights t^a with a spaced linearly in [0, max_exponent], for
/// scaling sweeps. The default top exponent reaches characteristics near
/// 1e4 at m = 10; exponents above 1 are fine on a discrete grid.
NamedWeights power_sweep_corpus(const Grid& g, int count, double max_exponent = 2.1);

/// Deterministic nonnegative test functions: indicators, bumps, spikes,
/// and uniform-random profiles.
std::vector<std::vector<double>> function_corpus(const Grid& g, int count, uint64_t seed);

/// FNV-1a hash over the cell values of every weight, for tagging fitted
/// constants with the corpus they were fitted on.
uint64_t corpus_hash(const NamedWeights& weights);

}  // namespace onesided
