#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace onesided {

enum class KernelDirection { up, down };

/// A causal Calderon-Zygmund kernel: K(x,y) = 0 for x < y (up), size bound
/// |K| <= C_size/|x-y|, and Holder-type smoothness of order eps.
struct CausalKernel {
    std::function<double(double, double)> K;
    double C_size = 1.0;
    double eps = 1.0;
    KernelDirection direction = KernelDirection::up;
    std::string name = "custom";
};

CausalKernel causal_hilbert();
CausalKernel causal_log_oscillating();

/// Transposed kernel K'(x,y) = K(y,x); flips the direction.
CausalKernel transpose(const CausalKernel& k);

struct KernelAxiomReport {
    double worst_causality = 0.0;    // largest |K(x,y)| sampled on the vanishing side
    double worst_size_ratio = 0.0;   // sup |K| |x-y| / C_size
    double worst_smooth_ratio = 0.0; // sup smoothness quotient / C_size
    bool causal_ok = true;
    bool size_ok = true;
    bool smooth_ok = true;
};

/// Monte-Carlo check of the three kernel axioms over [lo, hi], with local
/// refinement around the worst sampled configuration.
KernelAxiomReport kernel_axioms_check(const CausalKernel& k, int samples, uint64_t seed,
                                      double lo = 0.0, double hi = 1.0);

}  // namespace onesided
