#include "onesided/haar.hpp"

namespace onesided {

double inner_product(const std::vector<double>& f, const std::vector<double>& g,
                     const std::vector<double>& lambda) {
    double total = 0.0;
    for (size_t i = 0; i < f.size(); ++i) total += f[i] * g[i] * lambda[i];
    return total;
}

double norm_sq(const std::vector<double>& f, const std::vector<double>& lambda) {
    return inner_product(f, f, lambda);
}

double measure_average(const std::vector<double>& f, const std::vector<double>& lambda,
                       CellSpan s) {
    double num = 0.0, den = 0.0;
    for (long i = s.begin; i < s.end; ++i) {
        num += f[static_cast<size_t>(i)] * lambda[static_cast<size_t>(i)];
        den += lambda[static_cast<size_t>(i)];
    }
    return den > 0.0 ? num / den : 0.0;
}

HaarComponent haar_project(const std::vector<double>& f, const DyadicInterval& I,
                           const std::vector<double>& lambda) {
    HaarComponent out;
    out.values.assign(f.size(), 0.0);
    auto [lo_half, hi_half] = halves(I);
    double mlo = mass(lambda, span_of(lo_half));
    double mhi = mass(lambda, span_of(hi_half));
    if (mlo == 0.0 || mhi == 0.0) {
        out.degenerate = true;
        return out;
    }
    double parent = measure_average(f, lambda, span_of(I));
    double alo = measure_average(f, lambda, span_of(lo_half)) - parent;
    double ahi = measure_average(f, lambda, span_of(hi_half)) - parent;
    for (long i = lo_half.start; i < lo_half.end(); ++i) out.values[static_cast<size_t>(i)] = alo;
    for (long i = hi_half.start; i < hi_half.end(); ++i) out.values[static_cast<size_t>(i)] = ahi;
    return out;
}

std::pair<std::vector<double>, std::vector<double>> mean_split(
    const std::vector<double>& f, const std::vector<double>& lambda, CellSpan I0) {
    double avg = measure_average(f, lambda, I0);
    std::vector<double> f1(f.size(), 0.0), f2(f.size(), 0.0);
    for (long i = I0.begin; i < I0.end; ++i) {
        f1[static_cast<size_t>(i)] = avg;
        f2[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] - avg;
    }
    return {std::move(f1), std::move(f2)};
}

namespace {
void accumulate_tree(const std::vector<double>& f, const DyadicInterval& S,
                     const std::vector<double>& lambda, std::vector<double>& acc) {
    if (S.level < 1) return;
    auto d = haar_project(f, S, lambda);
    if (!d.degenerate) {
        for (long i = S.start; i < S.end(); ++i)
            acc[static_cast<size_t>(i)] += d.values[static_cast<size_t>(i)];
    }
    auto [lo_half, hi_half] = halves(S);
    accumulate_tree(f, lo_half, lambda, acc);
    accumulate_tree(f, hi_half, lambda, acc);
}
}  // namespace

std::vector<double> project_tree(const std::vector<double>& f, const DyadicInterval& S,
                                 const std::vector<double>& lambda) {
    std::vector<double> acc(f.size(), 0.0);
    accumulate_tree(f, S, lambda, acc);
    return acc;
}

}  // namespace onesided
