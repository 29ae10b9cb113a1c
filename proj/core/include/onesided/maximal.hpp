#pragma once

#include <vector>

#include "onesided/weight.hpp"

namespace onesided {

/// One-sided Hardy-Littlewood maximal operators on whole-cell windows.
/// max_up averages backward windows ending at each cell (window left edge
/// stays inside I0); max_down averages forward windows starting at each
/// cell. Entries outside I0 are NaN.
///
/// The sweep runs in O(n log n) via a convex hull of prefix sums; the
/// naive O(n^2) scans are kept as test oracles.
std::vector<double> max_up(const std::vector<double>& f, CellSpan I0);
std::vector<double> max_down(const std::vector<double>& f, CellSpan I0);

std::vector<double> max_up_naive(const std::vector<double>& f, CellSpan I0);
std::vector<double> max_down_naive(const std::vector<double>& f, CellSpan I0);

/// r-variants: (M |f|^r)^(1/r).
std::vector<double> max_up_r(const std::vector<double>& f, CellSpan I0, double r);
std::vector<double> max_down_r(const std::vector<double>& f, CellSpan I0, double r);

/// Lower estimate of ||max_up||_{L2(w) -> L2(w)} on the support of w, by
/// randomized maximization over indicators, spikes, and random positive f.
double maximal_opnorm_estimate(const Weight& w, int trials, uint64_t seed);

}  // namespace onesided
