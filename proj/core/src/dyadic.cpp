#include "onesided/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace onesided {

std::vector<DyadicInterval> intervals_at_level(const Grid& g, const Lattice& lat, int level) {
    std::vector<DyadicInterval> out;
    if (level < 0 || level > g.m) return out;
    long L = 1L << level;
    long s0 = ((lat.shift_cells % L) + L) % L;
    for (long s = s0; s + L <= g.n(); s += L) out.push_back({level, s});
    return out;
}

std::vector<DyadicInterval> all_intervals(const Grid& g, const Lattice& lat,
                                          int min_level, int max_level) {
    if (max_level < 0) max_level = g.m;
    std::vector<DyadicInterval> out;
    for (int k = min_level; k <= max_level; ++k) {
        auto lvl = intervals_at_level(g, lat, k);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
}

std::pair<DyadicInterval, DyadicInterval> halves(const DyadicInterval& I) {
    if (I.level < 1) throw std::domain_error("halves: single-cell interval is indivisible");
    long half = I.len_cells() / 2;
    return {DyadicInterval{I.level - 1, I.start}, DyadicInterval{I.level - 1, I.start + half}};
}

double delta_from_eps(double eps, int d) {
    if (eps <= 0) throw std::domain_error("delta_from_eps: eps must be positive");
    return eps / (2.0 * (static_cast<double>(d) + eps));
}

double dist(const Grid& g, const DyadicInterval& I, const DyadicInterval& J) {
    long gap = std::max({J.start - I.end(), I.start - J.end(), 0L});
    return g.cell() * static_cast<double>(gap);
}

double boundary_dist(const Grid& g, const DyadicInterval& I, const DyadicInterval& J) {
    double aJ = left(g, J), bJ = right(g, J);
    auto point_dist = [&](double x) { return std::max({aJ - x, x - bJ, 0.0}); };
    return std::min(point_dist(left(g, I)), point_dist(right(g, I)));
}

bool is_bad(const Grid& g, const DyadicInterval& J, const Lattice& mu_lattice,
            int r, double delta) {
    double lJ = length(g, J);
    for (int levelI = J.level + r; levelI <= g.m; ++levelI) {
        double lI = g.cell() * static_cast<double>(1L << levelI);
        double threshold = std::pow(lJ, delta) * std::pow(lI, 1.0 - delta);
        for (const auto& I : intervals_at_level(g, mu_lattice, levelI)) {
            if (boundary_dist(g, I, J) <= threshold) return true;
        }
    }
    return false;
}

bool good_estimate_check(const Grid& g, const DyadicInterval& I, const DyadicInterval& J,
                         double x, double eps, double delta) {
    (void)delta;
    double aJ = left(g, J), bJ = right(g, J);
    double d = std::max({aJ - x, x - bJ, 0.0});
    if (d == 0.0) throw std::domain_error("good_estimate_check: x touches J");
    double lJ = length(g, J), lI = length(g, I);
    double lhs = std::pow(lJ, eps) / std::pow(d, 1.0 + eps);
    double rhs = std::pow(lJ / lI, 0.5 * eps) / lI;
    return lhs <= rhs;
}

const char* to_string(RegionTag t) {
    switch (t) {
        case RegionTag::JltI: return "JltI";
        case RegionTag::IltJ: return "IltJ";
        case RegionTag::Diagonal: return "Diagonal";
        case RegionTag::I1: return "I1";
        case RegionTag::I2: return "I2";
        case RegionTag::I3: return "I3";
        case RegionTag::I4: return "I4";
        case RegionTag::I5: return "I5";
        case RegionTag::I6: return "I6";
    }
    return "?";
}

RegionTag region_classify(const Grid& g, const DyadicInterval& I, const DyadicInterval& J,
                          int r, bool good_J, bool good_I) {
    (void)g;
    long lenI = I.len_cells(), lenJ = J.len_cells();
    // J entirely below I: vanishing region for an upward kernel.
    if (J.end() <= I.start) return RegionTag::JltI;

    bool comparable = std::abs(I.level - J.level) <= r;
    long gap = std::max(J.start - I.end(), 0L);  // only I < J remains possible
    bool disjoint = I.end() <= J.start;
    bool close = (disjoint ? gap : 0L) <= lenI + lenJ;

    if (comparable && close) return RegionTag::Diagonal;

    if (disjoint) {
        if (gap >= lenI + lenJ) return lenJ <= lenI ? RegionTag::I1 : RegionTag::I2;
        if (I.level > J.level) return good_J ? RegionTag::I3 : RegionTag::IltJ;
        return good_I ? RegionTag::I4 : RegionTag::IltJ;
    }

    // Overlapping, non-comparable sides.
    if (I.level > J.level) return good_J ? RegionTag::I5 : RegionTag::Diagonal;
    return good_I ? RegionTag::I6 : RegionTag::Diagonal;
}

}  // namespace onesided
