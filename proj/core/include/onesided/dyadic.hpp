#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace onesided {

/// Uniform discretization of [lo, hi) into n = 2^m half-open cells.
struct Grid {
    double lo = 0.0;
    double hi = 1.0;
    int m = 0;

    Grid() = default;
    Grid(double lo_, double hi_, int m_) : lo(lo_), hi(hi_), m(m_) {
        if (m < 1 || hi <= lo) throw std::invalid_argument("Grid: need hi > lo and m >= 1");
    }

    long n() const { return 1L << m; }
    double cell() const { return (hi - lo) / static_cast<double>(n()); }
    double left(long i) const { return lo + cell() * static_cast<double>(i); }
    double right(long i) const { return lo + cell() * static_cast<double>(i + 1); }
    double mid(long i) const { return lo + cell() * (static_cast<double>(i) + 0.5); }
};

/// Interval made of 2^level whole cells starting at cell index `start`.
struct DyadicInterval {
    int level = 0;
    long start = 0;

    long len_cells() const { return 1L << level; }
    long end() const { return start + len_cells(); }  // one past last cell

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

inline double length(const Grid& g, const DyadicInterval& I) {
    return g.cell() * static_cast<double>(I.len_cells());
}
inline double left(const Grid& g, const DyadicInterval& I) { return g.left(I.start); }
inline double right(const Grid& g, const DyadicInterval& I) { return g.left(I.end()); }
inline double center(const Grid& g, const DyadicInterval& I) {
    return 0.5 * (left(g, I) + right(g, I));
}
inline bool contains(const DyadicInterval& I, const DyadicInterval& J) {
    return J.start >= I.start && J.end() <= I.end();
}
inline bool overlaps(const DyadicInterval& I, const DyadicInterval& J) {
    return I.start < J.end() && J.start < I.end();
}

/// A dyadic lattice shifted by a whole number of cells. Intervals of the
/// lattice at level k start at indices congruent to shift_cells mod 2^k.
struct Lattice {
    long shift_cells = 0;

    /// Snap a real shift omega (in physical units) to whole cells.
    static Lattice from_shift(const Grid& g, double omega) {
        return Lattice{static_cast<long>(std::lround(omega / g.cell()))};
    }

    bool member(const DyadicInterval& I) const {
        long r = (I.start - shift_cells) % I.len_cells();
        return r == 0;
    }
};

/// All lattice intervals of the given level fully inside the grid.
std::vector<DyadicInterval> intervals_at_level(const Grid& g, const Lattice& lat, int level);

/// All lattice intervals with level in [min_level, max_level] inside the grid.
std::vector<DyadicInterval> all_intervals(const Grid& g, const Lattice& lat,
                                          int min_level = 0, int max_level = -1);

/// Lower and upper halves of a divisible interval.
std::pair<DyadicInterval, DyadicInterval> halves(const DyadicInterval& I);

/// delta = eps / (2 (d + eps)); chosen so that eps - delta (d + eps) = eps/2.
double delta_from_eps(double eps, int d = 1);

/// Gap between the closed hulls of I and J (0 when they touch or overlap).
double dist(const Grid& g, const DyadicInterval& I, const DyadicInterval& J);

/// Distance from the two endpoints of I to the closed hull of J, minimized.
double boundary_dist(const Grid& g, const DyadicInterval& I, const DyadicInterval& J);

/// J (in the nu lattice) is r-bad if some I in the mu lattice with
/// l(I) >= 2^r l(J) has dist(bd I, J) <= l(J)^delta l(I)^(1-delta).
/// Scales larger than the ambient grid are not scanned.
bool is_bad(const Grid& g, const DyadicInterval& J, const Lattice& mu_lattice,
            int r, double delta);

/// Checks l(J)^eps / dist(x,J)^(1+eps) <= (l(J)/l(I))^(eps/2) l(I)^(-1)
/// at a boundary point x of I. Singular when x touches J.
bool good_estimate_check(const Grid& g, const DyadicInterval& I, const DyadicInterval& J,
                         double x, double eps, double delta);

enum class RegionTag { JltI, IltJ, Diagonal, I1, I2, I3, I4, I5, I6 };

const char* to_string(RegionTag t);

/// Classifies a pair of intervals from opposing lattices. Pairs excluded by
/// the goodness restriction fall into the residual tags: IltJ for ordered
/// pairs outside I1-I4, Diagonal for overlapping pairs outside I5/I6.
RegionTag region_classify(const Grid& g, const DyadicInterval& I, const DyadicInterval& J,
                          int r, bool good_J, bool good_I);

}  // namespace onesided
