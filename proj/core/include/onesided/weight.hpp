#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "onesided/dyadic.hpp"

namespace onesided {

/// Contiguous run of cells [begin, end). Not necessarily dyadic.
struct CellSpan {
    long begin = 0;
    long end = 0;

    long cells() const { return end - begin; }
    bool empty() const { return end <= begin; }
    friend bool operator==(const CellSpan&, const CellSpan&) = default;
};

inline CellSpan span_of(const DyadicInterval& I) { return {I.start, I.end()}; }

/// An upward weight: positive cell values on the lower half-line H, zero
/// strictly above the optional cutoff z.
class Weight {
public:
    Weight(Grid grid, std::vector<double> values, std::optional<double> cutoff = {});

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](long i) const { return values_[static_cast<size_t>(i)]; }
    std::optional<double> cutoff() const { return cutoff_; }

    /// Number of cells in H (the support prefix).
    long support_cells() const { return support_cells_; }
    CellSpan support() const { return {0, support_cells_}; }

    Weight reciprocal() const;
    /// Pointwise product with a positive multiplier sampled per cell.
    Weight scaled_by(const std::vector<double>& factor) const;

private:
    Grid grid_;
    std::vector<double> values_;
    std::optional<double> cutoff_;
    long support_cells_;
};

/// Cell masses mu_j = cell/w_j and nu_j = cell*w_j on H, zero above.
struct MeasurePair {
    Grid grid;
    std::vector<double> mu;
    std::vector<double> nu;
    long support_cells = 0;

    static MeasurePair from_weight(const Weight& w);
};

double mass(const std::vector<double>& masses, CellSpan s);

/// Mean of cell values over a span.
double cell_average(const std::vector<double>& values, CellSpan s);

/// sup over dyadic I in H (>= 2 cells) of <w>_{I+} <w^{-1}>_{1/(p-1),I-}.
double ap_up_characteristic(const Weight& w, double p,
                            std::optional<CellSpan> restrict_to = {},
                            const Lattice& lat = {});

/// Classical A_p characteristic: both averages over the full interval.
double ap_classical(const Weight& w, double p,
                    std::optional<CellSpan> restrict_to = {},
                    const Lattice& lat = {});

/// [w]_{A1^(I0)}: sup over x in I0 of Mdown_{I0} w(x) / w(x).
double a1_up_local_characteristic(const Weight& w, CellSpan I0);

/// Cross-check form of the local A1 characteristic by exhaustive (c,x,d)
/// scan. O(n^3); intended for small grids only.
double a1_up_local_scan(const Weight& w, CellSpan I0);

/// sup over dyadic Q in H of mu(Q-) nu(Q+) / (|Q-| |Q+|). Coincides
/// algebraically with ap_up_characteristic(w, 2) on the same intervals.
double joint_characteristic(const MeasurePair& mp, const Lattice& lat = {});

struct ReverseHolderReport {
    double r = 1.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double ptw_worst = 0.0;  // worst ratio M_r / (2 M) over I0
    bool ptw_holds = false;
};

/// Lemma-style reverse Holder check on I = (a,b) within I0, with
/// r = 1 + 1/(C [w]_{A1^(I0)}).
ReverseHolderReport reverse_holder_verify(const Weight& w, CellSpan I0, CellSpan I, double C);

enum class WeightKind { power, exp_monotone, cutoff, random_dyadic };

struct WeightParams {
    double a = 0.0;      // power exponent, or exp rate
    double beta = 2.0;   // random_dyadic multiplier range [1/beta, beta]
    double z = 0.0;      // cutoff location
    double base_a = 0.0; // power exponent underneath a cutoff
};

Weight family_generate(WeightKind kind, const WeightParams& params, uint64_t seed, const Grid& g);

void save_csv(const Weight& w, std::ostream& os);
Weight load_csv(std::istream& is);
void save_csv_file(const Weight& w, const std::string& path);
Weight load_csv_file(const std::string& path);

}  // namespace onesided
