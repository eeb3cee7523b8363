#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "lpbk/cutoff.hpp"
#include "lpbk/grid.hpp"

namespace lpbk {

// inclusive dyadic band index range
struct BandRange {
    int j_min;
    int j_max;
    int count() const { return j_max - j_min + 1; }
};

// Dyadic annular decomposition of the frequency lattice:
//   phi_j(xi) = psi(2^-j |xi|) - psi(2^-j+1 |xi|),
// supported in 2^{j-1} < |xi| < 2^{j+1}, with sum_j phi_j = 1 away from the
// origin once the range brackets the lattice. The stored range carries one
// guard band beyond the bracketing range on each side, so phi_{j-1} and
// phi_{j+1} exist for every band that is nonzero on the lattice.
struct DyadicPartition {
    GridSpec grid;
    CutoffProfile profile;
    BandRange range;
    std::vector<std::vector<double>> band;  // band[j - j_min][flat lattice index]

    const std::vector<double>& phi(int j) const;
    bool has_band(int j) const { return j >= range.j_min && j <= range.j_max; }
    // true when phi_j takes a nonzero value somewhere on the lattice
    bool active(int j) const;
    int lowest_active() const;
    int highest_active() const;
};

DyadicPartition build_partition(const GridSpec& g,
                                const CutoffProfile& profile = build_cutoff(),
                                std::optional<BandRange> range = std::nullopt);

// psi(2^-j_split xi) on the lattice: the low-frequency mask below scale j_split
std::vector<double> low_mask(const GridSpec& g, const CutoffProfile& profile, int j_split);

struct PartitionValidation {
    double max_partition_err;  // max over nonzero lattice of |sum_j phi_j - 1|
    double max_support_err;    // max |phi_j| outside the annulus 2^{j-1} < |xi| < 2^{j+1}
    int max_active_bands;      // most bands simultaneously nonzero at one lattice point
    bool range_ok;             // 2^{j_min} <= min radius and 2^{j_max - 1} >= Nyquist radius
    bool pass;
};

PartitionValidation validate_partition(const DyadicPartition& P, double tol = 1e-12);

// CSV dump: j, flat lattice index, phi_j value (zero entries skipped)
void write_partition_csv(const DyadicPartition& P, std::ostream& out);

}  // namespace lpbk
