#include "lpbk/partition.hpp"

#include <cmath>
#include <cstdio>

namespace lpbk {
namespace {

// largest j with 2^j <= r, by exact power-of-two comparison
int floor_log2(double r) {
    int j = std::ilogb(r);
    while (std::ldexp(1.0, j) > r) --j;
    while (std::ldexp(1.0, j + 1) <= r) ++j;
    return j;
}

// smallest j with 2^j >= r
int ceil_log2(double r) {
    int j = floor_log2(r);
    return std::ldexp(1.0, j) >= r ? j : j + 1;
}

}  // namespace

const std::vector<double>& DyadicPartition::phi(int j) const {
    if (!has_band(j)) throw std::out_of_range("partition: band index outside stored range");
    return band[static_cast<std::size_t>(j - range.j_min)];
}

bool DyadicPartition::active(int j) const {
    for (double v : phi(j))
        if (v != 0.0) return true;
    return false;
}

int DyadicPartition::lowest_active() const {
    for (int j = range.j_min; j <= range.j_max; ++j)
        if (active(j)) return j;
    throw std::logic_error("partition: no active band");
}

int DyadicPartition::highest_active() const {
    for (int j = range.j_max; j >= range.j_min; --j)
        if (active(j)) return j;
    throw std::logic_error("partition: no active band");
}

DyadicPartition build_partition(const GridSpec& g, const CutoffProfile& profile,
                                std::optional<BandRange> range) {
    g.validate();
    BandRange r{};
    if (range) {
        r = *range;
    } else {
        // psi(2^-j_max |xi|) = 1 on the lattice needs 2^j_max >= Nyquist radius;
        // psi(2^-j_min+1 |xi|) = 0 off the origin needs 2^j_min <= min radius.
        // One guard band is added on each side of that bracketing range.
        r.j_min = floor_log2(g.min_radius()) - 1;
        r.j_max = ceil_log2(g.nyquist_radius()) + 1;
    }
    if (r.count() < 3) throw std::invalid_argument("build_partition: grid too small to host three bands");

    DyadicPartition P{g, profile, r, {}};
    P.band.assign(static_cast<std::size_t>(r.count()), std::vector<double>(g.size(), 0.0));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rad = g.lattice_radius(i);
        if (rad == 0.0) continue;
        for (int j = r.j_min; j <= r.j_max; ++j) {
            const double v = profile(std::ldexp(rad, -j)) - profile(std::ldexp(rad, -j + 1));
            P.band[static_cast<std::size_t>(j - r.j_min)][i] = v;
        }
    }
    return P;
}

std::vector<double> low_mask(const GridSpec& g, const CutoffProfile& profile, int j_split) {
    g.validate();
    std::vector<double> mask(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        mask[i] = profile(std::ldexp(g.lattice_radius(i), -j_split));
    return mask;
}

PartitionValidation validate_partition(const DyadicPartition& P, double tol) {
    const GridSpec& g = P.grid;
    PartitionValidation v{0.0, 0.0, 0, true, true};

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double rad = g.lattice_radius(i);
        double sum = 0;
        int live = 0;
        for (int j = P.range.j_min; j <= P.range.j_max; ++j) {
            const double val = P.phi(j)[i];
            sum += val;
            if (val != 0.0) {
                ++live;
                const bool inside = rad > std::ldexp(1.0, j - 1) && rad < std::ldexp(1.0, j + 1);
                if (!inside) v.max_support_err = std::max(v.max_support_err, std::abs(val));
            }
        }
        if (rad == 0.0) {
            v.max_support_err = std::max(v.max_support_err, std::abs(sum));
        } else {
            v.max_partition_err = std::max(v.max_partition_err, std::abs(sum - 1.0));
        }
        v.max_active_bands = std::max(v.max_active_bands, live);
    }

    v.range_ok = std::ldexp(1.0, P.range.j_min) <= g.min_radius() &&
                 std::ldexp(1.0, P.range.j_max - 1) >= g.nyquist_radius();
    v.pass = v.max_partition_err <= tol && v.max_support_err == 0.0 &&
             v.max_active_bands <= 2 && v.range_ok;
    return v;
}

void write_partition_csv(const DyadicPartition& P, std::ostream& out) {
    out << "j,index,phi\n";
    char buf[64];
    for (int j = P.range.j_min; j <= P.range.j_max; ++j) {
        const auto& vals = P.phi(j);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
            out << j << ',' << i << ',' << buf << '\n';
        }
    }
}

}  // namespace lpbk
