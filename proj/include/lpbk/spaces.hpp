#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpbk/partition.hpp"
#include "lpbk/transform.hpp"

namespace lpbk {

enum class SpaceKind { besov_homog, besov_nonhomog, tl_homog, tl_nonhomog };

SpaceKind space_kind_from_string(const std::string& s);
std::string to_string(SpaceKind k);

// smoothness s, integrability p, summability q; p, q in (0, inf].
// Homogeneous kinds ignore the zero frequency (norms of f and f - mean agree).
// Nonhomogeneous kinds add the low block below scale j_split to the band sum
// over j > j_split. Triebel-Lizorkin kinds require p < inf.
struct SpaceParams {
    SpaceKind kind = SpaceKind::besov_homog;
    double s = 0;
    double p = 2;
    double q = 2;
    int j_split = 0;

    void validate() const;
};

struct BandDecomposition {
    BandRange range;
    std::vector<SampledField> bands;  // Delta_j f for stored j
    SampledField low;                 // psi(2^-j_split D) f, DC included
    int j_split = 0;
    cplx dc{0.0, 0.0};                // mean of f

    const SampledField& delta(int j) const;
};

BandDecomposition decompose(const SampledField& f, const DyadicPartition& P, int j_split = 0);
SampledField band_project(const SampledField& f, const DyadicPartition& P, int j);

struct NormReport {
    SpaceParams params;
    std::vector<std::pair<int, double>> per_band;  // (j, 2^{js} ||Delta_j f||_p)
    double low_term = 0;                           // nonhomogeneous kinds only
    double aggregate = 0;
};

NormReport space_norm(const SampledField& f, const DyadicPartition& P, const SpaceParams& sp);

// (high, low): high = sum of bands above j_split, low = the rest including DC
std::pair<SampledField, SampledField> high_low_split(const SampledField& f,
                                                     const DyadicPartition& P, int j_split);

// l^q of nonnegative terms, q in (0, inf]
double lq_aggregate(const std::vector<double>& terms, double q);

}  // namespace lpbk
