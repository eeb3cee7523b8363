#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpbk/partition.hpp"
#include "lpbk/spaces.hpp"

namespace lpbk {

// Named family of grid fields. Generators:
//   random_bandlimited  count seeded fields, params k_lo / k_hi
//   harmonic            count harmonics k0 * 2^i (capped below Nyquist)
//   weierstrass         single field, params s / j_top
//   mixed               random_bandlimited count + weierstrass + one harmonic
struct FunctionFamily {
    std::string generator = "random_bandlimited";
    GridSpec grid;
    std::uint64_t seed = 1;
    int count = 20;
    std::map<std::string, double> params;
};

std::vector<SampledField> generate_family(const FunctionFamily& fam);

// One tested instance. For inequality checks ratio = lhs / rhs; for identity
// checks lhs and rhs are the two routes and ratio is the relative deviation.
struct CheckInstance {
    double lhs;
    double rhs;
    double ratio;
};

struct ExperimentReport {
    std::string check;
    std::map<std::string, double> params;  // effective params, incl. computed constants
    std::vector<CheckInstance> instances;
    double min_ratio = 0;
    double max_ratio = 0;
    double mean_ratio = 0;
    double constant = 0;   // bound the pass verdict used, when one applies
    double tolerance = 0;
    bool pass = false;
};

// Check catalog (params beyond s/p/q noted):
//   phi_independence   norm ratio across cutoff profiles, bound = fitted constant
//   lq_monotone        q_hi >= q_lo implies the l^q_hi aggregate is no larger
//   sobolev_embedding  sup-norm scale bound with the grid Hoelder constant
//   lift_isomorphism   two-sided band-multiplier bound, param alpha
//   fourier_refinement transform bounded by the L^1 norm, bound 1
//   bc_embedding       sup norm <= band sum plus |mean|
//   holder_equiv       difference seminorm vs band seminorm, fitted bounds
//   riesz_bounded      direction multiplier bound with the grid kernel constant
//   bf_sandwich        mixed-aggregation norms nest with constant 1
//   l2_corridor        band l^2 sum vs L^2, ratio in [2^{-1/2}, 1]
//   fs_maximal         vector maximal bound, fitted constant (param j_count)
//   realization        high-part tails controlled by the s-geometric series
//   diff_convolution   difference representation of mollifier averages, params m / j
extern const std::vector<std::string> check_catalog;

ExperimentReport run_check(const std::string& check_id, const FunctionFamily& fam,
                           const std::map<std::string, double>& params = {});

struct FitResult {
    double constant;
    ExperimentReport calibration;
    ExperimentReport validation;
    bool validated;
};

// constant = 1.05 * worst calibration score, then revalidated on the second
// family; only the fitted checks accept this
FitResult fit_constant(const std::string& check_id, const FunctionFamily& calib,
                       const FunctionFamily& valid);

// Grid-computed bound constants, max over bands active on the lattice.
// kernel_j = inverse transform of (phi_{j-1} + phi_j + phi_{j+1}) times the
// symbol; the (2 pi)^{-dim/2} factor matches the convolution theorem of the
// fixed transform convention.
double young_lift_constant(const DyadicPartition& P, double alpha);
double young_riesz_constant(const DyadicPartition& P, int axis);
double holder_embedding_constant(const DyadicPartition& P, double p);

// Fitted bounds frozen from the committed calibration runs (seed 101, count
// 40, default grid) and revalidated against disjoint seeds in the tests.
// Regenerate with tools/calibrate.
namespace frozen {
inline constexpr std::uint64_t calibration_seed = 101;
inline constexpr std::uint64_t validation_seed = 7202;
inline constexpr int calibration_count = 40;
// produced by tools/calibrate (1.05 x worst calibration score over the grid
// battery); validation families stay below these with margin
inline constexpr double phi_independence = 1.395134240023272;
inline constexpr double holder_equiv = 3.7849978983404107;
inline constexpr double fs_maximal = 1.2854622205994555;
}  // namespace frozen

}  // namespace lpbk
