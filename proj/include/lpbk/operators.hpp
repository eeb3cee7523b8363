#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lpbk/grid.hpp"

namespace lpbk {

// |xi|^alpha multiplier, zero at the origin
SampledField lift(const SampledField& f, double alpha);

// -i xi_axis / |xi| multiplier, zero at the origin
SampledField riesz(const SampledField& f, int axis);

// e^{-t |xi|^2} multiplier, t >= 0
SampledField heat(const SampledField& f, double t);

// evenly log-spaced t grid on [t_lo, t_hi]
std::vector<double> geometric_times(double t_lo, double t_hi, int count);

// || sup_t |e^{t Laplacian} f| ||_p over a geometric t grid.
// Default grid: 32 points on [h^2, 4]; local = true restricts to t < 1.
double hardy_norm(const SampledField& f, double p, bool local = false,
                  const std::vector<double>& times = {});

// Mean-oscillation norm over grid-centered discrete balls of radius <= L/4,
// by direct summation. local = true uses the two-term form: largest mean of
// |f| over balls of discrete volume closest to 1, plus the oscillation sup
// over balls of volume <= 1.
double bmo_norm(const SampledField& f, bool local = false);

// powered maximal function: sup over ball radii (multiples of h up to L/2,
// radius 0 = the point itself) of (avg_B |f|^eta)^{1/eta}
SampledField maximal_op(const SampledField& f, double eta);

struct FsCheckResult {
    double lhs;    // || (sum_j (M f_j)^q)^{1/q} ||_p
    double rhs;    // || (sum_j |f_j|^q)^{1/q} ||_p
    double ratio;
};

FsCheckResult fs_vector_check(const std::vector<SampledField>& family, double p, double q);

// complete set of order-N partial derivatives, one field per multi-index
struct PartialDerivativeSet {
    GridSpec grid;
    int order = 1;
    std::vector<std::pair<std::array<int, 2>, SampledField>> entries;
};

// spectral antidifferentiation: recovers the zero-mean f with the given
// derivatives, averaging coefficient quotients over admissible multi-indices.
// Rejects sets whose cross partials disagree beyond consistency_tol, and
// inputs with a nonzero mean.
SampledField poincare_reconstruct(const PartialDerivativeSet& set, double consistency_tol = 1e-8);

// order-N partials of f, computed spectrally; test helper and CLI builder
PartialDerivativeSet spectral_partials(const SampledField& f, int order);

}  // namespace lpbk
