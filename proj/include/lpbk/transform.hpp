#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "lpbk/grid.hpp"

namespace lpbk {

// Symmetric-normalization pair on the grid:
//   F(xi_k)  = (2 pi)^{-dim/2} h^dim      sum_x f(x) e^{-i x.xi_k}
//   f(x)     = (2 pi)^{-dim/2} (2pi/L)^dim sum_k F(xi_k) e^{+i x.xi_k}
// so forward . inverse is the identity and Plancherel reads
//   ||f||_2^2 = (2pi/L)^dim sum_k |F(xi_k)|^2.
struct FourierConvention {
    double forward_scale;
    double inverse_scale;
    static FourierConvention for_grid(const GridSpec& g) {
        const double c = std::pow(2.0 * pi, -0.5 * g.dim);
        return {c * std::pow(g.spacing(), g.dim), c * std::pow(g.freq_step(), g.dim)};
    }
};

SpectralField forward_transform(const SampledField& f);
SampledField inverse_transform(const SpectralField& F);

// grid quadrature norm (h^dim sum |f|^p)^{1/p}; p = inf gives max |f|; p in (0, inf]
double lp_norm(const SampledField& f, double p);

// spectral side of Plancherel: ((2pi/L)^dim sum_k |F_k|^2)^{1/2}
double spectral_l2(const SpectralField& F);

// multiply coefficients by symbol(xi); rejects non-finite symbol values
using Symbol = std::function<cplx(std::array<double, 2>)>;
SpectralField apply_multiplier(const SpectralField& F, const Symbol& symbol);
SampledField apply_symbol(const SampledField& f, const Symbol& symbol);

cplx mean_value(const SampledField& f);

}  // namespace lpbk
