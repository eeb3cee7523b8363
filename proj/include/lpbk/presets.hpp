#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "lpbk/grid.hpp"

namespace lpbk {

// e^{i k.x}, k integer per axis
SampledField preset_harmonic(const GridSpec& g, std::array<int, 2> k);

// periodized exp(-|x - c|^2 / (2 sigma^2))
SampledField preset_gaussian(const GridSpec& g, double sigma, std::array<double, 2> center);

// sum_{j=0}^{j_top} 2^{-j s} cos(2^j x_0); needs 2^{j_top} < n/2
SampledField preset_weierstrass(const GridSpec& g, double s, int j_top);

// real field with mean zero: Hermitian random Gaussian coefficients on the
// integer-wavenumber annulus k_lo <= |k| <= k_hi (k_hi < n/2). Bit-reproducible
// for a given seed.
SampledField preset_random_bandlimited(const GridSpec& g, std::uint64_t seed, double k_lo, double k_hi);

// dispatcher used by the CLI; params keys depend on the preset:
//   harmonic: k0 [,k1]    gaussian: sigma [,c0,c1]
//   weierstrass: s, j_top random_bandlimited: seed, k_lo, k_hi
SampledField sample_preset(const GridSpec& g, const std::string& id,
                           const std::map<std::string, double>& params);

// splitmix-seeded xoshiro256++ with explicit bit mapping, so streams do not
// depend on the standard library's distribution implementations
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    double uniform();          // [0, 1)
    double normal();           // Box-Muller
    std::uint64_t next_u64();

  private:
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace lpbk
