#include "lpbk/grid.hpp"

#include <cmath>

namespace lpbk {

void GridSpec::validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid: dim must be 1 or 2");
    if (n < 16 || (n & (n - 1)) != 0) throw std::invalid_argument("grid: n must be a power of two >= 16");
    if (!(box > 0) || !std::isfinite(box)) throw std::invalid_argument("grid: box must be positive and finite");
}

double GridSpec::lattice_radius(std::size_t flat_idx) const {
    if (dim == 1) {
        return std::abs(static_cast<double>(wavenumber(static_cast<int>(flat_idx)))) * freq_step();
    }
    const int k0 = wavenumber(axis_index(flat_idx, 0));
    const int k1 = wavenumber(axis_index(flat_idx, 1));
    return std::sqrt(static_cast<double>(k0) * k0 + static_cast<double>(k1) * k1) * freq_step();
}

double GridSpec::nyquist_radius() const {
    const double m = n / 2;
    return dim == 1 ? m * freq_step() : std::sqrt(2.0) * m * freq_step();
}

SampledField make_field(const GridSpec& g) {
    g.validate();
    return SampledField{g, std::vector<cplx>(g.size(), cplx{0.0, 0.0})};
}

SpectralField make_spectrum(const GridSpec& g) {
    g.validate();
    return SpectralField{g, std::vector<cplx>(g.size(), cplx{0.0, 0.0})};
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

}  // namespace lpbk
