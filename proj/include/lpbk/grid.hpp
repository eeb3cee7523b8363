#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lpbk {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Uniform periodic grid on [0, L)^dim, n points per axis (power of two, >= 16).
// Flat storage is row-major, axis 0 slowest; axis index i maps to the integer
// wavenumber i < n/2 ? i : i - n, so frequencies run over [-n/2, n/2).
struct GridSpec {
    int dim = 1;
    int n = 256;
    double box = 2.0 * pi;

    void validate() const;

    std::size_t size() const {
        return dim == 1 ? static_cast<std::size_t>(n)
                        : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    }
    double spacing() const { return box / n; }        // h
    double freq_step() const { return 2.0 * pi / box; }

    std::size_t flat(int i0, int i1 = 0) const {
        return dim == 1 ? static_cast<std::size_t>(i0)
                        : static_cast<std::size_t>(i0) * n + i1;
    }
    int axis_index(std::size_t flat_idx, int axis) const {
        if (dim == 1) return static_cast<int>(flat_idx);
        return axis == 0 ? static_cast<int>(flat_idx / n) : static_cast<int>(flat_idx % n);
    }

    int wavenumber(int axis_idx) const { return axis_idx < n / 2 ? axis_idx : axis_idx - n; }
    double freq(int axis_idx) const { return wavenumber(axis_idx) * freq_step(); }

    // |xi| at a flat lattice index
    double lattice_radius(std::size_t flat_idx) const;
    // largest |xi| on the lattice
    double nyquist_radius() const;
    // smallest nonzero |xi|
    double min_radius() const { return freq_step(); }

    double coord(int axis_idx) const { return axis_idx * spacing(); }

    bool operator==(const GridSpec&) const = default;
};

struct SampledField {
    GridSpec grid;
    std::vector<cplx> values;
};

struct SpectralField {
    GridSpec grid;
    std::vector<cplx> coeff;
};

SampledField make_field(const GridSpec& g);
SpectralField make_spectrum(const GridSpec& g);

// displacement folded to the symmetric range [-n/2, n/2)
inline int fold_disp(int d, int n) {
    int r = d % n;
    if (r < 0) r += n;
    return r >= n / 2 ? r - n : r;
}

// additive wraparound of a grid index
inline int wrap_index(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}

void require_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace lpbk
