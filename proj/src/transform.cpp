#include "lpbk/transform.hpp"

#include <algorithm>

#include "lpbk/fft.hpp"

namespace lpbk {

SpectralField forward_transform(const SampledField& f) {
    f.grid.validate();
    if (f.values.size() != f.grid.size()) throw std::invalid_argument("forward_transform: size mismatch");
    SpectralField F = make_spectrum(f.grid);
    dft(f.grid, f.values.data(), F.coeff.data(), -1);
    const double s = FourierConvention::for_grid(f.grid).forward_scale;
    for (auto& c : F.coeff) c *= s;
    return F;
}

SampledField inverse_transform(const SpectralField& F) {
    F.grid.validate();
    if (F.coeff.size() != F.grid.size()) throw std::invalid_argument("inverse_transform: size mismatch");
    SampledField f = make_field(F.grid);
    dft(F.grid, F.coeff.data(), f.values.data(), +1);
    const double s = FourierConvention::for_grid(F.grid).inverse_scale;
    for (auto& v : f.values) v *= s;
    return f;
}

double lp_norm(const SampledField& f, double p) {
    if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be in (0, inf]");
    if (std::isinf(p)) {
        double m = 0;
        for (const auto& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    const double w = std::pow(f.grid.spacing(), f.grid.dim);
    double acc = 0;
    for (const auto& v : f.values) acc += std::pow(std::abs(v), p);
    return std::pow(w * acc, 1.0 / p);
}

double spectral_l2(const SpectralField& F) {
    double acc = 0;
    for (const auto& c : F.coeff) acc += std::norm(c);
    return std::sqrt(std::pow(F.grid.freq_step(), F.grid.dim) * acc);
}

SpectralField apply_multiplier(const SpectralField& F, const Symbol& symbol) {
    SpectralField G = F;
    const GridSpec& g = F.grid;
    for (std::size_t i = 0; i < G.coeff.size(); ++i) {
        std::array<double, 2> xi{g.freq(g.axis_index(i, 0)), 0.0};
        if (g.dim == 2) xi[1] = g.freq(g.axis_index(i, 1));
        const cplx m = symbol(xi);
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
            throw std::domain_error("apply_multiplier: non-finite symbol value");
        G.coeff[i] *= m;
    }
    return G;
}

SampledField apply_symbol(const SampledField& f, const Symbol& symbol) {
    return inverse_transform(apply_multiplier(forward_transform(f), symbol));
}

cplx mean_value(const SampledField& f) {
    cplx acc{0.0, 0.0};
    for (const auto& v : f.values) acc += v;
    return acc / static_cast<double>(f.values.size());
}

}  // namespace lpbk
