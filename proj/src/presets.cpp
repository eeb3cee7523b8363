#include "lpbk/presets.hpp"

#include <cmath>

#include "lpbk/transform.hpp"

namespace lpbk {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

double get_param(const std::map<std::string, double>& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

double require_param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("sample_preset: missing param " + key);
    return it->second;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    have_spare_ = true;
    spare_ = r * std::sin(2.0 * pi * u2);
    return r * std::cos(2.0 * pi * u2);
}

SampledField preset_harmonic(const GridSpec& g, std::array<int, 2> k) {
    SampledField f = make_field(g);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double phase = k[0] * g.freq_step() * g.coord(g.axis_index(i, 0));
        if (g.dim == 2) phase += k[1] * g.freq_step() * g.coord(g.axis_index(i, 1));
        f.values[i] = cplx{std::cos(phase), std::sin(phase)};
    }
    return f;
}

SampledField preset_gaussian(const GridSpec& g, double sigma, std::array<double, 2> center) {
    if (!(sigma > 0)) throw std::invalid_argument("preset_gaussian: sigma must be positive");
    SampledField f = make_field(g);
    const double L = g.box;
    // enough images that the discarded tail is below double precision
    const int images = std::max(3, static_cast<int>(std::ceil(12.0 * sigma / L)) + 2);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double acc = 0;
        for (int m0 = -images; m0 <= images; ++m0) {
            const double d0 = g.coord(g.axis_index(i, 0)) - center[0] + m0 * L;
            if (g.dim == 1) {
                acc += std::exp(-d0 * d0 / (2 * sigma * sigma));
            } else {
                for (int m1 = -images; m1 <= images; ++m1) {
                    const double d1 = g.coord(g.axis_index(i, 1)) - center[1] + m1 * L;
                    acc += std::exp(-(d0 * d0 + d1 * d1) / (2 * sigma * sigma));
                }
            }
        }
        f.values[i] = acc;
    }
    return f;
}

SampledField preset_weierstrass(const GridSpec& g, double s, int j_top) {
    if (j_top < 0 || (1 << j_top) >= g.n / 2)
        throw std::invalid_argument("preset_weierstrass: need 0 <= j_top with 2^j_top < n/2");
    SampledField f = make_field(g);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = g.coord(g.axis_index(i, 0));
        double acc = 0;
        for (int j = 0; j <= j_top; ++j)
            acc += std::pow(2.0, -j * s) * std::cos((1 << j) * g.freq_step() * x);
        f.values[i] = acc;
    }
    return f;
}

SampledField preset_random_bandlimited(const GridSpec& g, std::uint64_t seed, double k_lo, double k_hi) {
    g.validate();
    if (!(k_lo >= 1) || !(k_hi >= k_lo) || k_hi > g.n / 2 - 1)
        throw std::invalid_argument("preset_random_bandlimited: need 1 <= k_lo <= k_hi <= n/2 - 1");
    Rng rng(seed);
    SpectralField F = make_spectrum(g);
    // deterministic lattice order; each coefficient drawn once, mirror gets the conjugate
    for (std::size_t i = 0; i < F.coeff.size(); ++i) {
        const int k0 = g.wavenumber(g.axis_index(i, 0));
        const int k1 = g.dim == 2 ? g.wavenumber(g.axis_index(i, 1)) : 0;
        const double r = std::sqrt(static_cast<double>(k0) * k0 + static_cast<double>(k1) * k1);
        if (r < k_lo || r > k_hi) continue;
        if (k0 < 0 || (k0 == 0 && k1 < 0)) continue;  // filled by the mirror
        const cplx c{rng.normal(), rng.normal()};
        F.coeff[i] = c;
        const std::size_t im = g.flat(wrap_index(-k0, g.n), g.dim == 2 ? wrap_index(-k1, g.n) : 0);
        F.coeff[im] = std::conj(c);
    }
    SampledField f = inverse_transform(F);
    for (auto& v : f.values) v = cplx{v.real(), 0.0};  // kill roundoff residue
    return f;
}

SampledField sample_preset(const GridSpec& g, const std::string& id,
                           const std::map<std::string, double>& params) {
    if (id == "harmonic") {
        const int k0 = static_cast<int>(require_param(params, "k0"));
        const int k1 = static_cast<int>(get_param(params, "k1", 0));
        return preset_harmonic(g, {k0, k1});
    }
    if (id == "gaussian") {
        const double sigma = require_param(params, "sigma");
        const double c0 = get_param(params, "c0", g.box / 2);
        const double c1 = get_param(params, "c1", g.box / 2);
        return preset_gaussian(g, sigma, {c0, c1});
    }
    if (id == "weierstrass") {
        return preset_weierstrass(g, require_param(params, "s"),
                                  static_cast<int>(require_param(params, "j_top")));
    }
    if (id == "random_bandlimited") {
        const auto seed = static_cast<std::uint64_t>(get_param(params, "seed", 1));
        const double k_lo = get_param(params, "k_lo", 1);
        const double k_hi = get_param(params, "k_hi", g.n / 8.0);
        return preset_random_bandlimited(g, seed, k_lo, k_hi);
    }
    throw std::invalid_argument("sample_preset: unknown preset " + id);
}

}  // namespace lpbk
