#include "lpbk/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace lpbk {

SpaceKind space_kind_from_string(const std::string& s) {
    if (s == "besov_homog") return SpaceKind::besov_homog;
    if (s == "besov_nonhomog") return SpaceKind::besov_nonhomog;
    if (s == "tl_homog") return SpaceKind::tl_homog;
    if (s == "tl_nonhomog") return SpaceKind::tl_nonhomog;
    throw std::invalid_argument("unknown space kind " + s);
}

std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::besov_homog: return "besov_homog";
        case SpaceKind::besov_nonhomog: return "besov_nonhomog";
        case SpaceKind::tl_homog: return "tl_homog";
        case SpaceKind::tl_nonhomog: return "tl_nonhomog";
    }
    throw std::logic_error("bad space kind");
}

void SpaceParams::validate() const {
    if (!(p > 0)) throw std::invalid_argument("space: p must be in (0, inf]");
    if (!(q > 0)) throw std::invalid_argument("space: q must be in (0, inf]");
    if (!std::isfinite(s)) throw std::invalid_argument("space: s must be finite");
    const bool tl = kind == SpaceKind::tl_homog || kind == SpaceKind::tl_nonhomog;
    if (tl && std::isinf(p)) throw std::invalid_argument("space: p = inf not supported for tl kinds");
}

const SampledField& BandDecomposition::delta(int j) const {
    if (j < range.j_min || j > range.j_max) throw std::out_of_range("decomposition: band index");
    return bands[static_cast<std::size_t>(j - range.j_min)];
}

namespace {

SampledField project_with(const SpectralField& F, const std::vector<double>& weights) {
    SpectralField G = F;
    for (std::size_t i = 0; i < G.coeff.size(); ++i) G.coeff[i] *= weights[i];
    return inverse_transform(G);
}

}  // namespace

BandDecomposition decompose(const SampledField& f, const DyadicPartition& P, int j_split) {
    require_same_grid(f.grid, P.grid);
    const SpectralField F = forward_transform(f);

    BandDecomposition d;
    d.range = P.range;
    d.j_split = j_split;
    d.bands.reserve(static_cast<std::size_t>(P.range.count()));
    for (int j = P.range.j_min; j <= P.range.j_max; ++j) d.bands.push_back(project_with(F, P.phi(j)));
    d.low = project_with(F, low_mask(P.grid, P.profile, j_split));
    d.dc = mean_value(f);
    return d;
}

SampledField band_project(const SampledField& f, const DyadicPartition& P, int j) {
    require_same_grid(f.grid, P.grid);
    return project_with(forward_transform(f), P.phi(j));
}

double lq_aggregate(const std::vector<double>& terms, double q) {
    if (!(q > 0)) throw std::invalid_argument("lq_aggregate: q must be in (0, inf]");
    if (std::isinf(q)) {
        double m = 0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    double acc = 0;
    for (double t : terms) acc += std::pow(t, q);
    return std::pow(acc, 1.0 / q);
}

NormReport space_norm(const SampledField& f, const DyadicPartition& P, const SpaceParams& sp) {
    sp.validate();
    require_same_grid(f.grid, P.grid);
    const bool homog = sp.kind == SpaceKind::besov_homog || sp.kind == SpaceKind::tl_homog;
    const bool besov = sp.kind == SpaceKind::besov_homog || sp.kind == SpaceKind::besov_nonhomog;
    const int j_lo = homog ? P.range.j_min : sp.j_split + 1;
    if (!homog && j_lo > P.range.j_max)
        throw std::invalid_argument("space_norm: j_split at or above the stored band range");

    const SpectralField F = forward_transform(f);
    NormReport rep;
    rep.params = sp;

    std::vector<SampledField> deltas;
    deltas.reserve(static_cast<std::size_t>(P.range.j_max - j_lo + 1));
    for (int j = j_lo; j <= P.range.j_max; ++j) {
        deltas.push_back(project_with(F, P.phi(j)));
        rep.per_band.emplace_back(j, std::pow(2.0, j * sp.s) * lp_norm(deltas.back(), sp.p));
    }

    if (besov) {
        std::vector<double> terms;
        terms.reserve(rep.per_band.size());
        for (const auto& [j, t] : rep.per_band) terms.push_back(t);
        rep.aggregate = lq_aggregate(terms, sp.q);
    } else {
        // pointwise l^q across bands, then the grid L^p norm
        SampledField inner = make_field(f.grid);
        for (std::size_t i = 0; i < inner.values.size(); ++i) {
            double acc = 0;
            for (int j = j_lo; j <= P.range.j_max; ++j) {
                const double v = std::pow(2.0, j * sp.s) *
                                 std::abs(deltas[static_cast<std::size_t>(j - j_lo)].values[i]);
                if (std::isinf(sp.q)) acc = std::max(acc, v);
                else acc += std::pow(v, sp.q);
            }
            inner.values[i] = std::isinf(sp.q) ? acc : std::pow(acc, 1.0 / sp.q);
        }
        rep.aggregate = lp_norm(inner, sp.p);
    }

    if (!homog) {
        rep.low_term = lp_norm(project_with(F, low_mask(P.grid, P.profile, sp.j_split)), sp.p);
        rep.aggregate += rep.low_term;
    }
    return rep;
}

std::pair<SampledField, SampledField> high_low_split(const SampledField& f,
                                                     const DyadicPartition& P, int j_split) {
    require_same_grid(f.grid, P.grid);
    const SpectralField F = forward_transform(f);
    const std::vector<double> mask = low_mask(P.grid, P.profile, j_split);
    std::vector<double> co(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) co[i] = 1.0 - mask[i];
    return {project_with(F, co), project_with(F, mask)};
}

}  // namespace lpbk
