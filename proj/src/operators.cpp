#include "lpbk/operators.hpp"

#include <algorithm>
#include <cmath>

#include "lpbk/transform.hpp"
#include "lpbk/util.hpp"

namespace lpbk {
namespace {

double radius2(const std::array<int, 2>& d) {
    return double(d[0]) * d[0] + double(d[1]) * d[1];
}

// folded lattice offsets grouped by integer radius class: ring m holds all
// offsets with m-1 < |d| <= m, so ball m is the union of rings 0..m
std::vector<std::vector<std::array<int, 2>>> build_rings(const GridSpec& g, int m_max) {
    std::vector<std::vector<std::array<int, 2>>> rings(static_cast<std::size_t>(m_max) + 1);
    rings[0].push_back({0, 0});
    if (g.dim == 1) {
        for (int a = 1; a < g.n; ++a) {
            const int d = fold_disp(a, g.n);
            const int m = std::abs(d);
            if (m >= 1 && m <= m_max) rings[m].push_back({d, 0});
        }
    } else {
        for (int a = 0; a < g.n; ++a) {
            for (int b = 0; b < g.n; ++b) {
                if (a == 0 && b == 0) continue;
                const std::array<int, 2> d{fold_disp(a, g.n), fold_disp(b, g.n)};
                const double r = std::sqrt(radius2(d));
                const int m = static_cast<int>(std::ceil(r - 1e-12));
                if (m >= 1 && m <= m_max) rings[m].push_back(d);
            }
        }
    }
    return rings;
}

std::size_t offset_index(const GridSpec& g, std::size_t i, const std::array<int, 2>& d) {
    if (g.dim == 1) return static_cast<std::size_t>(wrap_index(static_cast<int>(i) + d[0], g.n));
    const int i0 = g.axis_index(i, 0), i1 = g.axis_index(i, 1);
    return g.flat(wrap_index(i0 + d[0], g.n), wrap_index(i1 + d[1], g.n));
}

}  // namespace

SampledField lift(const SampledField& f, double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("lift: alpha must be finite");
    return apply_symbol(f, [alpha](std::array<double, 2> xi) {
        const double r = std::hypot(xi[0], xi[1]);
        return r == 0.0 ? cplx{0.0, 0.0} : cplx{std::pow(r, alpha), 0.0};
    });
}

SampledField riesz(const SampledField& f, int axis) {
    if (axis < 0 || axis >= f.grid.dim) throw std::invalid_argument("riesz: axis outside grid dimension");
    return apply_symbol(f, [axis](std::array<double, 2> xi) {
        const double r = std::hypot(xi[0], xi[1]);
        return r == 0.0 ? cplx{0.0, 0.0} : cplx{0.0, -xi[axis] / r};
    });
}

SampledField heat(const SampledField& f, double t) {
    if (!(t >= 0)) throw std::invalid_argument("heat: t must be >= 0");
    return apply_symbol(f, [t](std::array<double, 2> xi) {
        return cplx{std::exp(-t * (xi[0] * xi[0] + xi[1] * xi[1])), 0.0};
    });
}

std::vector<double> geometric_times(double t_lo, double t_hi, int count) {
    if (!(t_lo > 0) || !(t_hi >= t_lo) || count < 1)
        throw std::invalid_argument("geometric_times: need 0 < t_lo <= t_hi, count >= 1");
    std::vector<double> ts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        ts[i] = count == 1 ? t_lo
                           : t_lo * std::pow(t_hi / t_lo, double(i) / double(count - 1));
    return ts;
}

double hardy_norm(const SampledField& f, double p, bool local, const std::vector<double>& times) {
    const double h = f.grid.spacing();
    std::vector<double> ts = times.empty() ? geometric_times(h * h, 4.0, 32) : times;
    if (local) {
        std::vector<double> kept;
        for (double t : ts)
            if (t < 1.0) kept.push_back(t);
        if (kept.empty()) throw std::invalid_argument("hardy_norm: no local times below 1");
        ts = kept;
    }
    SampledField env = make_field(f.grid);
    for (double t : ts) {
        const SampledField u = heat(f, t);
        for (std::size_t i = 0; i < env.values.size(); ++i)
            env.values[i] = std::max(env.values[i].real(), std::abs(u.values[i]));
    }
    return lp_norm(env, p);
}

double bmo_norm(const SampledField& f, bool local) {
    const GridSpec& g = f.grid;
    const int m_max = g.n / 4;  // radius cap L/4
    const auto rings = build_rings(g, m_max);
    const double cell = std::pow(g.spacing(), g.dim);

    std::vector<std::size_t> ball_count(rings.size());
    std::size_t cum = 0;
    for (std::size_t m = 0; m < rings.size(); ++m) {
        cum += rings[m].size();
        ball_count[m] = cum;
    }

    // local first term: balls of discrete volume closest to 1
    int m_unit = 0;
    for (std::size_t m = 1; m < rings.size(); ++m)
        if (std::abs(cell * double(ball_count[m]) - 1.0) < std::abs(cell * double(ball_count[m_unit]) - 1.0))
            m_unit = static_cast<int>(m);

    const std::size_t npts = g.size();
    std::vector<double> best_osc(npts, 0.0), best_avg(npts, 0.0);

    parallel_for(npts, [&](std::size_t lo, std::size_t hi) {
        std::vector<std::array<int, 2>> members;
        for (std::size_t i = lo; i < hi; ++i) {
            members.clear();
            double sum_abs = 0;
            cplx sum{0, 0};
            double osc = 0, unit_avg = 0;
            for (std::size_t m = 0; m < rings.size(); ++m) {
                for (const auto& d : rings[m]) {
                    const cplx v = f.values[offset_index(g, i, d)];
                    sum += v;
                    sum_abs += std::abs(v);
                    members.push_back(d);
                }
                const double vol = cell * double(ball_count[m]);
                if (local && static_cast<int>(m) == m_unit) unit_avg = cell * sum_abs;
                if (local && vol > 1.0) continue;  // oscillation family capped at volume 1
                const cplx mean = sum / double(ball_count[m]);
                double dev = 0;
                for (const auto& d : members) dev += std::abs(f.values[offset_index(g, i, d)] - mean);
                osc = std::max(osc, dev / double(ball_count[m]));
            }
            best_osc[i] = osc;
            best_avg[i] = unit_avg;
        }
    });

    double osc = 0, avg = 0;
    for (std::size_t i = 0; i < npts; ++i) {
        osc = std::max(osc, best_osc[i]);
        avg = std::max(avg, best_avg[i]);
    }
    return local ? avg + osc : osc;
}

SampledField maximal_op(const SampledField& f, double eta) {
    if (!(eta > 0)) throw std::invalid_argument("maximal_op: eta must be positive");
    const GridSpec& g = f.grid;
    const int m_max = g.n / 2;  // radius cap L/2
    const auto rings = build_rings(g, m_max);

    std::vector<double> powed(f.values.size());
    for (std::size_t i = 0; i < powed.size(); ++i) powed[i] = std::pow(std::abs(f.values[i]), eta);

    SampledField out = make_field(g);
    parallel_for(g.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double acc = 0, best = 0;
            std::size_t cnt = 0;
            for (const auto& ring : rings) {
                for (const auto& d : ring) acc += powed[offset_index(g, i, d)];
                cnt += ring.size();
                best = std::max(best, acc / double(cnt));
            }
            out.values[i] = std::pow(best, 1.0 / eta);
        }
    });
    return out;
}

FsCheckResult fs_vector_check(const std::vector<SampledField>& family, double p, double q) {
    if (family.empty()) throw std::invalid_argument("fs_vector_check: empty family");
    if (!(p > 1) || std::isinf(p) || !(q > 1) || std::isinf(q))
        throw std::invalid_argument("fs_vector_check: need finite p, q > 1");
    const GridSpec& g = family.front().grid;
    for (const auto& fj : family) require_same_grid(g, fj.grid);

    SampledField lhs = make_field(g), rhs = make_field(g);
    for (const auto& fj : family) {
        const SampledField m = maximal_op(fj, 1.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            lhs.values[i] += std::pow(m.values[i].real(), q);
            rhs.values[i] += std::pow(std::abs(fj.values[i]), q);
        }
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        lhs.values[i] = std::pow(lhs.values[i].real(), 1.0 / q);
        rhs.values[i] = std::pow(rhs.values[i].real(), 1.0 / q);
    }
    FsCheckResult r{lp_norm(lhs, p), lp_norm(rhs, p), 0.0};
    if (r.rhs == 0.0) throw std::invalid_argument("fs_vector_check: zero family");
    r.ratio = r.lhs / r.rhs;
    return r;
}

namespace {

cplx i_xi_power(const GridSpec& g, std::size_t idx, const std::array<int, 2>& alpha) {
    cplx acc{1.0, 0.0};
    const cplx z0{0.0, g.freq(g.axis_index(idx, 0))};
    for (int e = 0; e < alpha[0]; ++e) acc *= z0;
    if (g.dim == 2) {
        const cplx z1{0.0, g.freq(g.axis_index(idx, 1))};
        for (int e = 0; e < alpha[1]; ++e) acc *= z1;
    }
    return acc;
}

std::vector<std::array<int, 2>> full_multi_indices(int dim, int order) {
    std::vector<std::array<int, 2>> out;
    if (dim == 1) {
        out.push_back({order, 0});
    } else {
        for (int a1 = 0; a1 <= order; ++a1) out.push_back({order - a1, a1});
    }
    return out;
}

}  // namespace

SampledField poincare_reconstruct(const PartialDerivativeSet& set, double consistency_tol) {
    const GridSpec& g = set.grid;
    g.validate();
    if (set.order < 1) throw std::invalid_argument("poincare_reconstruct: order must be >= 1");

    const auto wanted = full_multi_indices(g.dim, set.order);
    std::vector<const SampledField*> fields(wanted.size(), nullptr);
    for (const auto& [alpha, fld] : set.entries) {
        require_same_grid(g, fld.grid);
        if (alpha[0] < 0 || alpha[1] < 0 || alpha[0] + alpha[1] != set.order ||
            (g.dim == 1 && alpha[1] != 0))
            throw std::invalid_argument("poincare_reconstruct: bad multi-index");
        for (std::size_t t = 0; t < wanted.size(); ++t) {
            if (wanted[t] == alpha) {
                if (fields[t]) throw std::invalid_argument("poincare_reconstruct: duplicate multi-index");
                fields[t] = &fld;
            }
        }
    }
    for (std::size_t t = 0; t < wanted.size(); ++t)
        if (!fields[t]) throw std::invalid_argument("poincare_reconstruct: incomplete derivative set");

    std::vector<SpectralField> spect;
    spect.reserve(wanted.size());
    for (const auto* fp : fields) spect.push_back(forward_transform(*fp));

    double scale = 0;
    for (const auto& S : spect)
        for (const auto& c : S.coeff) scale = std::max(scale, std::abs(c));
    const double tol = consistency_tol * std::max(1.0, scale);

    for (const auto& S : spect)
        if (std::abs(S.coeff[0]) > tol)
            throw std::invalid_argument("poincare_reconstruct: derivative field has a nonzero mean");

    // cross consistency: d_1 f_{(a0, a1)} must match d_0 f_{(a0-1, a1+1)}
    if (g.dim == 2) {
        for (std::size_t t = 0; t + 1 < wanted.size(); ++t) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                const cplx xi0{0.0, g.freq(g.axis_index(i, 0))};
                const cplx xi1{0.0, g.freq(g.axis_index(i, 1))};
                if (std::abs(xi1 * spect[t].coeff[i] - xi0 * spect[t + 1].coeff[i]) > tol)
                    throw std::invalid_argument("poincare_reconstruct: inconsistent cross partials");
            }
        }
    }

    SpectralField F = make_spectrum(g);
    for (std::size_t i = 1; i < g.size(); ++i) {
        cplx acc{0.0, 0.0};
        int used = 0;
        const double x0 = g.freq(g.axis_index(i, 0));
        const double x1 = g.dim == 2 ? g.freq(g.axis_index(i, 1)) : 0.0;
        for (std::size_t t = 0; t < wanted.size(); ++t) {
            if ((wanted[t][0] > 0 && x0 == 0.0) || (wanted[t][1] > 0 && x1 == 0.0)) continue;
            acc += spect[t].coeff[i] / i_xi_power(g, i, wanted[t]);
            ++used;
        }
        if (used == 0) throw std::logic_error("poincare_reconstruct: no admissible multi-index");
        F.coeff[i] = acc / double(used);
    }
    return inverse_transform(F);
}

PartialDerivativeSet spectral_partials(const SampledField& f, int order) {
    PartialDerivativeSet set{f.grid, order, {}};
    const SpectralField F = forward_transform(f);
    for (const auto& alpha : full_multi_indices(f.grid.dim, order)) {
        SpectralField G = F;
        for (std::size_t i = 0; i < G.coeff.size(); ++i) G.coeff[i] *= i_xi_power(f.grid, i, alpha);
        set.entries.emplace_back(alpha, inverse_transform(G));
    }
    return set;
}

}  // namespace lpbk
