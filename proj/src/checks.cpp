#include "lpbk/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lpbk/difference.hpp"
#include "lpbk/operators.hpp"
#include "lpbk/presets.hpp"

namespace lpbk {

const std::vector<std::string> check_catalog = {
    "phi_independence", "lq_monotone",  "sobolev_embedding", "lift_isomorphism",
    "fourier_refinement", "bc_embedding", "holder_equiv",    "riesz_bounded",
    "bf_sandwich",      "l2_corridor",  "fs_maximal",        "realization",
    "diff_convolution",
};

namespace {

// slack for inequalities that are exact in the grid arithmetic up to roundoff
constexpr double kRoundSlack = 1e-10;
constexpr double kTightSlack = 1e-12;
constexpr double kIdentityTol = 1e-8;
constexpr double kCorridorTol = 1e-6;

double param(const std::map<std::string, double>& m, const std::string& k, double dflt) {
    auto it = m.find(k);
    return it == m.end() ? dflt : it->second;
}

double besov(const SampledField& f, const DyadicPartition& P, double s, double p, double q,
             SpaceKind kind = SpaceKind::besov_homog) {
    return space_norm(f, P, SpaceParams{kind, s, p, q, 0}).aggregate;
}

// phi_{j-1} + phi_j + phi_{j+1}; must equal 1 wherever phi_j is nonzero, which
// holds exactly when the stored range carries the guard bands
std::vector<double> guard_sum(const DyadicPartition& P, int j) {
    std::vector<double> sum(P.grid.size(), 0.0);
    for (int i = j - 1; i <= j + 1; ++i) {
        if (!P.has_band(i)) continue;
        const auto& phi = P.phi(i);
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += phi[t];
    }
    const auto& phi_j = P.phi(j);
    for (std::size_t t = 0; t < sum.size(); ++t)
        if (phi_j[t] != 0.0 && std::abs(sum[t] - 1.0) > 1e-12)
            throw std::invalid_argument("band range too narrow: neighbors missing for band " +
                                        std::to_string(j));
    return sum;
}

SampledField kernel_of(const GridSpec& g, const std::vector<cplx>& symbol_vals) {
    SpectralField F{g, symbol_vals};
    return inverse_transform(F);
}

double conjugate_exponent(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return INFINITY;
    if (!(p > 1)) throw std::invalid_argument("conjugate exponent needs p >= 1");
    return p / (p - 1.0);
}

double convention_factor(const GridSpec& g) { return std::pow(2.0 * pi, -0.5 * g.dim); }

}  // namespace

double young_lift_constant(const DyadicPartition& P, double alpha) {
    const GridSpec& g = P.grid;
    double best = 0;
    for (int j = P.range.j_min; j <= P.range.j_max; ++j) {
        if (!P.active(j)) continue;
        const auto gs = guard_sum(P, j);
        std::vector<cplx> sym(g.size(), cplx{0, 0});
        for (std::size_t i = 0; i < sym.size(); ++i) {
            if (gs[i] == 0.0) continue;
            const double r = g.lattice_radius(i);
            sym[i] = std::pow(r, alpha) * gs[i];
        }
        const double c = std::pow(2.0, -j * alpha) * convention_factor(g) *
                         lp_norm(kernel_of(g, sym), 1.0);
        best = std::max(best, c);
    }
    return best;
}

double young_riesz_constant(const DyadicPartition& P, int axis) {
    const GridSpec& g = P.grid;
    if (axis < 0 || axis >= g.dim) throw std::invalid_argument("riesz constant: bad axis");
    double best = 0;
    for (int j = P.range.j_min; j <= P.range.j_max; ++j) {
        if (!P.active(j)) continue;
        const auto gs = guard_sum(P, j);
        std::vector<cplx> sym(g.size(), cplx{0, 0});
        for (std::size_t i = 0; i < sym.size(); ++i) {
            if (gs[i] == 0.0) continue;
            const double r = g.lattice_radius(i);
            const double xi_a = g.freq(g.axis_index(i, axis));
            sym[i] = cplx{0.0, -xi_a / r} * gs[i];
        }
        best = std::max(best, convention_factor(g) * lp_norm(kernel_of(g, sym), 1.0));
    }
    return best;
}

double holder_embedding_constant(const DyadicPartition& P, double p) {
    const GridSpec& g = P.grid;
    const double pc = conjugate_exponent(p);
    double best = 0;
    for (int j = P.range.j_min; j <= P.range.j_max; ++j) {
        if (!P.active(j)) continue;
        const auto gs = guard_sum(P, j);
        std::vector<cplx> sym(gs.size());
        for (std::size_t i = 0; i < gs.size(); ++i) sym[i] = gs[i];
        const double c = std::pow(2.0, -j * g.dim / p) * convention_factor(g) *
                         lp_norm(kernel_of(g, sym), pc);
        best = std::max(best, c);
    }
    return best;
}

std::vector<SampledField> generate_family(const FunctionFamily& fam) {
    const GridSpec& g = fam.grid;
    g.validate();
    std::vector<SampledField> out;
    const double k_lo = param(fam.params, "k_lo", 1.0);
    const double k_hi = param(fam.params, "k_hi", g.n / 8.0);
    if (fam.generator == "random_bandlimited") {
        for (int i = 0; i < fam.count; ++i)
            out.push_back(preset_random_bandlimited(g, fam.seed + static_cast<std::uint64_t>(i), k_lo, k_hi));
    } else if (fam.generator == "harmonic") {
        const int k0 = std::max(1, static_cast<int>(param(fam.params, "k0", 1.0)));
        for (int i = 0, k = k0; i < fam.count && k < g.n / 2; ++i, k *= 2)
            out.push_back(preset_harmonic(g, {k, 0}));
    } else if (fam.generator == "weierstrass") {
        const int j_cap = static_cast<int>(std::floor(std::log2(g.n / 2.0))) - 1;
        const int j_top = static_cast<int>(param(fam.params, "j_top", std::min(6, j_cap)));
        out.push_back(preset_weierstrass(g, param(fam.params, "s", 0.5), j_top));
    } else if (fam.generator == "mixed") {
        FunctionFamily sub = fam;
        sub.generator = "random_bandlimited";
        out = generate_family(sub);
        sub.generator = "weierstrass";
        auto w = generate_family(sub);
        out.insert(out.end(), w.begin(), w.end());
        out.push_back(preset_harmonic(g, {4, 0}));
    } else {
        throw std::invalid_argument("generate_family: unknown generator " + fam.generator);
    }
    if (out.empty()) throw std::invalid_argument("generate_family: empty family");
    return out;
}

namespace {

struct CheckContext {
    const FunctionFamily& fam;
    std::map<std::string, double> prm;
    ExperimentReport rep;

    double p(const std::string& k, double d) const { return param(prm, k, d); }
    void note(const std::string& k, double v) { rep.params[k] = v; }
    void add(double lhs, double rhs, double ratio) { rep.instances.push_back({lhs, rhs, ratio}); }
};

void summarize(ExperimentReport& rep) {
    if (rep.instances.empty()) return;
    double lo = INFINITY, hi = -INFINITY, acc = 0;
    for (const auto& in : rep.instances) {
        lo = std::min(lo, in.ratio);
        hi = std::max(hi, in.ratio);
        acc += in.ratio;
    }
    rep.min_ratio = lo;
    rep.max_ratio = hi;
    rep.mean_ratio = acc / static_cast<double>(rep.instances.size());
}

double safe_ratio(double lhs, double rhs) {
    if (rhs == 0.0) return lhs == 0.0 ? 1.0 : INFINITY;
    return lhs / rhs;
}

void check_phi_independence(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2), q = c.p("q", 2);
    const auto P1 = build_partition(c.fam.grid, build_cutoff("exp-inv"));
    const auto P2 = build_partition(c.fam.grid, build_cutoff("exp-inv-sq"));
    const double bound = c.p("constant", frozen::phi_independence);
    c.rep.constant = bound;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double a = besov(f, P1, s, p, q);
        const double b = besov(f, P2, s, p, q);
        const double r = safe_ratio(a, b);
        c.add(a, b, r);
        ok = ok && std::max(r, 1.0 / r) <= bound;
    }
    c.rep.pass = ok;
}

void check_lq_monotone(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2);
    const double q_lo = c.p("q_lo", 1), q_hi = c.p("q_hi", 2);
    if (!(q_hi >= q_lo)) throw std::invalid_argument("lq_monotone: need q_hi >= q_lo");
    const auto P = build_partition(c.fam.grid);
    c.rep.tolerance = kTightSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double coarse = besov(f, P, s, p, q_hi);
        const double fine = besov(f, P, s, p, q_lo);
        c.add(coarse, fine, safe_ratio(coarse, fine));
        ok = ok && coarse <= fine + kTightSlack * std::max(1.0, fine);
    }
    c.rep.pass = ok;
}

void check_sobolev_embedding(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2), q = c.p("q", 2);
    const auto P = build_partition(c.fam.grid);
    const double C = holder_embedding_constant(P, p);
    const double n_over_p = std::isinf(p) ? 0.0 : c.fam.grid.dim / p;
    c.rep.constant = C;
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double lhs = besov(f, P, s - n_over_p, INFINITY, q);
        const double rhs = besov(f, P, s, p, q);
        c.add(lhs, rhs, safe_ratio(lhs, rhs));
        ok = ok && lhs <= C * rhs * (1 + kRoundSlack);
    }
    c.rep.pass = ok;
}

void check_lift_isomorphism(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2), q = c.p("q", 2), alpha = c.p("alpha", 1);
    const auto P = build_partition(c.fam.grid);
    const double c_fwd = young_lift_constant(P, alpha);
    const double c_inv = young_lift_constant(P, -alpha);
    c.note("c_forward", c_fwd);
    c.note("c_inverse", c_inv);
    c.rep.constant = c_fwd;
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double lhs = besov(lift(f, alpha), P, s - alpha, p, q);
        const double rhs = besov(f, P, s, p, q);
        const double r = safe_ratio(lhs, rhs);
        c.add(lhs, rhs, r);
        ok = ok && r <= c_fwd * (1 + kRoundSlack) && r >= 1.0 / (c_inv * (1 + kRoundSlack));
    }
    c.rep.pass = ok;
}

void check_fourier_refinement(CheckContext& c) {
    const GridSpec& g = c.fam.grid;
    const GridSpec dual{g.dim, g.n, g.n * g.freq_step()};
    const auto P_dual = build_partition(dual);
    c.rep.constant = 1.0;
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const SampledField Ff{dual, forward_transform(f).coeff};
        const double lhs = besov(Ff, P_dual, 0.0, INFINITY, 1.0);
        const double rhs = lp_norm(f, 1.0);
        const double r = safe_ratio(lhs, rhs);
        c.add(lhs, rhs, r);
        ok = ok && r <= 1.0 + kRoundSlack;
    }
    c.rep.pass = ok;
}

void check_bc_embedding(CheckContext& c) {
    const auto P = build_partition(c.fam.grid);
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double lhs = lp_norm(f, INFINITY);
        const double rhs = besov(f, P, 0.0, INFINITY, 1.0) + std::abs(mean_value(f));
        c.add(lhs, rhs, safe_ratio(lhs, rhs));
        ok = ok && lhs <= rhs * (1 + kRoundSlack) + kTightSlack;
    }
    c.rep.pass = ok;
}

void check_holder_equiv(CheckContext& c) {
    const double s = c.p("s", 0.5);
    const auto P = build_partition(c.fam.grid);
    const double bound = c.p("constant", frozen::holder_equiv);
    c.rep.constant = bound;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double hz = hz_seminorm(f, s);
        const double bn = besov(f, P, s, INFINITY, INFINITY);
        const double r = safe_ratio(hz, bn);
        c.add(hz, bn, r);
        ok = ok && std::max(r, 1.0 / r) <= bound;
    }
    c.rep.pass = ok;
}

void check_riesz_bounded(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2), q = c.p("q", 2);
    const int axis = static_cast<int>(c.p("axis", 0));
    const auto P = build_partition(c.fam.grid);
    const double C = young_riesz_constant(P, axis);
    c.rep.constant = C;
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double lhs = besov(riesz(f, axis), P, s, p, q);
        const double rhs = besov(f, P, s, p, q);
        c.add(lhs, rhs, safe_ratio(lhs, rhs));
        ok = ok && lhs <= C * rhs * (1 + kRoundSlack);
    }
    c.rep.pass = ok;
}

void check_bf_sandwich(CheckContext& c) {
    const double s = c.p("s", 0.5), p = c.p("p", 2), q = c.p("q", 2);
    if (std::isinf(p)) throw std::invalid_argument("bf_sandwich: p must be finite");
    const auto P = build_partition(c.fam.grid);
    c.rep.constant = 1.0;
    c.rep.tolerance = kRoundSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double b_outer = besov(f, P, s, p, std::max(p, q), SpaceKind::besov_nonhomog);
        const double mid = besov(f, P, s, p, q, SpaceKind::tl_nonhomog);
        const double b_inner = besov(f, P, s, p, std::min(p, q), SpaceKind::besov_nonhomog);
        c.add(b_outer, mid, safe_ratio(b_outer, mid));
        c.add(mid, b_inner, safe_ratio(mid, b_inner));
        ok = ok && b_outer <= mid * (1 + kRoundSlack) && mid <= b_inner * (1 + kRoundSlack);
    }
    c.rep.pass = ok;
}

void check_l2_corridor(CheckContext& c) {
    const auto P = build_partition(c.fam.grid);
    const double lo = std::sqrt(0.5) - kCorridorTol, hi = 1.0 + kCorridorTol;
    c.rep.constant = 1.0;
    c.rep.tolerance = kCorridorTol;
    bool ok = true;
    for (auto f : generate_family(c.fam)) {
        const cplx m = mean_value(f);
        for (auto& v : f.values) v -= m;
        const double lhs = besov(f, P, 0.0, 2.0, 2.0);
        const double rhs = lp_norm(f, 2.0);
        const double r = safe_ratio(lhs, rhs);
        c.add(lhs, rhs, r);
        ok = ok && r >= lo && r <= hi;
    }
    c.rep.pass = ok;
}

void check_fs_maximal(CheckContext& c) {
    if (c.fam.generator != "random_bandlimited")
        throw std::invalid_argument("fs_maximal: needs the random_bandlimited generator");
    const double p = c.p("p", 2), q = c.p("q", 2);
    const int j_count = static_cast<int>(c.p("j_count", 8));
    const double k_lo = param(c.fam.params, "k_lo", 1.0);
    const double k_hi = param(c.fam.params, "k_hi", c.fam.grid.n / 8.0);
    const double bound = c.p("constant", frozen::fs_maximal);
    c.rep.constant = bound;
    bool ok = true;
    for (int inst = 0; inst < c.fam.count; ++inst) {
        std::vector<SampledField> fields;
        fields.reserve(static_cast<std::size_t>(j_count));
        for (int t = 0; t < j_count; ++t)
            fields.push_back(preset_random_bandlimited(
                c.fam.grid, c.fam.seed + 1000ull * static_cast<std::uint64_t>(inst) + t, k_lo, k_hi));
        const FsCheckResult r = fs_vector_check(fields, p, q);
        c.add(r.lhs, r.rhs, r.ratio);
        ok = ok && r.ratio <= bound;
    }
    c.rep.pass = ok;
}

void check_realization(CheckContext& c) {
    const double s = c.p("s", 0.5);
    if (!(s > 0)) throw std::invalid_argument("realization: needs s > 0");
    const auto P = build_partition(c.fam.grid);
    c.rep.tolerance = kTightSlack;
    bool ok = true;
    for (const auto& f : generate_family(c.fam)) {
        const double bn = besov(f, P, s, INFINITY, INFINITY);
        if (bn == 0.0) continue;
        const BandDecomposition d = decompose(f, P, 0);
        double worst = 0;
        // suffix sums: tail after J = sum of bands j in (J, j_max]
        SampledField tail = make_field(f.grid);
        double geo = 0;
        for (int j = P.range.j_max; j >= 1; --j) {
            const auto& b = d.delta(j);
            for (std::size_t i = 0; i < tail.values.size(); ++i) tail.values[i] += b.values[i];
            geo += std::pow(2.0, -j * s);
            // tail now holds sum over (J, j_max] with J = j - 1
            const double sup = lp_norm(tail, INFINITY);
            worst = std::max(worst, safe_ratio(sup, geo * bn));
        }
        c.add(worst, 1.0, worst);
        ok = ok && worst <= 1.0 + kTightSlack;
    }
    c.rep.pass = ok;
}

void check_diff_convolution(CheckContext& c) {
    const GridSpec& g = c.fam.grid;
    const int m = static_cast<int>(c.p("m", 2));
    const int jc = static_cast<int>(c.p("j", 1));
    if (m < 1 || m > 10) throw std::invalid_argument("diff_convolution: m must be in [1, 10]");
    if (jc < 0 || g.n / (1 << jc) < 8)
        throw std::invalid_argument("diff_convolution: scale too coarse for the grid");
    const int cstep = 1 << jc;

    // The quadrature route samples y on the stride-2^j sublattice, so by
    // Poisson summation its alias error is a Gaussian tail at the mode gap
    // n - m^2 k_hi (the difference pushes field modes up by factors <= m^2).
    // Capping the field bandwidth keeps that tail below ~1e-22 << tolerance.
    if (c.fam.generator != "random_bandlimited")
        throw std::invalid_argument("diff_convolution: needs the random_bandlimited generator");
    const int cap = (g.n - 28 * cstep) / (m * m);
    if (cap < 1)
        throw std::invalid_argument("diff_convolution: no admissible bandwidth at this m, j, n");
    const double k_hi = std::min(param(c.fam.params, "k_hi", g.n / 8.0), double(cap));
    const double k_lo = std::min(param(c.fam.params, "k_lo", 1.0), k_hi);
    FunctionFamily fam = c.fam;
    fam.params["k_hi"] = k_hi;
    fam.params["k_lo"] = k_lo;
    c.note("k_hi_effective", k_hi);
    const double h = g.spacing();
    const double sigma = g.box / 20.0;
    const int dim = g.dim;

    std::vector<double> binom(static_cast<std::size_t>(m) + 1, 1.0);
    for (int l = 1; l <= m; ++l) binom[l] = binom[l - 1] * (m - l + 1) / l;
    double fact = 1;
    for (int l = 2; l <= m; ++l) fact *= l;

    const auto G = [sigma, dim](double rho) {
        return std::pow(sigma, dim) * std::exp(-0.5 * sigma * sigma * rho * rho);
    };
    const double front = std::pow(2.0 * pi, 0.5 * dim);

    // mollifier route: one radial multiplier built from the bump transform
    const Symbol sym = [&](std::array<double, 2> xi) {
        const double rho = std::ldexp(std::hypot(xi[0], xi[1]), -jc);
        double acc = 0;
        for (int r = 1; r <= m; ++r) {
            for (int l = 1; l <= m; ++l) {
                const double sgn = (r + l + m + 1) % 2 ? -1.0 : 1.0;
                acc += sgn * std::pow(double(r), m) * binom[r] * binom[l] * G(r * l * rho);
            }
        }
        acc -= fact * G(0.0);
        return cplx{front * acc, 0.0};
    };

    const auto psi_1d = [&](double y) { return std::exp(-y * y / (2 * sigma * sigma)); };
    const int half = g.n / (2 * cstep);
    const double wq = std::pow(cstep * h, dim);

    c.rep.tolerance = kIdentityTol;
    bool ok = true;
    for (const auto& f : generate_family(fam)) {
        const SampledField lhs = apply_symbol(f, sym);

        // difference route: coarse-lattice quadrature of the bump against
        // pure lattice shifts
        SampledField rhs = make_field(g);
        for (int r = 1; r <= m; ++r) {
            const double coef = ((r + 1) % 2 ? -1.0 : 1.0) * std::pow(double(r), m) * binom[r];
            for (int i0 = -half; i0 < half; ++i0) {
                const double w0 = psi_1d(i0 * cstep * h);
                if (dim == 1) {
                    if (w0 < 1e-300) continue;
                    const SampledField d = difference(f, {-r * i0, 0}, m);
                    const double w = coef * wq * w0;
                    for (std::size_t t = 0; t < rhs.values.size(); ++t) rhs.values[t] += w * d.values[t];
                } else {
                    for (int i1 = -half; i1 < half; ++i1) {
                        const double wv = w0 * psi_1d(i1 * cstep * h);
                        if (wv < 1e-300) continue;
                        const SampledField d = difference(f, {-r * i0, -r * i1}, m);
                        const double w = coef * wq * wv;
                        for (std::size_t t = 0; t < rhs.values.size(); ++t) rhs.values[t] += w * d.values[t];
                    }
                }
            }
        }

        double dev = 0, scale = 0;
        for (std::size_t t = 0; t < rhs.values.size(); ++t) {
            dev = std::max(dev, std::abs(lhs.values[t] - rhs.values[t]));
            scale = std::max(scale, std::abs(lhs.values[t]));
        }
        const double rel = dev / std::max(1.0, scale);
        c.add(lp_norm(lhs, INFINITY), lp_norm(rhs, INFINITY), rel);
        ok = ok && rel <= kIdentityTol;
    }
    c.rep.pass = ok;
}

using CheckFn = void (*)(CheckContext&);

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = {
        {"phi_independence", check_phi_independence},
        {"lq_monotone", check_lq_monotone},
        {"sobolev_embedding", check_sobolev_embedding},
        {"lift_isomorphism", check_lift_isomorphism},
        {"fourier_refinement", check_fourier_refinement},
        {"bc_embedding", check_bc_embedding},
        {"holder_equiv", check_holder_equiv},
        {"riesz_bounded", check_riesz_bounded},
        {"bf_sandwich", check_bf_sandwich},
        {"l2_corridor", check_l2_corridor},
        {"fs_maximal", check_fs_maximal},
        {"realization", check_realization},
        {"diff_convolution", check_diff_convolution},
    };
    return table;
}

}  // namespace

ExperimentReport run_check(const std::string& check_id, const FunctionFamily& fam,
                           const std::map<std::string, double>& params) {
    auto it = check_table().find(check_id);
    if (it == check_table().end()) throw std::invalid_argument("run_check: unknown check " + check_id);
    CheckContext ctx{fam, params, {}};
    ctx.rep.check = check_id;
    ctx.rep.params = params;
    it->second(ctx);
    summarize(ctx.rep);
    return ctx.rep;
}

FitResult fit_constant(const std::string& check_id, const FunctionFamily& calib,
                       const FunctionFamily& valid) {
    const bool two_sided = check_id == "phi_independence" || check_id == "holder_equiv";
    if (!two_sided && check_id != "fs_maximal")
        throw std::invalid_argument("fit_constant: " + check_id + " does not take a fitted bound");

    std::map<std::string, double> prm{{"constant", INFINITY}};
    FitResult fr{0.0, run_check(check_id, calib, prm), {}, false};

    double worst = 0;
    for (const auto& in : fr.calibration.instances)
        worst = std::max(worst, two_sided ? std::max(in.ratio, 1.0 / in.ratio) : in.ratio);
    fr.constant = worst * 1.05;

    fr.validation = run_check(check_id, valid, {{"constant", fr.constant}});
    fr.validated = fr.validation.pass;
    return fr;
}

}  // namespace lpbk
