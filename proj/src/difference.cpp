#include "lpbk/difference.hpp"

#include <cmath>
#include <stdexcept>

namespace lpbk {
namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("alternating_sum_identity: exact range exceeded");
    return r;
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("alternating_sum_identity: exact range exceeded");
    return r;
}

long long to_ll(i128 v) {
    if (v > i128(9223372036854775807LL) || v < -i128(9223372036854775807LL) - 1)
        throw std::overflow_error("alternating_sum_identity: exact range exceeded");
    return static_cast<long long>(v);
}

std::vector<long long> binomial_row(int m) {
    std::vector<long long> c(static_cast<std::size_t>(m) + 1, 1);
    for (int l = 1; l <= m; ++l) c[l] = c[l - 1] * (m - l + 1) / l;
    return c;
}

SampledField shifted(const SampledField& f, int d0, int d1) {
    const GridSpec& g = f.grid;
    SampledField out = make_field(g);
    if (g.dim == 1) {
        for (int i = 0; i < g.n; ++i) out.values[i] = f.values[wrap_index(i + d0, g.n)];
    } else {
        for (int i0 = 0; i0 < g.n; ++i0)
            for (int i1 = 0; i1 < g.n; ++i1)
                out.values[g.flat(i0, i1)] =
                    f.values[g.flat(wrap_index(i0 + d0, g.n), wrap_index(i1 + d1, g.n))];
    }
    return out;
}

}  // namespace

SampledField difference(const SampledField& f, std::array<int, 2> cells, int order) {
    if (order < 1 || order > 40) throw std::invalid_argument("difference: order must be in [1, 40]");
    const GridSpec& g = f.grid;
    const auto c = binomial_row(order);
    SampledField out = make_field(g);
    for (int l = 0; l <= order; ++l) {
        const double w = ((order - l) % 2 ? -1.0 : 1.0) * static_cast<double>(c[l]);
        const SampledField s = shifted(f, l * cells[0], g.dim == 2 ? l * cells[1] : 0);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += w * s.values[i];
    }
    return out;
}

SampledField difference_recursive(const SampledField& f, std::array<int, 2> cells, int order) {
    if (order < 1 || order > 40) throw std::invalid_argument("difference: order must be in [1, 40]");
    SampledField cur = f;
    for (int step = 0; step < order; ++step) {
        const SampledField s = shifted(cur, cells[0], cur.grid.dim == 2 ? cells[1] : 0);
        for (std::size_t i = 0; i < cur.values.size(); ++i) cur.values[i] = s.values[i] - cur.values[i];
    }
    return cur;
}

std::pair<long long, long long> alternating_sum_identity(int m) {
    if (m < 1) throw std::invalid_argument("alternating_sum_identity: m must be >= 1");
    // C(m, l) by Pascal recurrence in the checked type
    std::vector<i128> c(static_cast<std::size_t>(m) + 1, 1);
    for (int l = 1; l <= m; ++l)
        c[l] = checked_mul(c[l - 1], m - l + 1) / l;

    i128 lhs = 0;
    for (int l = 1; l <= m; ++l) {
        i128 p = 1;
        for (int e = 0; e < m; ++e) p = checked_mul(p, l);
        i128 term = checked_mul(c[l], p);
        lhs = checked_add(lhs, l % 2 ? -term : term);
    }
    i128 rhs = 1;
    for (int l = 2; l <= m; ++l) rhs = checked_mul(rhs, l);
    if (m % 2) rhs = -rhs;
    return {to_ll(lhs), to_ll(rhs)};
}

std::vector<std::array<int, 2>> default_shift_set(const GridSpec& g) {
    std::vector<std::array<int, 2>> shifts;
    const double rmax = g.box / 4.0;
    const double h = g.spacing();
    if (g.dim == 1) {
        for (int d = 1; d * h <= rmax && d <= g.n / 2; ++d) shifts.push_back({d, 0});
    } else {
        for (int a = 0; a < g.n; ++a) {
            for (int b = 0; b < g.n; ++b) {
                const int d0 = fold_disp(a, g.n), d1 = fold_disp(b, g.n);
                if (d0 == 0 && d1 == 0) continue;
                if (h * std::sqrt(double(d0) * d0 + double(d1) * d1) <= rmax)
                    shifts.push_back({d0, d1});
            }
        }
    }
    if (shifts.empty()) throw std::invalid_argument("default_shift_set: no lattice shift within L/4");
    return shifts;
}

double hz_seminorm(const SampledField& f, double s,
                   const std::optional<std::vector<std::array<int, 2>>>& shifts) {
    if (!(s > 0)) throw std::invalid_argument("hz_seminorm: s must be positive");
    const int m = static_cast<int>(std::floor(s)) + 1;
    const auto& set = shifts ? *shifts : default_shift_set(f.grid);
    const double h = f.grid.spacing();
    double best = 0;
    for (const auto& d : set) {
        const double len = h * std::sqrt(double(d[0]) * d[0] + double(d[1]) * d[1]);
        if (len == 0.0) throw std::invalid_argument("hz_seminorm: zero shift");
        const SampledField diff = difference(f, d, m);
        double sup = 0;
        for (const auto& v : diff.values) sup = std::max(sup, std::abs(v));
        best = std::max(best, sup / std::pow(len, s));
    }
    return best;
}

}  // namespace lpbk
