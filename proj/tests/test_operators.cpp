#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpbk/operators.hpp"
#include "lpbk/presets.hpp"
#include "lpbk/transform.hpp"

using namespace lpbk;

constexpr double kInf = INFINITY;

namespace {

double field_dist(const SampledField& a, const SampledField& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

}  // namespace

TEST_CASE("riesz sends sin to minus cos") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = make_field(g), want = make_field(g);
    for (int i = 0; i < g.n; ++i) {
        f.values[i] = std::sin(g.coord(i));
        want.values[i] = -std::cos(g.coord(i));
    }
    CHECK(field_dist(riesz(f, 0), want) < 1e-12);
}

TEST_CASE("riesz transforms square-sum to minus the mean-free identity") {
    GridSpec g1{1, 256, 2 * pi};
    SampledField f = preset_random_bandlimited(g1, 4, 1, 30);
    for (auto& v : f.values) v += 0.3;
    SampledField rr = riesz(riesz(f, 0), 0);
    const cplx m = mean_value(f);
    double worst = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(rr.values[i] + (f.values[i] - m)));
    CHECK(worst < 1e-12);

    GridSpec g2{2, 32, 2 * pi};
    SampledField f2 = preset_random_bandlimited(g2, 4, 1, 8);
    for (auto& v : f2.values) v += 0.3;
    SampledField acc = make_field(g2);
    for (int ax = 0; ax < 2; ++ax) {
        SampledField r2 = riesz(riesz(f2, ax), ax);
        for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += r2.values[i];
    }
    const cplx m2 = mean_value(f2);
    worst = 0;
    for (std::size_t i = 0; i < f2.values.size(); ++i)
        worst = std::max(worst, std::abs(acc.values[i] + (f2.values[i] - m2)));
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(riesz(f, 1), std::invalid_argument);  // axis out of range in 1d
}

TEST_CASE("lift round trip and exact harmonic factor") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = preset_random_bandlimited(g, 6, 1, 30);
    SampledField back = lift(lift(f, 0.7), -0.7);
    const cplx m = mean_value(f);
    double worst = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(back.values[i] - (f.values[i] - m)));
    CHECK(worst < 1e-10);

    SampledField h4 = preset_harmonic(g, {4, 0});
    SampledField l = lift(h4, 1.3);
    const double factor = std::pow(4.0, 1.3);
    for (std::size_t i = 0; i < h4.values.size(); ++i)
        CHECK(std::abs(l.values[i] - factor * h4.values[i]) < 1e-11);
}

TEST_CASE("heat flow: semigroup, contraction, positivity") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = preset_random_bandlimited(g, 12, 1, 30);
    CHECK(field_dist(heat(f, 0.0), f) < 1e-13);
    CHECK(field_dist(heat(heat(f, 0.03), 0.07), heat(f, 0.1)) < 1e-12);
    for (double t : {0.01, 0.1, 1.0}) {
        for (double p : {1.0, 2.0, kInf}) {
            CHECK(lp_norm(heat(f, t), p) <= lp_norm(f, p) * (1 + 1e-12));
        }
    }
    SampledField pos = make_field(g);
    for (int i = 0; i < g.n; ++i) pos.values[i] = 1.0 + std::cos(g.coord(i));
    SampledField hp = heat(pos, 0.1);
    for (const auto& v : hp.values) CHECK(v.real() > -1e-12);
    CHECK_THROWS_AS(heat(f, -0.5), std::invalid_argument);
}

TEST_CASE("geometric time grids") {
    auto t = geometric_times(1e-4, 4.0, 32);
    CHECK(t.size() == 32);
    CHECK(t.front() == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(t.back() == doctest::Approx(4.0).epsilon(1e-14));
    const double r0 = t[1] / t[0];
    for (std::size_t i = 1; i + 1 < t.size(); ++i)
        CHECK(t[i + 1] / t[i] == doctest::Approx(r0).epsilon(1e-12));
}

TEST_CASE("hardy norm closed forms") {
    GridSpec g{1, 256, 2 * pi};
    SampledField c = make_field(g);
    for (auto& v : c.values) v = 1.7;
    CHECK(hardy_norm(c, 2) == doctest::Approx(1.7 * std::sqrt(g.box)).epsilon(1e-12));
    CHECK(hardy_norm(c, kInf) == doctest::Approx(1.7).epsilon(1e-12));

    // single harmonic: sup_t |heat f| is attained at the smallest time
    const int k = 4;
    SampledField f = preset_harmonic(g, {k, 0});
    const double h2 = g.spacing() * g.spacing();
    const double want = std::exp(-h2 * k * k) * std::sqrt(g.box);
    CHECK(hardy_norm(f, 2) == doctest::Approx(want).epsilon(1e-11));
    CHECK(hardy_norm(f, 2, true) <= hardy_norm(f, 2) * (1 + 1e-12));

    SampledField r = preset_random_bandlimited(g, 19, 1, 30);
    CHECK(hardy_norm(r, 1, false, {0.01, 0.1, 1.0}) <= lp_norm(r, 1) * (1 + 1e-12));
}

TEST_CASE("bmo of the balanced step matches the discrete oracle") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = make_field(g);
    for (int i = 0; i < g.n; ++i) f.values[i] = i < g.n / 2 ? 1.0 : -1.0;
    // worst ball straddles a jump: mean oscillation 4m(m+1)/(2m+1)^2 at m = n/4
    CHECK(bmo_norm(f) == doctest::Approx(16640.0 / 16641.0).epsilon(1e-12));

    SampledField c = make_field(g);
    for (auto& v : c.values) v = 5.0;
    CHECK(bmo_norm(c) == 0.0);

    SampledField fc = f;
    for (auto& v : fc.values) v += 3.0;  // oscillation ignores level shifts
    CHECK(bmo_norm(fc) == doctest::Approx(bmo_norm(f)).epsilon(1e-12));
}

TEST_CASE("local bmo adds the unit-ball average of the size") {
    GridSpec g{1, 256, 2 * pi};
    SampledField c = make_field(g);
    for (auto& v : c.values) v = 5.0;
    // constant field: no oscillation, only the integral over the ball whose
    // volume is closest to one
    const double h = g.spacing();
    int best_m = 0;
    for (int m = 0; m <= g.n / 4; ++m)
        if (std::abs((2 * m + 1) * h - 1) < std::abs((2 * best_m + 1) * h - 1)) best_m = m;
    CHECK(bmo_norm(c, true) == doctest::Approx(5.0 * (2 * best_m + 1) * h).epsilon(1e-12));

    SampledField f = preset_random_bandlimited(g, 23, 1, 30);
    CHECK(bmo_norm(f, true) >= bmo_norm(f) * 0.0);  // defined and nonnegative
    CHECK(bmo_norm(f, true) > 0.0);
}

TEST_CASE("maximal function dominates the field and is sublinear") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = preset_random_bandlimited(g, 25, 1, 30);
    SampledField u = preset_random_bandlimited(g, 26, 1, 30);
    for (double eta : {1.0, 2.0}) {
        SampledField Mf = maximal_op(f, eta);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            CHECK(Mf.values[i].real() >= std::abs(f.values[i]) - 1e-12);
        SampledField sum = f;
        for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += u.values[i];
        SampledField Ms = maximal_op(sum, eta), Mu = maximal_op(u, eta);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            CHECK(Ms.values[i].real() <=
                  Mf.values[i].real() + Mu.values[i].real() + 1e-12);
    }
    SampledField c = make_field(g);
    for (auto& v : c.values) v = 2.0;
    SampledField Mc = maximal_op(c, 1.0);
    for (const auto& v : Mc.values) CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(maximal_op(f, 0.0), std::invalid_argument);
}

TEST_CASE("maximal function of a point mass decays like the ball volume") {
    GridSpec g{1, 256, 2 * pi};
    SampledField f = make_field(g);
    const int i0 = 100;
    f.values[i0] = 1.0;
    SampledField M = maximal_op(f, 1.0);
    CHECK(M.values[i0].real() == doctest::Approx(1.0).epsilon(1e-13));
    for (int d : {1, 5, 20}) {
        CHECK(M.values[i0 + d].real() == doctest::Approx(1.0 / (2 * d + 1)).epsilon(1e-12));
        CHECK(M.values[i0 - d].real() == doctest::Approx(1.0 / (2 * d + 1)).epsilon(1e-12));
    }
    // larger exponent gives a pointwise larger function
    SampledField f2 = preset_random_bandlimited(g, 29, 1, 30);
    SampledField M1 = maximal_op(f2, 1.0), M2 = maximal_op(f2, 2.0);
    for (std::size_t i = 0; i < M1.values.size(); ++i)
        CHECK(M2.values[i].real() >= M1.values[i].real() - 1e-12);
}

TEST_CASE("vector maximal check is exact on constant families") {
    GridSpec g{1, 128, 2 * pi};
    std::vector<SampledField> fam;
    for (int j = 0; j < 5; ++j) {
        SampledField c = make_field(g);
        for (auto& v : c.values) v = 2.0;
        fam.push_back(c);
    }
    FsCheckResult r = fs_vector_check(fam, 2.0, 3.0);
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.lhs == doctest::Approx(2.0 * std::pow(5.0, 1.0 / 3) * std::sqrt(g.box)).epsilon(1e-12));
    CHECK_THROWS_AS(fs_vector_check(fam, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(fs_vector_check(fam, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fs_vector_check({}, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("poincare reconstruction from first derivatives in one dimension") {
    GridSpec g{1, 256, 2 * pi};
    SampledField want = make_field(g), df = make_field(g);
    for (int i = 0; i < g.n; ++i) {
        want.values[i] = std::sin(3 * g.coord(i));
        df.values[i] = 3 * std::cos(3 * g.coord(i));
    }
    PartialDerivativeSet set{g, 1, {{{1, 0}, df}}};
    SampledField got = poincare_reconstruct(set);
    CHECK(field_dist(got, want) < 1e-9);
}

TEST_CASE("poincare reconstruction in two dimensions at orders one and two") {
    GridSpec g{2, 32, 2 * pi};
    SampledField f = preset_random_bandlimited(g, 41, 1, 8);
    for (int order : {1, 2}) {
        PartialDerivativeSet set = spectral_partials(f, order);
        CHECK(set.entries.size() == static_cast<std::size_t>(order + 1));
        SampledField got = poincare_reconstruct(set);
        CHECK(field_dist(got, f) < 1e-9);
    }
}

TEST_CASE("poincare rejects inconsistent or malformed inputs") {
    GridSpec g{2, 32, 2 * pi};
    SampledField f = preset_random_bandlimited(g, 43, 1, 8);
    SampledField u = preset_random_bandlimited(g, 44, 1, 8);

    PartialDerivativeSet ok = spectral_partials(f, 1);
    PartialDerivativeSet bad = ok;
    bad.entries[1].second = spectral_partials(u, 1).entries[1].second;  // foreign partial
    CHECK_THROWS_AS(poincare_reconstruct(bad), std::invalid_argument);

    PartialDerivativeSet dup = ok;
    dup.entries[1].first = dup.entries[0].first;
    CHECK_THROWS_AS(poincare_reconstruct(dup), std::invalid_argument);

    PartialDerivativeSet missing = ok;
    missing.entries.pop_back();
    CHECK_THROWS_AS(poincare_reconstruct(missing), std::invalid_argument);

    PartialDerivativeSet offset = ok;
    for (auto& v : offset.entries[0].second.values) v += 1.0;  // derivative with a mean
    CHECK_THROWS_AS(poincare_reconstruct(offset), std::invalid_argument);
}

TEST_CASE("spectral partials of a harmonic are exact multipliers") {
    GridSpec g{2, 32, 2 * pi};
    SampledField f = preset_harmonic(g, {2, 3});
    PartialDerivativeSet set = spectral_partials(f, 1);
    for (const auto& [alpha, field] : set.entries) {
        const cplx factor = std::pow(cplx{0, 2.0}, alpha[0]) * std::pow(cplx{0, 3.0}, alpha[1]);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            CHECK(std::abs(field.values[i] - factor * f.values[i]) < 1e-11);
    }
}
