#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpbk/presets.hpp"
#include "lpbk/spaces.hpp"

using namespace lpbk;

constexpr double kInf = INFINITY;

namespace {

double norm_of(const SampledField& f, const DyadicPartition& P, SpaceKind kind, double s,
               double p, double q, int j_split = 0) {
    return space_norm(f, P, SpaceParams{kind, s, p, q, j_split}).aggregate;
}

}  // namespace

TEST_CASE("single harmonic matches the closed form") {
    GridSpec g{1, 256, 2 * pi};
    DyadicPartition P = build_partition(g);
    struct Row {
        int k, j0;
        double s, p;
    };
    for (Row r : {Row{4, 2, 0.5, 2}, Row{4, 2, 0.3, 4}, Row{8, 3, 1.0, 1}, Row{2, 1, -0.5, 2},
                  Row{16, 4, 0.7, INFINITY}}) {
        SampledField f = preset_harmonic(g, {r.k, 0});
        const double lp = std::isinf(r.p) ? 1.0 : std::pow(g.box, 1.0 / r.p);
        const double want = std::pow(2.0, r.j0 * r.s) * lp;
        for (double q : {1.0, 2.0, kInf}) {
            CHECK(norm_of(f, P, SpaceKind::besov_homog, r.s, r.p, q) ==
                  doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("decomposition reconstructs the field") {
    for (GridSpec g : {GridSpec{1, 256, 2 * pi}, GridSpec{2, 32, 2 * pi}}) {
        DyadicPartition P = build_partition(g);
        SampledField f = preset_random_bandlimited(g, 3, 1, g.n / 8.0);
        for (auto& v : f.values) v += 0.7;  // give it a mean
        for (int j_split : {0, 2}) {
            BandDecomposition d = decompose(f, P, j_split);
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                cplx acc = d.low.values[i];
                for (int j = j_split + 1; j <= P.range.j_max; ++j) acc += d.delta(j).values[i];
                CHECK(std::abs(acc - f.values[i]) < 1e-12);
            }
            CHECK(std::abs(d.dc - mean_value(f)) < 1e-13);
        }
        auto [high, low] = high_low_split(f, P, 0);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            CHECK(std::abs(high.values[i] + low.values[i] - f.values[i]) < 1e-12);
    }
}

TEST_CASE("band projection is idempotent and localized") {
    GridSpec g{1, 128, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_random_bandlimited(g, 5, 1, 16);
    SampledField once = band_project(f, P, 3);
    SampledField f4 = preset_harmonic(g, {4, 0});
    SampledField p2 = band_project(f4, P, 2);
    // phi_2 = 1 at |k| = 4, so the band keeps the harmonic intact
    for (std::size_t i = 0; i < f4.values.size(); ++i)
        CHECK(std::abs(p2.values[i] - f4.values[i]) < 1e-12);
    // projecting the projection onto a disjoint band kills it
    SampledField dead = band_project(once, P, 6);
    for (const auto& v : dead.values) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("lq aggregation is monotone in q") {
    GridSpec g{1, 256, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_random_bandlimited(g, 10, 1, 30);
    double prev = INFINITY;
    for (double q : {0.5, 1.0, 2.0, 4.0, kInf}) {
        const double v = norm_of(f, P, SpaceKind::besov_homog, 0.4, 2, q);
        CHECK(v <= prev * (1 + 1e-12));
        prev = v;
    }
    CHECK(lq_aggregate({3.0, 4.0}, 2.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(lq_aggregate({3.0, 4.0}, INFINITY) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(lq_aggregate({}, 2.0) == 0.0);
}

TEST_CASE("triebel-lizorkin collapses to besov when p equals q") {
    GridSpec g{1, 256, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_random_bandlimited(g, 21, 1, 30);
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK(norm_of(f, P, SpaceKind::tl_homog, 0.5, p, p) ==
              doctest::Approx(norm_of(f, P, SpaceKind::besov_homog, 0.5, p, p)).epsilon(1e-12));
        CHECK(norm_of(f, P, SpaceKind::tl_nonhomog, 0.5, p, p) ==
              doctest::Approx(norm_of(f, P, SpaceKind::besov_nonhomog, 0.5, p, p)).epsilon(1e-12));
    }
}

TEST_CASE("homogeneous norms ignore the mean, nonhomogeneous ones see it") {
    GridSpec g{1, 128, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField c = make_field(g);
    for (auto& v : c.values) v = 2.5;
    CHECK(norm_of(c, P, SpaceKind::besov_homog, 0.5, 2, 2) < 1e-12);
    CHECK(norm_of(c, P, SpaceKind::besov_nonhomog, 0.5, 2, 2) ==
          doctest::Approx(2.5 * std::sqrt(g.box)).epsilon(1e-12));

    SampledField f = preset_random_bandlimited(g, 8, 1, 16);
    SampledField fc = f;
    for (auto& v : fc.values) v += 2.5;
    CHECK(norm_of(f, P, SpaceKind::besov_homog, 0.5, 2, 2) ==
          doctest::Approx(norm_of(fc, P, SpaceKind::besov_homog, 0.5, 2, 2)).epsilon(1e-12));
}

TEST_CASE("low harmonic sits entirely in the low block") {
    GridSpec g{1, 256, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_harmonic(g, {1, 0});
    NormReport rep = space_norm(f, P, SpaceParams{SpaceKind::besov_nonhomog, 0.5, 2, 2, 0});
    CHECK(rep.low_term == doctest::Approx(std::sqrt(g.box)).epsilon(1e-12));
    for (const auto& [j, term] : rep.per_band) CHECK(term < 1e-12);
    CHECK(rep.aggregate == doctest::Approx(rep.low_term).epsilon(1e-10));
    // and the homogeneous norm sees the same size through band 0
    CHECK(norm_of(f, P, SpaceKind::besov_homog, 0.5, 2, 2) ==
          doctest::Approx(std::sqrt(g.box)).epsilon(1e-10));
}

TEST_CASE("spectral dilation rescales the homogeneous norm by 2^s") {
    GridSpec g{1, 256, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_random_bandlimited(g, 31, 1, g.n / 8.0);
    SpectralField F = forward_transform(f);
    SpectralField G = make_spectrum(g);
    for (int k = -g.n / 8; k <= g.n / 8; ++k) {
        if (k == 0) continue;
        G.coeff[g.flat((2 * k + g.n) % g.n)] = F.coeff[g.flat((k + g.n) % g.n)];
    }
    SampledField fd = inverse_transform(G);
    for (double s : {0.3, 0.5, 1.0}) {
        for (double q : {1.0, 2.0, kInf}) {
            const double a = norm_of(fd, P, SpaceKind::besov_homog, s, 2, q);
            const double b = norm_of(f, P, SpaceKind::besov_homog, s, 2, q);
            CHECK(a == doctest::Approx(std::pow(2.0, s) * b).epsilon(1e-11));
        }
    }
}

TEST_CASE("weierstrass field has unit band seminorm") {
    GridSpec g{1, 1024, 2 * pi};
    DyadicPartition P = build_partition(g);
    for (double s : {0.3, 0.5, 0.7}) {
        SampledField f = preset_weierstrass(g, s, 8);
        NormReport rep = space_norm(f, P, SpaceParams{SpaceKind::besov_homog, s, INFINITY, INFINITY, 0});
        CHECK(rep.aggregate == doctest::Approx(1.0).epsilon(1e-12));
        // every lacunary band contributes exactly one
        int ones = 0;
        for (const auto& [j, term] : rep.per_band)
            if (std::abs(term - 1.0) < 1e-12) ++ones;
        CHECK(ones == 9);
    }
}

TEST_CASE("report aggregation is consistent with its own terms") {
    GridSpec g{1, 128, 2 * pi};
    DyadicPartition P = build_partition(g);
    SampledField f = preset_random_bandlimited(g, 17, 1, 16);
    for (auto& v : f.values) v += 1.0;
    SpaceParams sp{SpaceKind::besov_nonhomog, 0.5, 2, 1.5, 0};
    NormReport rep = space_norm(f, P, sp);
    std::vector<double> terms;
    for (const auto& [j, t] : rep.per_band) terms.push_back(t);
    CHECK(rep.aggregate ==
          doctest::Approx(rep.low_term + lq_aggregate(terms, sp.q)).epsilon(1e-12));
}

TEST_CASE("space parameter validation") {
    CHECK_THROWS_AS((SpaceParams{SpaceKind::tl_homog, 0.5, INFINITY, 2, 0}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((SpaceParams{SpaceKind::besov_homog, 0.5, 0.0, 2, 0}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((SpaceParams{SpaceKind::besov_homog, 0.5, 2, -1, 0}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((SpaceParams{SpaceKind::besov_homog, 0.5, 0.5, 0.5, 0}.validate()));
    CHECK(space_kind_from_string("tl_nonhomog") == SpaceKind::tl_nonhomog);
    CHECK(to_string(SpaceKind::besov_homog) == "besov_homog");
    CHECK_THROWS_AS(space_kind_from_string("what"), std::invalid_argument);
}
