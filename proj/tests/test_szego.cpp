#include "szego_lab/szego.h"

#include "szego_lab/norms.h"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace szego;

namespace {

constexpr double pi = std::numbers::pi;

cplx random_disc_point(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> r(0.0, radius);
    std::uniform_real_distribution<double> t(0.0, 2 * pi);
    return std::polar(std::sqrt(r(rng) * radius), t(rng));
}

FourierCoeffs random_trig(std::mt19937_64& rng, int degree)
{
    std::normal_distribution<double> normal;
    FourierCoeffs c{-degree, std::vector<cplx>(2 * degree + 1)};
    for (auto& v : c.coeffs) {
        v = cplx(normal(rng), normal(rng));
    }
    return c;
}

BoundarySamples mode_trace(const CircleGrid& g, int k)
{
    return sample(g, [k](double t) { return std::polar(1.0, k * t); });
}

} // namespace

TEST_CASE("riesz_project keeps nonnegative modes")
{
    const FourierCoeffs killed = riesz_project(FourierCoeffs{-1, {1.0}});
    for (const cplx& c : killed.coeffs) {
        CHECK(c == cplx{});
    }

    const FourierCoeffs mixed = riesz_project(FourierCoeffs{-2, {cplx(0, 5), 0.0, 3.0}});
    CHECK(mixed.min_mode == 0);
    CHECK(mixed.at(0) == cplx(3.0));
    CHECK(mixed.at(-2) == cplx{});

    const FourierCoeffs cosine = riesz_project(FourierCoeffs{-1, {0.5, 0.0, 0.5}});
    CHECK(cosine.at(1) == cplx(0.5));
    CHECK(cosine.at(0) == cplx{});
    CHECK(cosine.at(-1) == cplx{});

    std::mt19937_64 rng(1);
    const FourierCoeffs c = random_trig(rng, 12);
    const FourierCoeffs once = riesz_project(c);
    const FourierCoeffs twice = riesz_project(once);
    CHECK(once.min_mode == twice.min_mode);
    CHECK(once.coeffs == twice.coeffs);
}

TEST_CASE("szego_kernel closed form")
{
    CHECK(std::abs(szego_kernel(0.0, cplx(0.3, -0.8)) - 1.0 / (2 * pi)) < 1e-16);

    double series = 0.0;
    for (int n = 0; n < 200; ++n) {
        series += std::pow(0.25, n) / (2 * pi);
    }
    CHECK(std::abs(szego_kernel(0.5, 0.5) - series) <= 1e-12);
    CHECK(std::abs(szego_kernel(0.5, 0.5) - 2.0 / (3.0 * pi)) <= 1e-12);

    CHECK_THROWS_AS(szego_kernel(0.9, 1.0 / 0.9), std::invalid_argument);
    CHECK_THROWS_AS(szego_kernel(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("weighted_kernel examples")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        const cplx z = random_disc_point(rng, 0.9), w = random_disc_point(rng, 0.9);
        CHECK(std::abs(weighted_kernel(z, w, 0.0).value - szego_kernel(z, w)) < 1e-15);
    }
    CHECK(std::abs(weighted_kernel(0.0, 0.0, 1.0).value - 1.0 / (2 * pi)) <= 1e-15);
    CHECK(std::abs(weighted_kernel(0.5, 0.0, 1.0).value - 1.0 / pi) <= 1e-12);
    CHECK_THROWS_AS(weighted_kernel(1.0, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(weighted_kernel(0.2, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("weighted kernel identity g(z) S_mu(z,w) conj(g(w)) = S(z,w)")
{
    std::mt19937_64 rng(4);
    for (double alpha : {0.25, 0.5, 1.0, 1.7}) {
        for (int i = 0; i < 100; ++i) {
            const cplx z = random_disc_point(rng, 0.95);
            const cplx w = random_disc_point(rng, 0.95);
            const cplx lhs = g_alpha(z, alpha) * weighted_kernel(z, w, alpha).value * std::conj(g_alpha(w, alpha));
            CHECK(std::abs(lhs - szego_kernel(z, w)) <= 1e-12);
        }
    }
}

TEST_CASE("weighted kernel is conjugate symmetric")
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const cplx z = random_disc_point(rng, 0.9), w = random_disc_point(rng, 0.9);
        const cplx a = weighted_kernel(z, w, 0.5).value;
        const cplx b = weighted_kernel(w, z, 0.5).value;
        CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("Gram kernel for the unit weight")
{
    for (int n : {1, 4, 32}) {
        const GramSystem g = GramSystem::build(0.0, n);
        CHECK(std::abs(weighted_kernel_via_moments(g, 0.0, 0.0) - 1.0 / (2 * pi)) <= 1e-15);
        CHECK(g.condition_number() == doctest::Approx(1.0));
    }
}

TEST_CASE("Gram kernel at the origin for alpha = 1 matches the Christoffel oracle")
{
    // min ||p (1 - z)||^2 over p(0) = 1, deg p < N is 2 pi (1 + 1/N), so
    // K_N(0, 0) = N / (2 pi (N + 1)).
    double prev_err = 1.0;
    for (int n : {8, 16, 32, 64, 128}) {
        const GramSystem g = GramSystem::build(1.0, n);
        const cplx k = weighted_kernel_via_moments(g, 0.0, 0.0);
        const double oracle = n / (2 * pi * (n + 1));
        CHECK(std::abs(k - oracle) <= 1e-12);
        const double err = std::abs(k - weighted_kernel(0.0, 0.0, 1.0).value);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("Gram kernel approaches the closed form monotonically for alpha = 1/2")
{
    const cplx exact = weighted_kernel(0.5, 0.5, 0.5).value;
    double prev = 1.0;
    for (int n : {16, 32, 64}) {
        const double err = std::abs(weighted_kernel_via_moments(GramSystem::build(0.5, n), 0.5, 0.5) - exact);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("Gram path converges to the kernel identity at interior points")
{
    std::mt19937_64 rng(8);
    const GramSystem g64 = GramSystem::build(1.0, 64);
    const GramSystem g128 = GramSystem::build(1.0, 128);
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_disc_point(rng, 0.7), w = random_disc_point(rng, 0.7);
        const cplx exact = weighted_kernel(z, w, 1.0).value;
        const double e64 = std::abs(weighted_kernel_via_moments(g64, z, w) - exact);
        const double e128 = std::abs(weighted_kernel_via_moments(g128, z, w) - exact);
        CHECK(e128 < e64);
        CHECK(e64 < 0.05);
    }
}

TEST_CASE("quadrature moments give the same Gram kernel as the closed form")
{
    const GramSystem exact = GramSystem::build(1.5, 24);
    const GramSystem quad = GramSystem::build(1.5, 24, MomentSource::Quadrature, std::size_t{1} << 14);
    const cplx z(0.3, 0.4), w(-0.5, 0.1);
    CHECK(std::abs(exact.kernel(z, w) - quad.kernel(z, w)) <= 1e-9);
}

TEST_CASE("Gram construction fails loudly on ill-conditioned systems")
{
    // symbol |theta|^{4 alpha} makes cond grow like N^{4 alpha}
    CHECK_THROWS_AS(GramSystem::build(4.0, 128), std::runtime_error);
    CHECK_THROWS_AS(GramSystem::build(6.0, 64), std::runtime_error);
    CHECK(GramSystem::build(4.0, 64).condition_number() > 1e9);
    CHECK_THROWS_AS(GramSystem::build(1.0, 0), std::invalid_argument);
    const GramSystem g = GramSystem::build(1.0, 8);
    CHECK_THROWS_AS(weighted_kernel_via_moments(g, 0.95, 0.0), std::invalid_argument);
}

TEST_CASE("project_weighted fixes polynomial traces for integer alpha")
{
    const CircleGrid grid(512);
    const BoundarySamples z2 = mode_trace(grid, 2);
    const cplx z(0.3, 0.0);
    for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
        CHECK(std::abs(project_weighted(z2, alpha)(z) - z * z) <= 1e-10);
    }
}

TEST_CASE("range-fixing error for fractional alpha is aliasing of order N^{-alpha-1}")
{
    // the trace of z^2 g has modes decaying like k^{-alpha-1}; modes N + k fold onto k
    const cplx z(0.3, 0.0);
    for (double alpha : {0.25, 0.5, 1.5}) {
        std::vector<double> errs;
        for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 14}) {
            const CircleGrid grid(n);
            errs.push_back(std::abs(project_weighted(mode_trace(grid, 2), alpha)(z) - z * z));
        }
        const double rate = std::log(errs[0] / errs[1]) / std::log(4.0);
        CHECK(rate == doctest::Approx(alpha + 1.0).epsilon(0.05));
    }
}

TEST_CASE("project_weighted of conj(w) with alpha = 1 is 1/(z - 1)")
{
    const CircleGrid grid(256);
    const WeightedHolomorphic proj = project_weighted(mode_trace(grid, -1), 1.0);
    CHECK(std::abs(proj(0.5) - (-2.0)) <= 1e-8);
    // numerator is S(conj(w)(w - 1)) = 1
    CHECK(std::abs(proj.numerator.at(0) - 1.0) <= 1e-12);
    for (int k = 1; k <= proj.numerator.max_mode(); ++k) {
        CHECK(std::abs(proj.numerator.at(k)) <= 1e-12);
    }
    for (cplx z : {cplx(0.2, 0.3), cplx(-0.7, 0.1)}) {
        CHECK(std::abs(proj(z) - 1.0 / (z - 1.0)) <= 1e-10);
    }
}

TEST_CASE("project_weighted of conj(w)^2 with alpha = 1 vanishes")
{
    const CircleGrid grid(256);
    const WeightedHolomorphic proj = project_weighted(mode_trace(grid, -2), 1.0);
    for (const cplx& c : proj.numerator.coeffs) {
        CHECK(std::abs(c) <= 1e-10);
    }
}

TEST_CASE("project_weighted is idempotent")
{
    std::mt19937_64 rng(9);
    const CircleGrid grid(1024);
    for (double alpha : {0.5, 1.0, 1.5}) {
        const BoundarySamples f = idft(random_trig(rng, 10), grid);
        const WeightedHolomorphic once = project_weighted(f, alpha);
        const WeightedHolomorphic twice = project_weighted(once.boundary_trace(grid), alpha);
        double drift = 0.0;
        for (int k = 0; k <= once.numerator.max_mode(); ++k) {
            drift = std::max(drift, std::abs(once.numerator.at(k) - twice.numerator.at(k)));
        }
        CHECK(drift <= 1e-9);
    }
}

TEST_CASE("project_weighted rejects non-finite samples")
{
    const CircleGrid grid(16);
    BoundarySamples f = mode_trace(grid, 0);
    f.values[3] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(project_weighted(f, 0.5), std::invalid_argument);
}

TEST_CASE("quadrature projection examples")
{
    const CircleGrid grid(4096);
    const cplx origin[] = {cplx(0.0)};
    CHECK(std::abs(project_weighted_quadrature(mode_trace(grid, 0), 1.0, origin)[0] - 1.0) <= 1e-8);
    const cplx half[] = {cplx(0.5)};
    CHECK(std::abs(project_weighted_quadrature(mode_trace(grid, -1), 1.0, half)[0] + 2.0) <= 1e-6);
}

TEST_CASE("quadrature and Fourier projection paths agree")
{
    std::mt19937_64 rng(10);
    const CircleGrid grid(4096);
    for (int trial = 0; trial < 5; ++trial) {
        const BoundarySamples f = idft(random_trig(rng, 8), grid);
        std::vector<cplx> points;
        for (int i = 0; i < 5; ++i) {
            points.push_back(random_disc_point(rng, 0.9));
        }
        const WeightedHolomorphic fourier = project_weighted(f, 0.5);
        const std::vector<cplx> quad = project_weighted_quadrature(f, 0.5, points);
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(std::abs(fourier(points[i]) - quad[i]) <= 1e-6);
        }
    }
}

TEST_CASE("quadrature projection reproduces z^n / g_alpha")
{
    const CircleGrid grid(4096);
    const double alpha = 0.5;
    const std::vector<cplx> points = {cplx(0.1, 0.2), cplx(-0.6, 0.3), cplx(0.0, -0.85)};
    for (int n = 0; n <= 8; ++n) {
        const BoundarySamples fn = sample(grid, [&](double t) {
            const cplx w = std::polar(1.0, t);
            return std::pow(w, n) / g_alpha(w, alpha);
        });
        const std::vector<cplx> got = project_weighted_quadrature(fn, alpha, points);
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(std::abs(got[i] - std::pow(points[i], n) / g_alpha(points[i], alpha)) <= 1e-6);
        }
    }
}

TEST_CASE("quadrature projection enforces its evaluation limits")
{
    const CircleGrid grid(4096);
    const cplx near_edge[] = {cplx(0.95)};
    CHECK_THROWS_AS(project_weighted_quadrature(mode_trace(grid, 0), 0.5, near_edge), std::invalid_argument);
    const cplx fine[] = {cplx(0.9)};
    CHECK_THROWS_AS(project_weighted_quadrature(mode_trace(CircleGrid(256), 0), 0.5, fine),
                    std::invalid_argument);
}

TEST_CASE("projection is contractive in L^2(mu)")
{
    std::mt19937_64 rng(12);
    const CircleGrid grid(2048);
    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        const BoundarySamples f = idft(random_trig(rng, 12), grid);
        const BoundarySamples sf = project_weighted(f, alpha).boundary_trace(grid);
        const NormSpec spec(2.0, mu_weight(alpha));
        CHECK(lp_norm(sf, spec) <= lp_norm(f, spec) * (1.0 + 1e-8));
    }
}

TEST_CASE("rescaled projection with the corrected transform")
{
    const CircleGrid grid(4096);
    const std::vector<cplx> points = {cplx(0.0), cplx(0.5), cplx(-0.3, 0.6), cplx(0.1, -0.8)};
    const RescaledProjection one = rescaled_project(mode_trace(grid, 0), 1.0, 2.0, points);
    for (const cplx& v : one.values) {
        CHECK(std::abs(v - 1.0) <= 1e-8);
    }
    const cplx half[] = {cplx(0.5)};
    CHECK(std::abs(rescaled_project(mode_trace(grid, -1), 1.0, 2.0, half).values[0] + 2.0) <= 1e-8);

    std::mt19937_64 rng(13);
    const BoundarySamples f = idft(random_trig(rng, 6), grid);
    const WeightedHolomorphic direct = project_weighted(f, 0.5);
    const RescaledProjection rescaled = rescaled_project(f, 0.5, 3.0, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(std::abs(rescaled.values[i] - direct(points[i])) <= 1e-8);
    }
}

TEST_CASE("rescaled transform preserves the weighted norm sample by sample")
{
    std::mt19937_64 rng(14);
    const CircleGrid grid(1024);
    for (auto variant : {RescaleVariant::Corrected, RescaleVariant::Literal}) {
        const BoundarySamples f = idft(random_trig(rng, 9), grid);
        const cplx origin[] = {cplx(0.0)};
        const RescaledProjection r = rescaled_project(f, 0.5, 3.0, origin, variant);
        CHECK(std::abs(r.transformed_norm - r.weighted_norm) <= 1e-12);
    }
}

TEST_CASE("literal rescaled transform fails to fix constants")
{
    const CircleGrid grid(4096);
    const std::vector<cplx> points = {cplx(0.5), cplx(-0.4, 0.2), cplx(0.1, 0.7)};
    const RescaledProjection lit = rescaled_project(mode_trace(grid, 0), 1.0, 2.0, points, RescaleVariant::Literal);
    for (std::size_t i = 0; i < points.size(); ++i) {
        // S(conj(w) - 1) = -1, so the output is -1/(z - 1) instead of 1
        CHECK(std::abs(lit.values[i] + 1.0 / (points[i] - 1.0)) <= 1e-8);
        CHECK(std::abs(lit.values[i] - 1.0) > 0.1);
    }
}
