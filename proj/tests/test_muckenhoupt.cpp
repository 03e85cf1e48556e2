#include "szego_lab/muckenhoupt.h"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace szego;

namespace {

constexpr double pi = std::numbers::pi;

// Independent oracle: int_0^eps (2 sin(t/2))^e dt via t = eps u^2, midpoint rule in u.
double brute_half_integral(double e, double eps, int n = 200000)
{
    double sum = 0.0;
    const double h = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) * h;
        const double t = eps * u * u;
        sum += std::pow(2.0 * std::sin(0.5 * t), e) * 2.0 * eps * u;
    }
    return sum * h;
}

// log-log slope of the |theta|-model quotient with clamp, fitted on the same ladder tail
double model_slope(double s, double p, double eps, const std::vector<double>& ladder)
{
    auto clamped = [&](double e, double d) {
        const double inner = std::pow(d, e) * d;
        const double outer = (std::pow(eps, e + 1.0) - std::pow(d, e + 1.0)) / (e + 1.0);
        return 2.0 * (inner + outer) / (2.0 * eps);
    };
    std::vector<LadderPoint> pts;
    for (double d : ladder) {
        pts.push_back({d, clamped(s, d) * std::pow(clamped(s / (1.0 - p), d), p - 1.0)});
    }
    return fit_log_slope(pts);
}

} // namespace

TEST_CASE("Arc validates its geometry")
{
    CHECK_NOTHROW(Arc(0.0, pi));
    CHECK_THROWS_AS(Arc(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Arc(2 * pi, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Arc(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Arc(1.0, 3.5), std::invalid_argument);
    CHECK(Arc(0.0, 0.1).length() == doctest::Approx(0.2));
    CHECK(Arc(6.2, 0.1).touches_singularity());
    CHECK_FALSE(Arc(3.0, 0.1).touches_singularity());
}

TEST_CASE("arc_quotient of a constant weight is 1")
{
    for (double p : {1.1, 2.0, 7.0}) {
        for (const Arc& arc : {Arc(0.0, 0.3), Arc(2.0, 1.0), Arc(5.0, pi)}) {
            CHECK(std::abs(arc_quotient(PowerWeight{0.0, 0.0}, p, arc) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("small-arc quotient approaches the power-model limit")
{
    const double p = 2.5;
    const double s = -0.5;
    const double eps = std::ldexp(1.0, -10);
    const double a = s, b = s / (1.0 - p);
    const double model = 1.0 / ((a + 1.0) * std::pow(b + 1.0, p - 1.0));
    CHECK(model == doctest::Approx(1.2990381056766578).epsilon(1e-14));

    const double brute = (brute_half_integral(a, eps) / eps) *
                         std::pow(brute_half_integral(b, eps) / eps, p - 1.0);
    const double q = arc_quotient(PowerWeight{s, 0.0}, p, Arc(0.0, eps), 256);
    CHECK(std::abs(q - brute) <= 1e-6 * brute);
    CHECK(std::abs(q - 1.2990) <= 0.01 * 1.2990);
}

TEST_CASE("arc_quotient matches brute force on a clamped singular arc")
{
    const double eps = 0.5, delta = 0.01, s = -1.5, p = 3.0;
    // split [0, eps] into the constant clamp region and the exact tail
    auto half = [&](double e) {
        const double floor_val = std::pow(2.0 * std::sin(0.5 * delta), e);
        const int n = 400000;
        double tail = 0.0;
        const double h = (eps - delta) / n;
        for (int i = 0; i < n; ++i) {
            tail += std::pow(2.0 * std::sin(0.5 * (delta + (i + 0.5) * h)), e);
        }
        return floor_val * delta + tail * h;
    };
    const double brute = (half(s) / eps) * std::pow(half(s / (1.0 - p)) / eps, p - 1.0);
    const double q = arc_quotient(PowerWeight{s, delta}, p, Arc(0.0, eps), 64);
    CHECK(std::abs(q - brute) <= 1e-6 * brute);
}

TEST_CASE("arc_quotient on arcs far from the singularity stays near 1")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> center(0.5, 2 * pi - 0.5);
    std::uniform_real_distribution<double> expo(-1.0, 1.0);
    std::uniform_real_distribution<double> pdist(1.1, 8.0);
    for (int i = 0; i < 100; ++i) {
        const double theta0 = center(rng);
        const double r = 0.01 * std::min(theta0, 2 * pi - theta0);
        const double q = arc_quotient(PowerWeight{expo(rng), 0.0}, pdist(rng), Arc(theta0, r));
        CHECK(q >= 1.0 - 1e-6);
        CHECK(q <= 2.0);
    }
}

TEST_CASE("arc_quotient respects Jensen's bound on random arcs")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> center(0.0, 2 * pi);
    std::uniform_real_distribution<double> width(1e-4, pi);
    std::uniform_real_distribution<double> expo(-0.9, 2.0);
    std::uniform_real_distribution<double> pdist(1.2, 6.0);
    for (int i = 0; i < 300; ++i) {
        const double p = pdist(rng);
        const double s = expo(rng);
        const double delta = (i % 2 == 0) ? 0.0 : 1e-3;
        const Arc arc(center(rng), width(rng));
        if (delta == 0.0 && arc.touches_singularity() && std::min(s, s / (1 - p)) <= -1.0) {
            CHECK_THROWS_AS(arc_quotient(PowerWeight{s, delta}, p, arc), std::domain_error);
        } else {
            CHECK(arc_quotient(PowerWeight{s, delta}, p, arc) >= 1.0 - 1e-6);
        }
    }
}

TEST_CASE("arc_quotient rejects bad input")
{
    CHECK_THROWS_AS(arc_quotient(PowerWeight{1.0, 0.0}, 1.0, Arc(0.0, 0.1)), std::invalid_argument);
    CHECK_THROWS_AS(arc_quotient(PowerWeight{1.0, 0.0}, 2.0, Arc(0.0, 0.1), 32), std::invalid_argument);
    // b = -1 / (1 - 1.2) = 5 fine, a = -1 not integrable
    CHECK_THROWS_AS(arc_quotient(PowerWeight{-1.0, 0.0}, 1.2, Arc(0.0, 0.1)), std::domain_error);
    CHECK_NOTHROW(arc_quotient(PowerWeight{-1.0, 1e-3}, 1.2, Arc(0.0, 0.1)));
}

TEST_CASE("dyadic arc family")
{
    const auto arcs = dyadic_arcs(3);
    CHECK(arcs.size() == 2 + 4 + 8);
    CHECK(arcs[0].center() == 0.0);
    CHECK(arcs[0].half_width() == doctest::Approx(pi / 2));
    CHECK(arcs.back().half_width() == doctest::Approx(pi / 8));
    CHECK(dyadic_arcs().size() == (std::size_t{1} << 13) - 2);
}

TEST_CASE("ap_supremum_estimate behaviour along the clamp ladder")
{
    const auto arcs = dyadic_arcs(12);
    CHECK(ap_supremum_estimate(PowerWeight{0.0, 0.0}, 2.0, arcs) == doctest::Approx(1.0).epsilon(1e-12));

    // |z - 1| with p = 2: dual exponent -1 is the log-divergent endpoint
    const double coarse = ap_supremum_estimate(PowerWeight{1.0, std::ldexp(1.0, -8)}, 2.0, arcs);
    const double fine = ap_supremum_estimate(PowerWeight{1.0, std::ldexp(1.0, -12)}, 2.0, arcs);
    CHECK(fine / coarse >= 1.2);

    // inside: -1 < 0.4 < 1, both integrals converge
    const double a8 = ap_supremum_estimate(PowerWeight{0.4, std::ldexp(1.0, -8)}, 2.0, arcs);
    const double a14 = ap_supremum_estimate(PowerWeight{0.4, std::ldexp(1.0, -14)}, 2.0, arcs);
    CHECK(std::abs(a14 - a8) <= 0.02 * a8);
}

TEST_CASE("predicted_slope examples")
{
    CHECK(*predicted_slope(0.5, 6.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(*predicted_slope(0.5, 1.2) == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(*predicted_slope(1.0, 6.0) == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(*predicted_slope(1.0, 1.2) == doctest::Approx(-0.6).epsilon(1e-12));
    for (double alpha : {0.0, 0.25, 1.0, 7.0}) {
        CHECK(*predicted_slope(alpha, 2.0) == 0.0);
    }
    CHECK_FALSE(predicted_slope(0.5, 4.0).has_value());
    CHECK_FALSE(predicted_slope(0.5, 4.0 / 3.0).has_value());
    CHECK_THROWS_AS(predicted_slope(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("predicted_slope vanishes exactly inside the interval")
{
    for (double alpha : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0}) {
        for (double p = 1.05; p < 12.0; p += 0.0731) {
            const auto slope = predicted_slope(alpha, p);
            const auto verdict = classify(alpha, p, 0.0).classification;
            if (!slope) {
                continue;
            }
            CHECK(*slope <= 0.0);
            CHECK((*slope == 0.0) == (verdict == Classification::Inside));
        }
    }
}

TEST_CASE("boundedness_interval examples")
{
    const auto half = boundedness_interval(0.5);
    CHECK(half.lower == 4.0 / 3.0);
    CHECK(half.upper == 4.0);
    const auto zero = boundedness_interval(0.0);
    CHECK(zero.lower == 1.0);
    CHECK(std::isinf(zero.upper));
    const auto one = boundedness_interval(1.0);
    CHECK(one.lower == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(one.upper == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(boundedness_interval(-0.1), std::invalid_argument);
}

TEST_CASE("boundedness interval is conjugate symmetric around 2")
{
    for (double alpha : {0.0, 0.01, 0.25, 0.5, 1.0, 2.0, 10.0, 1e3}) {
        const auto iv = boundedness_interval(alpha);
        CHECK(iv.lower < 2.0);
        CHECK(iv.upper > 2.0);
        CHECK(std::abs(1.0 / iv.lower + 1.0 / iv.upper - 1.0) <= 1e-12);
    }
}

TEST_CASE("classify examples and conjugate symmetry")
{
    CHECK(classify(0.5, 2.0, 1e-9).classification == Classification::Inside);
    CHECK(classify(0.5, 4.0, 1e-9).classification == Classification::Boundary);
    CHECK(classify(0.5, 6.0, 1e-9).classification == Classification::Outside);
    CHECK(classify(0.0, 100.0, 1e-9).classification == Classification::Inside);

    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        for (double p : {1.1, 1.2, 4.0 / 3.0, 1.5, 5.0 / 3.0, 2.0, 2.5, 3.0, 4.0, 6.0, 11.0}) {
            const double q = p / (p - 1.0);
            CHECK(classify(alpha, p).classification == classify(alpha, q).classification);
        }
    }
}

TEST_CASE("ap_scan reproduces the predicted divergence rates")
{
    const auto ladder = default_delta_ladder();
    REQUIRE(ladder.size() == 11);

    const auto r6 = ap_scan(0.5, 6.0, ladder);
    CHECK(r6.a == -2.0);
    CHECK(r6.b == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(std::abs(r6.fitted_slope - (-1.0)) <= 0.05);
    CHECK(std::abs(r6.fitted_slope - model_slope(r6.s, 6.0, r6.arc_half_width, ladder)) <= 1e-3);

    const auto r12 = ap_scan(0.5, 1.2, ladder);
    CHECK(std::abs(r12.fitted_slope - (-0.2)) <= 0.05 * 0.2);
    CHECK(std::abs(r12.fitted_slope - model_slope(r12.s, 1.2, r12.arc_half_width, ladder)) <= 1e-3);

    const auto r2 = ap_scan(1.0, 2.0, ladder);
    CHECK(std::abs(r2.fitted_slope) <= 0.02);
    CHECK(r2.verdict == Classification::Inside);
}

TEST_CASE("ap_scan slopes track predicted_slope across the grid")
{
    const auto ladder = default_delta_ladder();
    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        for (double p : {1.2, 1.5, 2.0, 3.0, 6.0}) {
            const auto predicted = predicted_slope(alpha, p);
            if (!predicted) {
                continue;
            }
            CAPTURE(alpha);
            CAPTURE(p);
            const auto report = ap_scan(alpha, p, ladder);
            if (*predicted == 0.0) {
                CHECK(std::abs(report.fitted_slope) <= 0.02);
            } else {
                CHECK(std::abs(report.fitted_slope - *predicted) <= 0.05 * std::abs(*predicted));
            }
        }
    }
}

TEST_CASE("ap_scan validates its ladder")
{
    CHECK_THROWS_AS(ap_scan(0.5, 2.0, {0.1, 0.05, 0.01}), std::invalid_argument);
    CHECK_THROWS_AS(ap_scan(0.5, 2.0, {0.1, 0.2, 0.01, 0.001}), std::invalid_argument);
    CHECK_THROWS_AS(ap_scan(-0.5, 2.0, default_delta_ladder()), std::invalid_argument);
    const auto report = ap_scan(0.5, 4.0, default_delta_ladder());
    CHECK(report.verdict == Classification::Boundary);
    CHECK_FALSE(report.predicted_slope.has_value());
}
