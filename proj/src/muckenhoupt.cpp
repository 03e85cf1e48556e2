#include "szego_lab/muckenhoupt.h"

#include "szego_lab/parallel.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace szego {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// 10-point Gauss-Legendre rule on [-1, 1]
constexpr std::array<double, 10> gl_nodes = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
    -0.14887433898163122, 0.14887433898163122, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845,  0.9739065285171717};
constexpr std::array<double, 10> gl_weights = {
    0.06667134430868814, 0.1494513491505806, 0.21908636251598204, 0.26926671930999635,
    0.29552422471475287, 0.29552422471475287, 0.26926671930999635, 0.21908636251598204,
    0.1494513491505806,  0.06667134430868814};

// Depth of geometric grading toward an unclamped singular endpoint.
constexpr int singular_grading_levels = 60;

double distance_to_singularity(double x)
{
    double r = std::fmod(x, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    return std::min(r, two_pi - r);
}

template <typename Fn>
double gauss_panel(Fn&& f, double x0, double x1)
{
    const double mid = 0.5 * (x0 + x1);
    const double half = 0.5 * (x1 - x0);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl_nodes.size(); ++i) {
        sum += gl_weights[i] * f(mid + half * gl_nodes[i]);
    }
    return sum * half;
}

// Integrates the two A_p integrands of a power weight over an arc. Both are
// functions of the distance to theta = 0 only, so each arc segment between
// breakpoints is monotone in that distance and is graded geometrically in it.
struct ArcIntegrals {
    double weight;
    double dual;
};

ArcIntegrals integrate_arc(const PowerWeight& w, double dual_exponent, const Arc& arc,
                           int resolution)
{
    const double lo = arc.center() - arc.half_width();
    const double hi = arc.center() + arc.half_width();
    const double floor_radius = w.clamp > 0.0 ? w.clamp : 0.0;

    std::vector<double> breaks{lo, hi};
    for (int m = -1; m <= 2; ++m) {
        const double c = two_pi * m;
        for (double b : {c, c - floor_radius, c + floor_radius, c + pi}) {
            if (b > lo && b < hi) {
                breaks.push_back(b);
            }
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double max_panel = arc.length() / resolution;
    const PowerWeight dual{dual_exponent, w.clamp};
    auto weight_fn = [&](double x) { return weight_value(w, x); };
    auto dual_fn = [&](double x) { return weight_value(dual, x); };

    ArcIntegrals total{0.0, 0.0};
    for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double x0 = breaks[seg];
        const double x1 = breaks[seg + 1];
        const double d0 = distance_to_singularity(x0);
        const double d1 = distance_to_singularity(x1);
        const double d_lo = std::min(d0, d1);
        const double d_hi = std::max(d0, d1);
        // distance is linear with slope +-1 along the segment
        const double x_at_lo = d0 <= d1 ? x0 : x1;
        const double outward = d0 <= d1 ? 1.0 : -1.0;
        auto to_x = [&](double d) { return x_at_lo + outward * (d - d_lo); };

        std::vector<double> dist_breaks;
        const bool singular_end = d_lo == 0.0 && floor_radius == 0.0;
        if (singular_end) {
            for (int j = singular_grading_levels; j >= 0; --j) {
                dist_breaks.push_back(std::ldexp(d_hi, -j));
            }
        } else if (d_lo == 0.0 || d_hi - d_lo <= d_lo) {
            dist_breaks = {d_lo, d_hi};
        } else {
            for (double d = d_lo; d < d_hi; d *= 2.0) {
                dist_breaks.push_back(d);
            }
            dist_breaks.push_back(d_hi);
        }

        if (singular_end) {
            // innermost piece [0, d_tiny]: integrand ~ d^e, integral = F(d_tiny) d_tiny / (e + 1)
            const double d_tiny = dist_breaks.front();
            const double x_tiny = to_x(d_tiny);
            total.weight += weight_fn(x_tiny) * d_tiny / (w.exponent + 1.0);
            total.dual += dual_fn(x_tiny) * d_tiny / (dual_exponent + 1.0);
        }

        for (std::size_t i = 0; i + 1 < dist_breaks.size(); ++i) {
            const double a = dist_breaks[i];
            const double b = dist_breaks[i + 1];
            const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
            const double step = (b - a) / pieces;
            for (int k = 0; k < pieces; ++k) {
                const double pa = to_x(a + k * step);
                const double pb = to_x(k + 1 == pieces ? b : a + (k + 1) * step);
                const double left = std::min(pa, pb);
                const double right = std::max(pa, pb);
                total.weight += gauss_panel(weight_fn, left, right);
                total.dual += gauss_panel(dual_fn, left, right);
            }
        }
    }
    return total;
}

} // namespace

Arc::Arc(double center, double half_width) : center_(center), half_width_(half_width)
{
    if (!(center >= 0.0 && center < two_pi)) {
        throw std::invalid_argument("Arc: center must lie in [0, 2pi)");
    }
    if (!(half_width > 0.0 && half_width <= pi)) {
        throw std::invalid_argument("Arc: half_width must lie in (0, pi]");
    }
}

bool Arc::touches_singularity() const noexcept
{
    return center_ - half_width_ <= 0.0 || center_ + half_width_ >= two_pi;
}

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::Inside:
        return "Inside";
    case Classification::Boundary:
        return "Boundary";
    case Classification::Outside:
        return "Outside";
    }
    return "Unknown";
}

double arc_quotient(const PowerWeight& w, double p, const Arc& arc, int resolution)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("arc_quotient: p must be > 1");
    }
    if (resolution < 64) {
        throw std::invalid_argument("arc_quotient: resolution must be >= 64");
    }
    const double dual_exponent = w.exponent / (1.0 - p);
    if (w.clamp == 0.0 && arc.touches_singularity() &&
        std::min(w.exponent, dual_exponent) <= -1.0) {
        throw std::domain_error("arc_quotient: unclamped non-integrable integrand on arc "
                                "containing theta = 0");
    }
    if (w.exponent == 0.0) {
        return 1.0;
    }

    const ArcIntegrals ints = integrate_arc(w, dual_exponent, arc, resolution);
    const double mean_w = ints.weight / arc.length();
    const double mean_dual = ints.dual / arc.length();
    const double q = mean_w * std::pow(mean_dual, p - 1.0);
    if (!(q >= 1.0 - 1e-6)) {
        throw std::runtime_error("arc_quotient: quotient " + std::to_string(q) +
                                 " violates Jensen's bound; quadrature failed");
    }
    return q;
}

std::vector<Arc> dyadic_arcs(int depth)
{
    std::vector<Arc> arcs;
    for (int m = 1; m <= depth; ++m) {
        const long long count = 1LL << m;
        for (long long k = 0; k < count; ++k) {
            arcs.emplace_back(two_pi * static_cast<double>(k) / static_cast<double>(count),
                              pi / static_cast<double>(count));
        }
    }
    return arcs;
}

double ap_supremum_estimate(const PowerWeight& w, double p, const std::vector<Arc>& arcs,
                            int resolution)
{
    std::vector<double> values(arcs.size());
    parallel_for(arcs.size(), [&](std::size_t i) {
        values[i] = arc_quotient(w, p, arcs[i], resolution);
    });
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

std::vector<double> default_delta_ladder()
{
    std::vector<double> ladder;
    for (int e = 4; e <= 14; ++e) {
        ladder.push_back(std::ldexp(1.0, -e));
    }
    return ladder;
}

double fit_log_slope(const std::vector<LadderPoint>& ladder, std::size_t tail)
{
    if (tail < 2 || ladder.size() < tail) {
        throw std::invalid_argument("fit_log_slope: need at least " + std::to_string(tail) +
                                    " ladder points");
    }
    const std::size_t first = ladder.size() - tail;
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = first; i < ladder.size(); ++i) {
        sx += std::log(ladder[i].delta);
        sy += std::log(ladder[i].quotient);
    }
    const double mx = sx / tail;
    const double my = sy / tail;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = first; i < ladder.size(); ++i) {
        const double dx = std::log(ladder[i].delta) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(ladder[i].quotient) - my);
    }
    return sxy / sxx;
}

ApScanReport ap_scan(double alpha, double p, const std::vector<double>& delta_ladder,
                     int resolution, double arc_half_width)
{
    if (alpha < 0.0) {
        throw std::invalid_argument("ap_scan: alpha must be >= 0");
    }
    if (!(p > 1.0)) {
        throw std::invalid_argument("ap_scan: p must be > 1");
    }
    if (delta_ladder.size() < 4) {
        throw std::invalid_argument("ap_scan: ladder needs at least 4 entries");
    }
    for (std::size_t i = 0; i < delta_ladder.size(); ++i) {
        if (!(delta_ladder[i] > 0.0) || (i > 0 && !(delta_ladder[i] < delta_ladder[i - 1]))) {
            throw std::invalid_argument("ap_scan: ladder must be positive and strictly decreasing");
        }
    }

    ApScanReport report;
    report.alpha = alpha;
    report.p = p;
    report.s = alpha * (2.0 - p);
    report.a = report.s;
    report.b = report.s / (1.0 - p);
    report.arc_half_width = arc_half_width;
    report.ladder.resize(delta_ladder.size());

    const Arc arc(0.0, arc_half_width);
    parallel_for(delta_ladder.size(), [&](std::size_t i) {
        const PowerWeight w{report.s, delta_ladder[i]};
        report.ladder[i] = {delta_ladder[i], arc_quotient(w, p, arc, resolution)};
    });

    report.fitted_slope = fit_log_slope(report.ladder);
    report.predicted_slope = predicted_slope(alpha, p);
    report.verdict = classify(alpha, p).classification;
    return report;
}

std::optional<double> predicted_slope(double alpha, double p)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("predicted_slope: p must be > 1");
    }
    if (classify(alpha, p).classification == Classification::Boundary) {
        return std::nullopt;
    }
    const double a = alpha * (2.0 - p);
    const double b = a / (1.0 - p);
    return std::min(0.0, a + 1.0) + (p - 1.0) * std::min(0.0, b + 1.0);
}

BoundednessInterval boundedness_interval(double alpha)
{
    if (alpha < 0.0) {
        throw std::invalid_argument("boundedness_interval: alpha must be >= 0");
    }
    if (alpha == 0.0) {
        return {1.0, std::numeric_limits<double>::infinity()};
    }
    return {(2.0 * alpha + 1.0) / (alpha + 1.0), (2.0 * alpha + 1.0) / alpha};
}

ApVerdict classify(double alpha, double p, double tol)
{
    const BoundednessInterval iv = boundedness_interval(alpha);
    Classification c = Classification::Outside;
    if (std::abs(p - iv.lower) <= tol || std::abs(p - iv.upper) <= tol) {
        c = Classification::Boundary;
    } else if (p > iv.lower && p < iv.upper) {
        c = Classification::Inside;
    }
    return {c, iv};
}

} // namespace szego
