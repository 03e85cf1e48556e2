#pragma once

#include "szego_lab/weights.h"

#include <optional>
#include <string_view>
#include <vector>

namespace szego {

/// The arc (center - half_width, center + half_width) taken modulo 2*pi.
class Arc {
public:
    Arc(double center, double half_width);

    double center() const noexcept { return center_; }
    double half_width() const noexcept { return half_width_; }
    double length() const noexcept { return 2.0 * half_width_; }
    /// True when theta = 0 lies in the closed arc.
    bool touches_singularity() const noexcept;

private:
    double center_;
    double half_width_;
};

enum class Classification { Inside, Boundary, Outside };

std::string_view to_string(Classification c) noexcept;

/// Endpoints (q0, p0) of the range of p for which the weighted projection is
/// bounded; p0 is +inf for alpha = 0.
struct BoundednessInterval {
    double lower;
    double upper;
};

struct ApVerdict {
    Classification classification;
    BoundednessInterval interval;
};

struct LadderPoint {
    double delta;
    double quotient;
};

/// Regularized A_p scan over the clamp ladder on a fixed arc centered at 0.
///
/// a = s is the exponent of the weight itself, b = s / (1 - p) the exponent
/// of the dual weight. predicted_slope is empty at interval endpoints.
struct ApScanReport {
    double alpha;
    double p;
    double s;
    double a;
    double b;
    double arc_half_width;
    std::vector<LadderPoint> ladder;
    double fitted_slope;
    std::optional<double> predicted_slope;
    Classification verdict;
};

/// (1/|I| int_I w) * (1/|I| int_I w^{-1/(p-1)})^{p-1} by graded composite
/// Gauss-Legendre quadrature. `resolution` (>= 64) bounds the panel width by
/// |I| / resolution; panels are additionally graded geometrically toward
/// theta = 0 and split at the clamp radius.
double arc_quotient(const PowerWeight& w, double p, const Arc& arc, int resolution = 64);

/// Dyadic family: centers 2 pi k / 2^m, half-widths pi / 2^m, m = 1..depth.
std::vector<Arc> dyadic_arcs(int depth = 12);

/// Max of arc_quotient over the family; a lower bound for the A_p constant.
double ap_supremum_estimate(const PowerWeight& w, double p, const std::vector<Arc>& arcs,
                            int resolution = 64);

/// 2^{-4}, 2^{-5}, ..., 2^{-14}
std::vector<double> default_delta_ladder();

ApScanReport ap_scan(double alpha, double p, const std::vector<double>& delta_ladder,
                     int resolution = 64, double arc_half_width = 0.25 * 3.14159265358979323846);

/// Least-squares slope of log(quotient) against log(delta) over the last
/// `tail` ladder points.
double fit_log_slope(const std::vector<LadderPoint>& ladder, std::size_t tail = 4);

/// min(0, a+1) + (p-1) min(0, b+1) with a = alpha(2-p), b = a/(1-p).
/// Empty when p sits on an interval endpoint (log-divergent regime).
std::optional<double> predicted_slope(double alpha, double p);

BoundednessInterval boundedness_interval(double alpha);

ApVerdict classify(double alpha, double p, double tol = 1e-9);

} // namespace szego
