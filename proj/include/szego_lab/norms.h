#pragma once

#include "szego_lab/weights.h"

#include <cstdint>
#include <string_view>
#include <vector>

namespace szego {

class NormSpec {
public:
    NormSpec(double p, PowerWeight weight);

    double p() const noexcept { return p_; }
    const PowerWeight& weight() const noexcept { return weight_; }

private:
    double p_;
    PowerWeight weight_;
};

/// (quad(|f|^p * weight))^{1/p} on the sample grid.
double lp_norm(const BoundarySamples& f, const NormSpec& spec);

/// r = 1 - 2^{-k}, k = 1..10
std::vector<double> default_radii();

/// int_0^{2pi} |f(r e^{i theta}) g_alpha(r e^{i theta})^{2/p}|^p d theta for
/// each radius, with g^{2/p} = exp((2 alpha / p) branch_log(z - 1)).
/// Negative modes are allowed for r > 0, so non-holomorphic input shows up as
/// decreasing means.
std::vector<double> radial_means(const FourierCoeffs& f, double alpha, double p,
                                 const std::vector<double>& radii,
                                 std::size_t grid_points = std::size_t{1} << 14);

/// Sup over the radii of radial_means^{1/p}. Throws if the means decrease by
/// more than 1e-9 relative between consecutive radii, which signals a
/// non-holomorphic input.
double hardy_norm(const FourierCoeffs& f, double alpha, double p, const std::vector<double>& radii,
                  std::size_t grid_points = std::size_t{1} << 14);

/// Largest ||S_mu f||_{p,mu} / ||f||_{p,mu} found on an n-point grid.
///
/// Candidates: the A_p test family chi_I * |z-1|^{s/(1-p)} / g_alpha on arcs
/// shrinking toward theta = 0 (s = alpha(2 - p)), holomorphic polynomials over
/// g_alpha, and seeded random trigonometric polynomials. Each candidate is
/// refined by `budget` nonlinear power steps; the best ratio seen along each
/// trajectory is kept, so the result is nondecreasing in budget.
double op_norm_lower_bound(double alpha, double p, std::size_t n_points, int budget,
                           std::uint64_t seed);

enum class BlowupVerdict { Stable, Growing, Inconclusive };

std::string_view to_string(BlowupVerdict v) noexcept;

/// Empirical thresholds for the Growing/Stable dichotomy.
struct BlowupThresholds {
    double growth_factor = 2.0;
    double max_dip = 0.05;
    double stable_variation = 0.10;
};

struct BlowupReport {
    double alpha;
    double p;
    std::vector<std::size_t> grid_sizes;
    std::vector<double> estimates;
    BlowupVerdict verdict;
};

BlowupVerdict classify_blowup(const std::vector<double>& estimates,
                              const BlowupThresholds& thresholds = {});

/// op_norm_lower_bound over increasing grid sizes, classified.
BlowupReport blowup_scan(double alpha, double p, const std::vector<std::size_t>& grid_sizes,
                         int budget, std::uint64_t seed, const BlowupThresholds& thresholds = {});

} // namespace szego
