#include "szego_lab/duality.h"

#include "szego_lab/norms.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace szego {

namespace {

constexpr int test_class_degree = 16;

void check_same_grid(const BoundarySamples& f, const BoundarySamples& h, const char* who)
{
    if (!(f.grid == h.grid)) {
        throw std::invalid_argument(std::string(who) + ": samples live on different grids (" +
                                    std::to_string(f.grid.size()) + " vs " +
                                    std::to_string(h.grid.size()) + " points)");
    }
}

// The top quarter of the resolved spectrum must be negligible.
void check_resolved(const BoundarySamples& f, const char* who)
{
    const int max_mode = max_resolved_mode(f.grid);
    const FourierCoeffs c = dft(f, max_mode);
    double peak = 0.0;
    double tail = 0.0;
    for (int k = -max_mode; k <= max_mode; ++k) {
        const double mag = std::abs(c.at(k));
        peak = std::max(peak, mag);
        if (std::abs(k) > 3 * max_mode / 4) {
            tail = std::max(tail, mag);
        }
    }
    if (tail > 1e-10 * std::max(peak, 1e-300)) {
        throw std::invalid_argument(std::string(who) + ": input is not resolved by a grid of " +
                                    std::to_string(f.grid.size()) + " points");
    }
}

} // namespace

cplx pairing(const BoundarySamples& f, const BoundarySamples& h, const PairingSpec& spec)
{
    check_same_grid(f, h, "pairing");
    const std::vector<double> mu = weight_samples(spec.weight(), f.grid);
    cplx sum{};
    for (std::size_t j = 0; j < f.size(); ++j) {
        sum += f.values[j] * std::conj(h.values[j]) * mu[j];
    }
    return sum * f.grid.spacing();
}

double hoelder_margin(const BoundarySamples& f, const BoundarySamples& h, double alpha, double p)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("hoelder_margin: p must be > 1");
    }
    const double q = p / (p - 1.0);
    const double bound = lp_norm(f, NormSpec(p, PowerWeight{alpha * p, 0.0})) *
                         lp_norm(h, NormSpec(q, PowerWeight{alpha * q, 0.0}));
    return bound - std::abs(pairing(f, h, PairingSpec{alpha}));
}

double selfadjoint_residual(const BoundarySamples& f, const BoundarySamples& h, double alpha)
{
    check_same_grid(f, h, "selfadjoint_residual");
    check_resolved(f, "selfadjoint_residual");
    check_resolved(h, "selfadjoint_residual");
    const BoundarySamples sf = project_weighted(f, alpha).boundary_trace(f.grid);
    const BoundarySamples sh = project_weighted(h, alpha).boundary_trace(h.grid);
    const PairingSpec spec{alpha};
    return std::abs(pairing(sf, h, spec) - pairing(f, sh, spec));
}

WeightedHolomorphic dual_representative(const BoundarySamples& h, double alpha)
{
    return project_weighted(h, alpha);
}

RepresentationReport representation_check(const BoundarySamples& h, double alpha, double p,
                                          int n_tests, std::uint64_t seed,
                                          DualNormalization normalization, double tolerance)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("representation_check: p must be > 1");
    }
    if (n_tests < 1) {
        throw std::invalid_argument("representation_check: n_tests must be positive");
    }
    const CircleGrid& grid = h.grid;
    const BoundarySamples representative = dual_representative(h, alpha).boundary_trace(grid);
    const PairingSpec spec{alpha};
    const NormSpec norm(p, normalization == DualNormalization::WeightedHardy
                               ? mu_weight(alpha)
                               : PowerWeight{alpha * p, 0.0});

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < n_tests; ++t) {
        std::vector<cplx> coeffs(test_class_degree + 1);
        for (cplx& c : coeffs) {
            c = cplx(normal(rng), normal(rng));
        }
        const WeightedHolomorphic f{alpha, FourierCoeffs{0, std::move(coeffs)}};
        const BoundarySamples trace = f.boundary_trace(grid);
        const double residual =
            std::abs(pairing(trace, h, spec) - pairing(trace, representative, spec)) /
            lp_norm(trace, norm);
        worst = std::max(worst, residual);
    }
    return {alpha, p, worst, n_tests, seed, worst <= tolerance};
}

} // namespace szego
