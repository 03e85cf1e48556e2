#include "szego_lab/norms.h"

#include "szego_lab/parallel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace szego {

namespace {

constexpr double pi = std::numbers::pi;

// S_mu = g^{-1} R g on grid samples, with R the discrete Riesz projection.
class DiscreteProjection {
public:
    DiscreteProjection(const CircleGrid& grid, double alpha, double p)
        : grid_(grid), p_(p), g_(grid.size()), mu_(weight_samples(mu_weight(alpha), grid))
    {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            g_[j] = g_alpha(grid.point(j), alpha);
        }
    }

    const CircleGrid& grid() const noexcept { return grid_; }
    cplx g(std::size_t j) const noexcept { return g_[j]; }

    std::vector<cplx> apply(const std::vector<cplx>& f) const
    {
        std::vector<cplx> product(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            product[j] = f[j] * g_[j];
        }
        const FourierCoeffs spectrum =
            dft(BoundarySamples(grid_, std::move(product)), max_resolved_mode(grid_));
        std::vector<cplx> out = idft(riesz_part(spectrum), grid_).values;
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] /= g_[j];
        }
        return out;
    }

    double norm(const std::vector<cplx>& f, double q) const
    {
        double sum = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            sum += std::pow(std::abs(f[j]), q) * mu_[j];
        }
        return std::pow(sum * grid_.spacing(), 1.0 / q);
    }

    double ratio(const std::vector<cplx>& f) const
    {
        const double denom = norm(f, p_);
        return denom > 0.0 ? norm(apply(f), p_) / denom : 0.0;
    }

private:
    static FourierCoeffs riesz_part(const FourierCoeffs& c)
    {
        FourierCoeffs out;
        out.min_mode = 0;
        for (int k = 0; k <= c.max_mode(); ++k) {
            out.coeffs.push_back(c.at(k));
        }
        return out;
    }

    CircleGrid grid_;
    double p_;
    std::vector<cplx> g_;
    std::vector<double> mu_;
};

// |y|^{q-2} y, the duality map of L^q
std::vector<cplx> duality_map(const std::vector<cplx>& y, double q)
{
    std::vector<cplx> out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double r = std::abs(y[j]);
        out[j] = r > 0.0 ? y[j] * std::pow(r, q - 2.0) : cplx{};
    }
    return out;
}

double refine(const DiscreteProjection& op, std::vector<cplx> f, double p, int budget)
{
    const double p_dual = p / (p - 1.0);
    double best = op.ratio(f);
    for (int step = 0; step < budget; ++step) {
        // S_mu is self-adjoint for the mu pairing, so it is its own adjoint here
        const std::vector<cplx> image = op.apply(f);
        f = duality_map(op.apply(duality_map(image, p)), p_dual);
        const double scale = op.norm(f, p);
        if (!(scale > 0.0) || !std::isfinite(scale)) {
            break;
        }
        for (cplx& v : f) {
            v /= scale;
        }
        best = std::max(best, op.ratio(f));
    }
    return best;
}

std::vector<std::vector<cplx>> candidate_family(const DiscreteProjection& op, double alpha,
                                                double p, std::uint64_t seed)
{
    const CircleGrid& grid = op.grid();
    const std::size_t n = grid.size();
    std::vector<std::vector<cplx>> out;

    // A_p test functions chi_I * omega^{1/(1-p)} pulled back through g
    const PowerWeight dual{alpha * (2.0 - p) / (1.0 - p), 0.0};
    for (int m = 1; pi / std::ldexp(1.0, m) >= 2.0 * grid.spacing(); ++m) {
        const double eps = pi / std::ldexp(1.0, m);
        for (double center : {0.0, 0.5 * eps, -0.5 * eps}) {
            std::vector<cplx> f(n);
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                const double theta = grid.node(j);
                const double offset = std::remainder(theta - center, 2.0 * pi);
                if (std::abs(offset) < 0.5 * eps) {
                    f[j] = weight_value(dual, theta) / op.g(j);
                    any = true;
                }
            }
            if (any) {
                out.push_back(std::move(f));
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    constexpr int degree = 8;

    // polynomials over g: fixed by S_mu
    for (int c = 0; c < 3; ++c) {
        FourierCoeffs poly{0, std::vector<cplx>(degree + 1)};
        for (auto& coef : poly.coeffs) {
            coef = c == 0 ? cplx{} : cplx(normal(rng), normal(rng));
        }
        if (c == 0) {
            poly.coeffs[0] = 1.0;
        }
        std::vector<cplx> f = idft(poly, grid).values;
        for (std::size_t j = 0; j < n; ++j) {
            f[j] /= op.g(j);
        }
        out.push_back(std::move(f));
    }

    for (int c = 0; c < 4; ++c) {
        FourierCoeffs trig{-degree, std::vector<cplx>(2 * degree + 1)};
        for (auto& coef : trig.coeffs) {
            coef = cplx(normal(rng), normal(rng));
        }
        out.push_back(idft(trig, grid).values);
    }
    return out;
}

} // namespace

NormSpec::NormSpec(double p, PowerWeight weight) : p_(p), weight_(weight)
{
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw std::invalid_argument("NormSpec: p must be finite and >= 1");
    }
    if (!std::isfinite(weight.exponent)) {
        throw std::invalid_argument("NormSpec: weight exponent must be finite");
    }
}

double lp_norm(const BoundarySamples& f, const NormSpec& spec)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        sum += std::pow(std::abs(f.values[j]), spec.p()) * weight_value(spec.weight(), f.grid.node(j));
    }
    return std::pow(sum * f.grid.spacing(), 1.0 / spec.p());
}

std::vector<double> default_radii()
{
    std::vector<double> radii;
    for (int k = 1; k <= 10; ++k) {
        radii.push_back(1.0 - std::ldexp(1.0, -k));
    }
    return radii;
}

std::vector<double> radial_means(const FourierCoeffs& f, double alpha, double p,
                                 const std::vector<double>& radii, std::size_t grid_points)
{
    if (!(p >= 1.0)) {
        throw std::invalid_argument("radial_means: p must be >= 1");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= 0.0 && radii[i] < 1.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw std::invalid_argument("radial_means: radii must be strictly increasing in [0, 1)");
        }
        if (radii[i] == 0.0 && f.min_mode < 0) {
            throw std::invalid_argument("radial_means: negative modes are singular at r = 0");
        }
    }
    const CircleGrid grid(grid_points);
    const double exponent = 2.0 * alpha / p;
    std::vector<double> means;
    means.reserve(radii.size());
    for (double r : radii) {
        FourierCoeffs scaled = f;
        for (int k = f.min_mode; k <= f.max_mode(); ++k) {
            scaled.coeffs[static_cast<std::size_t>(k - f.min_mode)] *= std::pow(r, k);
        }
        const BoundarySamples values = idft(scaled, grid);
        double sum = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const cplx z = r * grid.point(j);
            sum += std::pow(std::abs(values.values[j] * g_alpha(z, exponent)), p);
        }
        means.push_back(sum * grid.spacing());
    }
    return means;
}

double hardy_norm(const FourierCoeffs& f, double alpha, double p, const std::vector<double>& radii,
                  std::size_t grid_points)
{
    if (radii.empty()) {
        throw std::invalid_argument("hardy_norm: empty radii ladder");
    }
    const std::vector<double> means = radial_means(f, alpha, p, radii, grid_points);
    for (std::size_t i = 1; i < means.size(); ++i) {
        if (means[i] < means[i - 1] * (1.0 - 1e-9)) {
            throw std::runtime_error("hardy_norm: radial means decrease between r = " +
                                     std::to_string(radii[i - 1]) + " and r = " +
                                     std::to_string(radii[i]) + "; input is not holomorphic");
        }
    }
    return std::pow(*std::max_element(means.begin(), means.end()), 1.0 / p);
}

double op_norm_lower_bound(double alpha, double p, std::size_t n_points, int budget,
                           std::uint64_t seed)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("op_norm_lower_bound: p must be > 1");
    }
    if (budget < 0) {
        throw std::invalid_argument("op_norm_lower_bound: budget must be >= 0");
    }
    const DiscreteProjection op(CircleGrid(n_points), alpha, p);
    const std::vector<std::vector<cplx>> candidates = candidate_family(op, alpha, p, seed);

    std::vector<double> ratios(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) {
        ratios[i] = refine(op, candidates[i], p, budget);
    });
    return *std::max_element(ratios.begin(), ratios.end());
}

std::string_view to_string(BlowupVerdict v) noexcept
{
    switch (v) {
    case BlowupVerdict::Stable:
        return "Stable";
    case BlowupVerdict::Growing:
        return "Growing";
    case BlowupVerdict::Inconclusive:
        return "Inconclusive";
    }
    return "Unknown";
}

BlowupVerdict classify_blowup(const std::vector<double>& estimates,
                              const BlowupThresholds& thresholds)
{
    if (estimates.size() < 2) {
        return BlowupVerdict::Inconclusive;
    }
    bool monotone = true;
    double variation = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        mean += estimates[i];
        if (i > 0) {
            variation += std::abs(estimates[i] - estimates[i - 1]);
            monotone = monotone && estimates[i] >= (1.0 - thresholds.max_dip) * estimates[i - 1];
        }
    }
    mean /= static_cast<double>(estimates.size());
    if (monotone && estimates.back() >= thresholds.growth_factor * estimates.front()) {
        return BlowupVerdict::Growing;
    }
    if (variation <= thresholds.stable_variation * mean) {
        return BlowupVerdict::Stable;
    }
    return BlowupVerdict::Inconclusive;
}

BlowupReport blowup_scan(double alpha, double p, const std::vector<std::size_t>& grid_sizes,
                         int budget, std::uint64_t seed, const BlowupThresholds& thresholds)
{
    for (std::size_t i = 1; i < grid_sizes.size(); ++i) {
        if (grid_sizes[i] <= grid_sizes[i - 1]) {
            throw std::invalid_argument("blowup_scan: grid sizes must be increasing");
        }
    }
    BlowupReport report{alpha, p, grid_sizes, {}, BlowupVerdict::Inconclusive};
    for (std::size_t n : grid_sizes) {
        report.estimates.push_back(op_norm_lower_bound(alpha, p, n, budget, seed));
    }
    report.verdict = classify_blowup(report.estimates, thresholds);
    return report;
}

} // namespace szego
