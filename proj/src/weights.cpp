#include "szego_lab/weights.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace szego {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_small_integer(double x) { return x >= 0.0 && x <= 16.0 && std::floor(x) == x; }

} // namespace

cplx branch_log(cplx z)
{
    if (z.imag() == 0.0 && z.real() >= 0.0) {
        throw std::invalid_argument("branch_log: argument lies on the cut [0, +inf)");
    }
    double arg = std::atan2(z.imag(), z.real());
    if (arg <= 0.0) {
        arg += two_pi;
    }
    return {std::log(std::abs(z)), arg};
}

cplx g_alpha(cplx z, double alpha)
{
    if (alpha < 0.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("g_alpha: exponent must be finite and >= 0");
    }
    if (alpha == 0.0) {
        return {1.0, 0.0};
    }
    if (z == cplx(1.0, 0.0)) {
        throw std::invalid_argument("g_alpha: z = 1 is the branch point");
    }
    const cplx base = z - 1.0;
    if (is_small_integer(alpha)) {
        cplx acc = base;
        for (int i = 1; i < static_cast<int>(alpha); ++i) {
            acc *= base;
        }
        return acc;
    }
    return std::exp(alpha * branch_log(base));
}

double PowerWeight::distance_floor() const noexcept
{
    return clamp > 0.0 ? 2.0 * std::abs(std::sin(0.5 * clamp)) : 0.0;
}

PowerWeight mu_weight(double alpha) noexcept { return PowerWeight{2.0 * alpha, 0.0}; }

double weight_value(const PowerWeight& w, double theta)
{
    double dist = 2.0 * std::abs(std::sin(0.5 * theta));
    if (w.clamp > 0.0) {
        dist = std::max(dist, w.distance_floor());
    }
    if (w.exponent == 0.0) {
        return 1.0;
    }
    if (dist == 0.0) {
        if (w.exponent < 0.0) {
            throw std::domain_error("weight_value: unclamped singular evaluation at theta = 0");
        }
        return 0.0;
    }
    return std::pow(dist, w.exponent);
}

std::vector<double> weight_samples(const PowerWeight& w, const CircleGrid& grid)
{
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        out[j] = weight_value(w, grid.node(j));
    }
    return out;
}

double moment(int k, double alpha, const CircleGrid& grid)
{
    const PowerWeight mu = mu_weight(alpha);
    const BoundarySamples f = sample(grid, [&](double theta) {
        return std::polar(weight_value(mu, theta), k * theta);
    });
    const cplx m = quad(f);
    if (std::abs(m.imag()) > 1e-10) {
        throw std::runtime_error("moment: imaginary part " + std::to_string(m.imag()) +
                                 " exceeds 1e-10");
    }
    return m.real();
}

std::vector<double> moment_table(double alpha, int max_k, const CircleGrid& grid)
{
    const std::vector<double> mu = weight_samples(mu_weight(alpha), grid);
    const BoundarySamples f(grid, std::vector<cplx>(mu.begin(), mu.end()));
    const FourierCoeffs c = dft(f, max_k);
    std::vector<double> out(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        // m_k = int e^{ik theta} mu = 2 pi c_{-k}
        const cplx m = two_pi * c.at(-k);
        if (std::abs(m.imag()) > 1e-10) {
            throw std::runtime_error("moment_table: imaginary part exceeds 1e-10 at k = " +
                                     std::to_string(k));
        }
        out[static_cast<std::size_t>(k)] = m.real();
    }
    return out;
}

double moment_closed_form(int k, double alpha)
{
    if (alpha < 0.0) {
        throw std::invalid_argument("moment_closed_form: alpha must be >= 0");
    }
    k = std::abs(k);
    double m = two_pi * std::exp(std::lgamma(2.0 * alpha + 1.0) - 2.0 * std::lgamma(alpha + 1.0));
    for (int j = 0; j < k; ++j) {
        m *= (j - alpha) / (j + alpha + 1.0);
    }
    return m;
}

} // namespace szego
