#include "szego_lab/szego.h"

#include "szego_lab/norms.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace szego {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double max_eval_radius = 0.9;

void check_eval_points(std::span<const cplx> eval_points, const CircleGrid& grid,
                       const char* who)
{
    double max_radius = 0.0;
    for (const cplx& z : eval_points) {
        max_radius = std::max(max_radius, std::abs(z));
    }
    if (max_radius > max_eval_radius) {
        throw std::invalid_argument(std::string(who) + ": eval point too close to the circle (|z| > 0.9)");
    }
    if (static_cast<double>(grid.size()) < 50.0 / (1.0 - max_radius)) {
        throw std::invalid_argument(std::string(who) + ": grid does not resolve the kernel; need n_points >= 50/(1 - max|z|)");
    }
}

} // namespace

FourierCoeffs riesz_project(const FourierCoeffs& c)
{
    FourierCoeffs out;
    out.min_mode = std::max(0, c.min_mode);
    if (c.max_mode() < out.min_mode) {
        out.min_mode = 0;
        out.coeffs = {cplx{}};
        return out;
    }
    for (int k = out.min_mode; k <= c.max_mode(); ++k) {
        out.coeffs.push_back(c.at(k));
    }
    return out;
}

cplx szego_kernel(cplx z, cplx w)
{
    const cplx zw = z * std::conj(w);
    if (std::abs(zw) >= 1.0) {
        throw std::invalid_argument("szego_kernel: requires |z conj(w)| < 1");
    }
    return 1.0 / (two_pi * (1.0 - zw));
}

WeightedKernelEval weighted_kernel(cplx z, cplx w, double alpha)
{
    const cplx one{1.0, 0.0};
    if (alpha > 0.0 && (z == one || w == one)) {
        throw std::invalid_argument("weighted_kernel: z and w must differ from 1");
    }
    const cplx s = szego_kernel(z, w);
    return {alpha, z, w, s / (g_alpha(z, alpha) * std::conj(g_alpha(w, alpha)))};
}

GramSystem::GramSystem(double alpha, Eigen::MatrixXd gram)
    : alpha_(alpha), gram_(std::move(gram)), factor_(gram_)
{
    if (factor_.info() != Eigen::Success) {
        throw std::runtime_error("GramSystem: Gram matrix is not positive definite "
                                 "(moments inaccurate?)");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) {
        throw std::runtime_error("GramSystem: Gram matrix is not positive definite");
    }
    condition_ = hi / lo;
    if (condition_ > 1e12) {
        throw std::runtime_error("GramSystem: condition number " + std::to_string(condition_) +
                                 " exceeds 1e12 at N = " + std::to_string(gram_.rows()));
    }
}

GramSystem GramSystem::build(double alpha, int dimension, MomentSource source,
                             std::size_t quadrature_points)
{
    if (dimension < 1) {
        throw std::invalid_argument("GramSystem: dimension must be positive");
    }
    std::vector<double> moments(static_cast<std::size_t>(dimension));
    if (source == MomentSource::ClosedForm) {
        for (int k = 0; k < dimension; ++k) {
            moments[static_cast<std::size_t>(k)] = moment_closed_form(k, alpha);
        }
    } else {
        moments = moment_table(alpha, dimension - 1, CircleGrid(quadrature_points));
    }
    Eigen::MatrixXd gram(dimension, dimension);
    for (int n = 0; n < dimension; ++n) {
        for (int m = 0; m < dimension; ++m) {
            gram(n, m) = moments[static_cast<std::size_t>(std::abs(n - m))];
        }
    }
    return GramSystem(alpha, std::move(gram));
}

cplx GramSystem::kernel(cplx z, cplx w) const
{
    const int n = dimension();
    Eigen::VectorXcd vz(n), vw(n);
    cplx pz{1.0, 0.0}, pw{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        vz(k) = pz;
        vw(k) = std::conj(pw);
        pz *= z;
        pw *= w;
    }
    const Eigen::VectorXcd solved = factor_.solve(vw);
    return vz.transpose() * solved;
}

cplx weighted_kernel_via_moments(const GramSystem& gram, cplx z, cplx w)
{
    if (std::abs(z) > max_eval_radius || std::abs(w) > max_eval_radius) {
        throw std::invalid_argument("weighted_kernel_via_moments: requires |z|, |w| <= 0.9");
    }
    return gram.kernel(z, w);
}

cplx WeightedHolomorphic::operator()(cplx z) const
{
    return eval_analytic_at(numerator, z) / g_alpha(z, alpha);
}

BoundarySamples WeightedHolomorphic::boundary_trace(const CircleGrid& grid) const
{
    BoundarySamples h = idft(numerator, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        h.values[j] /= g_alpha(grid.point(j), alpha);
    }
    return h;
}

WeightedHolomorphic project_weighted(const BoundarySamples& f, double alpha)
{
    const int max_mode = max_resolved_mode(f.grid);
    if (max_mode < 1) {
        throw std::invalid_argument("project_weighted: grid too coarse");
    }
    std::vector<cplx> product(f.values);
    for (std::size_t j = 0; j < product.size(); ++j) {
        if (!std::isfinite(product[j].real()) || !std::isfinite(product[j].imag())) {
            throw std::invalid_argument("project_weighted: non-finite sample at node " +
                                        std::to_string(j));
        }
        product[j] *= g_alpha(f.grid.point(j), alpha);
    }
    const FourierCoeffs spectrum = dft(BoundarySamples(f.grid, std::move(product)), max_mode);
    return {alpha, riesz_project(spectrum)};
}

std::vector<cplx> project_weighted_quadrature(const BoundarySamples& f, double alpha,
                                              std::span<const cplx> eval_points)
{
    check_eval_points(eval_points, f.grid, "project_weighted_quadrature");
    const std::vector<double> mu = weight_samples(mu_weight(alpha), f.grid);
    std::vector<cplx> out;
    out.reserve(eval_points.size());
    for (const cplx& z : eval_points) {
        cplx sum{};
        for (std::size_t j = 0; j < f.size(); ++j) {
            sum += weighted_kernel(z, f.grid.point(j), alpha).value * f.values[j] * mu[j];
        }
        out.push_back(sum * f.grid.spacing());
    }
    return out;
}

BoundarySamples rescale_transform(const BoundarySamples& f, double alpha, RescaleVariant variant)
{
    BoundarySamples out = f;
    const PowerWeight mu = mu_weight(alpha);
    for (std::size_t j = 0; j < f.size(); ++j) {
        const cplx w = f.grid.point(j);
        if (variant == RescaleVariant::Corrected) {
            out.values[j] *= g_alpha(w, alpha);
        } else {
            out.values[j] *= weight_value(mu, f.grid.node(j)) / g_alpha(w, alpha);
        }
    }
    return out;
}

RescaledProjection rescaled_project(const BoundarySamples& f, double alpha, double p,
                                    std::span<const cplx> eval_points, RescaleVariant variant)
{
    if (!(p > 1.0)) {
        throw std::invalid_argument("rescaled_project: p must be > 1");
    }
    check_eval_points(eval_points, f.grid, "rescaled_project");
    const BoundarySamples transformed = rescale_transform(f, alpha, variant);

    RescaledProjection out;
    out.values.reserve(eval_points.size());
    for (const cplx& z : eval_points) {
        cplx sum{};
        for (std::size_t j = 0; j < f.size(); ++j) {
            sum += szego_kernel(z, f.grid.point(j)) * transformed.values[j];
        }
        out.values.push_back(sum * f.grid.spacing() / g_alpha(z, alpha));
    }
    out.transformed_norm = lp_norm(transformed, NormSpec(p, PowerWeight{}));
    out.weighted_norm = lp_norm(f, NormSpec(p, PowerWeight{alpha * p, 0.0}));
    return out;
}

} // namespace szego
