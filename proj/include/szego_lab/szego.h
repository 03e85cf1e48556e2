#pragma once

#include "szego_lab/weights.h"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace szego {

/// Riesz projection: keeps modes k >= 0. The result starts at mode 0 (or at
/// the input's min_mode when that is positive).
FourierCoeffs riesz_project(const FourierCoeffs& c);

/// Unweighted Szego kernel 1 / (2 pi (1 - z conj(w))), basis z^n / sqrt(2 pi).
cplx szego_kernel(cplx z, cplx w);

struct WeightedKernelEval {
    double alpha;
    cplx z;
    cplx w;
    cplx value;
};

/// S_mu(z, w) = S(z, w) / (g_alpha(z) conj(g_alpha(w))).
WeightedKernelEval weighted_kernel(cplx z, cplx w, double alpha);

enum class MomentSource { ClosedForm, Quadrature };

/// Toeplitz Gram matrix G_{nm} = m_{n-m}(alpha) of the monomials 1..z^{N-1}
/// under the mu_alpha inner product, with its Cholesky factor.
///
/// Construction fails when G is not positive definite or its condition
/// number exceeds 1e12.
class GramSystem {
public:
    static GramSystem build(double alpha, int dimension, MomentSource source = MomentSource::ClosedForm,
                            std::size_t quadrature_points = std::size_t{1} << 16);

    double alpha() const noexcept { return alpha_; }
    int dimension() const noexcept { return static_cast<int>(gram_.rows()); }
    const Eigen::MatrixXd& matrix() const noexcept { return gram_; }
    double condition_number() const noexcept { return condition_; }

    /// v(z)^T G^{-1} conj(v(w)) with v(z) = (1, z, ..., z^{N-1}).
    cplx kernel(cplx z, cplx w) const;

private:
    GramSystem(double alpha, Eigen::MatrixXd gram);

    double alpha_;
    Eigen::MatrixXd gram_;
    Eigen::LLT<Eigen::MatrixXd> factor_;
    double condition_ = 0.0;
};

/// Truncated reproducing kernel of the monomial span; requires |z|, |w| <= 0.9.
cplx weighted_kernel_via_moments(const GramSystem& gram, cplx z, cplx w);

/// A holomorphic function on the disc stored as numerator(z) / g_alpha(z),
/// where numerator holds nonnegative modes only.
struct WeightedHolomorphic {
    double alpha;
    FourierCoeffs numerator;

    /// Value at an interior point |z| < 1.
    cplx operator()(cplx z) const;
    /// Boundary values numerator(w_j) / g_alpha(w_j) on the grid nodes.
    BoundarySamples boundary_trace(const CircleGrid& grid) const;
};

/// S_mu f through g (S_mu f) = S(f g): the numerator is the Riesz projection
/// of the sampled product f * g_alpha, resolved to (n - 1) / 2 modes.
WeightedHolomorphic project_weighted(const BoundarySamples& f, double alpha);

/// S_mu f(z) = int S_mu(z, w) f(w) mu(w) d theta by trapezoidal quadrature.
/// Requires |z| <= 0.9 and n_points >= 50 / (1 - max |z|).
std::vector<cplx> project_weighted_quadrature(const BoundarySamples& f, double alpha,
                                              std::span<const cplx> eval_points);

/// Which transformation f -> f~ the rescaled projection applies.
///
/// Corrected: f~ = f * g_alpha, consistent with S_mu = g^{-1} S(. * g).
/// Literal: f~ = f * |w - 1|^{2 alpha} / g_alpha(w). This variant does not fix
/// holomorphic functions (S_mu 1 comes out as -1/(z - 1) for alpha = 1) and
/// exists only for regression tests against that discrepancy.
enum class RescaleVariant { Corrected, Literal };

BoundarySamples rescale_transform(const BoundarySamples& f, double alpha,
                                  RescaleVariant variant = RescaleVariant::Corrected);

struct RescaledProjection {
    std::vector<cplx> values;
    /// ||f~||_{L^p}
    double transformed_norm;
    /// ||f||_{L^p(|z - 1|^{alpha p})}
    double weighted_norm;
};

/// (z - 1)^{-alpha} S(f~)(z) at each eval point, with S(f~) by quadrature
/// against the unweighted kernel. Same point restrictions as
/// project_weighted_quadrature.
RescaledProjection rescaled_project(const BoundarySamples& f, double alpha, double p,
                                    std::span<const cplx> eval_points,
                                    RescaleVariant variant = RescaleVariant::Corrected);

} // namespace szego
