#pragma once

#include "szego_lab/circle.h"

namespace szego {

/// Logarithm with the cut on the positive real axis: arg in (0, 2*pi).
/// Throws for z on the cut (including 0).
cplx branch_log(cplx z);

/// g_alpha(z) = (z - 1)^alpha on the branch of branch_log, alpha >= 0.
///
/// For z in the closed disc, z - 1 has argument in [pi/2, 3pi/2], so the
/// branch is continuous on the closed disc minus {1}. Integer exponents are
/// evaluated by repeated multiplication.
cplx g_alpha(cplx z, double alpha);

/// Power weight |e^{i theta} - 1|^s with an optional clamp.
///
/// With delta > 0 the distance |e^{i theta} - 1| = 2|sin(theta/2)| is floored
/// at 2|sin(delta/2)|, which leaves the weight exact for |theta| >= delta.
struct PowerWeight {
    double exponent = 0.0;
    double clamp = 0.0;

    /// The floor on |e^{i theta} - 1|; zero when unclamped.
    double distance_floor() const noexcept;
};

/// mu_alpha = |z - 1|^{2 alpha}
PowerWeight mu_weight(double alpha) noexcept;

/// Throws for an unclamped evaluation at theta = 0 with negative exponent.
double weight_value(const PowerWeight& w, double theta);

/// Weight sampled on every grid node (nodes never hit theta = 0).
std::vector<double> weight_samples(const PowerWeight& w, const CircleGrid& grid);

/// m_k(alpha) = int e^{ik theta} mu_alpha(theta) d theta by trapezoidal quadrature.
double moment(int k, double alpha, const CircleGrid& grid);

/// m_0 .. m_{max_k} from a single transform of the weight samples.
std::vector<double> moment_table(double alpha, int max_k, const CircleGrid& grid);

/// 2 pi (-1)^k Gamma(2a+1) / (Gamma(a+k+1) Gamma(a-k+1)), with 1/Gamma = 0 at
/// the poles. Evaluated through the ratio m_{k+1}/m_k = (k - a)/(k + a + 1).
double moment_closed_form(int k, double alpha);

} // namespace szego
