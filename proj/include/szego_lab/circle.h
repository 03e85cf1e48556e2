#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace szego {

using cplx = std::complex<double>;

/// Uniform half-offset grid on the unit circle: theta_j = 2*pi*(j + 1/2) / n.
///
/// The offset keeps theta = 0 (the point z = 1, where every weight in this
/// library degenerates) strictly between two nodes.
class CircleGrid {
public:
    explicit CircleGrid(std::size_t n_points);

    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept;
    double node(std::size_t j) const noexcept;
    std::vector<double> nodes() const;
    /// e^{i theta_j}
    cplx point(std::size_t j) const noexcept;

    friend bool operator==(const CircleGrid&, const CircleGrid&) = default;

private:
    std::size_t n_;
};

CircleGrid make_grid(std::size_t n_points);

/// A circle function in value space: one complex value per grid node.
struct BoundarySamples {
    CircleGrid grid;
    std::vector<cplx> values;

    BoundarySamples(CircleGrid g, std::vector<cplx> v);

    std::size_t size() const noexcept { return values.size(); }
};

/// Samples fn(theta) on every node of the grid.
template <typename Fn>
BoundarySamples sample(const CircleGrid& grid, Fn&& fn)
{
    std::vector<cplx> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        v[j] = cplx(fn(grid.node(j)));
    }
    return BoundarySamples(grid, std::move(v));
}

/// Coefficients c_k for k = min_mode .. min_mode + coeffs.size() - 1 of
/// sum_k c_k e^{ik theta}.
struct FourierCoeffs {
    int min_mode = 0;
    std::vector<cplx> coeffs;

    int max_mode() const noexcept { return min_mode + static_cast<int>(coeffs.size()) - 1; }
    /// c_k, or zero for modes outside the stored range.
    cplx at(int k) const noexcept;
};

/// Trapezoidal rule: (2*pi/n) * sum_j values_j.
cplx quad(const BoundarySamples& f);

/// c_k = (1/2pi) * quad(f * e^{-ik theta}) for |k| <= max_abs_mode.
/// Requires n_points > 2 * max_abs_mode.
FourierCoeffs dft(const BoundarySamples& f, int max_abs_mode);

/// Largest mode a grid resolves in dft: (n - 1) / 2.
int max_resolved_mode(const CircleGrid& grid) noexcept;

/// Synthesis sum_k c_k e^{ik theta_j} on every node. Modes beyond the grid
/// alias; no resolution check is made.
BoundarySamples idft(const FourierCoeffs& c, const CircleGrid& grid);

/// sum_{k >= 0} c_k z^k for |z| < 1. Rejects coefficient sets with negative modes.
cplx eval_analytic_at(const FourierCoeffs& c, cplx z);

} // namespace szego
