#include "szego_lab/circle.h"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace szego {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// FFTW planning is not thread-safe; execution on fresh arrays is.
class PlanCache {
public:
    ~PlanCache()
    {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(int n, int sign)
    {
        std::lock_guard lock(mutex_);
        auto it = plans_.find({n, sign});
        if (it != plans_.end()) {
            return it->second;
        }
        std::vector<cplx> in(n), out(n);
        fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                          reinterpret_cast<fftw_complex*>(out.data()), sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) {
            throw std::runtime_error("fftw: failed to plan transform of size " + std::to_string(n));
        }
        plans_.emplace(std::make_pair(n, sign), plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache()
{
    static PlanCache cache;
    return cache;
}

// Unnormalized DFT: out_m = sum_j in_j exp(sign * 2 pi i j m / n).
std::vector<cplx> transform(std::span<const cplx> in, int sign)
{
    const int n = static_cast<int>(in.size());
    std::vector<cplx> src(in.begin(), in.end());
    std::vector<cplx> out(in.size());
    fftw_plan plan = plan_cache().get(n, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(src.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::size_t wrap_index(long long k, std::size_t n)
{
    const long long m = static_cast<long long>(n);
    return static_cast<std::size_t>(((k % m) + m) % m);
}

} // namespace

CircleGrid::CircleGrid(std::size_t n_points) : n_(n_points)
{
    if (n_points < 2) {
        throw std::invalid_argument("CircleGrid: n_points must be >= 2, got " +
                                    std::to_string(n_points));
    }
}

double CircleGrid::spacing() const noexcept { return two_pi / static_cast<double>(n_); }

double CircleGrid::node(std::size_t j) const noexcept
{
    return two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_);
}

std::vector<double> CircleGrid::nodes() const
{
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        out[j] = node(j);
    }
    return out;
}

cplx CircleGrid::point(std::size_t j) const noexcept { return std::polar(1.0, node(j)); }

CircleGrid make_grid(std::size_t n_points) { return CircleGrid(n_points); }

BoundarySamples::BoundarySamples(CircleGrid g, std::vector<cplx> v)
    : grid(g), values(std::move(v))
{
    if (values.size() != grid.size()) {
        throw std::invalid_argument("BoundarySamples: " + std::to_string(values.size()) +
                                    " values for a grid of " + std::to_string(grid.size()));
    }
}

cplx FourierCoeffs::at(int k) const noexcept
{
    if (k < min_mode || k > max_mode()) {
        return {};
    }
    return coeffs[static_cast<std::size_t>(k - min_mode)];
}

cplx quad(const BoundarySamples& f)
{
    cplx sum{};
    for (const cplx& v : f.values) {
        sum += v;
    }
    return sum * f.grid.spacing();
}

int max_resolved_mode(const CircleGrid& grid) noexcept
{
    return static_cast<int>((grid.size() - 1) / 2);
}

FourierCoeffs dft(const BoundarySamples& f, int max_abs_mode)
{
    const std::size_t n = f.grid.size();
    if (max_abs_mode < 0 || static_cast<std::size_t>(2 * max_abs_mode) >= n) {
        throw std::invalid_argument("dft: grid of " + std::to_string(n) +
                                    " points does not resolve |k| <= " +
                                    std::to_string(max_abs_mode));
    }
    const std::vector<cplx> spectrum = transform(f.values, FFTW_FORWARD);
    const double inv_n = 1.0 / static_cast<double>(n);

    FourierCoeffs out;
    out.min_mode = -max_abs_mode;
    out.coeffs.resize(static_cast<std::size_t>(2 * max_abs_mode + 1));
    for (int k = -max_abs_mode; k <= max_abs_mode; ++k) {
        // half-offset nodes shift every mode by a phase of pi*k/n
        const cplx phase = std::polar(1.0, -std::numbers::pi * k / static_cast<double>(n));
        out.coeffs[static_cast<std::size_t>(k + max_abs_mode)] =
            spectrum[wrap_index(k, n)] * phase * inv_n;
    }
    return out;
}

BoundarySamples idft(const FourierCoeffs& c, const CircleGrid& grid)
{
    const std::size_t n = grid.size();
    std::vector<cplx> bins(n);
    for (int k = c.min_mode; k <= c.max_mode(); ++k) {
        const cplx phase = std::polar(1.0, std::numbers::pi * k / static_cast<double>(n));
        bins[wrap_index(k, n)] += c.at(k) * phase;
    }
    return BoundarySamples(grid, transform(bins, FFTW_BACKWARD));
}

cplx eval_analytic_at(const FourierCoeffs& c, cplx z)
{
    if (std::abs(z) >= 1.0) {
        throw std::invalid_argument("eval_analytic_at: |z| must be < 1");
    }
    if (c.min_mode < 0) {
        throw std::invalid_argument("eval_analytic_at: coefficients contain negative modes");
    }
    cplx acc{};
    for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    if (c.min_mode > 0) {
        acc *= std::pow(z, c.min_mode);
    }
    return acc;
}

} // namespace szego
