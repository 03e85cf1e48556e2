#pragma once

#include "szego_lab/szego.h"

#include <cstdint>

namespace szego {

/// The mu_alpha pairing <f, h> = int f conj(h) |z - 1|^{2 alpha} d theta.
struct PairingSpec {
    double alpha = 0.0;

    PowerWeight weight() const noexcept { return mu_weight(alpha); }
};

/// quad(f conj(h) mu_alpha); both samples must share a grid.
cplx pairing(const BoundarySamples& f, const BoundarySamples& h, const PairingSpec& spec);

/// ||f||_{p, |z-1|^{alpha p}} ||h||_{q, |z-1|^{alpha q}} - |<f, h>|, q = p/(p-1).
/// Nonnegative up to rounding by Hoelder's inequality.
double hoelder_margin(const BoundarySamples& f, const BoundarySamples& h, double alpha, double p);

/// |<S_mu f, h> - <f, S_mu h>|, projections taken through the Fourier path and
/// evaluated on the grid nodes. Rejects inputs whose spectrum is not resolved.
double selfadjoint_residual(const BoundarySamples& f, const BoundarySamples& h, double alpha);

/// S_mu h, the function representing the functional f -> <f, h>.
WeightedHolomorphic dual_representative(const BoundarySamples& h, double alpha);

/// Which norm the representation residual is normalized by.
/// WeightedHardy: ||f||_{p, mu_alpha}. Rescaled: ||f||_{p, |z-1|^{alpha p}}.
enum class DualNormalization { WeightedHardy, Rescaled };

struct RepresentationReport {
    double alpha;
    double p;
    double max_residual;
    int n_tests;
    std::uint64_t seed;
    bool pass;
};

/// Max over seeded random f in span{z^n / g_alpha : n <= 16} of
/// |<f, h> - <f, S_mu h>| / ||f||; pass when it is <= tolerance.
RepresentationReport representation_check(const BoundarySamples& h, double alpha, double p,
                                          int n_tests, std::uint64_t seed,
                                          DualNormalization normalization = DualNormalization::WeightedHardy,
                                          double tolerance = 1e-6);

} // namespace szego
