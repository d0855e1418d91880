#pragma once

#include <utility>
#include <vector>

#include "fmd/image.hpp"
#include "fmd/rng.hpp"

namespace fmd {

/// Poisson-Gaussian noise parameters: a measured sample is
///   z = a * Poisson(y / a) + Normal(0, effective_b()).
/// a is the detector conversion gain (counts per photon), b the additive
/// Gaussian variance. Estimators may legitimately return a negative b
/// (pedestal effect); it is kept raw for diagnostics and clamped to zero
/// at every point of use.
struct NoiseParams {
    double a = 1.0;
    double b = 0.0;

    [[nodiscard]] double effective_b() const { return b > 0.0 ? b : 0.0; }
};

/// Draws one Poisson-Gaussian realization of the ground truth. Each pixel
/// uses its own counter-based stream derived from (seed, pixel index), so
/// the result is reproducible and independent of evaluation order.
Image sample_noisy(const Image& ground_truth, const NoiseParams& params, Seed seed);

/// Probability density of a measured value z given ground truth y: the
/// Poisson-Gaussian convolution truncated at k_max terms. Requires
/// effective_b > 0 (otherwise the density degenerates to a point-mass
/// lattice; use the pmf path). Throws if the truncated Poisson tail mass
/// exceeds 1e-12.
double pg_pdf(double z, double y, const NoiseParams& params, long k_max);

/// Default truncation: mode + 12 sigma + 30 keeps the tail below 1e-12.
long pg_pdf_default_kmax(double y, const NoiseParams& params);
double pg_pdf(double z, double y, const NoiseParams& params);

/// Pixelwise arithmetic mean of the realizations. All images must share
/// shape, channel count and peak.
Image average_images(const std::vector<Image>& images);

/// Mean and variance of an S-fold average of realizations of y:
/// (y, (a*y + effective_b) / S).
std::pair<double, double> predicted_moments(double y, const NoiseParams& params, long s_count);

} // namespace fmd
