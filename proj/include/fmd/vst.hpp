#pragma once

#include "fmd/image.hpp"
#include "fmd/noise_model.hpp"

namespace fmd {

/// Raster in the variance-stabilized domain (noise standard deviation
/// approximately 1, samples >= 0) together with the parameters that were
/// used to get there.
struct TransformedImage {
    Image raster;
    NoiseParams params;
};

/// Generalized Anscombe transform:
///   f(z) = (2/a) * sqrt(max(a*z + (3/8)a^2 + effective_b, 0)).
/// Monotone in z; maps Poisson-Gaussian noise to approximately unit
/// variance.
TransformedImage gat_forward(const Image& image, const NoiseParams& params);

/// Exact algebraic inverse of gat_forward wherever the clamp is inactive:
///   z = ((a*D/2)^2 - (3/8)a^2 - effective_b) / a.
/// Biased as an estimator of y when D is a denoised mean value.
Image inverse_algebraic(const TransformedImage& t);

/// Closed-form approximation of the exact unbiased inverse. The sample is
/// standardized to the unit-Poisson Anscombe domain (where the transform
/// reads 2*sqrt(z' + 3/8)), mapped through
///   I(D) = D^2/4 + sqrt(3/2)/(4D) - 11/(8D^2) + 5*sqrt(3/2)/(8D^3) - 1/8,
/// then unstandardized. Below the transform's range minimum the algebraic
/// inverse floored at zero is used instead.
Image inverse_exact_unbiased(const TransformedImage& t);

/// Scalar versions of the three maps above, applied per sample everywhere.
double gat_forward_value(double z, const NoiseParams& params);
double inverse_algebraic_value(double d, const NoiseParams& params);
double inverse_exact_unbiased_value(double d, const NoiseParams& params);

} // namespace fmd
