#include "fmd/noise_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmd {

Image sample_noisy(const Image& ground_truth, const NoiseParams& params, Seed seed) {
    ground_truth.validate();
    if (!(params.a > 0.0)) throw std::invalid_argument("noise parameter a must be positive");
    for (double v : ground_truth.pixels) {
        if (v < 0.0) throw std::invalid_argument("ground truth contains a negative sample");
    }
    const double b_eff = params.effective_b();
    const double sigma_g = std::sqrt(b_eff);
    Image out = ground_truth;
    const std::size_t n = out.sample_count();
    for (std::size_t i = 0; i < n; ++i) {
        PixelRng rng(seed, i);
        const long k = rng.next_poisson(ground_truth.pixels[i] / params.a);
        double z = params.a * static_cast<double>(k);
        if (b_eff > 0.0) z += sigma_g * rng.next_normal();
        out.pixels[i] = z;
    }
    return out;
}

long pg_pdf_default_kmax(double y, const NoiseParams& params) {
    const double lambda = y / params.a;
    const double spread = std::sqrt(lambda > 1.0 ? lambda : 1.0);
    return static_cast<long>(std::ceil(lambda + 12.0 * spread + 30.0));
}

double pg_pdf(double z, double y, const NoiseParams& params, long k_max) {
    if (!(params.a > 0.0)) throw std::invalid_argument("noise parameter a must be positive");
    if (y < 0.0) throw std::invalid_argument("ground truth value must be non-negative");
    const double b = params.effective_b();
    if (!(b > 0.0))
        throw std::domain_error("pg_pdf requires positive Gaussian variance; use pmf path");
    if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");

    const double lambda = y / params.a;
    const double inv_norm = 1.0 / std::sqrt(6.283185307179586477 * b);
    double density = 0.0;
    double pmf_sum = 0.0;
    if (lambda < 600.0) {
        // direct recurrence
        double pmf = std::exp(-lambda);
        for (long k = 0; k <= k_max; ++k) {
            if (k > 0) pmf *= lambda / static_cast<double>(k);
            pmf_sum += pmf;
            const double d = z - params.a * static_cast<double>(k);
            density += pmf * inv_norm * std::exp(-d * d / (2.0 * b));
        }
    } else {
        // log-space terms for large means
        const double loglam = std::log(lambda);
        for (long k = 0; k <= k_max; ++k) {
            const double kd = static_cast<double>(k);
            const double pmf = std::exp(kd * loglam - lambda - std::lgamma(kd + 1.0));
            pmf_sum += pmf;
            const double d = z - params.a * kd;
            density += pmf * inv_norm * std::exp(-d * d / (2.0 * b));
        }
    }
    const double tail = 1.0 - pmf_sum;
    if (tail > 1e-12) {
        throw std::invalid_argument("k_max=" + std::to_string(k_max) +
                                    " leaves Poisson tail mass " + std::to_string(tail));
    }
    return density;
}

double pg_pdf(double z, double y, const NoiseParams& params) {
    return pg_pdf(z, y, params, pg_pdf_default_kmax(y, params));
}

Image average_images(const std::vector<Image>& images) {
    if (images.empty()) throw std::invalid_argument("cannot average an empty sequence");
    const Image& first = images.front();
    Image out(first.width, first.height, first.channels, first.peak);
    for (const Image& img : images) {
        if (!img.same_shape(first) || img.peak != first.peak)
            throw std::invalid_argument("image sequence shape/peak mismatch");
        for (std::size_t i = 0; i < out.pixels.size(); ++i) out.pixels[i] += img.pixels[i];
    }
    const double inv = 1.0 / static_cast<double>(images.size());
    for (double& v : out.pixels) v *= inv;
    return out;
}

std::pair<double, double> predicted_moments(double y, const NoiseParams& params, long s_count) {
    if (y < 0.0) throw std::invalid_argument("ground truth value must be non-negative");
    if (s_count < 1) throw std::invalid_argument("averaging count S must be >= 1");
    return {y, (params.a * y + params.effective_b()) / static_cast<double>(s_count)};
}

} // namespace fmd
