#ifndef PDN_METRICS_HPP
#define PDN_METRICS_HPP

#include "pdn/image.hpp"

namespace pdn {

/// PSNR ceiling reported when the MSE is exactly zero.
constexpr double kPsnrCap = 999.0;

/// 10*log10(peak^2 / MSE) with the MSE taken in photoelectron units.
/// Equivalent to MSE on peak-normalized images against range [0,1].
/// Returns the 999 dB cap when the images are identical.
double psnr(const IntensityField& reference, const IntensityField& estimate, PeakValue peak);

/// sqrt(mean squared difference).
double rmse(const Image& a, const Image& b);

}  // namespace pdn

#endif  // PDN_METRICS_HPP
