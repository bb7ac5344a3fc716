#include "pdn/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace pdn {

double psnr(const IntensityField& reference, const IntensityField& estimate, PeakValue peak) {
  check_same_dims(reference, estimate, "psnr");
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.data.size(); ++i) {
    const double d = reference.data[i] - estimate.data[i];
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(reference.data.size());
  if (mse == 0.0) return kPsnrCap;
  const double db = 10.0 * std::log10(peak.value() * peak.value() / mse);
  return std::min(db, kPsnrCap);
}

double rmse(const Image& a, const Image& b) {
  check_same_dims(a, b, "rmse");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = a.data[i] - b.data[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.data.size()));
}

}  // namespace pdn
