#ifndef PDN_POISSON_HPP
#define PDN_POISSON_HPP

#include <cstdint>
#include <vector>

#include "pdn/image.hpp"
#include "pdn/rng.hpp"

namespace pdn {

/// Observed photoelectron counts with the peak the field was scaled to.
struct CountImage {
  int height = 0;
  int width = 0;
  std::vector<std::uint32_t> counts;
  double peak = 1.0;

  CountImage() = default;
  CountImage(int h, int w, double peak_value)
      : height(h), width(w), counts(static_cast<std::size_t>(h) * w, 0), peak(peak_value) {}

  std::uint32_t& at(int y, int x) { return counts[static_cast<std::size_t>(y) * width + x]; }
  std::uint32_t at(int y, int x) const { return counts[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixels() const { return counts.size(); }

  /// Counts as a real-valued image (photoelectron units).
  Image to_image() const {
    Image img(height, width);
    for (std::size_t i = 0; i < counts.size(); ++i) img.data[i] = counts[i];
    return img;
  }
};

/// P(N = n) for N ~ Poisson(lambda), with the delta branch at lambda = 0.
/// Evaluated in log space so large n does not overflow.
double poisson_pmf(std::int64_t n, double lambda);

/// One Poisson draw. Knuth's multiplication method below kPoissonSwitch,
/// transformed rejection (PTRS) at or above it; both are exact in
/// distribution. lambda = 0 always yields 0.
constexpr double kPoissonSwitch = 30.0;
std::uint32_t sample_poisson(double lambda, Xoshiro256pp& rng);

/// Per-pixel independent Poisson draws from the intensity field, consumed in
/// row-major order so a given stream state fixes the realization exactly.
CountImage degrade(const IntensityField& field, PeakValue peak, Xoshiro256pp& rng);

}  // namespace pdn

#endif  // PDN_POISSON_HPP
