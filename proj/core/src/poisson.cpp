#include "pdn/poisson.hpp"

#include <cmath>
#include <string>

namespace pdn {

double poisson_pmf(std::int64_t n, double lambda) {
  if (n < 0) throw DomainError("poisson_pmf: negative count");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("poisson_pmf: rate must be finite and non-negative");
  }
  if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  return std::exp(nd * std::log(lambda) - lambda - std::lgamma(nd + 1.0));
}

namespace {

std::uint32_t poisson_knuth(double lambda, Xoshiro256pp& rng) {
  const double threshold = std::exp(-lambda);
  std::uint32_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.uniform01();
  } while (p > threshold);
  return k - 1;
}

// Transformed rejection with squeeze (Hormann's PTRS), valid for lambda >= 10.
std::uint32_t poisson_ptrs(double lambda, Xoshiro256pp& rng) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  while (true) {
    const double u = rng.uniform01() - 0.5;
    const double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint32_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * loglam - lambda - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint32_t>(kf);
    }
  }
}

}  // namespace

std::uint32_t sample_poisson(double lambda, Xoshiro256pp& rng) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("sample_poisson: rate must be finite and non-negative, got " +
                      std::to_string(lambda));
  }
  if (lambda == 0.0) return 0;
  if (lambda < kPoissonSwitch) return poisson_knuth(lambda, rng);
  return poisson_ptrs(lambda, rng);
}

CountImage degrade(const IntensityField& field, PeakValue peak, Xoshiro256pp& rng) {
  CountImage out(field.height, field.width, peak.value());
  for (std::size_t i = 0; i < field.data.size(); ++i) {
    out.counts[i] = sample_poisson(field.data[i], rng);
  }
  return out;
}

}  // namespace pdn
