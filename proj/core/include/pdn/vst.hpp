#ifndef PDN_VST_HPP
#define PDN_VST_HPP

#include <vector>

#include "pdn/image.hpp"
#include "pdn/poisson.hpp"

namespace pdn {

/// Lower end of the Anscombe range, 2*sqrt(3/8). Stabilized values below it
/// have no preimage and are clamped to 0 by the inverses.
double anscombe_domain_min();

/// Variance-stabilizing transform 2*sqrt(x + 3/8). Poisson data comes out
/// approximately unit-variance Gaussian. Requires x >= 0.
double anscombe_forward(double x);
Image anscombe_forward(const Image& img);

/// Algebraic left-inverse (d/2)^2 - 3/8. Biased at low counts. Inputs below
/// the domain minimum clamp to 0; `clamped`, when given, reports that.
double anscombe_inverse_algebraic(double d, bool* clamped = nullptr);
Image anscombe_inverse_algebraic(const Image& img);

/// Closed-form asymptotic approximation of the exact unbiased inverse
/// (Makitalo & Foi):
///   d^2/4 - 1/8 + sqrt(3/2)/4 d^-1 - 11/8 d^-2 + 5/8 sqrt(3/2) d^-3.
/// Inputs below the domain minimum clamp to 0.
double anscombe_inverse_unbiased(double d);
Image anscombe_inverse_unbiased(const Image& img);

/// Sums non-overlapping n x n blocks (stride n). Partial edge blocks are
/// summed as-is, and the peak metadata is multiplied by n^2. Total count is
/// conserved exactly.
CountImage bin_downsample(const CountImage& counts, int n);

/// Bilinear interpolation on a corner-aligned grid. Target dimensions must
/// not shrink the image.
Image upsample_bilinear(const Image& img, int target_h, int target_w);

/// Constant-valued square kernels used as a fixed (non-trainable) binning
/// convolution: one channel per requested odd size, each kernel summing its
/// n x n support with weight 1, zero-padded to the largest size.
struct BoxKernelStack {
  int kernel_size = 1;                 // spatial extent (max of sizes)
  std::vector<int> sizes;              // the n per channel
  std::vector<double> taps;            // channels * kernel_size^2
  bool trainable = false;

  int channels() const { return static_cast<int>(sizes.size()); }
  double tap(int c, int ky, int kx) const {
    return taps[(static_cast<std::size_t>(c) * kernel_size + ky) * kernel_size + kx];
  }
};

BoxKernelStack box_kernel_stack(const std::vector<int>& sizes);

}  // namespace pdn

#endif  // PDN_VST_HPP
