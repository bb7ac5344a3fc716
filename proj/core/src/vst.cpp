#include "pdn/vst.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pdn {

double anscombe_domain_min() { return 2.0 * std::sqrt(3.0 / 8.0); }

double anscombe_forward(double x) {
  if (!(x >= 0.0)) throw DomainError("anscombe_forward: negative input " + std::to_string(x));
  return 2.0 * std::sqrt(x + 0.375);
}

Image anscombe_forward(const Image& img) {
  Image out(img.height, img.width);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = anscombe_forward(img.data[i]);
  return out;
}

double anscombe_inverse_algebraic(double d, bool* clamped) {
  if (clamped) *clamped = false;
  if (d < anscombe_domain_min()) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  return (d / 2.0) * (d / 2.0) - 0.375;
}

Image anscombe_inverse_algebraic(const Image& img) {
  Image out(img.height, img.width);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    out.data[i] = anscombe_inverse_algebraic(img.data[i]);
  }
  return out;
}

double anscombe_inverse_unbiased(double d) {
  if (d < anscombe_domain_min()) return 0.0;
  const double sqrt32 = std::sqrt(1.5);
  const double inv = 1.0 / d;
  return 0.25 * d * d - 0.125 + 0.25 * sqrt32 * inv - 1.375 * inv * inv +
         0.625 * sqrt32 * inv * inv * inv;
}

Image anscombe_inverse_unbiased(const Image& img) {
  Image out(img.height, img.width);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    out.data[i] = anscombe_inverse_unbiased(img.data[i]);
  }
  return out;
}

CountImage bin_downsample(const CountImage& counts, int n) {
  if (n < 1) throw DomainError("bin_downsample: block size must be >= 1");
  const int oh = (counts.height + n - 1) / n;
  const int ow = (counts.width + n - 1) / n;
  CountImage out(oh, ow, counts.peak * static_cast<double>(n) * n);
  for (int by = 0; by < oh; ++by) {
    for (int bx = 0; bx < ow; ++bx) {
      std::uint64_t sum = 0;
      const int y1 = std::min(counts.height, (by + 1) * n);
      const int x1 = std::min(counts.width, (bx + 1) * n);
      for (int y = by * n; y < y1; ++y) {
        for (int x = bx * n; x < x1; ++x) sum += counts.at(y, x);
      }
      out.at(by, bx) = static_cast<std::uint32_t>(sum);
    }
  }
  return out;
}

Image upsample_bilinear(const Image& img, int target_h, int target_w) {
  if (target_h < img.height || target_w < img.width) {
    throw DomainError("upsample_bilinear: target smaller than source");
  }
  if (img.height < 1 || img.width < 1) throw DomainError("upsample_bilinear: empty source");
  Image out(target_h, target_w);
  for (int y = 0; y < target_h; ++y) {
    // Corner-aligned sampling: endpoint coordinates map onto endpoints.
    const double sy = target_h > 1
                          ? static_cast<double>(y) * (img.height - 1) / (target_h - 1)
                          : 0.0;
    const int y0 = static_cast<int>(sy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fy = sy - y0;
    for (int x = 0; x < target_w; ++x) {
      const double sx = target_w > 1
                            ? static_cast<double>(x) * (img.width - 1) / (target_w - 1)
                            : 0.0;
      const int x0 = static_cast<int>(sx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double fx = sx - x0;
      const double top = img.at(y0, x0) * (1.0 - fx) + img.at(y0, x1) * fx;
      const double bot = img.at(y1, x0) * (1.0 - fx) + img.at(y1, x1) * fx;
      out.at(y, x) = top * (1.0 - fy) + bot * fy;
    }
  }
  return out;
}

BoxKernelStack box_kernel_stack(const std::vector<int>& sizes) {
  if (sizes.empty()) throw DomainError("box_kernel_stack: no sizes given");
  BoxKernelStack stack;
  stack.sizes = sizes;
  for (int n : sizes) {
    if (n < 1 || n % 2 == 0) {
      throw DomainError("box_kernel_stack: sizes must be odd and positive, got " +
                        std::to_string(n));
    }
    stack.kernel_size = std::max(stack.kernel_size, n);
  }
  const int k = stack.kernel_size;
  stack.taps.assign(static_cast<std::size_t>(stack.channels()) * k * k, 0.0);
  for (int c = 0; c < stack.channels(); ++c) {
    const int n = sizes[c];
    const int off = (k - n) / 2;
    for (int ky = 0; ky < n; ++ky) {
      for (int kx = 0; kx < n; ++kx) {
        stack.taps[(static_cast<std::size_t>(c) * k + ky + off) * k + kx + off] = 1.0;
      }
    }
  }
  return stack;
}

}  // namespace pdn
