// Shared low-level kernels for the forward and backward convolution paths.
// Not installed; internal to the library.
#ifndef PDN_CONV_INTERNAL_HPP
#define PDN_CONV_INTERNAL_HPP

#include <Eigen/Dense>

#include <cstring>
#include <vector>

namespace pdn::internal {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using ConstMapMat = Eigen::Map<const RowMat>;

/// Unrolls a zero-padded odd-kernel neighborhood into a (C*k*k, H*W) matrix:
/// col[(c*k*k + ky*k + kx)][y*W + x] = in[c][y + ky - r][x + kx - r], r = (k-1)/2.
/// A plain matrix product against the kernel matrix then evaluates the
/// convolution with a per-pixel summation order that is independent of the
/// pixel position (load-bearing for exact translation equivariance).
inline void im2col(const double* in, int channels, int height, int width, int k,
                   std::vector<double>& col) {
  const int r = (k - 1) / 2;
  const std::size_t plane = static_cast<std::size_t>(height) * width;
  col.resize(static_cast<std::size_t>(channels) * k * k * plane);
  double* dst = col.data();
  for (int c = 0; c < channels; ++c) {
    const double* src = in + c * plane;
    for (int ky = 0; ky < k; ++ky) {
      const int dy = ky - r;
      for (int kx = 0; kx < k; ++kx) {
        const int dx = kx - r;
        for (int y = 0; y < height; ++y) {
          double* row = dst + static_cast<std::size_t>(y) * width;
          const int sy = y + dy;
          if (sy < 0 || sy >= height) {
            std::memset(row, 0, sizeof(double) * width);
            continue;
          }
          const double* srow = src + static_cast<std::size_t>(sy) * width;
          const int x0 = dx < 0 ? -dx : 0;           // first valid output x
          const int x1 = dx > 0 ? width - dx : width;  // one past last valid
          if (x0 > 0) std::memset(row, 0, sizeof(double) * x0);
          std::memcpy(row + x0, srow + x0 + dx, sizeof(double) * (x1 - x0));
          if (x1 < width) std::memset(row + x1, 0, sizeof(double) * (width - x1));
        }
        dst += plane;
      }
    }
  }
}

/// out(out_ch, plane) = kernels(out_ch, in_ch*taps) * col + bias per row.
inline void gemm_conv(const double* kernels, const double* biases, int out_ch,
                      int in_ch_taps, const double* col, std::size_t plane, double* out) {
  ConstMapMat w(kernels, out_ch, in_ch_taps);
  ConstMapMat c(col, in_ch_taps, static_cast<Eigen::Index>(plane));
  MapMat o(out, out_ch, static_cast<Eigen::Index>(plane));
  o.noalias() = w * c;
  for (int ch = 0; ch < out_ch; ++ch) {
    o.row(ch).array() += biases[ch];
  }
}

}  // namespace pdn::internal

#endif  // PDN_CONV_INTERNAL_HPP
