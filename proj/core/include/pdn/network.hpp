#ifndef PDN_NETWORK_HPP
#define PDN_NETWORK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pdn/image.hpp"
#include "pdn/poisson.hpp"
#include "pdn/rng.hpp"
#include "pdn/tensor.hpp"

namespace pdn {

/// Canonical residual denoiser shape: 20 conv layers of 64 3x3 kernels, one
/// output channel extracted per layer, the remaining 63 propagated.
constexpr int kDefaultLayers = 20;
constexpr int kDefaultChannels = 64;

/// Reflection pad / crop margin used at test time. Twenty stacked 3x3
/// convolutions reach 20 pixels, so a 21-pixel border makes every retained
/// output pixel independent of the padding contents.
constexpr int kBorderMargin = 21;

enum class Variant {
  kPlain,      // takes the peak-normalized, shifted noisy image
  kVstBinned,  // takes raw counts through fixed binning kernels + Anscombe
};

/// One convolutional layer: 3x3 kernels in [out][in][ky][kx] order
/// (cross-correlation orientation, no flip) plus per-output biases.
struct LayerWeights {
  static constexpr int kKernelSize = 3;
  static constexpr int kKernelTaps = kKernelSize * kKernelSize;

  int in_channels = 0;
  int out_channels = 0;
  std::vector<double> kernels;
  std::vector<double> biases;

  LayerWeights() = default;
  LayerWeights(int in_ch, int out_ch)
      : in_channels(in_ch), out_channels(out_ch),
        kernels(static_cast<std::size_t>(out_ch) * in_ch * kKernelTaps, 0.0),
        biases(out_ch, 0.0) {}

  double& kernel(int out, int in, int ky, int kx) {
    return kernels[((static_cast<std::size_t>(out) * in_channels + in) * kKernelSize + ky) *
                       kKernelSize + kx];
  }
  double kernel(int out, int in, int ky, int kx) const {
    return kernels[((static_cast<std::size_t>(out) * in_channels + in) * kKernelSize + ky) *
                       kKernelSize + kx];
  }
};

struct NetworkConfig {
  Variant variant = Variant::kPlain;
  int layers = kDefaultLayers;
  int channels = kDefaultChannels;  // output channels per layer
  double peak = 1.0;
  std::string class_tag;
};

/// Ordered trainable layers plus provenance metadata. The fixed binning
/// front-end of the kVstBinned variant is not part of the weights; it is
/// reconstructed from box_kernel_stack({1,3,5,7}) on every use.
struct ModelWeights {
  Variant variant = Variant::kPlain;
  double peak_trained_for = 1.0;
  std::string class_tag;
  std::vector<LayerWeights> layers;

  int layer_count() const { return static_cast<int>(layers.size()); }
  int input_channels() const { return layers.front().in_channels; }
  int channels() const { return layers.front().out_channels; }
  int propagated_channels() const { return channels() - 1; }

  /// Trainable parameter count. 691,328 for the canonical plain shape.
  std::size_t parameter_count() const;

  bool is_canonical() const {
    return layer_count() == kDefaultLayers && channels() == kDefaultChannels;
  }

  /// Structural consistency: layer chaining, kernel/bias sizes, variant
  /// input channels. Throws DomainError on violation.
  void validate() const;
};

/// Per-layer extracted noise components and running estimates. All images
/// live in the network input domain: [-0.5, 0.5]-shifted for kPlain,
/// Anscombe-stabilized for kVstBinned. `denoised` = input + sum of slices;
/// conversion to photoelectrons is a separate reporting step.
struct ForwardTrace {
  Image input;
  std::vector<Image> residual_slices;
  std::vector<Image> cumulative_estimates;
  Image denoised;
};

/// Forward pass that additionally retains the per-layer activations needed
/// by backprop and layer analysis. layer_out[l] holds the full 64-channel
/// output of layer l with ReLU already applied to its propagated prefix.
struct ForwardPass {
  ForwardTrace trace;
  Tensor3 input_tensor;
  std::vector<Tensor3> layer_out;
};

/// 3x3 convolution with 1-pixel zero padding, stride 1, cross-correlation
/// orientation. Output spatial size equals input.
Tensor3 conv2d(const Tensor3& input, const LayerWeights& w);

/// Elementwise max(0, x).
Tensor3 relu(const Tensor3& t);

/// Runs the residual stack on a shifted noisy image. Each layer emits
/// channels()-1 propagated channels (ReLU for all but the last two layers)
/// and one linear residual slice; the slices sum with the input to the
/// denoised estimate. Requires kPlain weights and dims >= 3x3.
ForwardTrace forward(const ModelWeights& w, const Image& noisy_normalized);
ForwardPass forward_with_activations(const ModelWeights& w, const Image& noisy_normalized);

/// kVstBinned pipeline: counts -> fixed box-kernel binning (sizes 1,3,5,7)
/// -> elementwise Anscombe -> trainable stack. The residual sum is added to
/// the Anscombe-transformed counts; invert with variant_to_intensity.
ForwardTrace forward_vst_variant(const ModelWeights& w, const CountImage& counts);
ForwardPass forward_vst_variant_with_activations(const ModelWeights& w,
                                                 const CountImage& counts);

/// Reporting step for kPlain: de-shift, scale by peak, clip to [0, peak].
IntensityField trace_to_intensity(const ForwardTrace& trace, PeakValue peak);

/// Reporting step for kVstBinned: unbiased Anscombe inverse of the sum.
IntensityField variant_to_intensity(const ForwardTrace& trace);

/// He-initialized kernels (std sqrt(2/(9*in_ch))), zero biases. Kernels of
/// the extracted channel are scaled by 0.1 so a fresh network starts close
/// to the identity map.
ModelWeights init_weights(const NetworkConfig& config, Xoshiro256pp& rng);

/// All-zero weights: the exact identity map on the input domain.
ModelWeights zero_weights(const NetworkConfig& config);

}  // namespace pdn

#endif  // PDN_NETWORK_HPP
