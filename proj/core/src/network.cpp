#include "pdn/network.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "conv_internal.hpp"
#include "pdn/vst.hpp"

namespace pdn {

std::size_t ModelWeights::parameter_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.kernels.size() + layer.biases.size();
  return n;
}

void ModelWeights::validate() const {
  if (layers.empty()) throw DomainError("model: no layers");
  const int expect_in0 = variant == Variant::kVstBinned ? 4 : 1;
  if (layers.front().in_channels != expect_in0) {
    throw DomainError("model: first layer expects " + std::to_string(expect_in0) +
                      " input channels for this variant, has " +
                      std::to_string(layers.front().in_channels));
  }
  if (!(peak_trained_for > 0.0)) throw DomainError("model: non-positive peak");
  const int out = layers.front().out_channels;
  if (out < 2) throw DomainError("model: need at least 2 output channels");
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& layer = layers[l];
    if (layer.out_channels != out) throw DomainError("model: inconsistent layer width");
    if (l > 0 && layer.in_channels != out - 1) {
      throw DomainError("model: layer " + std::to_string(l + 1) + " input channels " +
                        std::to_string(layer.in_channels) + " != propagated " +
                        std::to_string(out - 1));
    }
    const std::size_t want_k =
        static_cast<std::size_t>(layer.out_channels) * layer.in_channels * LayerWeights::kKernelTaps;
    if (layer.kernels.size() != want_k ||
        layer.biases.size() != static_cast<std::size_t>(layer.out_channels)) {
      throw DomainError("model: layer " + std::to_string(l + 1) + " has wrong buffer sizes");
    }
  }
}

Tensor3 conv2d(const Tensor3& input, const LayerWeights& w) {
  if (input.channels != w.in_channels) {
    throw DomainError("conv2d: input has " + std::to_string(input.channels) +
                      " channels, kernels expect " + std::to_string(w.in_channels));
  }
  Tensor3 out(w.out_channels, input.height, input.width);
  std::vector<double> col;
  internal::im2col(input.data.data(), input.channels, input.height, input.width,
                   LayerWeights::kKernelSize, col);
  internal::gemm_conv(w.kernels.data(), w.biases.data(), w.out_channels,
                      w.in_channels * LayerWeights::kKernelTaps, col.data(), input.plane(),
                      out.data.data());
  return out;
}

Tensor3 relu(const Tensor3& t) {
  Tensor3 out = t;
  for (double& v : out.data) v = v > 0.0 ? v : 0.0;
  return out;
}

namespace {

void check_finite(const Image& img, const char* what) {
  for (double v : img.data) {
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite value in ") + what);
  }
}

// Shared stack walker. `domain_input` is the image the residual slices are
// added to. When keep_activations is set, every layer output survives in the
// returned pass; otherwise two buffers are ping-ponged.
ForwardPass run_stack(const ModelWeights& w, Tensor3 input_tensor, Image domain_input,
                      bool keep_activations) {
  w.validate();
  const int layer_count = w.layer_count();
  const int propagated = w.propagated_channels();
  const int h = input_tensor.height;
  const int q = input_tensor.width;
  if (h < 3 || q < 3) throw DomainError("forward: image must be at least 3x3");
  const std::size_t plane = input_tensor.plane();

  ForwardPass pass;
  pass.trace.input = domain_input;
  pass.trace.residual_slices.reserve(layer_count);
  pass.trace.cumulative_estimates.reserve(layer_count);
  if (keep_activations) pass.layer_out.reserve(layer_count);

  Image running = domain_input;
  std::vector<double> col;
  Tensor3 ping, pong;

  const double* cur = input_tensor.data.data();
  int cur_channels = input_tensor.channels;

  for (int l = 0; l < layer_count; ++l) {
    const LayerWeights& layer = w.layers[l];
    Tensor3& z = keep_activations ? (pass.layer_out.emplace_back())
                                  : (l % 2 == 0 ? ping : pong);
    z = Tensor3(layer.out_channels, h, q);

    internal::im2col(cur, cur_channels, h, q, LayerWeights::kKernelSize, col);
    internal::gemm_conv(layer.kernels.data(), layer.biases.data(), layer.out_channels,
                        cur_channels * LayerWeights::kKernelTaps, col.data(), plane,
                        z.data.data());

    // Last channel is extracted linearly as this layer's noise component.
    Image slice = z.channel(propagated);
    for (std::size_t i = 0; i < plane; ++i) running.data[i] += slice.data[i];
    pass.trace.residual_slices.push_back(std::move(slice));
    pass.trace.cumulative_estimates.push_back(running);

    // Propagated prefix feeds the next layer; ReLU everywhere except the
    // final two layers.
    const bool relu_layer = l < layer_count - 2;
    if (relu_layer) {
      double* prefix = z.data.data();
      for (std::size_t i = 0; i < static_cast<std::size_t>(propagated) * plane; ++i) {
        if (prefix[i] < 0.0) prefix[i] = 0.0;
      }
    }
    cur = z.data.data();
    cur_channels = propagated;
  }

  pass.trace.denoised = std::move(running);
  check_finite(pass.trace.denoised, "forward pass output");
  pass.input_tensor = std::move(input_tensor);
  return pass;
}

Tensor3 binned_anscombe_input(const CountImage& counts) {
  const BoxKernelStack stack = box_kernel_stack({1, 3, 5, 7});
  const int r = (stack.kernel_size - 1) / 2;
  Tensor3 out(stack.channels(), counts.height, counts.width);
  for (int c = 0; c < stack.channels(); ++c) {
    for (int y = 0; y < counts.height; ++y) {
      for (int x = 0; x < counts.width; ++x) {
        double sum = 0.0;
        for (int ky = 0; ky < stack.kernel_size; ++ky) {
          const int sy = y + ky - r;
          if (sy < 0 || sy >= counts.height) continue;
          for (int kx = 0; kx < stack.kernel_size; ++kx) {
            const int sx = x + kx - r;
            if (sx < 0 || sx >= counts.width) continue;
            sum += stack.tap(c, ky, kx) * counts.at(sy, sx);
          }
        }
        out.at(c, y, x) = anscombe_forward(sum);
      }
    }
  }
  return out;
}

}  // namespace

ForwardPass forward_with_activations(const ModelWeights& w, const Image& noisy_normalized) {
  if (w.variant != Variant::kPlain) {
    throw DomainError("forward: weights are not the plain variant");
  }
  check_finite(noisy_normalized, "forward pass input");
  return run_stack(w, Tensor3::from_image(noisy_normalized), noisy_normalized, true);
}

ForwardTrace forward(const ModelWeights& w, const Image& noisy_normalized) {
  if (w.variant != Variant::kPlain) {
    throw DomainError("forward: weights are not the plain variant");
  }
  check_finite(noisy_normalized, "forward pass input");
  return run_stack(w, Tensor3::from_image(noisy_normalized), noisy_normalized, false).trace;
}

ForwardPass forward_vst_variant_with_activations(const ModelWeights& w,
                                                 const CountImage& counts) {
  if (w.variant != Variant::kVstBinned) {
    throw DomainError("forward_vst_variant: weights are not the vst_binned variant");
  }
  Tensor3 a0 = binned_anscombe_input(counts);
  // The residual sum is added to the Anscombe transform of the raw counts
  // (identical to the fixed n=1 binning channel).
  Image transformed = anscombe_forward(counts.to_image());
  return run_stack(w, std::move(a0), std::move(transformed), true);
}

ForwardTrace forward_vst_variant(const ModelWeights& w, const CountImage& counts) {
  if (w.variant != Variant::kVstBinned) {
    throw DomainError("forward_vst_variant: weights are not the vst_binned variant");
  }
  Tensor3 a0 = binned_anscombe_input(counts);
  Image transformed = anscombe_forward(counts.to_image());
  return run_stack(w, std::move(a0), std::move(transformed), false).trace;
}

IntensityField trace_to_intensity(const ForwardTrace& trace, PeakValue peak) {
  const double p = peak.value();
  Image out(trace.denoised.height, trace.denoised.width);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    double v = (trace.denoised.data[i] + 0.5) * p;
    out.data[i] = v < 0.0 ? 0.0 : (v > p ? p : v);
  }
  return out;
}

IntensityField variant_to_intensity(const ForwardTrace& trace) {
  return anscombe_inverse_unbiased(trace.denoised);
}

ModelWeights zero_weights(const NetworkConfig& config) {
  if (config.layers < 1 || config.channels < 2) {
    throw DomainError("network config: need >= 1 layer and >= 2 channels");
  }
  ModelWeights w;
  w.variant = config.variant;
  w.peak_trained_for = PeakValue(config.peak).value();
  w.class_tag = config.class_tag;
  const int in0 = config.variant == Variant::kVstBinned ? 4 : 1;
  w.layers.reserve(config.layers);
  for (int l = 0; l < config.layers; ++l) {
    w.layers.emplace_back(l == 0 ? in0 : config.channels - 1, config.channels);
  }
  return w;
}

ModelWeights init_weights(const NetworkConfig& config, Xoshiro256pp& rng) {
  ModelWeights w = zero_weights(config);
  constexpr double kResidualScale = 0.1;
  for (auto& layer : w.layers) {
    const double stddev =
        std::sqrt(2.0 / (LayerWeights::kKernelTaps * static_cast<double>(layer.in_channels)));
    for (double& k : layer.kernels) k = stddev * rng.normal();
    // Damp the extracted channel so the initial residuals are near zero and
    // the fresh network is approximately the identity.
    const std::size_t per_out =
        static_cast<std::size_t>(layer.in_channels) * LayerWeights::kKernelTaps;
    double* extracted = layer.kernels.data() + per_out * (layer.out_channels - 1);
    for (std::size_t i = 0; i < per_out; ++i) extracted[i] *= kResidualScale;
  }
  return w;
}

}  // namespace pdn
