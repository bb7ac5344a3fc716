#ifndef PDN_TRAINING_HPP
#define PDN_TRAINING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdn/image.hpp"
#include "pdn/network.hpp"
#include "pdn/rng.hpp"

namespace pdn {

/// Hyperparameter bundle. The defaults are the reference training protocol:
/// 120K iterations, mini-batches of 64 patches of 128x128, Adam with
/// lr 1e-4, beta (0.9, 0.999), eps 1e-8, loss cropped by 21 pixels.
struct TrainConfig {
  std::int64_t iterations = 120000;
  int batch = 64;
  int patch_size = 128;
  int crop_margin = 21;
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double peak = 1.0;
  Seed seed;
  Variant variant = Variant::kPlain;
  int threads = 1;
  std::int64_t val_interval = 500;

  void validate() const;
};

/// Desk-scale presets. `paper` is the reference protocol above; `small` and
/// `toy` trade fidelity for runtime and use a higher learning rate
/// (Adam 1e-3) so they converge within their iteration budgets.
TrainConfig preset_paper(double peak, Seed seed);
TrainConfig preset_small(double peak, Seed seed);
TrainConfig preset_toy(double peak, Seed seed);
std::optional<TrainConfig> preset_by_name(const std::string& name, double peak, Seed seed);

/// Mean squared error over the central (H-2m)x(W-2m) region. The outer ring
/// is excluded because convolution output close to the border is polluted by
/// padding.
double loss_central_l2(const Image& pred, const Image& target, int margin);

/// Per-layer gradients, same shapes as the trainable weights.
struct Gradients {
  std::vector<LayerWeights> layers;

  static Gradients zeros_like(const ModelWeights& w);
  void accumulate(const Gradients& other);
  void scale(double s);
};

struct BackwardResult {
  double loss = 0.0;
  Gradients grads;
};

/// Analytic gradient of loss_central_l2 w.r.t. every trainable parameter.
/// ReLU subgradient at 0 is 0. For the kVstBinned variant the fixed binning
/// front-end receives no gradient; `target` is then expected in the
/// Anscombe domain.
BackwardResult backward(const ModelWeights& w, const Image& input_patch,
                        const Image& target_patch, int crop_margin);
BackwardResult backward_vst(const ModelWeights& w, const CountImage& counts,
                            const Image& target_anscombe, int crop_margin);

/// Gradient of an already-computed forward pass given dL/d(denoised).
/// Exposed for composing custom losses; the two wrappers above use it.
Gradients backward_from_pass(const ModelWeights& w, const ForwardPass& pass,
                             const Image& dloss_ddenoised);

/// Adam accumulators, shapes mirroring the weights.
struct AdamState {
  std::vector<LayerWeights> m;
  std::vector<LayerWeights> v;
  std::int64_t step = 0;

  static AdamState zeros_like(const ModelWeights& w);
};

/// One bias-corrected Adam update, in place. Deterministic.
void adam_step(ModelWeights& w, AdamState& state, const Gradients& grads,
               const TrainConfig& config);

/// Uniform random crop of `size` x `size`; with probability 1/2 the patch is
/// flipped about the vertical axis. Throws DomainError if the image is
/// smaller than the patch.
Image sample_patch(const Image& image, int size, Xoshiro256pp& rng);

struct TrainHistory {
  std::vector<double> loss;  // one entry per iteration
  std::vector<std::pair<std::int64_t, double>> val_psnr;

  /// Sidecar CSV: iteration,loss,val_psnr (val_psnr blank between snapshots).
  void save_csv(const std::string& path) const;
};

struct TrainResult {
  ModelWeights weights;
  TrainHistory history;
};

/// Full training loop. Per iteration: draw a batch of augmented clean
/// patches, scale to peak, draw a fresh Poisson realization of each, shift
/// and normalize, run forward/backward, average the gradients in batch-slot
/// order and apply one Adam step. Bit-reproducible given (dataset order,
/// seed) for any thread count: patch draws come from the master stream and
/// each batch slot's noise comes from its own derived stream.
/// Images smaller than the patch size are skipped with a warning on stderr.
TrainResult train(const std::vector<Image>& dataset, const TrainConfig& config,
                  const std::vector<Image>& validation = {});

/// 60/20/20 split membership (train/validation/test) from a seeded shuffle.
struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};
DatasetSplit split_dataset(std::size_t count, Seed seed);

/// Class-aware fine-tuning: continues from `base` on the training portion of
/// the 60/20/20 split of `class_dataset`, then tags the result. Defaults to
/// 45000 iterations with otherwise unchanged parameters. The config peak
/// must match the base weights.
TrainResult fine_tune(const ModelWeights& base, const std::vector<Image>& class_dataset,
                      const std::string& class_tag, TrainConfig config);

}  // namespace pdn

#endif  // PDN_TRAINING_HPP
