#ifndef PDN_WEIGHTS_IO_HPP
#define PDN_WEIGHTS_IO_HPP

#include <string>

#include "pdn/network.hpp"

namespace pdn {

/// Binary weight file, bit-exact across platforms. Layout (little-endian):
///   bytes 0..3   magic "DNZ1"
///   u32          format version (1)
///   u32          variant (0 = plain, 1 = vst_binned)
///   u32          layer count
///   u32          class tag length
///   f64          peak the model was trained for
///   bytes        class tag (UTF-8)
///   per layer    u32 in_channels, u32 out_channels
///   per layer    kernels as f64 in [out][in][ky][kx] order, then biases
/// Exactly this many bytes; anything shorter or longer is a FormatError.
void save_weights(const ModelWeights& w, const std::string& path);
ModelWeights load_weights(const std::string& path);

}  // namespace pdn

#endif  // PDN_WEIGHTS_IO_HPP
