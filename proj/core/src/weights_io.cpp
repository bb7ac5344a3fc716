#include "pdn/weights_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace pdn {

namespace {

constexpr char kMagic[4] = {'D', 'N', 'Z', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kMaxLayers = 1024;
constexpr std::uint32_t kMaxChannels = 8192;
constexpr std::uint32_t kMaxTagLength = 4096;

class Writer {
 public:
  explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw FormatError("cannot open '" + path + "' for writing");
  }

  void u32(std::uint32_t v) {
    std::uint8_t b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    out_.write(reinterpret_cast<const char*>(b), 4);
  }

  void f64(double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(bits >> (8 * i));
    out_.write(reinterpret_cast<const char*>(b), 8);
  }

  void bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  }

  void finish(const std::string& path) {
    out_.flush();
    if (!out_) throw FormatError("write failed for '" + path + "'");
  }

 private:
  std::ofstream out_;
};

class Reader {
 public:
  explicit Reader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw FormatError("cannot open '" + path + "'");
  }

  std::uint32_t u32(const char* field) {
    std::uint8_t b[4];
    read(b, 4, field);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
  }

  double f64(const char* field) {
    std::uint8_t b[8];
    read(b, 8, field);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
  }

  void read(void* dst, std::size_t n, const char* field) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw FormatError("truncated weight file '" + path_ + "' while reading " + field,
                        offset_ + in_.gcount());
    }
    offset_ += n;
  }

  std::size_t offset() const { return offset_; }

  bool at_eof() {
    in_.peek();
    return in_.eof();
  }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t offset_ = 0;
};

}  // namespace

void save_weights(const ModelWeights& w, const std::string& path) {
  w.validate();
  if (w.layers.size() > kMaxLayers || w.class_tag.size() > kMaxTagLength) {
    throw DomainError("save_weights: model too large for the format");
  }
  Writer out(path);
  out.bytes(kMagic, 4);
  out.u32(kVersion);
  out.u32(w.variant == Variant::kVstBinned ? 1 : 0);
  out.u32(static_cast<std::uint32_t>(w.layers.size()));
  out.u32(static_cast<std::uint32_t>(w.class_tag.size()));
  out.f64(w.peak_trained_for);
  out.bytes(w.class_tag.data(), w.class_tag.size());
  for (const auto& layer : w.layers) {
    out.u32(static_cast<std::uint32_t>(layer.in_channels));
    out.u32(static_cast<std::uint32_t>(layer.out_channels));
  }
  for (const auto& layer : w.layers) {
    for (double k : layer.kernels) out.f64(k);
    for (double b : layer.biases) out.f64(b);
  }
  out.finish(path);
}

ModelWeights load_weights(const std::string& path) {
  Reader in(path);

  char magic[4];
  in.read(magic, 4, "magic");
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError("'" + path + "' is not a DNZ1 weight file", 0);
  }
  const std::uint32_t version = in.u32("version");
  if (version != kVersion) {
    throw FormatError("unsupported DNZ1 version " + std::to_string(version), 4);
  }
  const std::uint32_t variant = in.u32("variant");
  if (variant > 1) throw FormatError("unknown variant tag " + std::to_string(variant), 8);
  const std::uint32_t layer_count = in.u32("layer count");
  if (layer_count == 0 || layer_count > kMaxLayers) {
    throw FormatError("implausible layer count " + std::to_string(layer_count), 12);
  }
  const std::uint32_t tag_len = in.u32("class tag length");
  if (tag_len > kMaxTagLength) {
    throw FormatError("implausible class tag length " + std::to_string(tag_len), 16);
  }
  const double peak = in.f64("peak");

  ModelWeights w;
  w.variant = variant == 1 ? Variant::kVstBinned : Variant::kPlain;
  w.peak_trained_for = peak;
  w.class_tag.resize(tag_len);
  if (tag_len > 0) in.read(w.class_tag.data(), tag_len, "class tag");

  w.layers.resize(layer_count);
  for (auto& layer : w.layers) {
    const std::uint32_t in_ch = in.u32("layer input channels");
    const std::uint32_t out_ch = in.u32("layer output channels");
    if (in_ch == 0 || out_ch == 0 || in_ch > kMaxChannels || out_ch > kMaxChannels) {
      throw FormatError("implausible channel counts", in.offset());
    }
    layer = LayerWeights(static_cast<int>(in_ch), static_cast<int>(out_ch));
  }
  for (auto& layer : w.layers) {
    for (double& k : layer.kernels) k = in.f64("kernel");
    for (double& b : layer.biases) b = in.f64("bias");
  }
  if (!in.at_eof()) {
    throw FormatError("trailing data after weight payload in '" + path + "'", in.offset());
  }

  try {
    w.validate();
  } catch (const DomainError& e) {
    throw FormatError("inconsistent weight file '" + path + "': " + e.what(), in.offset());
  }
  return w;
}

}  // namespace pdn
