#include "pdn/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pdn {

PeakValue::PeakValue(double photoelectrons) : photoelectrons_(photoelectrons) {
  if (!(photoelectrons > 0.0) || !std::isfinite(photoelectrons)) {
    throw DomainError("peak value must be a positive finite number, got " +
                      std::to_string(photoelectrons));
  }
}

void check_same_dims(const Image& a, const Image& b, const char* where) {
  if (a.height != b.height || a.width != b.width) {
    throw DomainError(std::string(where) + ": dimension mismatch " +
                      std::to_string(a.height) + "x" + std::to_string(a.width) + " vs " +
                      std::to_string(b.height) + "x" + std::to_string(b.width));
  }
}

IntensityField scale_to_peak(const Image& img, PeakValue peak) {
  Image out(img.height, img.width);
  const double p = peak.value();
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = img.data[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("scale_to_peak: value " + std::to_string(v) +
                        " outside [0,1] at pixel " + std::to_string(i));
    }
    out.data[i] = v * p;
  }
  return out;
}

Image normalize_shift(const Image& img) {
  Image out(img.height, img.width);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] - 0.5;
  return out;
}

Image undo_shift(const Image& img) {
  Image out(img.height, img.width);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] + 0.5;
  return out;
}

namespace {

// Index into [0, size) for a coordinate in [-margin, size + margin), mirrored
// about the array ends with the edge pixel included.
inline int mirror_index(int i, int size) {
  if (i < 0) return -1 - i;
  if (i >= size) return 2 * size - 1 - i;
  return i;
}

}  // namespace

Image pad_symmetric(const Image& img, int margin) {
  if (margin < 0) throw DomainError("pad_symmetric: negative margin");
  if (margin > std::min(img.height, img.width)) {
    throw DomainError("pad_symmetric: margin " + std::to_string(margin) +
                      " exceeds image dimension " + std::to_string(img.height) + "x" +
                      std::to_string(img.width));
  }
  Image out(img.height + 2 * margin, img.width + 2 * margin);
  for (int y = 0; y < out.height; ++y) {
    const int sy = mirror_index(y - margin, img.height);
    for (int x = 0; x < out.width; ++x) {
      out.at(y, x) = img.at(sy, mirror_index(x - margin, img.width));
    }
  }
  return out;
}

Image crop_center(const Image& img, int margin) {
  if (margin < 0) throw DomainError("crop_center: negative margin");
  if (2 * margin >= std::min(img.height, img.width)) {
    throw DomainError("crop_center: margin " + std::to_string(margin) +
                      " over-crops image " + std::to_string(img.height) + "x" +
                      std::to_string(img.width));
  }
  Image out(img.height - 2 * margin, img.width - 2 * margin);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      out.at(y, x) = img.at(y + margin, x + margin);
    }
  }
  return out;
}

}  // namespace pdn
