#ifndef PDN_TENSOR_HPP
#define PDN_TENSOR_HPP

#include <vector>

#include "pdn/image.hpp"

namespace pdn {

/// Channel-major activation block: data[(c*H + y)*W + x]. Channels are
/// contiguous, so a prefix of channels is itself a valid tensor view.
struct Tensor3 {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Tensor3() = default;
  Tensor3(int c, int h, int w, double fill = 0.0)
      : channels(c), height(h), width(w),
        data(static_cast<std::size_t>(c) * h * w, fill) {}

  double& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }

  std::size_t plane() const { return static_cast<std::size_t>(height) * width; }

  Image channel(int c) const {
    Image img(height, width);
    const double* src = data.data() + c * plane();
    std::copy(src, src + plane(), img.data.begin());
    return img;
  }

  static Tensor3 from_image(const Image& img) {
    Tensor3 t(1, img.height, img.width);
    t.data = img.data;
    return t;
  }
};

}  // namespace pdn

#endif  // PDN_TENSOR_HPP
