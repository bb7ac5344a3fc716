#ifndef PDN_IMAGE_HPP
#define PDN_IMAGE_HPP

#include <vector>

#include "pdn/errors.hpp"

namespace pdn {

/// Single-channel image, row-major doubles. Values are unitless: [0,1] for
/// normalized data, photoelectrons for peak-scaled intensity fields,
/// [-0.5, 0.5] for network inputs.
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Image() = default;
  Image(int h, int w, double fill = 0.0)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {}

  double& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixels() const { return data.size(); }
};

/// An intensity field is an image in photoelectron units. The alias keeps
/// signatures readable where the distinction matters.
using IntensityField = Image;

/// Maximum latent intensity in photoelectrons; the severity knob for shot
/// noise (lower peak, noisier image).
class PeakValue {
 public:
  explicit PeakValue(double photoelectrons);
  double value() const { return photoelectrons_; }

 private:
  double photoelectrons_;
};

/// Multiplies a [0,1] image by the peak, yielding photoelectron units.
/// Values outside [0,1] raise DomainError.
IntensityField scale_to_peak(const Image& img, PeakValue peak);

/// Shifts [0,1] data by -1/2 into the network's input range.
Image normalize_shift(const Image& img);

/// Inverse of normalize_shift (adds 1/2).
Image undo_shift(const Image& img);

/// Pads by mirror reflection that repeats the edge pixel:
/// [a,b,c] with margin 1 becomes [a,a,b,c,c]. Requires
/// margin <= min(height, width).
Image pad_symmetric(const Image& img, int margin);

/// Central (H-2m)x(W-2m) region. Requires 2*margin < min(height, width).
Image crop_center(const Image& img, int margin);

void check_same_dims(const Image& a, const Image& b, const char* where);

}  // namespace pdn

#endif  // PDN_IMAGE_HPP
