#ifndef PDN_IMAGE_IO_HPP
#define PDN_IMAGE_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdn/image.hpp"

namespace pdn {

/// Loads an 8-bit PGM (P5) or 8-bit PNG (grayscale or RGB) as a [0,1]
/// grayscale image. RGB is reduced to luma with BT.601 full-range weights
/// (0.299, 0.587, 0.114). The format is sniffed from the file magic.
/// Unsupported bit depths and corrupt headers raise FormatError with the
/// failing byte offset.
Image load_grayscale(const std::string& path);

/// Writes a [0,1] image as binary PGM (P5, maxval 255). Values are clamped
/// to [0,1] and rounded to the nearest byte.
void save_pgm(const Image& img, const std::string& path);

/// Writes raw bytes as binary PGM (P5, maxval 255).
void save_pgm_bytes(const std::vector<std::uint8_t>& bytes, int height, int width,
                    const std::string& path);

/// Loads a PGM as raw byte values (no [0,1] scaling).
std::vector<std::uint8_t> load_pgm_bytes(const std::string& path, int* height, int* width);

}  // namespace pdn

#endif  // PDN_IMAGE_IO_HPP
