#include "pdn/image_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace pdn {

namespace {

constexpr double kLumaR = 0.299;
constexpr double kLumaG = 0.587;
constexpr double kLumaB = 0.114;

// --- PGM ---------------------------------------------------------------

class PgmParser {
 public:
  explicit PgmParser(const std::string& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw FormatError("cannot open '" + path + "'");
  }

  std::vector<std::uint8_t> parse(int* height, int* width) {
    expect_magic();
    const long w = read_header_int("width");
    const long h = read_header_int("height");
    const long maxval = read_header_int("maxval");
    if (w <= 0 || h <= 0) throw fail("non-positive dimensions");
    if (maxval != 255) throw fail("unsupported maxval " + std::to_string(maxval) + ", want 255");
    // Exactly one whitespace byte separates the header from the raster.
    const int sep = get();
    if (!std::isspace(sep)) throw fail("missing whitespace before raster");
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h);
    in_.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::size_t>(in_.gcount()) != bytes.size()) {
      throw FormatError("truncated raster in '" + path_ + "'", offset_ + in_.gcount());
    }
    *height = static_cast<int>(h);
    *width = static_cast<int>(w);
    return bytes;
  }

 private:
  FormatError fail(const std::string& msg) const {
    return FormatError("invalid PGM '" + path_ + "': " + msg, offset_);
  }

  int get() {
    int c = in_.get();
    if (c != EOF) ++offset_;
    return c;
  }

  void expect_magic() {
    if (get() != 'P' || get() != '5') throw fail("bad magic, want P5");
  }

  void skip_space_and_comments() {
    while (true) {
      int c = in_.peek();
      if (c == '#') {
        while (c != EOF && c != '\n') c = get();
      } else if (c != EOF && std::isspace(c)) {
        get();
      } else {
        return;
      }
    }
  }

  long read_header_int(const char* field) {
    skip_space_and_comments();
    long value = 0;
    bool any = false;
    while (true) {
      int c = in_.peek();
      if (c == EOF || !std::isdigit(c)) break;
      get();
      value = value * 10 + (c - '0');
      if (value > 1 << 30) throw fail(std::string("absurd ") + field);
      any = true;
    }
    if (!any) throw fail(std::string("missing ") + field);
    return value;
  }

  std::string path_;
  std::ifstream in_;
  std::size_t offset_ = 0;
};

// --- PNG (libpng) ------------------------------------------------------

struct PngCtx {
  FILE* fp = nullptr;
  std::string message;
};

extern "C" void pdn_png_error(png_structp png, png_const_charp msg) {
  auto* ctx = static_cast<PngCtx*>(png_get_error_ptr(png));
  ctx->message = msg ? msg : "libpng error";
  longjmp(png_jmpbuf(png), 1);
}

extern "C" void pdn_png_warn(png_structp, png_const_charp) {}

// Reads an 8-bit gray or RGB PNG into interleaved bytes. Alpha is stripped.
// Returns channels = 1 or 3.
std::vector<std::uint8_t> load_png_bytes(const std::string& path, int* height, int* width,
                                         int* channels) {
  PngCtx ctx;
  ctx.fp = std::fopen(path.c_str(), "rb");
  if (!ctx.fp) throw FormatError("cannot open '" + path + "'");

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, &ctx, pdn_png_error, pdn_png_warn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(ctx.fp);
    throw FormatError("libpng initialization failed for '" + path + "'");
  }

  // Error path: libpng longjmps back here; clean up C resources and rethrow
  // as a FormatError with the file offset where the reader stopped.
  if (setjmp(png_jmpbuf(png))) {
    const long off = std::ftell(ctx.fp);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(ctx.fp);
    throw FormatError("invalid PNG '" + path + "': " + ctx.message,
                      off > 0 ? static_cast<std::size_t>(off) : 0);
  }

  png_init_io(png, ctx.fp);
  png_read_info(png, info);

  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);

  if (depth != 8) png_error(png, "unsupported bit depth (want 8)");
  if (color == PNG_COLOR_TYPE_PALETTE) png_error(png, "palette PNGs are not supported");
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const int ch = static_cast<int>(png_get_channels(png, info));
  if (ch != 1 && ch != 3) png_error(png, "unsupported channel layout");

  static thread_local std::vector<std::uint8_t> buffer;
  buffer.assign(static_cast<std::size_t>(w) * h * ch, 0);
  static thread_local std::vector<png_bytep> rows;
  rows.resize(h);
  for (png_uint_32 y = 0; y < h; ++y) {
    rows[y] = buffer.data() + static_cast<std::size_t>(y) * w * ch;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);

  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(ctx.fp);

  *height = static_cast<int>(h);
  *width = static_cast<int>(w);
  *channels = ch;
  return buffer;
}

bool has_png_magic(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  unsigned char sig[8] = {0};
  in.read(reinterpret_cast<char*>(sig), 8);
  return in.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

}  // namespace

std::vector<std::uint8_t> load_pgm_bytes(const std::string& path, int* height, int* width) {
  PgmParser parser(path);
  return parser.parse(height, width);
}

Image load_grayscale(const std::string& path) {
  int h = 0, w = 0;
  if (has_png_magic(path)) {
    int ch = 0;
    std::vector<std::uint8_t> bytes = load_png_bytes(path, &h, &w, &ch);
    Image img(h, w);
    if (ch == 1) {
      for (std::size_t i = 0; i < img.data.size(); ++i) img.data[i] = bytes[i] / 255.0;
    } else {
      for (std::size_t i = 0; i < img.data.size(); ++i) {
        const double r = bytes[3 * i] / 255.0;
        const double g = bytes[3 * i + 1] / 255.0;
        const double b = bytes[3 * i + 2] / 255.0;
        img.data[i] = kLumaR * r + kLumaG * g + kLumaB * b;
      }
    }
    return img;
  }
  std::vector<std::uint8_t> bytes = load_pgm_bytes(path, &h, &w);
  Image img(h, w);
  for (std::size_t i = 0; i < img.data.size(); ++i) img.data[i] = bytes[i] / 255.0;
  return img;
}

void save_pgm_bytes(const std::vector<std::uint8_t>& bytes, int height, int width,
                    const std::string& path) {
  if (height <= 0 || width <= 0 ||
      bytes.size() != static_cast<std::size_t>(height) * width) {
    throw DomainError("save_pgm_bytes: byte count does not match dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed for '" + path + "'");
}

void save_pgm(const Image& img, const std::string& path) {
  std::vector<std::uint8_t> bytes(img.pixels());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    double v = img.data[i];
    v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    bytes[i] = static_cast<std::uint8_t>(v * 255.0 + 0.5);
  }
  save_pgm_bytes(bytes, img.height, img.width, path);
}

}  // namespace pdn
