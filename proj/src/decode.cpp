#include "irs/decode.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "irs/errors.hpp"

// jpeglib.h needs stdio types declared first.
#include <jpeglib.h>

namespace irs {
namespace {

bool looks_like_png(std::span<const std::uint8_t> b) {
  static const std::uint8_t magic[8] = {0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A};
  return b.size() >= 8 && std::memcmp(b.data(), magic, 8) == 0;
}

bool looks_like_jpeg(std::span<const std::uint8_t> b) {
  return b.size() >= 3 && b[0] == 0xFF && b[1] == 0xD8 && b[2] == 0xFF;
}

bool looks_like_bmp(std::span<const std::uint8_t> b) {
  return b.size() >= 2 && b[0] == 'B' && b[1] == 'M';
}

RgbImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;

  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
    throw CorruptFile(std::string("png: ") + image.message);

  image.format = PNG_FORMAT_RGB;
  RgbImage out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.pixels.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.pixels.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw CorruptFile("png: " + msg);
  }
  return out;
}

struct JpegErrorContext {
  jpeg_error_mgr mgr;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* ctx = reinterpret_cast<JpegErrorContext*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, ctx->message);
  std::longjmp(ctx->jump, 1);
}

RgbImage decode_jpeg(std::span<const std::uint8_t> bytes) {
  jpeg_decompress_struct cinfo;
  JpegErrorContext err;
  cinfo.err = jpeg_std_error(&err.mgr);
  err.mgr.error_exit = jpeg_error_exit;

  RgbImage out;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw CorruptFile(std::string("jpeg: ") + err.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * 3);
  const std::size_t stride = static_cast<std::size_t>(out.width) * 3;
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() + stride * cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

std::uint32_t read_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::int32_t read_i32le(const std::uint8_t* p) {
  return static_cast<std::int32_t>(read_u32le(p));
}

std::uint16_t read_u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

// Uncompressed 8-bit palette, 24-bit and 32-bit BMPs, top-down or bottom-up.
RgbImage decode_bmp(std::span<const std::uint8_t> b) {
  if (b.size() < 54) throw CorruptFile("bmp: truncated header");
  const std::uint32_t pixel_offset = read_u32le(b.data() + 10);
  const std::uint32_t dib_size = read_u32le(b.data() + 14);
  if (dib_size < 40) throw UnsupportedFormat("bmp: pre-BITMAPINFOHEADER file");

  const std::int32_t width = read_i32le(b.data() + 18);
  const std::int32_t height_raw = read_i32le(b.data() + 22);
  const std::uint16_t bpp = read_u16le(b.data() + 28);
  const std::uint32_t compression = read_u32le(b.data() + 30);
  if (width <= 0 || height_raw == 0) throw CorruptFile("bmp: bad dimensions");
  if (compression != 0) throw UnsupportedFormat("bmp: compressed BMP not supported");
  if (bpp != 8 && bpp != 24 && bpp != 32)
    throw UnsupportedFormat("bmp: only 8/24/32 bpp supported");

  const bool top_down = height_raw < 0;
  const std::int32_t height = top_down ? -height_raw : height_raw;

  const std::uint8_t* palette = nullptr;
  std::uint32_t palette_entries = 0;
  if (bpp == 8) {
    palette_entries = read_u32le(b.data() + 46);
    if (palette_entries == 0) palette_entries = 256;
    palette = b.data() + 14 + dib_size;
    if (14 + dib_size + 4ull * palette_entries > b.size())
      throw CorruptFile("bmp: truncated palette");
  }

  const std::size_t row_bytes = (static_cast<std::size_t>(width) * bpp / 8 + 3) & ~std::size_t{3};
  if (pixel_offset + row_bytes * static_cast<std::size_t>(height) > b.size())
    throw CorruptFile("bmp: truncated pixel data");

  RgbImage out;
  out.width = width;
  out.height = height;
  out.pixels.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::int32_t y = 0; y < height; ++y) {
    const std::int32_t src_y = top_down ? y : height - 1 - y;
    const std::uint8_t* row = b.data() + pixel_offset + row_bytes * static_cast<std::size_t>(src_y);
    for (std::int32_t x = 0; x < width; ++x) {
      std::uint8_t* dst = out.at(x, y);
      if (bpp == 8) {
        const std::uint8_t idx = row[x];
        if (idx >= palette_entries) throw CorruptFile("bmp: palette index out of range");
        const std::uint8_t* entry = palette + 4 * idx;  // stored B,G,R,reserved
        dst[0] = entry[2];
        dst[1] = entry[1];
        dst[2] = entry[0];
      } else {
        const std::uint8_t* px = row + x * (bpp / 8);
        dst[0] = px[2];
        dst[1] = px[1];
        dst[2] = px[0];
      }
    }
  }
  return out;
}

}  // namespace

RgbImage decode_image(std::span<const std::uint8_t> bytes) {
  RgbImage img;
  if (looks_like_png(bytes))
    img = decode_png(bytes);
  else if (looks_like_jpeg(bytes))
    img = decode_jpeg(bytes);
  else if (looks_like_bmp(bytes))
    img = decode_bmp(bytes);
  else
    throw UnsupportedFormat("decode_image: not a PNG, JPEG or BMP stream");

  if (img.width < 1 || img.height < 1) throw CorruptFile("decode_image: empty image");
  return img;
}

RgbImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_image: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("load_image: read failure on " + path.string());
  return decode_image(bytes);
}

}  // namespace irs
