#pragma once

// Shared helpers for the test suites: tiny image encoders, synthetic image
// generators, and brute-force oracles kept independent of the library's
// computation paths.

#include <png.h>

#include <complex>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "irs/types.hpp"

namespace testutil {

inline std::filesystem::path test_data_dir() { return IRS_TEST_DATA_DIR; }

inline std::filesystem::path cli_path() { return IRS_CLI_PATH; }

// Unique scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& stem) {
    static std::atomic<unsigned> counter{0};
    path = std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline void write_png(const std::filesystem::path& file, const irs::RgbImage& img) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, file.string().c_str(), 0, img.pixels.data(), 0, nullptr))
    throw std::runtime_error("write_png failed: " + std::string(image.message));
}

// Minimal 24-bit uncompressed bottom-up BMP writer.
inline void write_bmp(const std::filesystem::path& file, const irs::RgbImage& img) {
  const std::size_t row_bytes = (static_cast<std::size_t>(img.width) * 3 + 3) & ~std::size_t{3};
  const std::size_t data_size = row_bytes * static_cast<std::size_t>(img.height);
  const std::uint32_t offset = 54;

  std::vector<std::uint8_t> out(offset + data_size, 0);
  auto put_u32 = [&out](std::size_t pos, std::uint32_t v) {
    out[pos] = static_cast<std::uint8_t>(v);
    out[pos + 1] = static_cast<std::uint8_t>(v >> 8);
    out[pos + 2] = static_cast<std::uint8_t>(v >> 16);
    out[pos + 3] = static_cast<std::uint8_t>(v >> 24);
  };
  out[0] = 'B';
  out[1] = 'M';
  put_u32(2, static_cast<std::uint32_t>(out.size()));
  put_u32(10, offset);
  put_u32(14, 40);
  put_u32(18, static_cast<std::uint32_t>(img.width));
  put_u32(22, static_cast<std::uint32_t>(img.height));
  out[26] = 1;
  out[28] = 24;
  put_u32(34, static_cast<std::uint32_t>(data_size));

  for (int y = 0; y < img.height; ++y) {
    std::uint8_t* row = out.data() + offset + row_bytes * static_cast<std::size_t>(img.height - 1 - y);
    for (int x = 0; x < img.width; ++x) {
      const std::uint8_t* px = img.at(x, y);
      row[3 * x + 0] = px[2];
      row[3 * x + 1] = px[1];
      row[3 * x + 2] = px[0];
    }
  }
  std::ofstream f(file, std::ios::binary);
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw std::runtime_error("write_bmp failed");
}

inline irs::RgbImage gray_to_rgb(const irs::GrayImage& img) {
  irs::RgbImage out;
  out.width = static_cast<int>(img.cols());
  out.height = static_cast<int>(img.rows());
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * 3);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const double v = std::clamp(img(y, x), 0.0, 1.0);
      const auto b = static_cast<std::uint8_t>(std::lround(v * 255.0));
      std::uint8_t* px = out.at(x, y);
      px[0] = px[1] = px[2] = b;
    }
  }
  return out;
}

inline irs::GrayImage random_gray(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  irs::GrayImage img(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) img(r, c) = dist(rng);
  return img;
}

inline irs::RgbImage random_rgb(int width, int height, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  irs::RgbImage img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height * 3);
  for (auto& b : img.pixels) b = static_cast<std::uint8_t>(dist(rng));
  return img;
}

// ---------------------------------------------------------------------------
// Brute-force oracles. Plain loops on purpose.

// O(M^2 N^2) double-sum DFT magnitude.
inline irs::FloatField naive_dft_magnitude(const irs::GrayImage& img) {
  const auto m = img.rows(), n = img.cols();
  irs::FloatField mag(m, n);
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (Eigen::Index u = 0; u < m; ++u) {
    for (Eigen::Index v = 0; v < n; ++v) {
      std::complex<double> acc = 0;
      for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
          const double phase = two_pi * (static_cast<double>(u * r) / static_cast<double>(m) +
                                         static_cast<double>(v * c) / static_cast<double>(n));
          acc += img(r, c) * std::complex<double>(std::cos(phase), -std::sin(phase));
        }
      mag(u, v) = std::abs(acc);
    }
  }
  return mag;
}

// Symmetric co-occurrence counting by direct pair enumeration.
inline Eigen::MatrixXd naive_glcm(const irs::Plane<int>& levels, int n_levels,
                                  const std::vector<std::pair<int, int>>& offsets_dx_dy) {
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(n_levels, n_levels);
  double total = 0;
  for (const auto& [dx, dy] : offsets_dx_dy) {
    for (Eigen::Index r = 0; r < levels.rows(); ++r) {
      for (Eigen::Index c = 0; c < levels.cols(); ++c) {
        const Eigen::Index rr = r + dy, cc = c + dx;
        if (rr < 0 || rr >= levels.rows() || cc < 0 || cc >= levels.cols()) continue;
        counts(levels(r, c), levels(rr, cc)) += 1;
        counts(levels(rr, cc), levels(r, c)) += 1;
        total += 2;
      }
    }
  }
  return counts / total;
}

// Dense 2-D correlation with replicate borders (oracle for the separable
// Gaussian and the Laplacian stencil).
inline irs::FloatField naive_correlate2d(const irs::GrayImage& img,
                                         const Eigen::MatrixXd& kernel) {
  const Eigen::Index kr = kernel.rows() / 2, kc = kernel.cols() / 2;
  irs::FloatField out(img.rows(), img.cols());
  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
      double acc = 0;
      for (Eigen::Index i = 0; i < kernel.rows(); ++i)
        for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
          Eigen::Index rr = std::clamp<Eigen::Index>(r + i - kr, 0, img.rows() - 1);
          Eigen::Index cc = std::clamp<Eigen::Index>(c + j - kc, 0, img.cols() - 1);
          acc += kernel(i, j) * img(rr, cc);
        }
      out(r, c) = acc;
    }
  }
  return out;
}

// Independent bilinear resampler (pixel-center alignment, clamped edges).
inline irs::GrayImage naive_resize_bilinear(const irs::GrayImage& img, Eigen::Index out_rows,
                                            Eigen::Index out_cols) {
  irs::GrayImage out(out_rows, out_cols);
  for (Eigen::Index r = 0; r < out_rows; ++r) {
    for (Eigen::Index c = 0; c < out_cols; ++c) {
      double sy = (static_cast<double>(r) + 0.5) * static_cast<double>(img.rows()) /
                      static_cast<double>(out_rows) -
                  0.5;
      double sx = (static_cast<double>(c) + 0.5) * static_cast<double>(img.cols()) /
                      static_cast<double>(out_cols) -
                  0.5;
      sy = std::clamp(sy, 0.0, static_cast<double>(img.rows() - 1));
      sx = std::clamp(sx, 0.0, static_cast<double>(img.cols() - 1));
      const auto y0 = static_cast<Eigen::Index>(std::floor(sy));
      const auto x0 = static_cast<Eigen::Index>(std::floor(sx));
      const Eigen::Index y1 = std::min(y0 + 1, img.rows() - 1);
      const Eigen::Index x1 = std::min(x0 + 1, img.cols() - 1);
      const double fy = sy - static_cast<double>(y0), fx = sx - static_cast<double>(x0);
      out(r, c) = img(y0, x0) * (1 - fy) * (1 - fx) + img(y0, x1) * (1 - fy) * fx +
                  img(y1, x0) * fy * (1 - fx) + img(y1, x1) * fy * fx;
    }
  }
  return out;
}

}  // namespace testutil
