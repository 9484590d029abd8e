#pragma once

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "irs/errors.hpp"
#include "irs/types.hpp"

namespace irs {

// Every analysis runs at this resolution; see standardize().
inline constexpr int kStandardSize = 256;

// BT.601 luma, rescaled to [0,1].
inline GrayImage to_grayscale(const RgbImage& img) {
  GrayImage out(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::uint8_t* p = img.at(x, y);
      out(y, x) = (0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]) / 255.0;
    }
  }
  return out;
}

// Bilinear resampling with pixel-center alignment and edge clamping.
template <typename Derived>
Plane<typename Derived::Scalar> resize_bilinear(const Eigen::ArrayBase<Derived>& img,
                                                Eigen::Index out_rows,
                                                Eigen::Index out_cols) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index in_rows = img.rows(), in_cols = img.cols();
  const auto& src = img.derived();

  struct Tap {
    Eigen::Index lo, hi;
    Scalar frac;
  };
  auto make_taps = [](Eigen::Index in_n, Eigen::Index out_n) {
    std::vector<Tap> taps(static_cast<std::size_t>(out_n));
    const double scale = static_cast<double>(in_n) / static_cast<double>(out_n);
    for (Eigen::Index i = 0; i < out_n; ++i) {
      double s = (static_cast<double>(i) + 0.5) * scale - 0.5;
      s = std::clamp(s, 0.0, static_cast<double>(in_n - 1));
      const auto lo = static_cast<Eigen::Index>(std::floor(s));
      taps[static_cast<std::size_t>(i)] = {lo, std::min(lo + 1, in_n - 1),
                                           static_cast<Scalar>(s - static_cast<double>(lo))};
    }
    return taps;
  };
  const auto row_taps = make_taps(in_rows, out_rows);
  const auto col_taps = make_taps(in_cols, out_cols);

  Plane<Scalar> out(out_rows, out_cols);
  for (Eigen::Index c = 0; c < out_cols; ++c) {
    const Tap& tc = col_taps[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < out_rows; ++r) {
      const Tap& tr = row_taps[static_cast<std::size_t>(r)];
      const Scalar top = src(tr.lo, tc.lo) * (1 - tc.frac) + src(tr.lo, tc.hi) * tc.frac;
      const Scalar bot = src(tr.hi, tc.lo) * (1 - tc.frac) + src(tr.hi, tc.hi) * tc.frac;
      out(r, c) = top * (1 - tr.frac) + bot * tr.frac;
    }
  }
  return out;
}

// Fixed working resolution: resize so the shorter side is kStandardSize,
// then center-crop. Idempotent on kStandardSize x kStandardSize inputs.
inline GrayImage standardize(const GrayImage& img) {
  const Eigen::Index h = img.rows(), w = img.cols();
  if (std::min(h, w) < 16) throw ImageTooSmall("standardize: min dimension < 16");
  if (h == kStandardSize && w == kStandardSize) return img;

  const double scale = static_cast<double>(kStandardSize) / static_cast<double>(std::min(h, w));
  Eigen::Index nh = kStandardSize, nw = kStandardSize;
  if (h <= w)
    nw = std::max<Eigen::Index>(kStandardSize, std::llround(static_cast<double>(w) * scale));
  else
    nh = std::max<Eigen::Index>(kStandardSize, std::llround(static_cast<double>(h) * scale));

  GrayImage resized = resize_bilinear(img, nh, nw);
  const Eigen::Index r0 = (nh - kStandardSize) / 2;
  const Eigen::Index c0 = (nw - kStandardSize) / 2;
  return resized.block(r0, c0, kStandardSize, kStandardSize);
}

namespace detail {

// 1-D correlation along each row with a centered kernel, replicate border.
template <typename Scalar>
Plane<Scalar> correlate_rows(const Plane<Scalar>& img, const std::vector<Scalar>& kernel) {
  const Eigen::Index radius = static_cast<Eigen::Index>(kernel.size() / 2);
  const Eigen::Index rows = img.rows(), cols = img.cols();
  Plane<Scalar> out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      Scalar acc = 0;
      for (Eigen::Index k = -radius; k <= radius; ++k) {
        const Eigen::Index cc = std::clamp<Eigen::Index>(c + k, 0, cols - 1);
        acc += kernel[static_cast<std::size_t>(k + radius)] * img(r, cc);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

template <typename Scalar>
Plane<Scalar> correlate_cols(const Plane<Scalar>& img, const std::vector<Scalar>& kernel) {
  const Eigen::Index radius = static_cast<Eigen::Index>(kernel.size() / 2);
  const Eigen::Index rows = img.rows(), cols = img.cols();
  Plane<Scalar> out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      Scalar acc = 0;
      for (Eigen::Index k = -radius; k <= radius; ++k) {
        const Eigen::Index rr = std::clamp<Eigen::Index>(r + k, 0, rows - 1);
        acc += kernel[static_cast<std::size_t>(k + radius)] * img(rr, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> gaussian_kernel(double sigma) {
  const auto radius = static_cast<Eigen::Index>(std::ceil(3.0 * sigma));
  std::vector<Scalar> kernel(static_cast<std::size_t>(2 * radius + 1));
  Scalar sum = 0;
  for (Eigen::Index k = -radius; k <= radius; ++k) {
    const auto w = static_cast<Scalar>(
        std::exp(-static_cast<double>(k) * static_cast<double>(k) / (2.0 * sigma * sigma)));
    kernel[static_cast<std::size_t>(k + radius)] = w;
    sum += w;
  }
  for (auto& w : kernel) w /= sum;
  return kernel;
}

}  // namespace detail

// Separable Gaussian, kernel radius ceil(3*sigma), normalized to sum 1,
// replicate border.
template <typename Derived>
Plane<typename Derived::Scalar> gaussian_blur(const Eigen::ArrayBase<Derived>& img, double sigma) {
  using Scalar = typename Derived::Scalar;
  if (!(sigma > 0)) throw InvalidSigma("gaussian_blur: sigma must be > 0");
  const auto kernel = detail::gaussian_kernel<Scalar>(sigma);
  Plane<Scalar> tmp = detail::correlate_rows<Scalar>(img.derived(), kernel);
  return detail::correlate_cols<Scalar>(tmp, kernel);
}

// 3x3 cross Laplacian [[0,1,0],[1,-4,1],[0,1,0]], replicate border.
template <typename Derived>
Plane<typename Derived::Scalar> laplacian_filter(const Eigen::ArrayBase<Derived>& img) {
  using Scalar = typename Derived::Scalar;
  const auto& src = img.derived();
  const Eigen::Index rows = src.rows(), cols = src.cols();
  Plane<Scalar> out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Eigen::Index cl = std::max<Eigen::Index>(c - 1, 0);
    const Eigen::Index cr = std::min<Eigen::Index>(c + 1, cols - 1);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::Index ru = std::max<Eigen::Index>(r - 1, 0);
      const Eigen::Index rd = std::min<Eigen::Index>(r + 1, rows - 1);
      out(r, c) = src(ru, c) + src(rd, c) + src(r, cl) + src(r, cr) - 4 * src(r, c);
    }
  }
  return out;
}

// Magnitude of the unnormalized forward 2-D DFT:
// |F(u,v)| = |sum_{r,c} img(r,c) exp(-2*pi*i*(u*r/M + v*c/N))|.
inline FloatField dft2_magnitude(const GrayImage& img) {
  const Eigen::Index m = img.rows(), n = img.cols();
  Eigen::FFT<double> fft;

  Eigen::MatrixXcd stage(m, n);
  Eigen::VectorXcd in(m), out(m);
  for (Eigen::Index c = 0; c < n; ++c) {
    in = img.col(c).matrix().cast<std::complex<double>>();
    fft.fwd(out, in);
    stage.col(c) = out;
  }

  FloatField mag(m, n);
  Eigen::VectorXcd rin(n), rout(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    rin = stage.row(r).transpose();
    fft.fwd(rout, rin);
    mag.row(r) = rout.array().abs().transpose();
  }
  return mag;
}

// Counterclockwise quarter turns; exact sample remapping, no resampling.
template <typename Derived>
Plane<typename Derived::Scalar> rotate90(const Eigen::ArrayBase<Derived>& img, int quarter_turns) {
  using Scalar = typename Derived::Scalar;
  Plane<Scalar> out = img.derived();
  int k = ((quarter_turns % 4) + 4) % 4;
  while (k-- > 0) out = Plane<Scalar>(out.transpose().colwise().reverse());
  return out;
}

}  // namespace irs
