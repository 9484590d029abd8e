#include "irs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "irs/errors.hpp"

namespace irs {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kCanvas = 640;
constexpr double kCenter = kCanvas / 2.0;
constexpr double kPlotRadius = 240.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Slot k sits at 90 + k*72 degrees, counterclockwise, y up.
std::pair<double, double> vertex(int slot, double radius, double scale) {
  const double angle = (90.0 + 72.0 * slot) * kPi / 180.0;
  return {kCenter + scale * radius * std::cos(angle),
          kCenter - scale * radius * std::sin(angle)};
}

}  // namespace

std::string render_pentagon_svg(const std::vector<PentagonSeries>& series,
                                const std::array<std::string, 5>& axis_labels) {
  if (series.empty()) throw Error("render_pentagon_svg: no series");

  double max_radius = 1.0;
  for (const auto& s : series) max_radius = std::max(max_radius, s.radii.maxCoeff());
  const double rings = std::ceil(max_radius - 1e-9);
  const double scale = kPlotRadius / rings;

  std::ostringstream svg;
  svg.precision(2);
  svg << std::fixed;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Concentric pentagon grid at integer radii.
  for (int ring = 1; ring <= static_cast<int>(rings); ++ring) {
    svg << "  <polygon fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\" points=\"";
    for (int k = 0; k < 5; ++k) {
      const auto [x, y] = vertex(k, ring, scale);
      svg << x << "," << y << (k < 4 ? " " : "");
    }
    svg << "\"/>\n";
  }

  // Axes and labels.
  for (int k = 0; k < 5; ++k) {
    const auto [x, y] = vertex(k, rings, scale);
    svg << "  <line x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << x << "\" y2=\""
        << y << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    const auto [lx, ly] = vertex(k, rings * 1.08, scale);
    svg << "  <text x=\"" << lx << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << xml_escape(axis_labels[static_cast<std::size_t>(k)]) << "</text>\n";
  }

  for (const auto& s : series) {
    svg << "  <polygon fill=\"" << xml_escape(s.color) << "\" fill-opacity=\"0.15\" stroke=\""
        << xml_escape(s.color) << "\" stroke-width=\"2\" points=\"";
    for (int k = 0; k < 5; ++k) {
      const auto [x, y] = vertex(k, s.radii[k], scale);
      svg << x << "," << y << (k < 4 ? " " : "");
    }
    svg << "\"/>\n";
  }

  // Legend, top-left.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = 24.0 + 22.0 * static_cast<double>(i);
    svg << "  <rect x=\"16\" y=\"" << y - 12 << "\" width=\"14\" height=\"14\" fill=\""
        << xml_escape(series[i].color) << "\"/>\n"
        << "  <text x=\"36\" y=\"" << y
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(series[i].label)
        << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace irs
