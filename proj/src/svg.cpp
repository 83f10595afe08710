#include "quadrange/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace quadrange {

namespace {

constexpr double kCanvas = 600.0;

struct Frame {
  double min_re, max_re, min_im, max_im, unit;

  double x(Complex z) const { return (z.real() - min_re) * unit; }
  double y(Complex z) const { return (max_im - z.imag()) * unit; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

Frame fit(std::span<const Complex> pts) {
  double lo_re = pts.front().real(), hi_re = lo_re;
  double lo_im = pts.front().imag(), hi_im = lo_im;
  for (const auto& z : pts) {
    lo_re = std::min(lo_re, z.real());
    hi_re = std::max(hi_re, z.real());
    lo_im = std::min(lo_im, z.imag());
    hi_im = std::max(hi_im, z.imag());
  }
  double span = std::max({hi_re - lo_re, hi_im - lo_im, 1e-9});
  const double margin = 0.1 * span;
  span += 2.0 * margin;
  const double cx = 0.5 * (lo_re + hi_re);
  const double cy = 0.5 * (lo_im + hi_im);
  return {cx - 0.5 * span, cx + 0.5 * span, cy - 0.5 * span, cy + 0.5 * span, kCanvas / span};
}

}  // namespace

std::string render_svg(const RegionDescriptor& region, const GQOParams& params,
                       std::span<const Complex> samples) {
  const auto outline = boundary_points(region, region.is_disk() ? 256 : 2);
  std::vector<Complex> extent(outline);
  extent.push_back(params.a);
  extent.push_back(params.b);
  extent.insert(extent.end(), samples.begin(), samples.end());
  const Frame f = fit(extent);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas) << "\" height=\""
     << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << " " << num(kCanvas) << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes through the origin when it is in view.
  const Complex origin(0.0, 0.0);
  if (f.min_re <= 0.0 && 0.0 <= f.max_re) {
    os << "  <line class=\"axis\" x1=\"" << num(f.x(origin)) << "\" y1=\"0\" x2=\"" << num(f.x(origin))
       << "\" y2=\"" << num(kCanvas) << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  }
  if (f.min_im <= 0.0 && 0.0 <= f.max_im) {
    os << "  <line class=\"axis\" x1=\"0\" y1=\"" << num(f.y(origin)) << "\" x2=\"" << num(kCanvas)
       << "\" y2=\"" << num(f.y(origin)) << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  }

  const bool closed = region.is_closed();
  os << "  <path class=\"region\" d=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) {
    os << (i ? " L " : "M ") << num(f.x(outline[i])) << " " << num(f.y(outline[i]));
  }
  if (region.is_disk()) os << " Z";
  os << "\" fill=\"" << (region.is_disk() ? "#cfe0f5" : "none") << "\" stroke=\"#1f4e8c\" stroke-width=\"2\"";
  if (!closed) os << " stroke-dasharray=\"6 4\"";
  os << "/>\n";

  for (const auto& z : samples) {
    os << "  <circle class=\"sample\" cx=\"" << num(f.x(z)) << "\" cy=\"" << num(f.y(z))
       << "\" r=\"1\" fill=\"#555\" fill-opacity=\"0.4\"/>\n";
  }
  if (region.is_disk()) {
    for (const auto& z : {region.ellipse().focus1, region.ellipse().focus2}) {
      os << "  <circle class=\"focus\" cx=\"" << num(f.x(z)) << "\" cy=\"" << num(f.y(z))
         << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    }
  }
  const std::pair<const char*, Complex> marks[] = {{"a", params.a}, {"b", params.b}};
  for (const auto& [label, z] : marks) {
    os << "  <rect class=\"marker\" x=\"" << num(f.x(z) - 4) << "\" y=\"" << num(f.y(z) - 4)
       << "\" width=\"8\" height=\"8\" fill=\"#27ae60\"/>\n"
       << "  <text x=\"" << num(f.x(z) + 6) << "\" y=\"" << num(f.y(z) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quadrange
