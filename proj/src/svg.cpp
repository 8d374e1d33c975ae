#include <algorithm>
#include <iomanip>
#include <sstream>

#include "prc/error.hpp"
#include "prc/report.hpp"
#include "prc/smop.hpp"

namespace prc {
namespace {

struct SeriesStyle {
  const char* stroke;
  const char* fill;
};

constexpr SeriesStyle kPalette[] = {
    {"#1f77b4", "#1f77b4"}, {"#d62728", "#d62728"}, {"#2ca02c", "#2ca02c"},
    {"#ff7f0e", "#ff7f0e"}, {"#9467bd", "#9467bd"}, {"#8c564b", "#8c564b"},
};

std::string Escape(std::string_view text) {
  std::string escaped;
  for (const char c : text) {
    switch (c) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '"': escaped += "&quot;"; break;
      case '\'': escaped += "&apos;"; break;
      default: escaped += c;
    }
  }
  return escaped;
}

class Canvas {
 public:
  Canvas(double cx, double cy, double radius) : cx_(cx), cy_(cy), radius_(radius) {}

  // Radar coordinates have y up; SVG has y down.
  Point2 Map(const Point2& p) const { return {cx_ + p.x * radius_, cy_ - p.y * radius_}; }

  std::string Points(const std::vector<Point2>& vertices) const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto q = Map(vertices[i]);
      if (i) out << ' ';
      out << q.x << ',' << q.y;
    }
    return out.str();
  }

 private:
  double cx_;
  double cy_;
  double radius_;
};

}  // namespace

RadarChartSpec MakeRadarChartSpec(const ComparisonReport& report, Polarity polarity) {
  const auto& result = report.Group(polarity);
  RadarChartSpec spec;
  spec.title = std::string(polarity == Polarity::kPositive ? "Positive" : "Negative") + " PRC attributes";
  for (const auto& axis : result.group.axes) spec.axes.push_back(report.Label(axis));
  for (std::size_t p = 0; p < result.profiles.size(); ++p) {
    const auto& style = kPalette[p % std::size(kPalette)];
    spec.series.push_back({result.profiles[p].product_id, result.profiles[p].values, style.stroke, style.fill});
  }
  return spec;
}

std::string RenderRadarSvg(const RadarChartSpec& spec) {
  const std::size_t n = spec.axes.size();
  if (n < 3) throw Error(ErrorCode::kDegenerateProfile, "radar chart needs at least 3 axes, got " + std::to_string(n));
  for (const auto& series : spec.series) {
    if (series.values.size() != n)
      throw Error(ErrorCode::kInvalidProfile, "series '" + series.product_id + "' has " +
                                                  std::to_string(series.values.size()) + " values for " +
                                                  std::to_string(n) + " axes");
  }

  constexpr double kMargin = 120.0;
  constexpr double kTitleHeight = 40.0;
  const double cx = spec.width / 2.0;
  const double cy = kTitleHeight + (spec.height - kTitleHeight) / 2.0;
  const double radius = std::max(10.0, std::min(spec.width, spec.height - kTitleHeight) / 2.0 - kMargin / 2.0);
  const Canvas canvas(cx, cy, radius);
  const std::vector<double> unit(n, 1.0);
  const auto tips = RadarVertices(unit);

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\" font-family=\"sans-serif\">\n";
  out << "  <title>" << Escape(spec.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"#ffffff\"/>\n";
  out << "  <text class=\"title\" x=\"" << cx << "\" y=\"24.00\" text-anchor=\"middle\" font-size=\"18\">"
      << Escape(spec.title) << "</text>\n";

  out << "  <g class=\"rings\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int ring = 1; ring <= spec.grid_rings; ++ring) {
    const std::vector<double> level(n, static_cast<double>(ring) / spec.grid_rings);
    out << "    <polygon class=\"ring\" points=\"" << canvas.Points(RadarVertices(level)) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto tip = canvas.Map(tips[i]);
    out << "    <line class=\"axis\" x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << tip.x << "\" y2=\"" << tip.y
        << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"axis-labels\" font-size=\"12\" fill=\"#333333\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = canvas.Map({tips[i].x * 1.12, tips[i].y * 1.12});
    const char* anchor = tips[i].x > 0.1 ? "start" : (tips[i].x < -0.1 ? "end" : "middle");
    out << "    <text class=\"axis-label\" x=\"" << label.x << "\" y=\"" << label.y + 4.0 << "\" text-anchor=\""
        << anchor << "\">" << Escape(spec.axes[i]) << "</text>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"series\">\n";
  for (const auto& series : spec.series) {
    out << "    <polygon class=\"series-polygon\" data-series=\"" << Escape(series.product_id) << "\" points=\""
        << canvas.Points(RadarVertices(series.values)) << "\" fill=\"" << series.fill
        << "\" fill-opacity=\"0.25\" stroke=\"" << series.stroke << "\" stroke-width=\"2\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"legend\" font-size=\"12\">\n";
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const double y = spec.height - 20.0 * static_cast<double>(spec.series.size() - s);
    out << "    <rect x=\"16.00\" y=\"" << y - 10.0 << "\" width=\"12.00\" height=\"12.00\" fill=\""
        << spec.series[s].fill << "\" stroke=\"" << spec.series[s].stroke << "\"/>\n";
    out << "    <text class=\"legend-label\" x=\"34.00\" y=\"" << y << "\">" << Escape(spec.series[s].product_id)
        << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace prc
