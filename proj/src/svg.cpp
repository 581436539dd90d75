#include "barbell/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "barbell/types.hpp"

namespace barbell {

namespace {

// Curve style order: black, red, green, blue, orange, brown.
const char* kPalette[] = {"#000000", "#cc0000", "#009900",
                          "#0044cc", "#ee7700", "#885522"};
const char* kDashes[] = {"",          "9,4",       "2,3",
                         "9,4,2,4",   "9,4,2,4,2,4", "12,4,4,4"};
constexpr int kStyleCount = 6;

std::string fixed2(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, 2);
  return std::string(buffer, result.ptr);
}

std::string tick_label(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 6);
  return std::string(buffer, result.ptr);
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double scaled = raw / magnitude;
  double factor = 10.0;
  if (scaled <= 1.0) factor = 1.0;
  else if (scaled <= 2.0) factor = 2.0;
  else if (scaled <= 2.5) factor = 2.5;
  else if (scaled <= 5.0) factor = 5.0;
  return factor * magnitude;
}

}  // namespace

void emit_svg(const std::vector<SvgCurve>& curves, const SvgOptions& options,
              const std::filesystem::path& path) {
  double x_max = 0.0;
  for (const auto& curve : curves)
    for (const double x : curve.x) x_max = std::max(x_max, x);
  for (const double x : options.vlines) x_max = std::max(x_max, x);
  if (x_max <= 0.0) x_max = 1.0;

  const double ml = 64, mr = 18, mt = options.title.empty() ? 18 : 36, mb = 48;
  const double pw = options.width - ml - mr;
  const double ph = options.height - mt - mb;
  const double y_span = options.y_max - options.y_min;

  const auto sx = [&](double x) { return ml + x / x_max * pw; };
  const auto sy = [&](double y) {
    return mt + (1.0 - (y - options.y_min) / y_span) * ph;
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError,
                "cannot open " + path.string() + " for writing");
  }

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << " " << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  if (!options.title.empty()) {
    out << "<text x=\"" << fixed2(ml + pw / 2) << "\" y=\"20\" "
        << "text-anchor=\"middle\" font-size=\"14\">" << options.title
        << "</text>\n";
  }

  // frame
  out << "<rect x=\"" << fixed2(ml) << "\" y=\"" << fixed2(mt) << "\" width=\""
      << fixed2(pw) << "\" height=\"" << fixed2(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double x_step = nice_step(x_max);
  for (double x = 0.0; x <= x_max * (1.0 + 1e-12); x += x_step) {
    const double px = sx(x);
    out << "<line x1=\"" << fixed2(px) << "\" y1=\"" << fixed2(mt + ph)
        << "\" x2=\"" << fixed2(px) << "\" y2=\"" << fixed2(mt + ph + 5)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed2(px) << "\" y=\"" << fixed2(mt + ph + 18)
        << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
  }
  const double y_step = nice_step(y_span);
  for (double y = options.y_min; y <= options.y_max + 1e-12; y += y_step) {
    const double py = sy(y);
    out << "<line x1=\"" << fixed2(ml - 5) << "\" y1=\"" << fixed2(py)
        << "\" x2=\"" << fixed2(ml) << "\" y2=\"" << fixed2(py)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed2(ml - 8) << "\" y=\"" << fixed2(py + 4)
        << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
  }

  out << "<text x=\"" << fixed2(ml + pw / 2) << "\" y=\""
      << fixed2(mt + ph + 38) << "\" text-anchor=\"middle\">"
      << options.x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << fixed2(mt + ph / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed2(mt + ph / 2) << ")\">" << options.y_label << "</text>\n";

  for (const double x : options.vlines) {
    out << "<line x1=\"" << fixed2(sx(x)) << "\" y1=\"" << fixed2(mt)
        << "\" x2=\"" << fixed2(sx(x)) << "\" y2=\"" << fixed2(mt + ph)
        << "\" stroke=\"black\" stroke-dasharray=\"6,5\"/>\n";
  }

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto& curve = curves[c];
    const std::string color =
        curve.color.empty() ? kPalette[c % kStyleCount] : curve.color;
    const std::string dash =
        curve.color.empty() && curve.dash.empty() ? kDashes[c % kStyleCount]
                                                  : curve.dash;
    if (curve.x.size() == 1) {
      out << "<circle cx=\"" << fixed2(sx(curve.x[0])) << "\" cy=\""
          << fixed2(sy(curve.y[0])) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
      continue;
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
      if (i) out << ' ';
      out << fixed2(sx(curve.x[i])) << ',' << fixed2(sy(curve.y[i]));
    }
    out << "\"/>\n";
  }

  // legend, top right of the plot box
  double ly = mt + 14;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (curves[c].label.empty()) continue;
    const std::string color =
        curves[c].color.empty() ? kPalette[c % kStyleCount] : curves[c].color;
    const double lx = ml + pw - 150;
    out << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly - 4)
        << "\" x2=\"" << fixed2(lx + 26) << "\" y2=\"" << fixed2(ly - 4)
        << "\" stroke=\"" << color << "\"/>\n";
    out << "<text x=\"" << fixed2(lx + 32) << "\" y=\"" << fixed2(ly) << "\">"
        << curves[c].label << "</text>\n";
    ly += 16;
  }

  out << "</g>\n</svg>\n";
  if (!out) {
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
  }
}

}  // namespace barbell
