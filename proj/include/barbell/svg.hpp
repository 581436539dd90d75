#ifndef BARBELL_SVG_HPP
#define BARBELL_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace barbell {

struct SvgCurve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  // optional style overrides; defaults cycle through the built-in palette
  std::string color;
  std::string dash;
};

struct SvgOptions {
  int width = 760;
  int height = 500;
  std::string title;
  std::string x_label = "time";
  std::string y_label = "probability";
  std::vector<double> vlines;  // dashed vertical markers, data coordinates
  double y_min = 0.0;
  double y_max = 1.0;
};

/// Writes a standalone SVG line plot: axes with ticks, one polyline per
/// curve (a marker for single-point curves), a legend, and optional dashed
/// vertical lines. Output is byte-deterministic for identical inputs.
void emit_svg(const std::vector<SvgCurve>& curves, const SvgOptions& options,
              const std::filesystem::path& path);

}  // namespace barbell

#endif  // BARBELL_SVG_HPP
