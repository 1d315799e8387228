#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace trigroup {

enum class Figure {
  Fig1Desargues,
  Fig2Pascal,
  Fig3Dual,
  Fig4AxisInfinity,
  Fig5BoxplusZero,
  Fig6Degenerate,
  Fig7ABoxplusA,
};

std::string figure_name(Figure f);
std::optional<Figure> figure_from_name(const std::string& name);
const std::vector<std::string>& figure_names();

struct FigureResult {
  std::string svg;
  bool degraded = false;  // a construction step was undefined; drawn with a warning
  std::string warning;
};

/// Renders a figure as an SVG 1.1 document. Every incidence or identity the
/// figure illustrates is asserted exactly on the rational data first;
/// rounding happens only when coordinates are written out. Identical
/// arguments produce byte-identical documents. `scene` overrides the
/// built-in demo data (scene JSON for figures 1-3, {"frame", "x", "y"} for
/// figures 4-7).
FigureResult emit_figure(Figure fig, const std::optional<nlohmann::json>& scene = std::nullopt);

}  // namespace trigroup
