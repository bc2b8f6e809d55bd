#pragma once

#include <optional>
#include <set>
#include <string>

#include "tiltwall/chern.hpp"

namespace tiltwall {

enum class PlotLayer { Walls, QWall, NuZero, Vertical, Candidates };

struct PlotSpec {
  ChernCharacter cls;
  Rat beta_min, beta_max;
  Rat alpha_max;
  std::set<PlotLayer> layers;
  std::string output_path;  ///< empty: caller decides

  /// Window around the largest expected wall; default layers exclude Candidates.
  static PlotSpec defaults(const ChernCharacter& v);
  void validate() const;
};

/// Parses "walls,q_wall,nu_zero,vertical,candidates".
std::set<PlotLayer> parse_layers(const std::string& text);

/// SVG 1.1 document. Coordinates are the only decimals produced.
std::string render_svg(const PlotSpec& spec);

/// Exact rational upper bound for sqrt(x), x >= 0, on a 1/64 grid.
Rat sqrt_upper(const Rat& x);

}  // namespace tiltwall
