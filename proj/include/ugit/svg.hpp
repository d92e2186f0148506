#pragma once

#include <string>
#include <vector>

#include "ugit/stability.hpp"

namespace ugit {

// Weight diagram of a fixed-point table: axes, the cone rays of slope
// (+-1, grade) from the origin and from (+-n_param, -grade*n_param), and one
// dot per table row grouped by fixed point. The infinitesimal part of a
// weight is drawn as a fixed 0.15-unit offset and noted in the legend; every
// dot carries its exact weight pair as a tooltip. Pixel coordinates are the
// only inexact numbers and are formatted to two decimals, so output is
// byte-deterministic. Throws Error("EmptyTable") for an empty table.
std::string render_svg(const std::vector<WeightTableRow>& table, long long grade,
                       long long n_param);

// render_svg written to a file (Error("IoError") on failure).
void emit_svg(const std::vector<WeightTableRow>& table, long long grade, long long n_param,
              const std::string& path);

} // namespace ugit
