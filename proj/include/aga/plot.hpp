#pragma once

#include <filesystem>
#include <span>
#include <string>

namespace aga {

// Minimal standalone SVG line chart: one polyline over labeled, ticked axes.
// Output is deterministic for identical inputs.
void write_line_svg(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    std::span<const double> xs, std::span<const double> ys);

}  // namespace aga
