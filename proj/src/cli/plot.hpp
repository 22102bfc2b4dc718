#pragma once

#include <string>
#include <vector>

namespace stsc::cli {

struct PlotOptions {
    std::string out = "ber.svg";
    int fragment_bits = 4;  // the CSV schema carries no fragment size
};

// Render BER-vs-SNR curves (one per scheme/fading pair, log-scale y with CI
// whiskers) from sweep CSV files into an SVG file.
void render_ber_svg(const std::vector<std::string>& csv_paths, const PlotOptions& options);

}  // namespace stsc::cli
