#include "cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "stsc/sim.hpp"

namespace stsc::cli {

namespace {

struct PlotRow {
    std::string scheme;
    std::string fading;
    double snr_db;
    std::uint64_t trials;
    double ber;
    double ci_low;
    double ci_high;
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": not a number: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(where + ": not a number: '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(where + ": not an integer: '" + s + "'");
    return v;
}

std::vector<PlotRow> parse_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open");
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty file");
    if (line == sweep_csv_header() + "\r") line.pop_back();
    if (line != sweep_csv_header())
        throw std::invalid_argument(path + ": row 1: unexpected header");

    std::vector<PlotRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path + ": row " + std::to_string(lineno);
        const auto fields = split_csv_line(line);
        if (fields.size() != 11) throw std::invalid_argument(where + ": expected 11 fields");
        PlotRow row;
        row.scheme = fields[0];
        row.fading = fields[1];
        if (row.scheme.empty() || row.fading.empty())
            throw std::invalid_argument(where + ": empty scheme or fading field");
        row.snr_db = parse_double(fields[2], where);
        row.trials = parse_u64(fields[3], where);
        row.ber = parse_double(fields[5], where);
        row.ci_low = parse_double(fields[8], where);
        row.ci_high = parse_double(fields[9], where);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument(path + ": no data rows");
    return rows;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                          "#e377c2", "#17becf"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

void render_ber_svg(const std::vector<std::string>& csv_paths, const PlotOptions& options) {
    if (csv_paths.empty()) throw std::invalid_argument("plot: need at least one CSV file");
    if (options.fragment_bits < 1) throw std::invalid_argument("plot: fragment_bits must be >= 1");

    std::vector<PlotRow> rows;
    for (const auto& path : csv_paths) {
        auto part = parse_sweep_csv(path);
        rows.insert(rows.end(), part.begin(), part.end());
    }

    // Group into curves in first-appearance order.
    std::vector<std::string> curve_keys;
    std::map<std::string, std::vector<const PlotRow*>> curves;
    for (const auto& r : rows) {
        const std::string key = r.scheme + " (" + r.fading + ")";
        if (!curves.contains(key)) curve_keys.push_back(key);
        curves[key].push_back(&r);
    }
    for (auto& [key, pts] : curves)
        std::stable_sort(pts.begin(), pts.end(),
                         [](const PlotRow* a, const PlotRow* b) { return a->snr_db < b->snr_db; });

    double x_min = rows.front().snr_db, x_max = rows.front().snr_db;
    double floor_val = 1.0;
    for (const auto& r : rows) {
        x_min = std::min(x_min, r.snr_db);
        x_max = std::max(x_max, r.snr_db);
        floor_val = std::min(
            floor_val, 1.0 / (static_cast<double>(r.trials) * options.fragment_bits));
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    const int bottom_decade = static_cast<int>(std::floor(std::log10(floor_val)));
    const double y_min = std::pow(10.0, bottom_decade);
    const double y_max = 1.0;

    const double width = 800, height = 560;
    const double px0 = 80, py0 = 30;
    const double pw = width - px0 - 40, ph = height - py0 - 70;
    const auto x_of = [&](double snr) { return px0 + (snr - x_min) / (x_max - x_min) * pw; };
    const auto y_of = [&](double ber) {
        const double v = std::clamp(ber, y_min, y_max);
        return py0 + (std::log10(y_max) - std::log10(v)) /
                         (std::log10(y_max) - std::log10(y_min)) * ph;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<!-- stsc plot; sources:";
    for (const auto& p : csv_paths) svg << " " << p;
    svg << "; fragment_bits=" << options.fragment_bits << " -->\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Decade grid and y labels.
    for (int d = 0; d >= bottom_decade; --d) {
        const double y = y_of(std::pow(10.0, d));
        svg << "<line x1=\"" << px0 << "\" y1=\"" << y << "\" x2=\"" << px0 + pw << "\" y2=\""
            << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << px0 - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" << d
            << "</text>\n";
    }

    // X ticks at the distinct SNR values.
    std::vector<double> ticks;
    for (const auto& r : rows)
        if (std::find(ticks.begin(), ticks.end(), r.snr_db) == ticks.end())
            ticks.push_back(r.snr_db);
    std::sort(ticks.begin(), ticks.end());
    const std::size_t stride = ticks.size() > 16 ? ticks.size() / 16 + 1 : 1;
    for (std::size_t i = 0; i < ticks.size(); i += stride) {
        const double x = x_of(ticks[i]);
        svg << "<line x1=\"" << x << "\" y1=\"" << py0 << "\" x2=\"" << x << "\" y2=\""
            << py0 + ph << "\" stroke=\"#eeeeee\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << py0 + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << fmt(ticks[i]) << "</text>\n";
    }

    // Frame and axis labels.
    svg << "<rect x=\"" << px0 << "\" y=\"" << py0 << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << px0 + pw / 2 << "\" y=\"" << height - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">SNR (dB)"
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << py0 + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "transform=\"rotate(-90 18 " << py0 + ph / 2 << ")\">BER</text>\n";

    // Curves with CI whiskers.
    std::size_t color_idx = 0;
    for (const auto& key : curve_keys) {
        const char* color = kPalette[color_idx % (sizeof kPalette / sizeof kPalette[0])];
        ++color_idx;
        const auto& pts = curves[key];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto* p : pts) svg << x_of(p->snr_db) << "," << y_of(p->ber) << " ";
        svg << "\"/>\n";
        for (const auto* p : pts) {
            const double x = x_of(p->snr_db);
            svg << "<line x1=\"" << x << "\" y1=\"" << y_of(std::max(p->ci_low, y_min))
                << "\" x2=\"" << x << "\" y2=\"" << y_of(std::max(p->ci_high, y_min))
                << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
            svg << "<circle cx=\"" << x << "\" cy=\"" << y_of(p->ber) << "\" r=\"3\" fill=\""
                << color << "\"/>\n";
        }
    }

    // Legend, top right.
    const double lx = px0 + pw - 230, ly = py0 + 12;
    svg << "<rect x=\"" << lx - 10 << "\" y=\"" << ly - 12 << "\" width=\"240\" height=\""
        << 20 * curve_keys.size() + 8 << "\" fill=\"white\" stroke=\"#999999\"/>\n";
    color_idx = 0;
    for (std::size_t i = 0; i < curve_keys.size(); ++i) {
        const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
        const double y = ly + 20 * static_cast<double>(i);
        svg << "<line x1=\"" << lx << "\" y1=\"" << y << "\" x2=\"" << lx + 26 << "\" y2=\"" << y
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 34 << "\" y=\"" << y + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << curve_keys[i] << "</text>\n";
    }

    svg << "</svg>\n";

    std::ofstream out(options.out);
    if (!out) throw std::runtime_error("plot: cannot write " + options.out);
    out << svg.str();
    if (!out) throw std::runtime_error("plot: write failed for " + options.out);
}

}  // namespace stsc::cli
