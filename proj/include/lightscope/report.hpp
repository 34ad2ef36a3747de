#pragma once

// CSV and SVG writers for pattern output.
// CSV: comma separated, '.' decimal, %.16e (17 significant digits), LF endings.

#include <lightscope/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace lightscope {

inline std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

struct CsvColumn {
    std::string header;
    std::vector<double> values;
};

inline std::string csv_text(const std::vector<CsvColumn>& columns) {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += (c ? "," : "") + columns[c].header;
    }
    out += '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) {
                out += ',';
            }
            out += format_sci(columns[c].values.at(r));
        }
        out += '\n';
    }
    return out;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw ConfigError("write failed for '" + path + "'");
    }
}

inline void write_csv(const std::string& path, const std::vector<CsvColumn>& columns) {
    write_text(path, csv_text(columns));
}

/// Minimal polyline plot of columns[1..] against columns[0].
inline std::string svg_plot(const std::vector<CsvColumn>& columns, const std::string& title) {
    static const char* colours[] = {"#2ca02c", "#d62728", "#1f77b4", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2"};
    const double width = 800.0;
    const double height = 400.0;
    const double margin = 40.0;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\">\n";
    out += "<text x=\"40\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" + title +
           "</text>\n";
    if (columns.size() < 2 || columns.front().values.size() < 2) {
        return out + "</svg>\n";
    }
    const auto& xs = columns.front().values;
    const double x0 = xs.front();
    const double x1 = xs.back();
    double y1 = 0.0;
    for (std::size_t c = 1; c < columns.size(); ++c) {
        for (double v : columns[c].values) {
            y1 = std::max(y1, v);
        }
    }
    if (y1 <= 0.0) {
        y1 = 1.0;
    }
    out += "<rect x=\"40\" y=\"40\" width=\"720\" height=\"320\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t c = 1; c < columns.size(); ++c) {
        out += "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"";
        out += colours[(c - 1) % 7];
        out += "\" points=\"";
        char buf[64];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double px = margin + (xs[i] - x0) / (x1 - x0) * (width - 2 * margin);
            const double py =
                height - margin - columns[c].values[i] / y1 * (height - 2 * margin);
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
            out += buf;
        }
        out += "\"/>\n";
        std::snprintf(buf, sizeof buf, "%.0f", 60.0 + 18.0 * double(c));
        out += "<text x=\"620\" y=\"" + std::string(buf) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + colours[(c - 1) % 7] +
               "\">" + columns[c].header + "</text>\n";
    }
    return out + "</svg>\n";
}

}  // namespace lightscope
