// output.hpp: CSV and SVG emission for observable time series

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qrm/config.hpp"
#include "qrm/errors.hpp"
#include "qrm/series.hpp"

namespace qrm {

inline constexpr std::string_view kCsvHeader = "tau,s_z,atomic_excitation,photon,n_jc,n_ajc";

namespace detail {

// 15 significant digits, "-0" folded into "0" so output is stable.
inline std::string format_value(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError(path.string(), "write failed");
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace detail

struct CsvOptions {
    // Prefix the file with "# {config json}" so the run can be reproduced.
    bool echo_config{false};
};

inline constexpr std::string_view kConfigCommentPrefix = "# ";

inline std::string format_csv(const TimeSeriesBundle& b, CsvOptions opts = {}) {
    std::string out;
    if (opts.echo_config) {
        out += kConfigCommentPrefix;
        out += to_json(b.config).dump();
        out += '\n';
    }
    out += kCsvHeader;
    out += '\n';
    for (std::size_t i = 0; i < b.size(); ++i) {
        out += detail::format_value(b.tau[i]);
        for (double v : {b.s_z[i], b.atomic_excitation[i], b.photon[i], b.n_jc[i], b.n_ajc[i]}) {
            out += ',';
            out += detail::format_value(v);
        }
        out += '\n';
    }
    return out;
}

inline void emit_csv(const TimeSeriesBundle& b, const std::filesystem::path& path, CsvOptions opts = {}) {
    detail::write_file(path, format_csv(b, opts));
}

// Parsed form of a CSV written by emit_csv.
struct CsvTable {
    std::optional<ExperimentConfig> config;
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return columns[i];
        throw std::invalid_argument("CSV has no column '" + std::string(name) + "'");
    }
};

inline CsvTable parse_csv(std::istream& in, const std::string& origin = "<stream>") {
    CsvTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!have_header && line.rfind(kConfigCommentPrefix, 0) == 0) {
            t.config = config_from_json_text(line.substr(kConfigCommentPrefix.size()));
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (!have_header) {
            t.header = fields;
            t.columns.assign(fields.size(), {});
            have_header = true;
            continue;
        }
        if (fields.size() != t.header.size()) throw IoError(origin, "ragged CSV row");
        for (std::size_t i = 0; i < fields.size(); ++i) t.columns[i].push_back(std::stod(fields[i]));
    }
    if (!have_header) throw IoError(origin, "CSV has no header");
    return t;
}

inline CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    return parse_csv(in, path.string());
}

namespace detail {

struct Axis {
    double lo;
    double hi;
    std::vector<double> ticks;
};

// Round-number ticks (1, 2, 5 x 10^k) covering [lo, hi].
inline Axis nice_axis(double lo, double hi, int target_ticks = 6) {
    if (!(hi - lo > 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)}))) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double raw = (hi - lo) / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (raw <= step) break;
    }
    Axis ax{std::floor(lo / step) * step, std::ceil(hi / step) * step, {}};
    for (double v = ax.lo; v <= ax.hi + 0.5 * step; v += step) ax.ticks.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return ax;
}

inline std::string fixed(double v, int digits = 2) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace detail

inline std::string plot_title(const TimeSeriesBundle& b, std::string_view column) {
    const auto& c = b.config;
    std::ostringstream os;
    os << column << " vs tau | frame=" << to_string(c.frame) << " n=" << c.n << " xi=" << c.xi << " eps=" << c.epsilon
       << " g=" << c.g;
    return os.str();
}

// Standalone SVG: one polyline of `column` against tau with labelled axes.
inline std::string format_svg(const TimeSeriesBundle& b, std::string_view column) {
    if (!is_observable_column(column)) throw std::invalid_argument("unknown column '" + std::string(column) + "'");
    const auto y = b.column(column);
    if (b.size() < 2) throw std::invalid_argument("format_svg: need at least two samples");

    constexpr double W = 800, H = 500, left = 80, right = 30, top = 50, bottom = 60;
    const double pw = W - left - right, ph = H - top - bottom;

    const auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
    const auto xa = detail::nice_axis(b.tau.front(), b.tau.back());
    const auto ya = detail::nice_axis(*ymin_it, *ymax_it);
    auto px = [&](double v) { return left + (v - xa.lo) / (xa.hi - xa.lo) * pw; };
    auto py = [&](double v) { return top + (ya.hi - v) / (ya.hi - ya.lo) * ph; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << detail::xml_escape(plot_title(b, column)) << "</text>\n";

    s << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    for (double t : xa.ticks)
        s << "<line x1=\"" << detail::fixed(px(t)) << "\" y1=\"" << top << "\" x2=\"" << detail::fixed(px(t))
          << "\" y2=\"" << top + ph << "\"/>\n";
    for (double t : ya.ticks)
        s << "<line x1=\"" << left << "\" y1=\"" << detail::fixed(py(t)) << "\" x2=\"" << left + pw << "\" y2=\""
          << detail::fixed(py(t)) << "\"/>\n";
    s << "</g>\n";

    s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (double t : xa.ticks)
        s << "<text x=\"" << detail::fixed(px(t)) << "\" y=\"" << top + ph + 18
          << "\" text-anchor=\"middle\">" << detail::tick_label(t) << "</text>\n";
    for (double t : ya.ticks)
        s << "<text x=\"" << left - 8 << "\" y=\"" << detail::fixed(py(t) + 4) << "\" text-anchor=\"end\">"
          << detail::tick_label(t) << "</text>\n";
    s << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">tau = g t</text>\n";
    s << "<text x=\"20\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << top + ph / 2 << ")\">" << detail::xml_escape(column) << "</text>\n";
    s << "</g>\n";

    s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s << ' ';
        s << detail::fixed(px(b.tau[i]), 3) << ',' << detail::fixed(py(y[i]), 3);
    }
    s << "\"/>\n</svg>\n";
    return s.str();
}

inline void emit_svg(const TimeSeriesBundle& b, std::string_view column, const std::filesystem::path& path) {
    detail::write_file(path, format_svg(b, column));
}

} // namespace qrm
