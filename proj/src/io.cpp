#include "chaosbath/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "chaosbath/version.hpp"

namespace chaosbath {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hash_hex(const std::string& data) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::string meta_header(const std::string& config_hash) {
    return std::string("# ") + kToolName + " " + kVersion + " config=" + config_hash;
}

void write_csv(const std::filesystem::path& path, const std::string& config_hash,
               const std::vector<CsvColumn>& columns, const std::string& extra_header) {
    if (columns.empty()) throw std::invalid_argument("write_csv: no columns");
    const std::size_t n = columns.front().data->size();
    for (const auto& c : columns)
        if (c.data->size() != n) throw std::invalid_argument("write_csv: column length mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
    out << meta_header(config_hash) << "\n";
    if (!extra_header.empty()) out << "# " << extra_header << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c].name << (c + 1 < columns.size() ? "," : "\n");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << format_g17((*columns[c].data)[i]) << (c + 1 < columns.size() ? "," : "\n");
    if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

void write_timeseries_csv(const std::filesystem::path& path, const std::string& config_hash,
                          const TimeSeries& series) {
    write_csv(path, config_hash,
              {{"t", &series.times}, {"mean", &series.values}, {"stderr", &series.stderrs}});
}

void SvgPlot::add_series(const std::string& name, const std::vector<double>& xs,
                         const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("SvgPlot: length mismatch");
    series_.push_back({name, xs, ys});
}

void SvgPlot::write(const std::filesystem::path& path, const std::string& config_hash) const {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    const double w = 800, h = 560, ml = 80, mr = 30, mt = 50, mb = 60;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& s : series_)
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            x0 = std::min(x0, s.xs[i]);
            x1 = std::max(x1, s.xs[i]);
            y0 = std::min(y0, s.ys[i]);
            y1 = std::max(y1, s.ys[i]);
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - y0) / (y1 - y0) * (h - mt - mb); };
    auto num = [](double v) {
        char b[32];
        std::snprintf(b, sizeof(b), "%.6g", v);
        return std::string(b);
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("SvgPlot: cannot open " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<!-- " << meta_header(config_hash).substr(2) << " -->\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title_ << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x0 + (x1 - x0) * i / 5, yv = y0 + (y1 - y0) * i / 5;
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << h - mb << "\" x2=\"" << px(xv)
            << "\" y2=\"" << h - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << h - mb + 20
            << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
            << py(yv) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\">" << num(yv) << "</text>\n";
    }
    out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 15
        << "\" text-anchor=\"middle\">" << xlabel_ << "</text>\n";
    out << "<text x=\"18\" y=\"" << (mt + h - mb) / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (mt + h - mb) / 2 << ")\">"
        << ylabel_ << "</text>\n";
    // series
    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        out << "<polyline fill=\"none\" stroke=\"" << kColors[si % 5]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            out << num(px(s.xs[i])) << "," << num(py(s.ys[i])) << " ";
        }
        out << "\"/>\n";
        const double ly = mt + 18.0 * static_cast<double>(si);
        out << "<line x1=\"" << w - mr - 150 << "\" y1=\"" << ly << "\" x2=\"" << w - mr - 120
            << "\" y2=\"" << ly << "\" stroke=\"" << kColors[si % 5]
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << w - mr - 114 << "\" y=\"" << ly + 4 << "\">" << s.name
            << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("SvgPlot: write failed for " + path.string());
}

}  // namespace chaosbath
