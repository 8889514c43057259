#pragma once

// CSV/SVG/JSON output helpers. All numeric formatting is deterministic
// (printf %.17g), so identical runs produce byte-identical files.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "chaosbath/timeseries.hpp"

namespace chaosbath {

std::string format_g17(double v);

std::uint64_t fnv1a64(const std::string& data);
std::string hash_hex(const std::string& data);

// One "# ..." header line carrying tool version and config hash.
std::string meta_header(const std::string& config_hash);

struct CsvColumn {
    std::string name;
    const std::vector<double>* data;
};

void write_csv(const std::filesystem::path& path, const std::string& config_hash,
               const std::vector<CsvColumn>& columns, const std::string& extra_header = "");

void write_timeseries_csv(const std::filesystem::path& path, const std::string& config_hash,
                          const TimeSeries& series);

// Minimal polyline SVG plot: axes, ticks, legend, a few series.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add_series(const std::string& name, const std::vector<double>& xs,
                    const std::vector<double>& ys);
    void write(const std::filesystem::path& path, const std::string& config_hash) const;

  private:
    struct Series {
        std::string name;
        std::vector<double> xs, ys;
    };
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
};

}  // namespace chaosbath
