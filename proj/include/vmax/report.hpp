#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmax/fit.hpp"

namespace vmax {

inline constexpr int kReportSchema = 1;

struct Check {
    std::string name;
    bool passed = false;
    double value = 0, threshold = 0;
    std::string detail;
};

// Named table of doubles, written as one CSV per series.
struct Series {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct RunReport {
    int schema = kReportSchema;
    std::string kind;
    std::vector<Check> checks;
    std::map<std::string, RateFit> fits;
    std::map<std::string, double> scalars;
    std::vector<Series> series;
    std::vector<std::string> manifest;  // files written next to the report

    // Every check name appears once; a repeated name throws.
    void add(Check c);
    void add(const std::string& name, bool passed, double value, double threshold, std::string detail = {});
    bool passed() const;
    const Check* find(const std::string& name) const;
    const Series* find_series(const std::string& name) const;
};

nlohmann::json to_json(const RunReport& r);
// Rejects schema versions other than kReportSchema.
RunReport report_from_json(const nlohmann::json& j);

void write_series_csv(const Series& s, const std::string& file);
Series read_series_csv(const std::string& file, const std::string& name);

// Writes report.json (json) or checks.csv plus one CSV per series (csv) into dir; returns the files.
std::vector<std::string> emit(const RunReport& r, const std::string& dir, const std::string& format);
RunReport read_report(const std::string& dir);

}  // namespace vmax
