#include "vmax/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "vmax/errors.hpp"

namespace vmax {

namespace fs = std::filesystem;
using nlohmann::json;

void RunReport::add(Check c) {
    if (find(c.name)) throw ConfigError("duplicate check " + c.name);
    checks.push_back(std::move(c));
}

void RunReport::add(const std::string& name, bool passed, double value, double threshold, std::string detail) {
    add(Check{name, passed, value, threshold, std::move(detail)});
}

bool RunReport::passed() const {
    for (auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const Check* RunReport::find(const std::string& name) const {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const Series* RunReport::find_series(const std::string& name) const {
    for (auto& s : series)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {
// JSON has no inf/nan; keep them as strings so the report stays parseable
json num(double x) {
    if (std::isfinite(x)) return x;
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}
double unnum(const json& j) {
    if (j.is_number()) return j.get<double>();
    std::string s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    return s == "inf" ? INFINITY : -INFINITY;
}
}  // namespace

json to_json(const RunReport& r) {
    json j;
    j["schema"] = r.schema;
    j["kind"] = r.kind;
    j["passed"] = r.passed();
    j["checks"] = json::array();
    for (auto& c : r.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"passed", c.passed}, {"value", num(c.value)}, {"threshold", num(c.threshold)}, {"detail", c.detail}});
    j["fits"] = json::object();
    for (auto& [k, f] : r.fits)
        j["fits"][k] = {{"C", num(f.C)}, {"p", num(f.p)}, {"p_lo", num(f.p_lo)}, {"p_hi", num(f.p_hi)}, {"residual", num(f.residual)}};
    j["scalars"] = json::object();
    for (auto& [k, v] : r.scalars) j["scalars"][k] = num(v);
    j["series"] = json::array();
    for (auto& s : r.series) {
        json rows = json::array();
        for (auto& row : s.rows) {
            json jr = json::array();
            for (double x : row) jr.push_back(num(x));
            rows.push_back(jr);
        }
        j["series"].push_back({{"name", s.name}, {"columns", s.columns}, {"rows", rows}});
    }
    j["manifest"] = r.manifest;
    return j;
}

RunReport report_from_json(const json& j) {
    if (!j.contains("schema") || !j["schema"].is_number_integer())
        throw ConfigError("report: missing schema version");
    int v = j["schema"].get<int>();
    if (v != kReportSchema) throw ConfigError("report: unsupported schema version " + std::to_string(v));
    RunReport r;
    r.kind = j.value("kind", "");
    for (auto& c : j.at("checks"))
        r.add(Check{c.at("name"), c.at("passed"), unnum(c.at("value")), unnum(c.at("threshold")), c.value("detail", "")});
    for (auto& [k, f] : j.at("fits").items())
        r.fits[k] = RateFit{unnum(f.at("C")), unnum(f.at("p")), unnum(f.at("p_lo")), unnum(f.at("p_hi")), unnum(f.at("residual"))};
    for (auto& [k, v2] : j.at("scalars").items()) r.scalars[k] = unnum(v2);
    for (auto& s : j.at("series")) {
        Series S{s.at("name"), s.at("columns").get<std::vector<std::string>>(), {}};
        for (auto& row : s.at("rows")) {
            std::vector<double> rr;
            for (auto& x : row) rr.push_back(unnum(x));
            S.rows.push_back(rr);
        }
        r.series.push_back(S);
    }
    r.manifest = j.value("manifest", std::vector<std::string>{});
    return r;
}

void write_series_csv(const Series& s, const std::string& file) {
    std::ofstream os(file);
    if (!os) throw ConfigError("cannot write " + file);
    os << std::setprecision(17);
    for (std::size_t c = 0; c < s.columns.size(); ++c) os << (c ? "," : "") << s.columns[c];
    os << '\n';
    for (auto& row : s.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << '\n';
    }
}

Series read_series_csv(const std::string& file, const std::string& name) {
    std::ifstream is(file);
    if (!is) throw ConfigError("cannot read " + file);
    Series s;
    s.name = name;
    std::string line;
    if (!std::getline(is, line)) return s;
    std::stringstream hs(line);
    for (std::string col; std::getline(hs, col, ',');) s.columns.push_back(col);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<double> row;
        for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
        if (row.size() != s.columns.size()) throw ConfigError(file + ": row width does not match the header");
        s.rows.push_back(row);
    }
    return s;
}

std::vector<std::string> emit(const RunReport& r, const std::string& dir, const std::string& format) {
    fs::create_directories(dir);
    std::vector<std::string> out;
    if (format == "json") {
        std::string f = (fs::path(dir) / "report.json").string();
        std::ofstream os(f);
        if (!os) throw ConfigError("cannot write " + f);
        os << std::setw(2) << to_json(r) << '\n';
        out.push_back(f);
    } else if (format == "csv") {
        std::string f = (fs::path(dir) / "checks.csv").string();
        std::ofstream os(f);
        if (!os) throw ConfigError("cannot write " + f);
        os << "name,passed,value,threshold\n" << std::setprecision(17);
        for (auto& c : r.checks) os << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.value << ',' << c.threshold << '\n';
        out.push_back(f);
        std::string ff = (fs::path(dir) / "fits.csv").string();
        std::ofstream fo(ff);
        fo << "name,C,p,p_lo,p_hi,residual\n" << std::setprecision(17);
        for (auto& [k, fit] : r.fits) fo << k << ',' << fit.C << ',' << fit.p << ',' << fit.p_lo << ',' << fit.p_hi << ',' << fit.residual << '\n';
        out.push_back(ff);
        for (auto& s : r.series) {
            std::string sf = (fs::path(dir) / ("series_" + s.name + ".csv")).string();
            write_series_csv(s, sf);
            out.push_back(sf);
        }
    } else {
        throw ConfigError("unknown report format " + format);
    }
    return out;
}

RunReport read_report(const std::string& dir) {
    std::string f = (fs::path(dir) / "report.json").string();
    std::ifstream is(f);
    if (!is) throw ConfigError("no report in " + dir);
    json j;
    is >> j;
    return report_from_json(j);
}

}  // namespace vmax
