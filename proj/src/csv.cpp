#include "debtlab/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace debtlab {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_row(const std::string& path, int line, const std::string& why) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + why);
}

} // namespace

TimeSeries load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    TimeSeries ts;
    {
        const auto slash = path.find_last_of('/');
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        const auto dot = base.rfind('.');
        ts.name = dot == std::string::npos ? base : base.substr(0, dot);
    }

    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (line.empty()) continue;
        if (!saw_header) { saw_header = true; continue; }

        const auto comma = line.find(',');
        if (comma == std::string::npos) bad_row(path, lineno, "expected 'date,value'");
        const std::string date_str = trimmed(line.substr(0, comma));
        const std::string val_str = trimmed(line.substr(comma + 1));

        Period p;
        try {
            p = Period::parse(date_str);
        } catch (const std::exception& e) {
            bad_row(path, lineno, e.what());
        }
        double v;
        if (val_str.empty() || val_str == "NA" || val_str == ".") {
            v = std::nan("");
        } else {
            char* end = nullptr;
            v = std::strtod(val_str.c_str(), &end);
            if (end == val_str.c_str() || *end != '\0')
                bad_row(path, lineno, "bad value '" + val_str + "'");
        }
        ts.dates.push_back(p);
        ts.values.push_back(v);
    }
    if (!saw_header) throw std::runtime_error(path + ": empty file");
    ts.frequency = (!ts.dates.empty() && ts.dates.front().month != 0)
                       ? Frequency::monthly
                       : Frequency::annual;
    ts.validate();
    return ts;
}

void save_csv(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "date,value\n";
    char buf[64];
    for (size_t i = 0; i < series.size(); ++i) {
        if (std::isnan(series.values[i])) {
            out << series.dates[i].label() << ",NA\n";
        } else {
            std::snprintf(buf, sizeof buf, "%.12g", series.values[i]);
            out << series.dates[i].label() << "," << buf << "\n";
        }
    }
}

} // namespace debtlab
