#include "debtlab/io/timeseries.hpp"

#include <stdexcept>

namespace debtlab {

Period Period::parse(const std::string& label) {
    Period p;
    if (label.size() == 4) {
        p.year = std::stoi(label);
        p.month = 0;
        return p;
    }
    if (label.size() == 7 && label[4] == '-') {
        p.year = std::stoi(label.substr(0, 4));
        p.month = std::stoi(label.substr(5, 2));
        if (p.month < 1 || p.month > 12)
            throw std::invalid_argument("bad month in date '" + label + "'");
        return p;
    }
    throw std::invalid_argument("bad date '" + label + "' (want YYYY or YYYY-MM)");
}

std::string Period::label() const {
    if (month == 0) return std::to_string(year);
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

void TimeSeries::validate() const {
    if (dates.size() != values.size())
        throw std::invalid_argument("timeseries '" + name + "': date/value size mismatch");
    for (size_t i = 0; i < dates.size(); ++i) {
        const bool monthly = dates[i].month != 0;
        if (monthly != (frequency == Frequency::monthly))
            throw std::invalid_argument("timeseries '" + name + "': mixed frequencies");
        if (i > 0 && !(dates[i - 1] < dates[i]))
            throw std::invalid_argument("timeseries '" + name + "': dates not increasing");
    }
}

double TimeSeries::at(const Period& p) const {
    for (size_t i = 0; i < dates.size(); ++i)
        if (dates[i] == p) return values[i];
    return std::nan("");
}

TimeSeries forward_fill_annual_to_monthly(const TimeSeries& annual) {
    if (annual.frequency != Frequency::annual)
        throw std::invalid_argument("forward_fill: input must be annual");
    TimeSeries out;
    out.name = annual.name + "_monthly";
    out.frequency = Frequency::monthly;
    for (size_t i = 0; i < annual.size(); ++i) {
        for (int m = 1; m <= 12; ++m) {
            out.dates.push_back({annual.dates[i].year, m});
            out.values.push_back(annual.values[i]);
        }
    }
    return out;
}

} // namespace debtlab
