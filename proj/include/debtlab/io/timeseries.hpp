#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace debtlab {

enum class Frequency { annual, monthly };

struct Period {
    int year = 0;
    int month = 0; // 0 for annual periods, 1..12 for monthly

    static Period parse(const std::string& label);
    std::string label() const;
    bool operator==(const Period&) const = default;
    bool operator<(const Period& o) const {
        return year != o.year ? year < o.year : month < o.month;
    }
};

// A dated, single-frequency observation vector. Missing observations are
// stored as NaN and reported by has_gaps().
struct TimeSeries {
    std::string name;
    Frequency frequency = Frequency::annual;
    std::vector<Period> dates;
    std::vector<double> values;

    size_t size() const { return values.size(); }
    bool has_gaps() const {
        for (double v : values)
            if (std::isnan(v)) return true;
        return false;
    }
    void validate() const; // strictly increasing dates, consistent frequency

    // Value lookup by period; NaN when absent.
    double at(const Period& p) const;
};

// Annual steps repeated across the twelve months of each year. The sign
// of a year-over-year change only shows up in the month it is stamped on,
// up to twelve months after the underlying move.
TimeSeries forward_fill_annual_to_monthly(const TimeSeries& annual);

} // namespace debtlab
