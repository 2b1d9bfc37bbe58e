#pragma once

#include "debtlab/io/timeseries.hpp"

#include <map>
#include <string>
#include <vector>

namespace debtlab {

struct DerivedInfo {
    std::vector<std::string> parents;
    std::string formula;
};

struct SeriesCatalog {
    std::string vintage;
    std::map<std::string, TimeSeries> series;
    std::map<std::string, DerivedInfo> derived; // id -> provenance

    bool has(const std::string& id) const { return series.count(id) != 0; }
    const TimeSeries& get(const std::string& id) const;
    void add(const std::string& id, TimeSeries ts);
    void add_derived(const std::string& id, TimeSeries ts, DerivedInfo info);
};

// Loads every *.csv in the directory (file stem = series id) plus an
// optional VINTAGE file holding the snapshot label.
SeriesCatalog load_catalog(const std::string& dir);

// Extends the catalog with the standard derived indicators: year-over-year
// CPI inflation and nominal growth, the repression bias, the r-g spread,
// debt-ratio changes, exchange-rate changes (level and percent) and the
// domestic holding share. Pure in the parents: re-deriving reproduces the
// same values.
void derive_series(SeriesCatalog& catalog);

// Pointwise combination on the intersection of supports.
TimeSeries combine(const TimeSeries& a, const TimeSeries& b, const std::string& name,
                   double (*op)(double, double));

// Year-over-year percent change (drops the first observation).
TimeSeries yoy_percent(const TimeSeries& level, const std::string& name);

// First difference (drops the first observation).
TimeSeries diff(const TimeSeries& level, const std::string& name);

} // namespace debtlab
