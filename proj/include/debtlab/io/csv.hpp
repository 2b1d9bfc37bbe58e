#pragma once

#include "debtlab/io/timeseries.hpp"

#include <string>

namespace debtlab {

// Two-column date,value text with a one-line header. Dates are YYYY or
// YYYY-MM; empty values, "NA" and "." are explicit gaps. Malformed rows
// raise with the offending line number.
TimeSeries load_csv(const std::string& path);

// Deterministic emission: 12 significant digits, '.' decimal point.
void save_csv(const TimeSeries& series, const std::string& path);

} // namespace debtlab
