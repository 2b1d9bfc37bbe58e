#pragma once

#include <string>
#include <vector>

namespace debtlab {

// A rendered table: fixed column layout, deterministic bytes for fixed
// input. Cells are preformatted strings; numeric helpers are provided so
// the one-decimal-percent display convention lives in one place.
struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_text() const; // aligned, pipe-free monospace layout
};

std::string format_fixed(double value, int decimals);
// Decimal rate -> percent string with the given decimals (0.022 -> "2.2").
std::string format_percent(double rate, int decimals = 1);
// Full-precision decimal for CSV side-channels.
std::string format_full(double value);

void write_file(const std::string& path, const std::string& bytes);

} // namespace debtlab
