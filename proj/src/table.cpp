#include "debtlab/io/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace debtlab {

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    // normalize "-0.0" to "0.0"
    std::string s = buf;
    bool zero = true;
    for (char ch : s)
        if (ch >= '1' && ch <= '9') { zero = false; break; }
    if (zero && s[0] == '-') s.erase(0, 1);
    return s;
}

std::string format_percent(double rate, int decimals) {
    return format_fixed(rate * 100.0, decimals);
}

std::string format_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            const bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
            if (quote) {
                out += '"';
                for (char c : row[i]) {
                    if (c == '"') out += '"';
                    out += c;
                }
                out += '"';
            } else {
                out += row[i];
            }
        }
        out += '\n';
    };
    append_row(header);
    for (const auto& r : rows) append_row(r);
    return out;
}

std::string Table::to_text() const {
    std::vector<size_t> widths(header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    };
    grow(header);
    for (const auto& r : rows) grow(r);

    std::string out;
    if (!title.empty()) out += title + "\n";
    auto append_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < widths.size(); ++i) {
            const std::string& cell = i < row.size() ? row[i] : std::string{};
            if (i) out += "  ";
            out += cell;
            out.append(widths[i] - cell.size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    append_row(header);
    std::string rule;
    for (size_t i = 0; i < widths.size(); ++i) {
        if (i) rule += "  ";
        rule.append(widths[i], '-');
    }
    out += rule + "\n";
    for (const auto& r : rows) append_row(r);
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace debtlab
