#include "debtlab/io/catalog.hpp"

#include "debtlab/io/csv.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace debtlab {

const TimeSeries& SeriesCatalog::get(const std::string& id) const {
    const auto it = series.find(id);
    if (it == series.end()) {
        std::string msg = "catalog: no series '" + id + "'; available:";
        for (const auto& [k, v] : series) msg += " " + k;
        throw std::runtime_error(msg);
    }
    return it->second;
}

void SeriesCatalog::add(const std::string& id, TimeSeries ts) {
    if (has(id)) throw std::runtime_error("catalog: duplicate series '" + id + "'");
    ts.name = id;
    ts.validate();
    series.emplace(id, std::move(ts));
}

void SeriesCatalog::add_derived(const std::string& id, TimeSeries ts, DerivedInfo info) {
    add(id, std::move(ts));
    derived[id] = std::move(info);
}

SeriesCatalog load_catalog(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw std::runtime_error("fixture directory '" + dir +
                                 "' not found; pass --fixtures or set DEBTLAB_FIXTURES");
    SeriesCatalog cat;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) cat.add(f.stem().string(), load_csv(f.string()));

    const fs::path vintage_file = fs::path(dir) / "VINTAGE";
    if (fs::exists(vintage_file)) {
        std::ifstream in(vintage_file);
        std::getline(in, cat.vintage);
    }
    return cat;
}

TimeSeries combine(const TimeSeries& a, const TimeSeries& b, const std::string& name,
                   double (*op)(double, double)) {
    if (a.frequency != b.frequency)
        throw std::invalid_argument("combine: frequency mismatch for " + name);
    TimeSeries out;
    out.name = name;
    out.frequency = a.frequency;
    for (size_t i = 0; i < a.size(); ++i) {
        const double bv = b.at(a.dates[i]);
        if (std::isnan(a.values[i]) || std::isnan(bv)) continue;
        out.dates.push_back(a.dates[i]);
        out.values.push_back(op(a.values[i], bv));
    }
    return out;
}

TimeSeries yoy_percent(const TimeSeries& level, const std::string& name) {
    TimeSeries out;
    out.name = name;
    out.frequency = level.frequency;
    const int step = level.frequency == Frequency::annual ? 1 : 12;
    for (size_t i = static_cast<size_t>(step); i < level.size(); ++i) {
        const double prev = level.values[i - static_cast<size_t>(step)];
        const double cur = level.values[i];
        if (std::isnan(prev) || std::isnan(cur) || prev == 0.0) continue;
        out.dates.push_back(level.dates[i]);
        out.values.push_back(100.0 * (cur / prev - 1.0));
    }
    return out;
}

TimeSeries diff(const TimeSeries& level, const std::string& name) {
    TimeSeries out;
    out.name = name;
    out.frequency = level.frequency;
    for (size_t i = 1; i < level.size(); ++i) {
        if (std::isnan(level.values[i - 1]) || std::isnan(level.values[i])) continue;
        out.dates.push_back(level.dates[i]);
        out.values.push_back(level.values[i] - level.values[i - 1]);
    }
    return out;
}

namespace {

double sub(double a, double b) { return a - b; }

} // namespace

void derive_series(SeriesCatalog& cat) {
    auto ensure_gone = [&](const std::string& id) { cat.series.erase(id); cat.derived.erase(id); };

    const std::string cpi = "JPNCPIALLMINMEI";
    const std::string ngdp = "JPNNGDP";
    const std::string debt = "GGGDTAJPA188N";
    const std::string r10 = "IRLTLT01JPA156N";
    const std::string fx = "DEXJPUS";

    if (cat.has(cpi)) {
        ensure_gone("JPN_CPI_YOY");
        cat.add_derived("JPN_CPI_YOY", yoy_percent(cat.get(cpi), "JPN_CPI_YOY"),
                        {{cpi}, "100*(cpi_t/cpi_{t-1} - 1)"});
    }
    if (cat.has(ngdp)) {
        ensure_gone("JPN_NGDP_YOY");
        cat.add_derived("JPN_NGDP_YOY", yoy_percent(cat.get(ngdp), "JPN_NGDP_YOY"),
                        {{ngdp}, "100*(ngdp_t/ngdp_{t-1} - 1)"});
    }
    if (cat.has(r10) && cat.has("JPN_CPI_YOY")) {
        ensure_gone("JPN_EPS");
        cat.add_derived("JPN_EPS",
                        combine(cat.get("JPN_CPI_YOY"), cat.get(r10), "JPN_EPS", sub),
                        {{cpi, r10}, "pi - r"});
    }
    if (cat.has(r10) && cat.has("JPN_NGDP_YOY")) {
        ensure_gone("JPN_RG_SPREAD");
        cat.add_derived("JPN_RG_SPREAD",
                        combine(cat.get(r10), cat.get("JPN_NGDP_YOY"), "JPN_RG_SPREAD", sub),
                        {{r10, ngdp}, "r - g"});
    }
    if (cat.has(debt)) {
        ensure_gone("JPN_DEBT_CHANGE");
        cat.add_derived("JPN_DEBT_CHANGE", diff(cat.get(debt), "JPN_DEBT_CHANGE"),
                        {{debt}, "b_t - b_{t-1}"});
    }
    if (cat.has(fx)) {
        ensure_gone("JPY_DELTA_E");
        cat.add_derived("JPY_DELTA_E", diff(cat.get(fx), "JPY_DELTA_E"),
                        {{fx}, "e_t - e_{t-1}"});
        ensure_gone("JPY_DELTA_E_PCT");
        cat.add_derived("JPY_DELTA_E_PCT", yoy_percent(cat.get(fx), "JPY_DELTA_E_PCT"),
                        {{fx}, "100*(e_t/e_{t-1} - 1)"});
    }
    if (cat.has("JGB_FOREIGN_HOLDINGS") && cat.has("JGB_TOTAL_OUTSTANDING")) {
        ensure_gone("JPN_PHI");
        cat.add_derived(
            "JPN_PHI",
            combine(cat.get("JGB_FOREIGN_HOLDINGS"), cat.get("JGB_TOTAL_OUTSTANDING"),
                    "JPN_PHI", [](double f, double t) { return 1.0 - f / t; }),
            {{"JGB_FOREIGN_HOLDINGS", "JGB_TOTAL_OUTSTANDING"},
             "1 - foreign/total"});
    }
}

} // namespace debtlab
