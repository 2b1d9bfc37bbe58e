#include "debtlab/io/scenario_config.hpp"

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

std::vector<double> parse_list(const std::string& s, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::runtime_error(where + ": bad number '" + item + "'");
        }
    }
    if (out.empty()) throw std::runtime_error(where + ": empty value");
    return out;
}

double parse_one(const std::string& s, const std::string& where) {
    const auto v = parse_list(s, where);
    if (v.size() != 1) throw std::runtime_error(where + ": expected a single number");
    return v[0];
}

void apply_calibration_key(Calibration& c, const std::string& key, const std::string& val,
                           const std::string& where) {
    const double x = parse_one(val, where);
    if (key == "b0") c.b0 = x;
    else if (key == "r_n") c.r_n = x;
    else if (key == "pi") c.pi = x;
    else if (key == "g_n_star") c.g_n_star = x;
    else if (key == "alpha") c.alpha = x;
    else if (key == "beta") c.beta = x;
    else if (key == "e_bar") c.e_bar = x;
    else if (key == "d") c.d = x;
    else if (key == "s") c.s = x;
    else if (key == "gamma") c.gamma = x;
    else if (key == "phi") c.phi = x;
    else if (key == "reserves") c.reserves = x;
    else if (key == "tbills") c.tbills = x;
    else if (key == "gdp") c.gdp = x;
    else throw std::runtime_error(where + ": unknown calibration key '" + key + "'");
}

void apply_scenario_key(ScenarioSpec& s, const std::string& key, const std::string& val,
                        const std::string& where) {
    if (key == "start_year") s.start_year = static_cast<int>(parse_one(val, where));
    else if (key == "horizon") s.horizon = static_cast<int>(parse_one(val, where));
    else if (key == "rate_hike") s.rate_hike = parse_list(val, where);
    else if (key == "delta_e") s.delta_e_path = parse_list(val, where);
    else if (key == "pi_mode") {
        const std::string v = trimmed(val);
        if (v == "fixed") s.pi_mode = PiMode::fixed;
        else if (v == "passthrough") s.pi_mode = PiMode::passthrough;
        else if (v == "exogenous") s.pi_mode = PiMode::exogenous;
        else throw std::runtime_error(where + ": unknown pi_mode '" + v + "'");
    } else if (key == "pi") s.pi_value = parse_one(val, where);
    else if (key == "gamma") s.pass_gamma = parse_one(val, where);
    else if (key == "pi_schedule") s.pi_schedule = parse_list(val, where);
    else if (key == "deficit_mode") {
        const std::string v = trimmed(val);
        if (v == "fixed") s.deficit_mode = DeficitMode::fixed;
        else if (v == "ioer") s.deficit_mode = DeficitMode::ioer;
        else throw std::runtime_error(where + ": unknown deficit_mode '" + v + "'");
    } else if (key == "deficit") s.deficit_value = parse_one(val, where);
    else if (key == "ioer_alpha_pt") s.ioer_alpha_pt = parse_one(val, where);
    else if (key == "revert_after") s.revert_after = static_cast<int>(parse_one(val, where));
    else if (key == "lead_in_years") s.lead_in_years = static_cast<int>(parse_one(val, where));
    else throw std::runtime_error(where + ": unknown scenario key '" + key + "'");
}

} // namespace

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");

    ScenarioConfig cfg = builtin_config();
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);

        if (line.front() == '[') {
            if (line.back() != ']') throw std::runtime_error(where + ": unclosed section");
            section = trimmed(line.substr(1, line.size() - 2));
            if (section.rfind("scenario ", 0) == 0) {
                const std::string name = trimmed(section.substr(9));
                if (!cfg.scenarios.count(name)) {
                    ScenarioSpec s;
                    s.name = name;
                    cfg.scenarios.emplace(name, s);
                }
            } else if (section != "calibration") {
                throw std::runtime_error(where + ": unknown section '" + section + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(where + ": expected key = value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string val = trimmed(line.substr(eq + 1));
        if (section == "calibration") {
            apply_calibration_key(cfg.calibration, key, val, where);
        } else if (section.rfind("scenario ", 0) == 0) {
            apply_scenario_key(cfg.scenarios.at(trimmed(section.substr(9))), key, val, where);
        } else {
            throw std::runtime_error(where + ": key outside any section");
        }
    }
    cfg.calibration.validate();
    for (auto& [name, spec] : cfg.scenarios) spec.validate();
    return cfg;
}

ScenarioConfig builtin_config() {
    ScenarioConfig cfg;
    cfg.calibration = baseline_calibration();
    for (const auto& name : known_scenario_names())
        cfg.scenarios.emplace(name, scenario_by_name(name));
    return cfg;
}

} // namespace debtlab
