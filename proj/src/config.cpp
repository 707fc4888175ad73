#include "phonoscope/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phonoscope {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Config: cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

Config Config::parse_text(const std::string& text) {
    Config cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("Config: missing '=' on line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("Config: empty key on line " + std::to_string(lineno));
        cfg.values_[key] = value;
    }
    return cfg;
}

std::optional<std::string> Config::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        std::size_t used = 0;
        const double parsed = std::stod(*v, &used);
        if (used != v->size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw std::runtime_error("Config: key '" + key + "' is not a number: " + *v);
    }
}

int Config::get_int(const std::string& key, int fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(*v, &used);
        if (used != v->size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw std::runtime_error("Config: key '" + key + "' is not an integer: " + *v);
    }
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
}

}  // namespace phonoscope
