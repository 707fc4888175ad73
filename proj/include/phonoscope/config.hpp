#pragma once

#include <map>
#include <optional>
#include <string>

namespace phonoscope {

/// Flat key-value run configuration. Lines look like
///   cavity.L = 3.141592653589793
///   mode.1.q0 = 1.0
/// with '#' comments. Dotted prefixes mirror module names; CLI flags
/// override file values via set().
class Config {
public:
    static Config load(const std::string& path);
    static Config parse_text(const std::string& text);

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    [[nodiscard]] bool has(const std::string& key) const { return values_.count(key) > 0; }
    [[nodiscard]] std::optional<std::string> get(const std::string& key) const;

    [[nodiscard]] double get_double(const std::string& key, double fallback) const;
    [[nodiscard]] int get_int(const std::string& key, int fallback) const;
    [[nodiscard]] std::string get_string(const std::string& key, const std::string& fallback) const;

    [[nodiscard]] const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace phonoscope
