#ifndef SEATCAST_UTIL_CONFIG_HPP
#define SEATCAST_UTIL_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

// INI-style plain-text config:
//   key = value            (global section)
//   [section name]
//   key = value
// Full-line comments start with '#' or ';'. Keys and values are trimmed;
// values keep internal spaces. Duplicate keys in a section: last wins.

namespace seatcast {

struct ConfigSection {
    std::string name;  // "" for the global section
    std::map<std::string, std::string> values;

    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
};

struct ConfigFile {
    ConfigSection global;
    std::vector<ConfigSection> sections;  // in file order, global excluded

    // Throws ConfigError on unreadable file or malformed lines.
    static ConfigFile load(const std::string& path);
    static ConfigFile parse(const std::string& text, const std::string& origin);
};

// "a, b , c" -> {"a","b","c"}; empty items dropped.
std::vector<std::string> split_list(const std::string& value);

std::string trim(const std::string& s);

}  // namespace seatcast

#endif
