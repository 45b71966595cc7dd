#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace piforge {

/// Scalar or flat-array value from a config file. Integers and "p/q" strings
/// are kept verbatim so exact rationals survive a round-trip.
struct ConfigValue {
    enum class Kind { String, Integer, Float, Boolean, Array };
    Kind kind = Kind::Integer;
    std::string str;
    long long integer = 0;
    double real = 0.0;
    bool boolean = false;
    std::vector<ConfigValue> array;

    double as_double() const;           // Integer or Float
    long long as_integer() const;       // Integer only
    const std::string& as_string() const;
    bool as_bool() const;
};

/// Parsed config document: key/value entries, named sub-tables ([a], [a.b])
/// and arrays of tables ([[a]]). This covers the subset of TOML the tool
/// reads and writes; unsupported syntax is rejected with a parse error.
struct ConfigTable {
    std::map<std::string, ConfigValue> entries;
    std::map<std::string, ConfigTable> tables;
    std::map<std::string, std::vector<ConfigTable>> table_arrays;

    bool has(const std::string& key) const { return entries.count(key) > 0; }
    const ConfigValue& get(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_integer(const std::string& key, long long fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
};

ConfigTable parse_config(const std::string& text);
ConfigTable load_config(const std::string& path);

} // namespace piforge
