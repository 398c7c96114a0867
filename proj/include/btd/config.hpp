#pragma once

#include <map>
#include <string>
#include <vector>

namespace btd {

// Flat key=value config file. '#' starts a comment, blank lines ignored.
// Keys are dotted (e.g. "cell.c1", "anomaly.kind").
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // Parses "a:b, c:d, ..." pair lists (used for OCV tables and schedules).
    std::vector<std::pair<double, double>> get_pairs(const std::string& key) const;

    void set(const std::string& key, const std::string& value);

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace btd
