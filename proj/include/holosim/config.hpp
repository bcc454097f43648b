#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace holosim {

// Flat key=value configuration. Lines are `key = value`, blank, or comments
// starting with '#'. Values keep internal whitespace; keys are unique.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<inline>");

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double fallback) const;
    std::vector<int> get_int_list(const std::string& key) const;  // comma-separated
    std::vector<int> get_int_list(const std::string& key, std::vector<int> fallback) const;

    void set(const std::string& key, const std::string& value);
    const std::map<std::string, std::string>& entries() const { return kv_; }
    const std::string& origin() const { return origin_; }

private:
    std::map<std::string, std::string> kv_;
    std::string origin_;
};

}  // namespace holosim
