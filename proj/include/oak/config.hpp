#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oak {

// Flat key=value UTF-8 config file. '#' starts a comment, blank lines are
// skipped, insertion order is preserved for deterministic re-serialization.
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");
    void save(const std::string& path) const;
    std::string serialize() const;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    int64_t get_int(const std::string& key) const;
    int64_t get_int_or(const std::string& key, int64_t fallback) const;
    uint64_t get_u64_or(const std::string& key, uint64_t fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, int64_t value);
    void set_u64(const std::string& key, uint64_t value);
    void set_bool(const std::string& key, bool value);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return order_; }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::pair<std::string, std::string>> order_;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

// "0..4" or "0,2,5" or "3" -> list of seeds.
std::vector<uint64_t> parse_seed_list(const std::string& spec);

}  // namespace oak
