#include "oak/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oak {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

KeyValueFile KeyValueFile::parse(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: " + origin + ":" + std::to_string(lineno) +
                                     ": expected key=value, got '" + t + "'");
        kv.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return kv;
}

void KeyValueFile::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("config: cannot write " + path);
    out << serialize();
}

std::string KeyValueFile::serialize() const {
    std::string s;
    for (const auto& [k, v] : order_) {
        s += k;
        s += '=';
        s += v;
        s += '\n';
    }
    return s;
}

bool KeyValueFile::has(const std::string& key) const { return values_.count(key) > 0; }

const std::string& KeyValueFile::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw std::runtime_error("config: missing key '" + key + "'");
    return it->second;
}

std::string KeyValueFile::get_or(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValueFile::get_double(const std::string& key) const {
    const std::string& v = get(key);
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not a number: '" + v + "'");
    }
}

double KeyValueFile::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int64_t KeyValueFile::get_int(const std::string& key) const {
    const std::string& v = get(key);
    try {
        size_t pos = 0;
        const int64_t i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not an integer: '" + v + "'");
    }
}

int64_t KeyValueFile::get_int_or(const std::string& key, int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

uint64_t KeyValueFile::get_u64_or(const std::string& key, uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string& v = get(key);
    try {
        size_t pos = 0;
        const uint64_t u = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return u;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not an unsigned integer: '" + v + "'");
    }
}

bool KeyValueFile::get_bool_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string& v = get(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: key '" + key + "' is not a boolean: '" + v + "'");
}

void KeyValueFile::set(const std::string& key, const std::string& value) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_.emplace(key, value);
        order_.emplace_back(key, value);
    } else {
        it->second = value;
        for (auto& [k, v] : order_)
            if (k == key) v = value;
    }
}

void KeyValueFile::set_double(const std::string& key, double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    set(key, os.str());
}

void KeyValueFile::set_int(const std::string& key, int64_t value) { set(key, std::to_string(value)); }
void KeyValueFile::set_u64(const std::string& key, uint64_t value) { set(key, std::to_string(value)); }
void KeyValueFile::set_bool(const std::string& key, bool value) { set(key, value ? "true" : "false"); }

std::vector<uint64_t> parse_seed_list(const std::string& spec) {
    std::vector<uint64_t> seeds;
    for (const std::string& part : split(spec, ',')) {
        const std::string p = trim(part);
        if (p.empty()) continue;
        const size_t dots = p.find("..");
        if (dots != std::string::npos) {
            const uint64_t lo = std::stoull(p.substr(0, dots));
            const uint64_t hi = std::stoull(p.substr(dots + 2));
            if (hi < lo) throw std::runtime_error("cli: bad seed range '" + p + "'");
            for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        } else {
            seeds.push_back(std::stoull(p));
        }
    }
    if (seeds.empty()) throw std::runtime_error("cli: empty seed list '" + spec + "'");
    return seeds;
}

}  // namespace oak
