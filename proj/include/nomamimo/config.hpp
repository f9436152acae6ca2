// SPDX-License-Identifier: Apache-2.0
//
// nomamimo: link-level simulation of power-domain NOMA and zero-forcing
// massive MIMO in a Rayleigh-fading single-cell downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nomamimo {

// Doubles are written with 17 significant digits, enough for IEEE-754
// binary64 values to round-trip bit-exactly through text.
inline std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace detail {
inline std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}
} // namespace detail

// Line-oriented "key = value" configuration. '#' starts a comment, values are
// scalars or comma-separated lists. Entry order is preserved on save.
class KeyValueConfig {
  public:
    static KeyValueConfig parse(const std::string &text) {
        KeyValueConfig cfg;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": expected 'key = value'");
            const std::string key = detail::trim(line.substr(0, eq));
            const std::string value = detail::trim(line.substr(eq + 1));
            if (key.empty())
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": empty key");
            cfg.set(key, value);
        }
        return cfg;
    }

    static KeyValueConfig load(const std::string &path) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    bool has(const std::string &key) const { return find(key) != nullptr; }

    const std::string &raw(const std::string &key) const {
        if (const std::string *v = find(key))
            return *v;
        throw std::invalid_argument("missing config key: " + key);
    }

    std::string get_string(const std::string &key) const { return raw(key); }

    double get_double(const std::string &key) const {
        return parse_double(raw(key), key);
    }

    long long get_int(const std::string &key) const {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(raw(key), &pos);
            if (pos != raw(key).size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception &) {
            throw std::invalid_argument("config key '" + key + "' is not an integer");
        }
    }

    std::uint64_t get_u64(const std::string &key) const {
        try {
            std::size_t pos = 0;
            const std::uint64_t v = std::stoull(raw(key), &pos);
            if (pos != raw(key).size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception &) {
            throw std::invalid_argument("config key '" + key +
                                        "' is not an unsigned integer");
        }
    }

    std::vector<double> get_list(const std::string &key) const {
        const std::string &text = raw(key);
        std::vector<double> values;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            item = detail::trim(item);
            if (item.empty())
                throw std::invalid_argument("config key '" + key + "' has an empty list item");
            values.push_back(parse_double(item, key));
        }
        if (values.empty())
            throw std::invalid_argument("config key '" + key + "' is an empty list");
        return values;
    }

    void set(const std::string &key, const std::string &value) {
        for (auto &entry : entries_) {
            if (entry.first == key) {
                entry.second = value;
                return;
            }
        }
        entries_.emplace_back(key, value);
    }

    void set_double(const std::string &key, double value) { set(key, format_double(value)); }

    void set_int(const std::string &key, long long value) { set(key, std::to_string(value)); }

    void set_u64(const std::string &key, std::uint64_t value) { set(key, std::to_string(value)); }

    void set_list(const std::string &key, const std::vector<double> &values) {
        std::string text;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0)
                text += ", ";
            text += format_double(values[i]);
        }
        set(key, text);
    }

    std::string to_text() const {
        std::string out;
        for (const auto &[key, value] : entries_) {
            out += key;
            out += " = ";
            out += value;
            out += '\n';
        }
        return out;
    }

    void save(const std::string &path) const {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write config file: " + path);
        out << to_text();
    }

  private:
    static double parse_double(const std::string &text, const std::string &key) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception &) {
            throw std::invalid_argument("config key '" + key + "' is not a number");
        }
    }

    const std::string *find(const std::string &key) const {
        for (const auto &entry : entries_)
            if (entry.first == key)
                return &entry.second;
        return nullptr;
    }

    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace nomamimo
