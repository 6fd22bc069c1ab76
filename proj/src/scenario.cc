// Copyright 2026 The dipnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dipnet/scenario.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dipnet {

namespace {

struct Entry {
    std::string value;
    size_t line;
};

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string where(const std::string &key, size_t line) {
    return "line " + std::to_string(line) + ": key '" + key + "'";
}

class Reader {
   public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string &key) const {
        return entries_.count(key) != 0;
    }

    size_t line(const std::string &key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    [[noreturn]] void invalid(const std::string &key, const std::string &msg) const {
        size_t ln = line(key);
        std::string prefix = ln ? where(key, ln) : "key '" + key + "'";
        throw ValidationError(prefix + ": " + msg, key, ln);
    }

    double number(const std::string &key, double fallback) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? fallback : parse_number(key, it->second.value, it->second.line);
    }

    std::string text(const std::string &key, const std::string &fallback) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? fallback : it->second.value;
    }

    bool boolean(const std::string &key, bool fallback) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        std::string v = it->second.value;
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
        if (v == "true" || v == "yes" || v == "on" || v == "1") {
            return true;
        }
        if (v == "false" || v == "no" || v == "off" || v == "0") {
            return false;
        }
        throw ParseError(where(key, it->second.line) + ": expected a boolean, got '" + it->second.value + "'", key,
                         it->second.line);
    }

    std::vector<std::string> list(const std::string &key) const {
        std::vector<std::string> out;
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return out;
        }
        std::string_view rest = it->second.value;
        while (true) {
            size_t comma = rest.find(',');
            std::string_view item = trim(rest.substr(0, comma));
            if (item.empty()) {
                throw ParseError(where(key, it->second.line) + ": empty list item", key, it->second.line);
            }
            out.emplace_back(item);
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        return out;
    }

    double parse_number(const std::string &key, std::string_view v, size_t ln) const {
        double out = 0;
        const char *first = v.data();
        if (!v.empty() && v.front() == '+') {
            first++;
        }
        auto [ptr, ec] = std::from_chars(first, v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
            throw ParseError(where(key, ln) + ": expected a number, got '" + std::string(v) + "'", key, ln);
        }
        return out;
    }

   private:
    std::map<std::string, Entry> entries_;
};

const char *const kKnownKeys[] = {
    "name",          "network",          "werner_x1",      "werner_x2",       "mode",
    "tau_min",       "tau_max",          "tau_steps",      "eps_values",      "channels",
    "quantifiers",   "output_dir",       "emit_plot_script", "zero_tol",      "prominence_frac",
    "slope_jump_tol", "extension",       "extension.bridge_tau", "extension.bridge_eps",
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
    std::map<std::string, Entry> entries;
    size_t ln = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ln++;
        std::string_view line = raw;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(ln) + ": expected 'key = value', got '" + std::string(line) + "'",
                             "", ln);
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(ln) + ": missing key before '='", "", ln);
        }
        if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) == std::end(kKnownKeys)) {
            throw UnknownKey(where(key, ln) + ": unknown key", key, ln);
        }
        if (value.empty()) {
            throw ParseError(where(key, ln) + ": missing value", key, ln);
        }
        if (auto prev = entries.find(key); prev != entries.end()) {
            throw ParseError(where(key, ln) + ": duplicate key (first set on line " +
                                 std::to_string(prev->second.line) + ")",
                             key, ln);
        }
        entries.emplace(key, Entry{value, ln});
    }

    Reader r(std::move(entries));
    Scenario s;

    s.name = r.text("name", "");
    if (s.name.empty()) {
        r.invalid("name", "a nonempty scenario name is required");
    }
    if (!std::all_of(s.name.begin(), s.name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '-' || c == '.'; })) {
        r.invalid("name", "only letters, digits, '_', '-' and '.' are allowed");
    }

    try {
        s.network.kind = network_kind_from_string(r.text("network", "MM"));
    } catch (const std::invalid_argument &e) {
        r.invalid("network", e.what());
    }
    s.network.werner_x1 = r.number("werner_x1", kDefaultWernerX);
    s.network.werner_x2 = r.number("werner_x2", kDefaultWernerX);
    for (const char *key : {"werner_x1", "werner_x2"}) {
        double x = r.number(key, kDefaultWernerX);
        if (!(x >= 0 && x <= 1)) {
            r.invalid(key, "must lie in [0, 1], got " + r.text(key, ""));
        }
    }

    try {
        s.mode = mode_from_string(r.text("mode", "closed_form"));
    } catch (const std::invalid_argument &e) {
        r.invalid("mode", e.what());
    }

    ScanGrid &g = s.grid;
    g.tau_min = r.number("tau_min", g.tau_min);
    g.tau_max = r.number("tau_max", g.tau_max);
    if (!(g.tau_min < g.tau_max)) {
        r.invalid(r.has("tau_max") ? "tau_max" : "tau_min", "tau_min must be smaller than tau_max");
    }
    double steps = r.number("tau_steps", static_cast<double>(g.tau_steps));
    if (!(steps >= 2) || steps != std::floor(steps) || steps > 1e7) {
        r.invalid("tau_steps", "must be an integer of at least 2");
    }
    g.tau_steps = static_cast<size_t>(steps);

    if (r.has("eps_values")) {
        g.eps_values.clear();
        for (const auto &item : r.list("eps_values")) {
            g.eps_values.push_back(r.parse_number("eps_values", item, r.line("eps_values")));
        }
    }
    if (r.has("channels")) {
        g.channels.clear();
        for (const auto &item : r.list("channels")) {
            try {
                g.channels.push_back(channel_from_string(item));
            } catch (const std::invalid_argument &e) {
                r.invalid("channels", e.what());
            }
        }
    }
    if (r.has("quantifiers")) {
        g.quantifiers.clear();
        for (const auto &item : r.list("quantifiers")) {
            try {
                g.quantifiers.push_back(quantifier_from_string(item));
            } catch (const std::invalid_argument &e) {
                r.invalid("quantifiers", e.what());
            }
        }
    }

    s.extension = r.boolean("extension", r.has("extension.bridge_tau") || r.has("extension.bridge_eps"));
    if (!s.extension && (r.has("extension.bridge_tau") || r.has("extension.bridge_eps"))) {
        r.invalid("extension", "bridge parameters given but extension is off");
    }
    if (r.has("extension.bridge_tau")) {
        g.bridge_tau = r.number("extension.bridge_tau", 0);
    }
    if (r.has("extension.bridge_eps")) {
        g.bridge_eps = r.number("extension.bridge_eps", 0);
    }
    bool wants_c18 = std::find(g.channels.begin(), g.channels.end(), Channel::C18) != g.channels.end();
    if (wants_c18 && !s.extension) {
        r.invalid("channels", "channel 18 requires an extension block (extension = on)");
    }
    if (!wants_c18 && s.extension) {
        r.invalid("extension", "extension is only used by channel 18");
    }

    try {
        g.validate();
    } catch (const std::invalid_argument &e) {
        r.invalid(r.has("quantifiers") ? "quantifiers" : "channels", e.what());
    }

    s.output_dir = r.text("output_dir", s.output_dir.string());
    s.emit_plot_script = r.boolean("emit_plot_script", false);
    s.zero_tol = r.number("zero_tol", s.zero_tol);
    if (!(s.zero_tol >= 0)) {
        r.invalid("zero_tol", "must be nonnegative");
    }
    s.prominence_frac = r.number("prominence_frac", s.prominence_frac);
    if (!(s.prominence_frac >= 0)) {
        r.invalid("prominence_frac", "must be nonnegative");
    }
    s.slope_jump_tol = r.number("slope_jump_tol", s.slope_jump_tol);
    if (!(s.slope_jump_tol > 0)) {
        r.invalid("slope_jump_tol", "must be positive");
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read scenario file " + path.string(), "", 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace dipnet
