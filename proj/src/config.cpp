// SPDX-License-Identifier: Apache-2.0
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

#include "udnsim/config.hpp"

#include "udnsim/error.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace udnsim {

namespace {

using Kind = ConfigError::Kind;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> parts;
    while (true) {
        const auto comma = s.find(',');
        parts.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return parts;
}

std::optional<double> to_double(std::string_view s)
{
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || std::isnan(v) || std::isinf(v))
        return std::nullopt;
    return v;
}

template <typename T>
std::optional<T> to_unsigned(std::string_view s)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

std::string format_double(double v)
{
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct Location
{
    std::size_t line = 0;
    std::size_t column = 0;
};

// One key assignment with the position of its value.
struct Entry
{
    std::string_view value;
    Location key_at;
    Location value_at;
};

using SectionMap = std::map<std::string, std::map<std::string, Entry, std::less<>>, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& known_keys()
{
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys{
        {"radio",
         {"fc_hz", "bandwidth_hz", "p_sbs_dbm", "p_user_dbm", "noise_power_dbm", "residual_si_dbm", "n_tx_sbs",
          "n_tx_user", "los_decay_m", "n_nlos_paths"}},
        {"geometry",
         {"macro_radius_m", "sector_angle_rad", "close_zone_radius_m", "sc_radius_m", "n_dl_users",
          "n_ul_users"}},
        {"sweep", {"densities_per_km2", "trials", "seed", "workers"}},
        {"schemes", {"enabled", "alpha_weak", "alpha_strong", "oma_alpha_weak", "oma_alpha_strong",
                     "own_cell_user_cci"}},
    };
    return keys;
}

SectionMap tokenize(std::string_view text)
{
    SectionMap sections;
    std::string current;
    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) {
            if (text.empty())
                break;
            continue;
        }
        const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(Kind::Syntax, line_no, indent + 1, "unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!known_keys().contains(name))
                throw ConfigError(Kind::UnknownSection, line_no, indent + 2,
                                  "unknown section [" + std::string(name) + "]");
            current = std::string(name);
            sections[current];
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(Kind::Syntax, line_no, indent + 1, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value_part = line.substr(eq + 1);
        const std::string_view value = trim(value_part);
        const Location key_at{line_no, indent + 1};
        const Location value_at{line_no,
                                value.empty() ? indent + eq + 2
                                              : static_cast<std::size_t>(value.data() - raw.data()) + 1};
        if (key.empty())
            throw ConfigError(Kind::Syntax, line_no, indent + 1, "missing key before '='");
        if (current.empty())
            throw ConfigError(Kind::Syntax, line_no, indent + 1,
                              "key '" + std::string(key) + "' appears before any [section]");
        if (!known_keys().at(current).contains(key))
            throw ConfigError(Kind::UnknownKey, key_at.line, key_at.column,
                              "unknown key '" + std::string(key) + "' in [" + current + "]");
        if (value.empty())
            throw ConfigError(Kind::Syntax, value_at.line, value_at.column,
                              "missing value for '" + std::string(key) + "'");
        auto& section = sections[current];
        if (section.contains(key))
            throw ConfigError(Kind::DuplicateKey, key_at.line, key_at.column,
                              "duplicate key '" + std::string(key) + "' in [" + current + "]");
        section.emplace(std::string(key), Entry{value, key_at, value_at});
    }
    return sections;
}

class Reader
{
public:
    explicit Reader(const SectionMap& sections) : sections_(sections) {}

    const Entry* find(std::string_view section, std::string_view key) const
    {
        const auto s = sections_.find(section);
        if (s == sections_.end())
            return nullptr;
        const auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    }

    void number(std::string_view section, std::string_view key, double& out) const
    {
        if (const Entry* e = find(section, key)) {
            const auto v = to_double(e->value);
            if (!v)
                fail(*e, key, "a number");
            out = *v;
        }
    }

    template <typename T>
    void count(std::string_view section, std::string_view key, T& out) const
    {
        if (const Entry* e = find(section, key)) {
            const auto v = to_unsigned<T>(e->value);
            if (!v)
                fail(*e, key, "a non-negative integer");
            out = *v;
        }
    }

    void flag(std::string_view section, std::string_view key, bool& out) const
    {
        if (const Entry* e = find(section, key)) {
            if (e->value == "true")
                out = true;
            else if (e->value == "false")
                out = false;
            else
                fail(*e, key, "true or false");
        }
    }

    [[noreturn]] static void fail(const Entry& e, std::string_view key, const char* expected)
    {
        throw ConfigError(Kind::TypeMismatch, e.value_at.line, e.value_at.column,
                          "'" + std::string(key) + "' expects " + expected + ", got '" + std::string(e.value) + "'");
    }

    // Runs a validation step; its InvalidParameter is reported at \p key's position.
    template <typename Fn>
    void check(std::string_view section, std::string_view key, Fn&& fn) const
    {
        try {
            fn();
        } catch (const InvalidParameter& err) {
            const Entry* e = find(section, key);
            throw ConfigError(Kind::ConstraintViolation, e ? e->key_at.line : 0, e ? e->key_at.column : 0,
                              err.what());
        }
    }

private:
    const SectionMap& sections_;
};

} // namespace

ConfigError::ConfigError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                        ": " + message
                                  : message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message)
{
}

std::string_view config_error_kind_name(ConfigError::Kind kind)
{
    switch (kind) {
    case Kind::Syntax:
        return "syntax error";
    case Kind::UnknownSection:
        return "unknown section";
    case Kind::UnknownKey:
        return "unknown key";
    case Kind::DuplicateKey:
        return "duplicate key";
    case Kind::TypeMismatch:
        return "type mismatch";
    case Kind::ConstraintViolation:
        return "constraint violation";
    }
    return "error";
}

std::vector<double> parse_density_list(std::string_view text)
{
    std::vector<double> out;
    for (auto item : split_list(text)) {
        const auto v = to_double(item);
        if (!v)
            throw InvalidParameter("bad density '" + std::string(item) + "'");
        out.push_back(*v);
    }
    return out;
}

std::vector<SchemeConfig> parse_scheme_list(std::string_view text, const SchemeConfig& noma,
                                            const SchemeConfig& oma)
{
    std::vector<SchemeConfig> out;
    for (auto item : split_list(text)) {
        const auto s = parse_scheme(item);
        if (!s)
            throw InvalidParameter("unknown scheme '" + std::string(item) + "'");
        for (const auto& existing : out)
            if (existing.scheme == *s)
                throw InvalidParameter("scheme '" + std::string(item) + "' listed twice");
        SchemeConfig sc = *s == Scheme::OmaHd ? oma : noma;
        sc.scheme = *s;
        out.push_back(sc);
    }
    return out;
}

SweepConfig parse_config(std::string_view text)
{
    const SectionMap sections = tokenize(text);
    const Reader in(sections);
    SweepConfig cfg;

    auto& r = cfg.radio;
    in.number("radio", "fc_hz", r.fc_hz);
    in.number("radio", "bandwidth_hz", r.bandwidth_hz);
    in.number("radio", "p_sbs_dbm", r.p_sbs_dbm);
    in.number("radio", "p_user_dbm", r.p_user_dbm);
    in.number("radio", "noise_power_dbm", r.noise_power_dbm);
    in.number("radio", "residual_si_dbm", r.residual_si_dbm);
    in.count("radio", "n_tx_sbs", r.n_tx_sbs);
    in.count("radio", "n_tx_user", r.n_tx_user);
    in.number("radio", "los_decay_m", r.los_decay_m);
    in.count("radio", "n_nlos_paths", r.n_nlos_paths);

    auto& g = cfg.geometry;
    in.number("geometry", "macro_radius_m", g.macro_radius_m);
    in.number("geometry", "sector_angle_rad", g.sector_angle_rad);
    in.number("geometry", "close_zone_radius_m", g.close_zone_radius_m);
    in.number("geometry", "sc_radius_m", cfg.drop.sc_radius_m);
    in.count("geometry", "n_dl_users", cfg.drop.n_dl);
    in.count("geometry", "n_ul_users", cfg.drop.n_ul);

    in.count("sweep", "trials", cfg.trials);
    in.count("sweep", "seed", cfg.base_seed);
    in.count("sweep", "workers", cfg.workers);
    if (const Entry* e = in.find("sweep", "densities_per_km2")) {
        in.check("sweep", "densities_per_km2", [&] { cfg.densities = parse_density_list(e->value); });
    }

    SchemeConfig noma = SchemeConfig::defaults(Scheme::NomaHd);
    SchemeConfig oma = SchemeConfig::defaults(Scheme::OmaHd);
    in.number("schemes", "alpha_weak", noma.alpha_weak);
    in.number("schemes", "alpha_strong", noma.alpha_strong);
    in.number("schemes", "oma_alpha_weak", oma.alpha_weak);
    in.number("schemes", "oma_alpha_strong", oma.alpha_strong);
    in.flag("schemes", "own_cell_user_cci", cfg.interference.own_cell_user_cci);
    in.check("schemes", in.find("schemes", "alpha_strong") ? "alpha_strong" : "alpha_weak",
             [&] { noma.validate(); });
    in.check("schemes", in.find("schemes", "oma_alpha_strong") ? "oma_alpha_strong" : "oma_alpha_weak",
             [&] { oma.validate(); });
    const Entry* enabled = in.find("schemes", "enabled");
    in.check("schemes", "enabled", [&] {
        cfg.schemes = parse_scheme_list(enabled ? enabled->value : "OMA_HD, NOMA_HD, NOMA_FD", noma, oma);
    });

    in.check("radio", "", [&] { cfg.radio.validate(); });
    in.check("geometry", "", [&] {
        cfg.geometry.validate();
        cfg.drop.validate();
    });
    in.check("sweep", "", [&] { cfg.validate(); });
    return cfg;
}

std::string serialize_config(const SweepConfig& cfg)
{
    std::ostringstream out;
    auto kv = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    auto num = [&](std::string_view key, double v) { kv(key, format_double(v)); };
    auto cnt = [&](std::string_view key, std::uint64_t v) { kv(key, std::to_string(v)); };

    const auto& r = cfg.radio;
    out << "[radio]\n";
    num("fc_hz", r.fc_hz);
    num("bandwidth_hz", r.bandwidth_hz);
    num("p_sbs_dbm", r.p_sbs_dbm);
    num("p_user_dbm", r.p_user_dbm);
    num("noise_power_dbm", r.noise_power_dbm);
    num("residual_si_dbm", r.residual_si_dbm);
    cnt("n_tx_sbs", r.n_tx_sbs);
    cnt("n_tx_user", r.n_tx_user);
    num("los_decay_m", r.los_decay_m);
    cnt("n_nlos_paths", r.n_nlos_paths);

    out << "\n[geometry]\n";
    num("macro_radius_m", cfg.geometry.macro_radius_m);
    num("sector_angle_rad", cfg.geometry.sector_angle_rad);
    num("close_zone_radius_m", cfg.geometry.close_zone_radius_m);
    num("sc_radius_m", cfg.drop.sc_radius_m);
    cnt("n_dl_users", cfg.drop.n_dl);
    cnt("n_ul_users", cfg.drop.n_ul);

    out << "\n[sweep]\n";
    std::string densities;
    for (std::size_t i = 0; i < cfg.densities.size(); ++i)
        densities += (i ? ", " : "") + format_double(cfg.densities[i]);
    kv("densities_per_km2", densities);
    cnt("trials", cfg.trials);
    cnt("seed", cfg.base_seed);
    cnt("workers", cfg.workers);

    SchemeConfig noma = SchemeConfig::defaults(Scheme::NomaHd);
    SchemeConfig oma = SchemeConfig::defaults(Scheme::OmaHd);
    std::string enabled;
    for (const auto& s : cfg.schemes) {
        if (!enabled.empty())
            enabled += ", ";
        enabled += scheme_name(s.scheme);
        (s.is_noma() ? noma : oma) = s;
    }
    out << "\n[schemes]\n";
    kv("enabled", enabled);
    num("alpha_weak", noma.alpha_weak);
    num("alpha_strong", noma.alpha_strong);
    num("oma_alpha_weak", oma.alpha_weak);
    num("oma_alpha_strong", oma.alpha_strong);
    kv("own_cell_user_cci", cfg.interference.own_cell_user_cci ? "true" : "false");
    return out.str();
}

} // namespace udnsim
