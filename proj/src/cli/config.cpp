#include "ashwa/cli/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ashwa::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

}  // namespace

IniDocument IniDocument::parse(std::istream& in, std::string source)
{
    IniDocument doc;
    doc.source_ = std::move(source);
    std::string line;
    std::string current;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find_first_of("#;");
        const auto body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']' || body.size() < 3)
                throw ConfigError(fmt::format("{}:{}: malformed section header '{}'", doc.source_, number, body));
            current = trim(std::string_view(body).substr(1, body.size() - 2));
            auto [it, fresh] = doc.sections_.try_emplace(current);
            if (!fresh) throw ConfigError(fmt::format("{}:{}: duplicate section [{}]", doc.source_, number, current));
            it->second.line = number;
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format("{}:{}: expected 'key = value', got '{}'", doc.source_, number, body));
        if (current.empty())
            throw ConfigError(fmt::format("{}:{}: key outside of any section", doc.source_, number));
        const auto key = trim(std::string_view(body).substr(0, eq));
        const auto value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", doc.source_, number));
        auto& entries = doc.sections_[current].entries;
        if (entries.contains(key))
            throw ConfigError(fmt::format("{}:{}: [{}] {}: duplicate key", doc.source_, number, current, key));
        entries.emplace(key, Entry{value, number, false});
    }
    return doc;
}

IniDocument IniDocument::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("{}: cannot open config file", path));
    return parse(in, path);
}

bool IniDocument::has(const std::string& section, const std::string& key) const
{
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.entries.contains(key);
}

IniDocument::Entry* IniDocument::find(const std::string& section, const std::string& key)
{
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    s->second.used = true;
    const auto e = s->second.entries.find(key);
    if (e == s->second.entries.end()) return nullptr;
    e->second.used = true;
    return &e->second;
}

void IniDocument::fail(const std::string& section, const std::string& key, const std::string& message) const
{
    int line = 0;
    if (const auto s = sections_.find(section); s != sections_.end()) {
        line = s->second.line;
        if (const auto e = s->second.entries.find(key); e != s->second.entries.end()) line = e->second.line;
    }
    if (line > 0) throw ConfigError(fmt::format("{}:{}: [{}] {}: {}", source_, line, section, key, message));
    throw ConfigError(fmt::format("{}: [{}] {}: {}", source_, section, key, message));
}

std::optional<std::string> IniDocument::text(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    return e->value;
}

std::optional<std::uint64_t> IniDocument::integer(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    std::uint64_t v = 0;
    const auto* first = e->value.data();
    const auto* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(section, key, "expected a non-negative integer, got '" + e->value + "'");
    return v;
}

std::optional<double> IniDocument::real(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    try {
        std::size_t used = 0;
        const double v = std::stod(e->value, &used);
        if (used != e->value.size()) throw std::invalid_argument("trailing text");
        return v;
    } catch (const std::exception&) {
        fail(section, key, "expected a number, got '" + e->value + "'");
    }
}

std::optional<Rational> IniDocument::rational(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    try {
        return parse_rational(e->value);
    } catch (const std::exception&) {
        fail(section, key, "expected an exact number such as 0.15 or 3/20, got '" + e->value + "'");
    }
}

std::optional<bool> IniDocument::boolean(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    if (e->value == "true" || e->value == "yes" || e->value == "1") return true;
    if (e->value == "false" || e->value == "no" || e->value == "0") return false;
    fail(section, key, "expected true or false, got '" + e->value + "'");
}

std::optional<std::vector<Rational>> IniDocument::rational_list(const std::string& section, const std::string& key)
{
    const auto* e = find(section, key);
    if (!e) return std::nullopt;
    std::vector<Rational> out;
    try {
        for (const auto& item : split(e->value, ',')) {
            const auto range = split(item, ':');
            if (range.size() == 1) {
                out.push_back(parse_rational(item));
            } else if (range.size() == 3) {
                const auto lo = parse_rational(range[0]), hi = parse_rational(range[1]), step = parse_rational(range[2]);
                if (step <= 0) fail(section, key, "range step must be positive");
                for (Rational v = lo; v <= hi; v += step) out.push_back(v);
            } else {
                fail(section, key, "expected 'lo:hi:step', got '" + item + "'");
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(section, key, "malformed number list '" + e->value + "'");
    }
    if (out.empty()) fail(section, key, "list is empty");
    return out;
}

std::optional<std::vector<double>> IniDocument::real_list(const std::string& section, const std::string& key)
{
    auto exact = rational_list(section, key);
    if (!exact) return std::nullopt;
    std::vector<double> out;
    for (const auto& r : *exact) out.push_back(to_double(r));
    return out;
}

std::optional<std::vector<std::uint64_t>> IniDocument::integer_list(const std::string& section, const std::string& key)
{
    auto exact = rational_list(section, key);
    if (!exact) return std::nullopt;
    std::vector<std::uint64_t> out;
    for (const auto& r : *exact) {
        if (r.get_den() != 1 || r < 0 || !r.get_num().fits_ulong_p())
            fail(section, key, "expected non-negative integers");
        out.push_back(r.get_num().get_ui());
    }
    return out;
}

void IniDocument::finish() const
{
    for (const auto& [name, section] : sections_) {
        if (!section.used)
            throw ConfigError(fmt::format("{}:{}: [{}]: unknown section", source_, section.line, name));
        for (const auto& [key, entry] : section.entries)
            if (!entry.used)
                throw ConfigError(fmt::format("{}:{}: [{}] {}: unknown key", source_, entry.line, name, key));
    }
}

}  // namespace ashwa::cli
