#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ashwa/core/rational.hpp"

namespace ashwa::cli {

/// Configuration problem, reported as "source:line: [section] key: message".
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat "key = value" text with [section] headers and '#' or ';' comments.
///
/// Every key must be read through one of the typed getters; finish() then
/// rejects whatever is left over, so a misspelt key is never silently ignored.
class IniDocument {
public:
    static IniDocument parse(std::istream& in, std::string source);
    static IniDocument load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    bool has_section(const std::string& section) const { return sections_.contains(section); }

    std::optional<std::string> text(const std::string& section, const std::string& key);
    std::optional<std::uint64_t> integer(const std::string& section, const std::string& key);
    std::optional<double> real(const std::string& section, const std::string& key);
    std::optional<Rational> rational(const std::string& section, const std::string& key);
    std::optional<bool> boolean(const std::string& section, const std::string& key);
    /// Comma-separated list; "a:b:step" expands to an inclusive range.
    std::optional<std::vector<Rational>> rational_list(const std::string& section, const std::string& key);
    std::optional<std::vector<double>> real_list(const std::string& section, const std::string& key);
    std::optional<std::vector<std::uint64_t>> integer_list(const std::string& section, const std::string& key);

    /// Throws for any section or key that was never read.
    void finish() const;

    /// Error located at the line of section/key.
    [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& message) const;

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool used = false;
    };
    struct Section {
        int line = 0;
        bool used = false;
        std::map<std::string, Entry> entries;
    };

    Entry* find(const std::string& section, const std::string& key);

    std::string source_;
    std::map<std::string, Section> sections_;
};

}  // namespace ashwa::cli
