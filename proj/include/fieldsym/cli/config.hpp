#pragma once

#include "fieldsym/exact/errors.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fieldsym::cli {

using Json = nlohmann::ordered_json;

/// Invalid or missing configuration; `key` is the dotted path of the offending entry.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& message)
        : Error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Reads the TOML subset documented in docs/formats.md into a JSON object. Key order follows
/// the file. Throws ConfigError with key "line N" on syntax errors.
Json parse_toml(std::string_view text);
Json load_toml_file(const std::string& path);

/// Typed access to a dotted path with defaults. Type mismatches throw ConfigError naming the path.
class ConfigView {
public:
    explicit ConfigView(const Json& root) : root_(root) {}

    bool has(const std::string& path) const { return find(path) != nullptr; }
    std::optional<mpq_class> rational(const std::string& path) const;
    mpq_class rational(const std::string& path, const mpq_class& fallback) const;
    std::optional<double> real(const std::string& path) const;
    double real(const std::string& path, double fallback) const;
    long integer(const std::string& path, long fallback) const;
    bool boolean(const std::string& path, bool fallback) const;
    std::optional<std::string> string(const std::string& path) const;
    std::string string(const std::string& path, const std::string& fallback) const;
    std::vector<double> reals(const std::string& path, const std::vector<double>& fallback) const;

    /// Throws when a table contains a key outside `allowed` (catches typos).
    void only_keys(const std::string& table, const std::vector<std::string>& allowed) const;

private:
    const Json* find(const std::string& path) const;
    const Json& root_;
};

/// Writes `value` at a dotted path, creating intermediate objects.
void set_path(Json& root, const std::string& path, Json value);

}  // namespace fieldsym::cli
