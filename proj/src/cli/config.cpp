#include "fieldsym/cli/config.hpp"

#include "fieldsym/exact/gauss_rational.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fieldsym::cli {

namespace {

/// Recursive-descent reader over the whole text; arrays may span lines.
class TomlReader {
public:
    explicit TomlReader(std::string_view text) : s_(text) {}

    Json parse() {
        Json root = Json::object();
        Json* table = &root;
        while (true) {
            skip_blank_lines();
            if (eof()) break;
            if (peek() == '[') {
                if (s_.substr(pos_, 2) == "[[") fail("arrays of tables are not supported");
                ++pos_;
                skip_ws();
                const auto path = key_path();
                skip_ws();
                expect(']');
                table = &root;
                for (const auto& k : path) {
                    Json& next = (*table)[k];
                    if (next.is_null()) next = Json::object();
                    if (!next.is_object()) fail("'" + k + "' is not a table");
                    table = &next;
                }
            } else {
                const auto path = key_path();
                skip_ws();
                expect('=');
                skip_ws();
                Json v = value();
                Json* target = table;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    Json& next = (*target)[path[i]];
                    if (next.is_null()) next = Json::object();
                    if (!next.is_object()) fail("'" + path[i] + "' is not a table");
                    target = &next;
                }
                if (target->contains(path.back())) fail("duplicate key '" + path.back() + "'");
                (*target)[path.back()] = std::move(v);
            }
            end_of_line();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i)
            if (s_[i] == '\n') ++line;
        throw ConfigError("line " + std::to_string(line), msg);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    void skip_comment() {
        if (peek() == '#')
            while (!eof() && peek() != '\n') ++pos_;
    }
    void skip_blank_lines() {
        while (!eof()) {
            skip_ws();
            skip_comment();
            if (peek() == '\r') ++pos_;
            if (peek() == '\n') {
                ++pos_;
                continue;
            }
            break;
        }
    }
    /// Whitespace, newlines and comments inside arrays.
    void skip_all() {
        while (!eof()) {
            skip_ws();
            skip_comment();
            if (peek() == '\n' || peek() == '\r') {
                ++pos_;
                continue;
            }
            break;
        }
    }
    void end_of_line() {
        skip_ws();
        skip_comment();
        if (peek() == '\r') ++pos_;
        if (!eof() && peek() != '\n') fail("unexpected trailing text");
    }

    std::vector<std::string> key_path() {
        std::vector<std::string> out;
        while (true) {
            skip_ws();
            if (peek() == '"') {
                out.push_back(basic_string());
            } else {
                const std::size_t start = pos_;
                while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_' || peek() == '-')) ++pos_;
                if (pos_ == start) fail("expected a key");
                out.emplace_back(s_.substr(start, pos_ - start));
            }
            skip_ws();
            if (peek() != '.') break;
            ++pos_;
        }
        return out;
    }

    std::string basic_string() {
        expect('"');
        std::string out;
        while (true) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = s_[pos_++];
            if (c == '"') break;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (eof()) fail("unterminated escape");
            switch (s_[pos_++]) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                default: fail("unsupported escape sequence");
            }
        }
        return out;
    }

    std::string literal_string() {
        expect('\'');
        const std::size_t start = pos_;
        while (!eof() && peek() != '\'' && peek() != '\n') ++pos_;
        if (peek() != '\'') fail("unterminated string");
        std::string out(s_.substr(start, pos_ - start));
        ++pos_;
        return out;
    }

    Json value() {
        const char c = peek();
        if (c == '"') {
            if (s_.substr(pos_, 3) == "\"\"\"") fail("multi-line strings are not supported");
            return basic_string();
        }
        if (c == '\'') return literal_string();
        if (c == '[') return array();
        if (c == '{') return inline_table();
        const std::size_t start = pos_;
        while (!eof() && std::string_view(" \t\r\n,]}#").find(peek()) == std::string_view::npos) ++pos_;
        std::string tok(s_.substr(start, pos_ - start));
        if (tok.empty()) fail("expected a value");
        if (tok == "true") return true;
        if (tok == "false") return false;
        std::string digits;
        for (char ch : tok)
            if (ch != '_') digits += ch;
        if (digits == "inf" || digits == "+inf") return std::numeric_limits<double>::infinity();
        if (digits == "-inf") return -std::numeric_limits<double>::infinity();
        const bool is_float = digits.find_first_of(".eE") != std::string::npos;
        try {
            std::size_t used = 0;
            if (is_float) {
                const double d = std::stod(digits, &used);
                if (used == digits.size()) return d;
            } else {
                const long long i = std::stoll(digits, &used, 10);
                if (used == digits.size()) return i;
            }
        } catch (const std::exception&) {
        }
        fail("cannot read value '" + tok + "' (dates and bare words are not supported)");
    }

    Json array() {
        expect('[');
        Json out = Json::array();
        while (true) {
            skip_all();
            if (peek() == ']') {
                ++pos_;
                return out;
            }
            out.push_back(value());
            skip_all();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            skip_all();
            expect(']');
            return out;
        }
    }

    Json inline_table() {
        expect('{');
        Json out = Json::object();
        skip_ws();
        if (peek() == '}') {
            ++pos_;
            return out;
        }
        while (true) {
            const auto path = key_path();
            if (path.size() != 1) fail("dotted keys inside inline tables are not supported");
            skip_ws();
            expect('=');
            skip_ws();
            out[path.front()] = value();
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                continue;
            }
            expect('}');
            return out;
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : path) {
        if (c == '.') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Json parse_toml(std::string_view text) { return TomlReader(text).parse(); }

Json load_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_toml(ss.str());
}

void set_path(Json& root, const std::string& path, Json value) {
    Json* cur = &root;
    const auto parts = split_path(path);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        Json& next = (*cur)[parts[i]];
        if (next.is_null()) next = Json::object();
        if (!next.is_object()) throw ConfigError(path, "'" + parts[i] + "' is not a table");
        cur = &next;
    }
    (*cur)[parts.back()] = std::move(value);
}

const Json* ConfigView::find(const std::string& path) const {
    const Json* cur = &root_;
    for (const auto& p : split_path(path)) {
        if (!cur->is_object()) return nullptr;
        auto it = cur->find(p);
        if (it == cur->end()) return nullptr;
        cur = &*it;
    }
    return cur;
}

std::optional<mpq_class> ConfigView::rational(const std::string& path) const {
    const Json* v = find(path);
    if (!v) return std::nullopt;
    if (v->is_number_integer()) return mpq_class(std::to_string(v->get<long long>()));
    if (v->is_string()) {
        try {
            return exact::parse_rational(v->get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError(path, "'" + v->get<std::string>() + "' is not a rational of the form p/q");
        }
    }
    if (v->is_number_float()) throw ConfigError(path, "exact input must be an integer or a \"p/q\" string, not a float");
    throw ConfigError(path, "expected a rational");
}

mpq_class ConfigView::rational(const std::string& path, const mpq_class& fallback) const {
    auto v = rational(path);
    return v ? *v : fallback;
}

std::optional<double> ConfigView::real(const std::string& path) const {
    const Json* v = find(path);
    if (!v) return std::nullopt;
    if (v->is_number()) return v->get<double>();
    if (v->is_string()) {
        try {
            return exact::parse_rational(v->get<std::string>()).get_d();
        } catch (const std::exception&) {
            throw ConfigError(path, "'" + v->get<std::string>() + "' is not a number");
        }
    }
    throw ConfigError(path, "expected a number");
}

double ConfigView::real(const std::string& path, double fallback) const {
    auto v = real(path);
    return v ? *v : fallback;
}

long ConfigView::integer(const std::string& path, long fallback) const {
    const Json* v = find(path);
    if (!v) return fallback;
    if (!v->is_number_integer()) throw ConfigError(path, "expected an integer");
    return v->get<long>();
}

bool ConfigView::boolean(const std::string& path, bool fallback) const {
    const Json* v = find(path);
    if (!v) return fallback;
    if (!v->is_boolean()) throw ConfigError(path, "expected true or false");
    return v->get<bool>();
}

std::optional<std::string> ConfigView::string(const std::string& path) const {
    const Json* v = find(path);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError(path, "expected a string");
    return v->get<std::string>();
}

std::string ConfigView::string(const std::string& path, const std::string& fallback) const {
    auto v = string(path);
    return v ? *v : fallback;
}

std::vector<double> ConfigView::reals(const std::string& path, const std::vector<double>& fallback) const {
    const Json* v = find(path);
    if (!v) return fallback;
    if (!v->is_array()) throw ConfigError(path, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : *v) {
        if (!e.is_number()) throw ConfigError(path, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

void ConfigView::only_keys(const std::string& table, const std::vector<std::string>& allowed) const {
    const Json* t = table.empty() ? &root_ : find(table);
    if (!t) return;
    if (!t->is_object()) throw ConfigError(table, "expected a table");
    for (const auto& [k, v] : t->items()) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == k;
        if (!ok) throw ConfigError(table.empty() ? k : table + "." + k, "unknown key");
    }
}

}  // namespace fieldsym::cli
