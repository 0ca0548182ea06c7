#pragma once

// Strict reader for JSON objects: every required field must be present with
// the right type, and finish() rejects keys that were never read. Errors are
// ValidationError carrying the full field path.

#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "emcad/error.hpp"

namespace emcad {

using Json = nlohmann::json;

std::string join_path(std::string_view parent, std::string_view key);
std::string index_path(std::string_view parent, std::size_t index);

class ObjectReader {
public:
    ObjectReader(const Json& j, std::string path);

    bool has(std::string_view key) const;

    double number(std::string_view key);
    double positive(std::string_view key);
    double non_negative(std::string_view key);
    double fraction(std::string_view key);  // (0, 1)
    std::optional<double> optional_number(std::string_view key);
    int integer(std::string_view key);
    std::string string(std::string_view key);
    bool boolean(std::string_view key);

    // Raw access; marks the key consumed.
    const Json& child(std::string_view key);
    const Json* optional_child(std::string_view key);
    std::string path_of(std::string_view key) const { return join_path(path_, key); }
    const std::string& path() const { return path_; }

    template <class E>
    E enumeration(std::string_view key,
                  std::initializer_list<std::pair<std::string_view, E>> options) {
        const std::string value = string(key);
        for (const auto& [label, e] : options) {
            if (value == label) return e;
        }
        std::string allowed;
        for (const auto& [label, e] : options) {
            if (!allowed.empty()) allowed += ", ";
            allowed += label;
        }
        throw ValidationError(path_of(key), path_of(key) + ": '" + value +
                                                "' is not one of {" + allowed + "}");
    }

    void finish() const;

private:
    const Json& at(std::string_view key);

    const Json& j_;
    std::string path_;
    std::set<std::string, std::less<>> consumed_;
};

// Recursive merge of `patch` into `base` by field name. Keys absent from
// `base` are rejected unless `allow_new` is set.
void merge_patch(Json& base, const Json& patch, std::string_view path, bool allow_new);

// Parses text as JSON; syntax errors become ValidationError("", "line L,
// column C: ...").
Json parse_json_text(std::string_view text);

}  // namespace emcad
