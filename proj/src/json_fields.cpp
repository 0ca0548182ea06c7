#include "emcad/json_fields.hpp"

#include <cmath>

namespace emcad {

std::string join_path(std::string_view parent, std::string_view key) {
    if (parent.empty()) return std::string(key);
    std::string p(parent);
    p += '.';
    p += key;
    return p;
}

std::string index_path(std::string_view parent, std::size_t index) {
    return std::string(parent) + "[" + std::to_string(index) + "]";
}

ObjectReader::ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) {
        throw ValidationError(path_, (path_.empty() ? std::string("document") : path_) +
                                         ": expected an object");
    }
}

bool ObjectReader::has(std::string_view key) const { return j_.contains(key); }

const Json& ObjectReader::at(std::string_view key) {
    auto it = j_.find(key);
    if (it == j_.end()) {
        throw ValidationError(path_of(key), path_of(key) + ": required field missing");
    }
    consumed_.emplace(key);
    return *it;
}

double ObjectReader::number(std::string_view key) {
    const Json& v = at(key);
    if (!v.is_number()) {
        throw ValidationError(path_of(key), path_of(key) + ": expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ValidationError(path_of(key), path_of(key) + ": must be finite");
    }
    return d;
}

double ObjectReader::positive(std::string_view key) {
    const double d = number(key);
    if (!(d > 0.0)) {
        throw ValidationError(path_of(key), path_of(key) + ": must be > 0 (got " +
                                                std::to_string(d) + ")");
    }
    return d;
}

double ObjectReader::non_negative(std::string_view key) {
    const double d = number(key);
    if (d < 0.0) {
        throw ValidationError(path_of(key), path_of(key) + ": must be >= 0 (got " +
                                                std::to_string(d) + ")");
    }
    return d;
}

double ObjectReader::fraction(std::string_view key) {
    const double d = number(key);
    if (!(d > 0.0 && d < 1.0)) {
        throw ValidationError(path_of(key), path_of(key) + ": must be in (0, 1) (got " +
                                                std::to_string(d) + ")");
    }
    return d;
}

std::optional<double> ObjectReader::optional_number(std::string_view key) {
    if (!has(key)) return std::nullopt;
    if (j_.at(std::string(key)).is_null()) {
        consumed_.emplace(key);
        return std::nullopt;
    }
    return number(key);
}

int ObjectReader::integer(std::string_view key) {
    const Json& v = at(key);
    if (!v.is_number_integer()) {
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e9) {
                return static_cast<int>(d);
            }
        }
        throw ValidationError(path_of(key), path_of(key) + ": expected an integer");
    }
    return v.get<int>();
}

std::string ObjectReader::string(std::string_view key) {
    const Json& v = at(key);
    if (!v.is_string()) {
        throw ValidationError(path_of(key), path_of(key) + ": expected a string");
    }
    return v.get<std::string>();
}

bool ObjectReader::boolean(std::string_view key) {
    const Json& v = at(key);
    if (!v.is_boolean()) {
        throw ValidationError(path_of(key), path_of(key) + ": expected true/false");
    }
    return v.get<bool>();
}

const Json& ObjectReader::child(std::string_view key) { return at(key); }

const Json* ObjectReader::optional_child(std::string_view key) {
    if (!has(key)) return nullptr;
    return &at(key);
}

void ObjectReader::finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
        if (!consumed_.contains(it.key())) {
            const auto p = join_path(path_, it.key());
            throw ValidationError(p, p + ": unknown field");
        }
    }
}

void merge_patch(Json& base, const Json& patch, std::string_view path, bool allow_new) {
    if (!patch.is_object()) {
        throw ValidationError(std::string(path), std::string(path.empty() ? "patch" : path) +
                                                     ": expected an object");
    }
    for (auto it = patch.begin(); it != patch.end(); ++it) {
        const auto p = join_path(path, it.key());
        auto target = base.find(it.key());
        if (target == base.end()) {
            if (!allow_new) throw ValidationError(p, p + ": unknown field");
            base[it.key()] = it.value();
            continue;
        }
        if (target->is_object() && it.value().is_object()) {
            merge_patch(*target, it.value(), p, allow_new);
        } else {
            *target = it.value();
        }
    }
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ValidationError("", "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + e.what());
    }
}

}  // namespace emcad
