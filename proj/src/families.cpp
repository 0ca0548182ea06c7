#include "emcad/families.hpp"

#include "emcad/bundled_data.hpp"
#include "emcad/serialize.hpp"

namespace emcad {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::transformer: return "transformer";
        case Family::induction: return "induction";
        case Family::synchronous: return "synchronous";
        case Family::dc: return "dc";
        case Family::srm: return "srm";
    }
    return "";
}

Family parse_family(std::string_view name, const std::string& path) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    throw ValidationError(path, path + ": unknown machine family '" + std::string(name) +
                                    "' (transformer, induction, synchronous, dc, srm)");
}

namespace {

// Parses the flat field table of a constants document for one family and
// returns it re-serialized (full, canonical).
Json constants_fields(Family f, const Json& fields, const std::string& path) {
    switch (f) {
        case Family::transformer: {
            auto c = transformer::constants_from_json(fields, path);
            transformer::validate(c);
            return transformer::to_json(c);
        }
        case Family::induction: {
            auto c = induction::constants_from_json(fields, path);
            induction::validate(c);
            return induction::to_json(c);
        }
        case Family::synchronous: {
            auto c = synchronous::constants_from_json(fields, path);
            synchronous::validate(c);
            return synchronous::to_json(c);
        }
        case Family::dc: {
            auto c = dc::constants_from_json(fields, path);
            dc::validate(c);
            return dc::to_json(c);
        }
        case Family::srm: {
            auto c = srm::constants_from_json(fields, path);
            srm::validate(c);
            return srm::to_json(c);
        }
    }
    return {};
}

Json with_header(Family f, Json fields) {
    fields["schema_version"] = kSchemaVersion;
    fields["family"] = family_name(f);
    return fields;
}

}  // namespace

Json normalize_constants(Family f, const Json& doc, const std::string& path) {
    if (!doc.is_object()) throw ValidationError(path, path + ": expected an object");
    Json fields = doc;
    if (auto it = fields.find("schema_version"); it != fields.end()) {
        if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
            const auto p = join_path(path, "schema_version");
            throw ValidationError(p, p + ": unsupported constants schema version");
        }
        fields.erase(it);
    } else {
        const auto p = join_path(path, "schema_version");
        throw ValidationError(p, p + ": required field missing");
    }
    if (auto it = fields.find("family"); it != fields.end()) {
        if (!it->is_string() || it->get<std::string>() != family_name(f)) {
            const auto p = join_path(path, "family");
            throw ValidationError(p, p + ": constants are for another machine family");
        }
        fields.erase(it);
    }
    return with_header(f, constants_fields(f, fields, path));
}

Json default_constants(Family f) {
    return normalize_constants(f, parse_json_text(bundled::constants_json(family_name(f))));
}

Json resolve_constants(Family f, const Json& overrides) {
    Json doc = default_constants(f);
    if (!overrides.is_null()) merge_patch(doc, overrides, "constants", false);
    return normalize_constants(f, doc);
}

namespace {

template <class Spec, class Parse, class Validate, class ToJson>
Json normalize_with(const Json& spec, const std::string& path, Parse parse, Validate validate,
                    ToJson to_json) {
    Spec s = parse(spec, path);
    try {
        validate(s);
    } catch (const ValidationError& e) {
        throw ValidationError(join_path(path, e.field_path()),
                              path.empty() ? std::string(e.what()) : path + "." + e.what());
    }
    return to_json(s);
}

}  // namespace

Json normalize_spec(Family f, const Json& spec, const std::string& path) {
    switch (f) {
        case Family::transformer:
            return normalize_with<transformer::Spec>(
                spec, path, transformer::spec_from_json,
                [](const transformer::Spec& s) { transformer::validate(s); },
                [](const transformer::Spec& s) { return transformer::to_json(s); });
        case Family::induction:
            return normalize_with<induction::Spec>(
                spec, path, induction::spec_from_json, [](const induction::Spec& s) { induction::validate(s); },
                [](const induction::Spec& s) { return induction::to_json(s); });
        case Family::synchronous:
            return normalize_with<synchronous::Spec>(
                spec, path, synchronous::spec_from_json,
                [](const synchronous::Spec& s) {
                    synchronous::validate(s);
                    synchronous::pole_count(s.frequency, s.speed_rpm);
                },
                [](const synchronous::Spec& s) { return synchronous::to_json(s); });
        case Family::dc:
            return normalize_with<dc::Spec>(
                spec, path, dc::spec_from_json, [](const dc::Spec& s) { dc::validate(s); },
                [](const dc::Spec& s) { return dc::to_json(s); });
        case Family::srm:
            return normalize_with<srm::Spec>(
                spec, path, srm::spec_from_json, [](const srm::Spec& s) { srm::validate(s); },
                [](const srm::Spec& s) { return srm::to_json(s); });
    }
    return {};
}

namespace {

Json strip_header(const Json& constants) {
    Json fields = constants;
    fields.erase("schema_version");
    fields.erase("family");
    return fields;
}

}  // namespace

Json run_family(Family f, const Json& spec_doc, const Json& constants_doc, const MaterialLibrary& lib,
                Execution exec) {
    const Json fields = strip_header(normalize_constants(f, constants_doc));
    switch (f) {
        case Family::transformer: {
            auto s = transformer::spec_from_json(spec_doc);
            auto c = transformer::constants_from_json(fields, "constants");
            return transformer::to_json(transformer::design_transformer(s, find_material(lib, s.material), c));
        }
        case Family::induction: {
            auto s = induction::spec_from_json(spec_doc);
            auto c = induction::constants_from_json(fields, "constants");
            return induction::to_json(induction::design_induction(s, find_material(lib, s.material), c, exec));
        }
        case Family::synchronous: {
            auto s = synchronous::spec_from_json(spec_doc);
            auto c = synchronous::constants_from_json(fields, "constants");
            return synchronous::to_json(
                synchronous::design_synchronous(s, find_material(lib, s.material), c, exec));
        }
        case Family::dc: {
            auto s = dc::spec_from_json(spec_doc);
            auto c = dc::constants_from_json(fields, "constants");
            return dc::to_json(dc::design_dc(s, find_material(lib, s.material), c));
        }
        case Family::srm: {
            auto s = srm::spec_from_json(spec_doc);
            auto c = srm::constants_from_json(fields, "constants");
            const auto report = srm::design_srm(s, find_material(lib, s.material), c, exec);
            return srm::to_json(report, srm::suggest_refinement(report, s, c));
        }
    }
    return {};
}

const Json& result_curves(const Json& result) {
    static const Json empty = Json::object();
    auto it = result.find("curves");
    return it == result.end() ? empty : *it;
}

}  // namespace emcad
