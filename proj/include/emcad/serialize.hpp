#pragma once

// JSON documents for specs, constants and design results. Spec and
// constants readers are strict (unknown fields rejected, field paths in
// errors); results are write-only and re-derived from spec + constants when
// a report is re-validated.

#include <string>
#include <string_view>
#include <vector>

#include "emcad/curve.hpp"
#include "emcad/dcmachine.hpp"
#include "emcad/induction.hpp"
#include "emcad/json_fields.hpp"
#include "emcad/materials.hpp"
#include "emcad/srm.hpp"
#include "emcad/synchronous.hpp"
#include "emcad/transformer.hpp"

namespace emcad {

inline constexpr int kSchemaVersion = 1;

Json curve_to_json(const CurveSeries& c);
CurveSeries curve_from_json(const Json& j, const std::string& path);

Json material_to_json(const Material& m);
Material material_from_json(const Json& j, const std::string& path);
Json material_library_to_json(const MaterialLibrary& lib);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_document(const Json& j);

namespace transformer {
Json to_json(const Spec& s);
Spec spec_from_json(const Json& j, const std::string& path = "");
Json to_json(const Constants& c);  // flat field table, no header
Constants constants_from_json(const Json& j, const std::string& path = "");
Json to_json(const Design& d);
}  // namespace transformer

namespace induction {
Json to_json(const Spec& s);
Spec spec_from_json(const Json& j, const std::string& path = "");
Json to_json(const Constants& c);
Constants constants_from_json(const Json& j, const std::string& path = "");
Json to_json(const Design& d);
}  // namespace induction

namespace synchronous {
Json to_json(const Spec& s);
Spec spec_from_json(const Json& j, const std::string& path = "");
Json to_json(const Constants& c);
Constants constants_from_json(const Json& j, const std::string& path = "");
Json to_json(const Design& d);
}  // namespace synchronous

namespace dc {
Json to_json(const Spec& s);
Spec spec_from_json(const Json& j, const std::string& path = "");
Json to_json(const Constants& c);
Constants constants_from_json(const Json& j, const std::string& path = "");
Json to_json(const Design& d);
}  // namespace dc

namespace srm {
Json to_json(const Spec& s);
Spec spec_from_json(const Json& j, const std::string& path = "");
Json to_json(const Constants& c);
Constants constants_from_json(const Json& j, const std::string& path = "");
Json to_json(const Report& r, const std::vector<Suggestion>& suggestions);
Json to_json(const Geometry& g);
}  // namespace srm

}  // namespace emcad
