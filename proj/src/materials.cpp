#include "emcad/materials.hpp"

#include <algorithm>
#include <cmath>

#include "emcad/bundled_data.hpp"
#include "emcad/error.hpp"
#include "emcad/json_fields.hpp"
#include "emcad/units.hpp"

namespace emcad {

Material::Material(std::string name, std::vector<BhPoint> bh, LossCoefficients loss,
                   double density, double stacking_factor)
    : name_(std::move(name)),
      bh_(std::move(bh)),
      loss_(loss),
      density_(density),
      stacking_factor_(stacking_factor) {
    const std::string where = "material '" + name_ + "'";
    if (name_.empty()) throw ValidationError("name", "material name must be non-empty");
    if (bh_.size() < 4) {
        throw ValidationError("bh", where + ": needs at least 4 B-H points, got " +
                                        std::to_string(bh_.size()));
    }
    if (bh_[0].h != 0.0 || bh_[0].b != 0.0) {
        throw ValidationError(index_path("bh", 0), where + ": point 0 must be (0, 0)");
    }
    for (std::size_t i = 1; i < bh_.size(); ++i) {
        const auto& p = bh_[i];
        const auto& q = bh_[i - 1];
        if (!std::isfinite(p.h) || !std::isfinite(p.b)) {
            throw ValidationError(index_path("bh", i),
                                  where + ": point " + std::to_string(i) + " is not finite");
        }
        if (!(p.h > q.h)) {
            throw ValidationError(index_path("bh", i), where + ": H not strictly increasing at point " +
                                                           std::to_string(i));
        }
        if (!(p.b > q.b)) {
            throw ValidationError(index_path("bh", i), where + ": B not strictly increasing at point " +
                                                           std::to_string(i));
        }
    }
    if (!(stacking_factor_ > 0.0 && stacking_factor_ <= 1.0)) {
        throw ValidationError("stacking_factor", where + ": stacking_factor must be in (0, 1]");
    }
    if (!(density_ > 0.0)) throw ValidationError("density", where + ": density must be > 0");
    if (loss_.k_h < 0.0 || loss_.x < 0.0 || loss_.k_e < 0.0) {
        throw ValidationError("loss", where + ": loss coefficients must be >= 0");
    }
}

double Material::initial_permeability() const { return bh_[1].b / bh_[1].h; }

double Material::initial_relative_permeability() const { return initial_permeability() / kMu0; }

double Material::saturation_knee() const {
    const double mu_init = initial_permeability();
    for (std::size_t i = 1; i + 1 < bh_.size(); ++i) {
        const double mu = (bh_[i + 1].b - bh_[i].b) / (bh_[i + 1].h - bh_[i].h);
        if (mu < 0.01 * mu_init) return bh_[i].b;
    }
    return bh_.back().b;
}

CurveSeries Material::bh_curve() const {
    std::vector<CurvePoint> pts;
    pts.reserve(bh_.size());
    for (const auto& p : bh_) pts.push_back({p.h, p.b});
    return CurveSeries("bh", "H [A/m]", "B [T]", std::move(pts));
}

double h_at(const Material& m, double b) {
    if (!(b >= 0.0)) throw DomainError("h_at: flux density must be >= 0");
    const auto& pts = m.bh_points();
    if (b >= pts.back().b) return pts.back().h + (b - pts.back().b) / kMu0;
    // first knot with B > b
    auto hi = std::upper_bound(pts.begin(), pts.end(), b,
                               [](double v, const BhPoint& p) { return v < p.b; });
    auto lo = hi - 1;
    const double t = (b - lo->b) / (hi->b - lo->b);
    return lo->h + t * (hi->h - lo->h);
}

double b_at(const Material& m, double h) {
    if (!(h >= 0.0)) throw DomainError("b_at: field strength must be >= 0");
    const auto& pts = m.bh_points();
    if (h >= pts.back().h) return pts.back().b + (h - pts.back().h) * kMu0;
    auto hi = std::upper_bound(pts.begin(), pts.end(), h,
                               [](double v, const BhPoint& p) { return v < p.h; });
    auto lo = hi - 1;
    const double t = (h - lo->h) / (hi->h - lo->h);
    return lo->b + t * (hi->b - lo->b);
}

double specific_core_loss(const Material& m, double b_peak, double frequency) {
    if (!(b_peak >= 0.0)) throw DomainError("specific_core_loss: B_peak must be >= 0");
    if (!(frequency > 0.0)) throw DomainError("specific_core_loss: frequency must be > 0");
    const auto& c = m.loss();
    return c.k_h * frequency * std::pow(b_peak, c.x) + c.k_e * frequency * frequency * b_peak * b_peak;
}

Material material_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    const std::string name = r.string("name");
    const double density = r.number("density");
    const double stacking = r.number("stacking_factor");
    ObjectReader lr(r.child("loss"), r.path_of("loss"));
    LossCoefficients loss{lr.number("k_h"), lr.number("x"), lr.number("k_e")};
    lr.finish();

    const Json& bh = r.child("bh");
    const auto bh_path = r.path_of("bh");
    if (!bh.is_array()) throw ValidationError(bh_path, bh_path + ": expected an array");
    std::vector<BhPoint> pts;
    for (std::size_t i = 0; i < bh.size(); ++i) {
        const auto p = index_path(bh_path, i);
        const Json& e = bh[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ValidationError(p, p + ": expected [H, B] number pair");
        }
        pts.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    r.finish();

    try {
        return Material(name, std::move(pts), loss, density, stacking);
    } catch (const ValidationError& e) {
        throw ValidationError(join_path(path, e.field_path()), e.what());
    }
}

Json material_to_json(const Material& m) {
    Json bh = Json::array();
    for (const auto& p : m.bh_points()) bh.push_back({p.h, p.b});
    return {{"name", m.name()},
            {"density", m.density()},
            {"stacking_factor", m.stacking_factor()},
            {"loss", {{"k_h", m.loss().k_h}, {"x", m.loss().x}, {"k_e", m.loss().k_e}}},
            {"bh", bh}};
}

MaterialLibrary load_material_library(std::string_view source) {
    const Json doc = parse_json_text(source);
    ObjectReader r(doc, "");
    const int version = r.integer("schema_version");
    if (version != 1) {
        throw ValidationError("schema_version",
                              "unsupported material schema_version " + std::to_string(version));
    }
    const Json& mats = r.child("materials");
    if (!mats.is_array() || mats.empty()) {
        throw ValidationError("materials", "materials: expected a non-empty array");
    }
    r.finish();
    MaterialLibrary lib;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        lib.push_back(material_from_json(mats[i], index_path("materials", i)));
        for (std::size_t k = 0; k + 1 < lib.size(); ++k) {
            if (lib[k].name() == lib.back().name()) {
                throw ValidationError(index_path("materials", i) + ".name",
                                      "duplicate material name '" + lib.back().name() + "'");
            }
        }
    }
    return lib;
}

const MaterialLibrary& bundled_material_library() {
    static const MaterialLibrary lib = load_material_library(bundled::materials_json());
    return lib;
}

const Material& find_material(const MaterialLibrary& lib, std::string_view name) {
    for (const auto& m : lib) {
        if (m.name() == name) return m;
    }
    throw ValidationError("material", "unknown material '" + std::string(name) + "'");
}

}  // namespace emcad
