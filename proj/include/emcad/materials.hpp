#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "emcad/curve.hpp"

namespace emcad {

struct BhPoint {
    double h = 0.0;  // A/m
    double b = 0.0;  // T
    bool operator==(const BhPoint&) const = default;
};

// Two-term Steinmetz core loss: p = k_h·f·B^x + k_e·f²·B² [W/kg].
struct LossCoefficients {
    double k_h = 0.0;
    double x = 2.0;
    double k_e = 0.0;
    bool operator==(const LossCoefficients&) const = default;
};

// A single-valued magnetization curve plus loss data for one steel.
// Construction validates the invariants: curve starts at the origin, is
// strictly increasing in H and B, has at least four knots; stacking factor
// in (0, 1]; loss coefficients non-negative. Violations throw
// ValidationError naming the offending point.
class Material {
public:
    Material(std::string name, std::vector<BhPoint> bh, LossCoefficients loss,
             double density, double stacking_factor);

    const std::string& name() const { return name_; }
    const std::vector<BhPoint>& bh_points() const { return bh_; }
    const LossCoefficients& loss() const { return loss_; }
    double density() const { return density_; }
    double stacking_factor() const { return stacking_factor_; }

    // dB/dH of the first segment (initial permeability, H/m).
    double initial_permeability() const;
    double initial_relative_permeability() const;

    // Start of the first segment whose differential permeability has
    // dropped below 1% of the initial value; the curve's last knot when no
    // such segment exists.
    double saturation_knee() const;

    CurveSeries bh_curve() const;

    bool operator==(const Material&) const = default;

private:
    std::string name_;
    std::vector<BhPoint> bh_;
    LossCoefficients loss_;
    double density_;
    double stacking_factor_;
};

using MaterialLibrary = std::vector<Material>;

// Parses the material library document (JSON, schema_version 1; see
// docs/file_formats.md). Throws ValidationError with a field path, or with
// "line N, column M" for syntax errors.
MaterialLibrary load_material_library(std::string_view source);

// The library shipped with the tool (four steels).
const MaterialLibrary& bundled_material_library();

// Throws ValidationError("material", ...) if `name` is not in the library.
const Material& find_material(const MaterialLibrary& lib, std::string_view name);

// H at flux density B on the piecewise-linear curve; above the last knot
// the slope is 1/μ0.
double h_at(const Material& m, double b);

// Exact inverse of h_at.
double b_at(const Material& m, double h);

double specific_core_loss(const Material& m, double b_peak, double frequency);

}  // namespace emcad
