#include "emcad/sizing.hpp"

#include <cmath>
#include <string>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be > 0");
    }
}

}  // namespace

void validate_loadings(const Loadings& l) {
    if (!(l.b_av > 0.0)) throw DomainError("specific magnetic loading must be > 0");
    if (l.b_av > kMaxMagneticLoading) {
        throw DomainError("specific magnetic loading exceeds 2.5 T");
    }
    if (!(l.ac > 0.0)) throw DomainError("specific electric loading must be > 0");
}

void require_even_poles(int poles, const char* what) {
    if (poles < 2 || poles % 2 != 0) {
        throw DomainError(std::string(what) + ": pole count must be even and >= 2 (got " +
                          std::to_string(poles) + ")");
    }
}

double output_coefficient(double p_kva, double d, double l, double n_rpm) {
    require_positive(p_kva, "output");
    require_positive(d, "diameter");
    require_positive(l, "length");
    require_positive(n_rpm, "speed");
    return p_kva / (d * d * l * n_rpm);
}

double specific_magnetic_loading(int poles, double flux_per_pole, double d, double l) {
    require_even_poles(poles, "specific_magnetic_loading");
    if (!(flux_per_pole >= 0.0)) throw DomainError("flux per pole must be >= 0");
    require_positive(d, "diameter");
    require_positive(l, "length");
    return poles * flux_per_pole / (kPi * d * l);
}

double flux_per_pole_from_loading(int poles, double b_av, double d, double l) {
    require_even_poles(poles, "flux_per_pole_from_loading");
    require_positive(b_av, "magnetic loading");
    return b_av * kPi * d * l / poles;
}

double specific_electric_loading(double total_ampere_conductors, double d) {
    require_positive(total_ampere_conductors, "ampere-conductors");
    require_positive(d, "diameter");
    return total_ampere_conductors / (kPi * d);
}

MainDimensions separate_main_dimensions(double d2l, const ShapePolicy& policy, int poles) {
    require_positive(d2l, "D²L");
    return std::visit(
        [&](const auto& p) -> MainDimensions {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RatioPolicy>) {
                require_even_poles(poles, "ratio shape policy");
                require_positive(p.l_over_tau, "l_over_tau");
                // l = r·πd/p  =>  d³ = d2l·p/(r·π)
                const double d = std::cbrt(d2l * poles / (p.l_over_tau * kPi));
                return {d, d2l / (d * d)};
            } else if constexpr (std::is_same_v<P, FixedDiameter>) {
                require_positive(p.d, "fixed diameter");
                return {p.d, d2l / (p.d * p.d)};
            } else {
                require_positive(p.l, "fixed length");
                return {std::sqrt(d2l / p.l), p.l};
            }
        },
        policy);
}

double synchronous_speed_rpm(double frequency, int poles) {
    require_positive(frequency, "frequency");
    require_even_poles(poles, "synchronous speed");
    return 120.0 * frequency / poles;
}

}  // namespace emcad
