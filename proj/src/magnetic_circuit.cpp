#include "emcad/magnetic_circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad {

namespace {

void check_geometry(double length, double area) {
    if (!(length > 0.0) || !(area > 0.0)) {
        throw DomainError("circuit segment needs length > 0 and area > 0");
    }
}

}  // namespace

CircuitSegment CircuitSegment::air(double length, double area) {
    check_geometry(length, area);
    return {length, area, SegmentKind::airgap, nullptr, 1.0};
}

CircuitSegment CircuitSegment::iron(double length, double area, const Material& m) {
    check_geometry(length, area);
    return {length, area, SegmentKind::iron, &m, 1.0};
}

CircuitSegment CircuitSegment::linear(double length, double area, double mu_r) {
    check_geometry(length, area);
    if (!(mu_r >= 1.0)) throw DomainError("linear iron segment needs mu_r >= 1");
    return {length, area, SegmentKind::linear_iron, nullptr, mu_r};
}

double CircuitSegment::mmf_drop(double flux) const {
    const double b = flux / area;
    switch (kind) {
        case SegmentKind::airgap:
            return b * length / kMu0;
        case SegmentKind::linear_iron:
            return b * length / (kMu0 * relative_permeability);
        case SegmentKind::iron:
            return h_at(*material, b) * length;
    }
    return 0.0;
}

double CircuitSegment::linear_reluctance() const {
    switch (kind) {
        case SegmentKind::airgap:
            return length / (kMu0 * area);
        case SegmentKind::linear_iron:
            return length / (kMu0 * relative_permeability * area);
        case SegmentKind::iron:
            return length / (material->initial_permeability() * area);
    }
    return 0.0;
}

double total_mmf_drop(std::span<const CircuitSegment> segments, double flux) {
    double sum = 0.0;
    for (const auto& s : segments) sum += s.mmf_drop(flux);
    return sum;
}

CircuitSolution solve_series_magnetic_circuit(std::span<const CircuitSegment> segments,
                                              double applied_mmf, const SolverOptions& options) {
    if (segments.empty()) throw DomainError("magnetic circuit needs at least one segment");
    if (!(applied_mmf >= 0.0) || !std::isfinite(applied_mmf)) {
        throw DomainError("applied MMF must be finite and >= 0");
    }
    for (const auto& s : segments) {
        if (s.kind == SegmentKind::iron && s.material == nullptr) {
            throw DomainError("iron segment without a material");
        }
    }

    CircuitSolution sol;
    sol.b.assign(segments.size(), 0.0);
    sol.mmf_drop.assign(segments.size(), 0.0);
    if (applied_mmf == 0.0) return sol;

    double min_area = std::numeric_limits<double>::infinity();
    for (const auto& s : segments) min_area = std::min(min_area, s.area);

    const double tol = options.rel_tolerance * std::max(1.0, applied_mmf);
    auto residual = [&](double flux) { return total_mmf_drop(segments, flux) - applied_mmf; };

    double lo = 0.0;
    double hi = options.b_cap * min_area;
    // The drop is unbounded (slope 1/μ0 past the last knot) so doubling
    // always reaches a sign change.
    int expansions = 0;
    while (residual(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++expansions > 64) {
            std::ostringstream msg;
            msg << "magnetic circuit: could not bracket flux for MMF " << applied_mmf
                << " At (bracket [" << lo << ", " << hi << "] Wb)";
            throw SolverError(msg.str());
        }
    }

    // Bisect until the bracket collapses to adjacent doubles; the tolerance
    // is only the acceptance check on the final residual.
    double flux = 0.5 * (lo + hi);
    double r = residual(flux);
    int it = 1;
    while (r != 0.0 && it < options.max_iterations) {
        if (r < 0.0) {
            lo = flux;
        } else {
            hi = flux;
        }
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        flux = mid;
        r = residual(flux);
        ++it;
    }
    const bool converged = std::abs(r) <= tol;
    if (!converged) {
        std::ostringstream msg;
        msg << "magnetic circuit did not converge after " << it << " iterations; bracket [" << lo
            << ", " << hi << "] Wb, residual " << r << " At";
        throw SolverError(msg.str());
    }

    sol.flux = flux;
    sol.iterations = it;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        sol.b[i] = flux / segments[i].area;
        sol.mmf_drop[i] = segments[i].mmf_drop(flux);
    }
    return sol;
}

}  // namespace emcad
