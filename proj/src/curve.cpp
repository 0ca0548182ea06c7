#include "emcad/curve.hpp"

#include <cmath>

#include "emcad/error.hpp"

namespace emcad {

namespace {

void check_series(const std::string& name, const std::vector<CurvePoint>& pts) {
    if (pts.size() < 2) {
        throw DomainError("curve '" + name + "' needs at least 2 points");
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
            throw DomainError("curve '" + name + "' has a non-finite value at point " +
                              std::to_string(i));
        }
        if (i > 0 && !(pts[i].x > pts[i - 1].x)) {
            throw DomainError("curve '" + name + "' x not strictly increasing at point " +
                              std::to_string(i));
        }
    }
}

}  // namespace

CurveSeries::CurveSeries(std::string name, std::string x_label, std::string y_label,
                         std::vector<CurvePoint> points)
    : name_(std::move(name)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)),
      points_(std::move(points)) {
    check_series(name_, points_);
}

CurveSeries::CurveSeries(std::string name, std::string x_label, std::string y_label,
                         const std::vector<double>& xs, const std::vector<double>& ys)
    : name_(std::move(name)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {
    if (xs.size() != ys.size()) {
        throw DomainError("curve '" + name_ + "' x/y length mismatch");
    }
    points_.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) points_.push_back({xs[i], ys[i]});
    check_series(name_, points_);
}

std::vector<double> CurveSeries::xs() const {
    std::vector<double> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(p.x);
    return v;
}

std::vector<double> CurveSeries::ys() const {
    std::vector<double> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(p.y);
    return v;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) {
        throw DomainError("linear_grid needs count >= 2 and hi > lo");
    }
    std::vector<double> g(count);
    const double n = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = lo + (hi - lo) * (static_cast<double>(i) / n);
    }
    g.back() = hi;
    return g;
}

}  // namespace emcad
