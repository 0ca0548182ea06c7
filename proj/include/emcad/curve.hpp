#pragma once

#include <string>
#include <utility>
#include <vector>

namespace emcad {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const CurvePoint&) const = default;
};

// A named (x, y) series carrying every plotted quantity. x is strictly
// increasing and there are at least two points.
class CurveSeries {
public:
    CurveSeries() = default;
    CurveSeries(std::string name, std::string x_label, std::string y_label,
                std::vector<CurvePoint> points);
    CurveSeries(std::string name, std::string x_label, std::string y_label,
                const std::vector<double>& xs, const std::vector<double>& ys);

    const std::string& name() const { return name_; }
    const std::string& x_label() const { return x_label_; }
    const std::string& y_label() const { return y_label_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    std::vector<double> xs() const;
    std::vector<double> ys() const;

    bool operator==(const CurveSeries&) const = default;

private:
    std::string name_;
    std::string x_label_;
    std::string y_label_;
    std::vector<CurvePoint> points_;
};

// Evenly spaced grid of `count` points on [lo, hi], endpoints exact.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

}  // namespace emcad
