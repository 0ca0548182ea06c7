#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace emcad {

// Argument outside the mathematical domain of an operation (negative flux
// density, zero speed, odd pole count...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A user-supplied document or spec field failed validation. `field_path`
// is a dotted/indexed path such as "materials[2].bh[3]" or "kva".
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field_path, const std::string& message)
        : std::runtime_error(message), field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

// The synthesis pipeline produced a design violating a physical or
// constructive bound. `bound` names the violated rule.
class InfeasibleDesign : public std::runtime_error {
public:
    InfeasibleDesign(std::string bound, const std::string& message)
        : std::runtime_error(message), bound_(std::move(bound)) {}

    const std::string& bound() const noexcept { return bound_; }

private:
    std::string bound_;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace emcad
