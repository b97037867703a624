#pragma once
#include <stdexcept>
#include <string>

namespace klift {

// Covector vanished: the point left T*M minus the zero section.
struct ZeroSectionError : std::domain_error {
    ZeroSectionError() : std::domain_error("covector is zero: point is not in the punctured cotangent bundle") {}
};

// The lambda family left its validity region at the given energy density.
struct InadmissibleError : std::domain_error {
    double t;
    explicit InadmissibleError(double t_, const std::string& what)
        : std::domain_error("inadmissible t=" + std::to_string(t_) + ": " + what), t(t_) {}
};

struct NotPositiveDefiniteError : std::domain_error {
    explicit NotPositiveDefiniteError(const std::string& what) : std::domain_error(what) {}
};

// A finite-difference probe point could not be evaluated.
struct EvaluationFailedError : std::runtime_error {
    explicit EvaluationFailedError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVectorError : std::domain_error {
    ZeroVectorError() : std::domain_error("tangent vector is zero") {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct NoAdmissiblePointsError : std::runtime_error {
    explicit NoAdmissiblePointsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace klift
