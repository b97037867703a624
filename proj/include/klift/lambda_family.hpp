#pragma once
#include <string>
#include <vector>

namespace klift {

struct LambdaEval {
    double value;
    double d1;
    double d2;
};

/// The essential parameter lambda(t) with its first two derivatives and the
/// constant A. Built-in families:
///   example(c, A, B):   lambda = sqrt(2c) / (A sqrt(t) + B)
///   constant(A, l0):    lambda = l0
///   tabulated(A, t, l): natural cubic spline through (t_k, lambda_k)
class LambdaFamily {
public:
    static LambdaFamily example(double c, double A, double B);
    static LambdaFamily constant(double A, double lambda0);
    static LambdaFamily tabulated(double A, std::vector<double> t, std::vector<double> lambda);

    LambdaEval eval(double t) const;

    double A() const { return A_; }
    double B() const { return B_; }
    double lambda0() const { return lambda0_; }
    const std::string& id() const { return id_; }

private:
    LambdaFamily() = default;

    std::string id_;
    double A_ = 1.0;
    double B_ = 0.0;
    double lambda0_ = 0.0;
    double sqrt_2c_ = 0.0;

    // spline data (tabulated family): knots, values, second derivatives
    std::vector<double> knots_, vals_, second_;
};

}  // namespace klift
