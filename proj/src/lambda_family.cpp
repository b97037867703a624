#include "klift/lambda_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace klift {

LambdaFamily LambdaFamily::example(double c, double A, double B) {
    if (!(c > 0.0) || !(A > 0.0) || !(B > 0.0))
        throw std::invalid_argument("example family needs c > 0, A > 0, B > 0");
    LambdaFamily f;
    f.id_ = "example";
    f.A_ = A;
    f.B_ = B;
    f.sqrt_2c_ = std::sqrt(2.0 * c);
    return f;
}

LambdaFamily LambdaFamily::constant(double A, double lambda0) {
    if (!(A > 0.0) || !(lambda0 > 0.0))
        throw std::invalid_argument("constant family needs A > 0, lambda0 > 0");
    LambdaFamily f;
    f.id_ = "constant";
    f.A_ = A;
    f.lambda0_ = lambda0;
    return f;
}

LambdaFamily LambdaFamily::tabulated(double A, std::vector<double> t, std::vector<double> lambda) {
    if (!(A > 0.0)) throw std::invalid_argument("tabulated family needs A > 0");
    if (t.size() != lambda.size() || t.size() < 4)
        throw std::invalid_argument("tabulated family needs >= 4 matching samples");
    if (!std::is_sorted(t.begin(), t.end()))
        throw std::invalid_argument("tabulated family abscissae must be ascending");
    if (t.front() <= 0.0) throw std::invalid_argument("tabulated abscissae must be positive");

    LambdaFamily f;
    f.id_ = "tabulated";
    f.A_ = A;
    f.knots_ = std::move(t);
    f.vals_ = std::move(lambda);

    // natural cubic spline: solve the tridiagonal system for second derivatives
    const std::size_t m = f.knots_.size();
    std::vector<double> h(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) h[i] = f.knots_[i + 1] - f.knots_[i];
    std::vector<double> a(m, 0.0), b(m, 0.0), cdiag(m, 0.0), rhs(m, 0.0);
    b[0] = b[m - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        a[i] = h[i - 1];
        b[i] = 2.0 * (h[i - 1] + h[i]);
        cdiag[i] = h[i];
        rhs[i] = 6.0 * ((f.vals_[i + 1] - f.vals_[i]) / h[i] - (f.vals_[i] - f.vals_[i - 1]) / h[i - 1]);
    }
    for (std::size_t i = 1; i < m; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * cdiag[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    f.second_.assign(m, 0.0);
    f.second_[m - 1] = rhs[m - 1] / b[m - 1];
    for (std::size_t i = m - 1; i-- > 0;)
        f.second_[i] = (rhs[i] - cdiag[i] * f.second_[i + 1]) / b[i];
    return f;
}

LambdaEval LambdaFamily::eval(double t) const {
    if (!(t > 0.0)) throw std::domain_error("energy density must be positive");
    if (id_ == "constant") return {lambda0_, 0.0, 0.0};
    if (id_ == "example") {
        const double s = std::sqrt(t);
        const double d = A_ * s + B_;
        const double v = sqrt_2c_ / d;
        const double d1 = -sqrt_2c_ * A_ / (2.0 * s * d * d);
        const double d2 = sqrt_2c_ * A_ / 2.0 * (1.0 / (2.0 * t * s * d * d) + A_ / (t * d * d * d));
        return {v, d1, d2};
    }
    // tabulated: boundary cubics extend beyond the table
    std::size_t k = std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin();
    if (k == 0) k = 1;
    if (k >= knots_.size()) k = knots_.size() - 1;
    const double h = knots_[k] - knots_[k - 1];
    const double u = (knots_[k] - t) / h;
    const double w = (t - knots_[k - 1]) / h;
    const double y0 = vals_[k - 1], y1 = vals_[k], m0 = second_[k - 1], m1 = second_[k];
    const double v = u * y0 + w * y1 + ((u * u * u - u) * m0 + (w * w * w - w) * m1) * h * h / 6.0;
    const double d1 = (y1 - y0) / h + h / 6.0 * ((3.0 * w * w - 1.0) * m1 - (3.0 * u * u - 1.0) * m0);
    const double d2 = u * m0 + w * m1;
    return {v, d1, d2};
}

}  // namespace klift
