#include "klift/space_form.hpp"

#include <cmath>
#include <stdexcept>

namespace klift {

SpaceForm::SpaceForm(int n_, double c_) : n(n_), c(c_) {
    if (n < 2) throw std::invalid_argument("space form dimension must be >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("sectional curvature must be positive");
}

double conformal_factor(const SpaceForm& M, const BasePoint& x) {
    double s2 = 0.0;
    for (double xi : x.x) s2 += xi * xi;
    return 1.0 / (1.0 + 0.25 * M.c * s2);
}

MTensor metric_at(const SpaceForm& M, const BasePoint& x) {
    const double s = conformal_factor(M, x);
    MTensor g({Variance::Lower, Variance::Lower}, M.n);
    for (int i = 0; i < M.n; ++i) g(i, i) = s * s;
    return g;
}

MTensor inverse_metric_at(const SpaceForm& M, const BasePoint& x) {
    const double s = conformal_factor(M, x);
    MTensor gi({Variance::Upper, Variance::Upper}, M.n);
    for (int i = 0; i < M.n; ++i) gi(i, i) = 1.0 / (s * s);
    return gi;
}

MTensor christoffel_at(const SpaceForm& M, const BasePoint& x) {
    const double s = conformal_factor(M, x);
    const double a = -0.5 * M.c * s;
    MTensor gamma({Variance::Upper, Variance::Lower, Variance::Lower}, M.n);
    for (int k = 0; k < M.n; ++k)
        for (int i = 0; i < M.n; ++i)
            for (int j = 0; j < M.n; ++j) {
                double v = 0.0;
                if (k == i) v += x.x[j];
                if (k == j) v += x.x[i];
                if (i == j) v -= x.x[k];
                gamma(k, i, j) = a * v;
            }
    return gamma;
}

MTensor curvature_at(const SpaceForm& M, const BasePoint& x) {
    const MTensor g = metric_at(M, x);
    MTensor r({Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower}, M.n);
    for (int l = 0; l < M.n; ++l)
        for (int k = 0; k < M.n; ++k)
            for (int i = 0; i < M.n; ++i)
                for (int j = 0; j < M.n; ++j)
                    r(l, k, i, j) = M.c * ((l == i ? g(j, k) : 0.0) - (l == j ? g(i, k) : 0.0));
    return r;
}

}  // namespace klift
