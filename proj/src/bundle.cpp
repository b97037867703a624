#include "klift/bundle.hpp"

#include <cmath>

#include "klift/errors.hpp"

namespace klift {

double energy_density(const SpaceForm& M, const BundlePoint& pt) {
    double norm2 = 0.0;
    for (double pi : pt.p) norm2 += pi * pi;
    if (norm2 == 0.0) throw ZeroSectionError{};
    const MTensor gi = inverse_metric_at(M, pt.q);
    double t = 0.0;
    for (int i = 0; i < M.n; ++i)
        for (int k = 0; k < M.n; ++k) t += gi(i, k) * pt.p[i] * pt.p[k];
    return 0.5 * t;
}

std::vector<double> raised_covector(const SpaceForm& M, const BundlePoint& pt) {
    const MTensor gi = inverse_metric_at(M, pt.q);
    std::vector<double> g0(M.n, 0.0);
    for (int i = 0; i < M.n; ++i)
        for (int h = 0; h < M.n; ++h) g0[i] += pt.p[h] * gi(h, i);
    return g0;
}

MTensor gamma0_at(const SpaceForm& M, const BundlePoint& pt) {
    const MTensor gamma = christoffel_at(M, pt.q);
    MTensor g0({Variance::Lower, Variance::Lower}, M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j) {
            double v = 0.0;
            for (int k = 0; k < M.n; ++k) v += pt.p[k] * gamma(k, i, j);
            g0(i, j) = v;
        }
    return g0;
}

std::vector<double> adapted_to_induced(const SpaceForm& M, const BundlePoint& pt, const TangentVector& X) {
    const MTensor g0 = gamma0_at(M, pt);
    std::vector<double> out(2 * M.n, 0.0);
    for (int i = 0; i < M.n; ++i) out[i] = X.h[i];
    for (int j = 0; j < M.n; ++j) {
        double v = X.v[j];
        for (int i = 0; i < M.n; ++i) v += X.h[i] * g0(i, j);
        out[M.n + j] = v;
    }
    return out;
}

TangentVector induced_to_adapted(const SpaceForm& M, const BundlePoint& pt, std::span<const double> induced) {
    const MTensor g0 = gamma0_at(M, pt);
    TangentVector X = TangentVector::zero(M.n);
    for (int i = 0; i < M.n; ++i) X.h[i] = induced[i];
    for (int j = 0; j < M.n; ++j) {
        double v = induced[M.n + j];
        for (int i = 0; i < M.n; ++i) v -= induced[i] * g0(i, j);
        X.v[j] = v;
    }
    return X;
}

FrameBrackets frame_brackets(const SpaceForm& M, const BundlePoint& pt) {
    FrameBrackets b{
        MTensor({Variance::Upper, Variance::Upper, Variance::Upper}, M.n),
        MTensor({Variance::Upper, Variance::Lower, Variance::Upper}, M.n),
        MTensor({Variance::Upper, Variance::Lower, Variance::Lower}, M.n),
    };
    const MTensor gamma = christoffel_at(M, pt.q);
    const MTensor riem = curvature_at(M, pt.q);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j)
            for (int k = 0; k < M.n; ++k) {
                b.mixed(i, j, k) = gamma(i, j, k);
                double v = 0.0;
                for (int h = 0; h < M.n; ++h) v += pt.p[h] * riem(h, k, i, j);
                b.horizontal_horizontal(k, i, j) = v;
            }
    return b;
}

PointGeometry PointGeometry::at(const SpaceForm& M, const BundlePoint& pt) {
    PointGeometry geo;
    geo.n = M.n;
    geo.t = energy_density(M, pt);
    geo.g = metric_at(M, pt.q);
    geo.g_inv = inverse_metric_at(M, pt.q);
    geo.gamma = christoffel_at(M, pt.q);
    geo.gamma0 = gamma0_at(M, pt);
    geo.riem = curvature_at(M, pt.q);
    geo.p = pt.p;
    geo.g0 = raised_covector(M, pt);
    geo.r0 = MTensor({Variance::Lower, Variance::Lower, Variance::Lower}, M.n);
    for (int k = 0; k < M.n; ++k)
        for (int i = 0; i < M.n; ++i)
            for (int j = 0; j < M.n; ++j) {
                double v = 0.0;
                for (int h = 0; h < M.n; ++h) v += pt.p[h] * geo.riem(h, k, i, j);
                geo.r0(k, i, j) = v;
            }
    return geo;
}

}  // namespace klift
