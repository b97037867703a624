#include "klift/connection.hpp"

#include "klift/errors.hpp"
#include "klift/structures.hpp"

namespace klift {

ConnectionCoefficients connection_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const double t = geo.t;
    require_admissible(L, M.c, t);
    const LambdaEval le = L.eval(t);
    const double A = L.A(), c = M.c;
    const double lam = le.value, lamp = le.d1, lampp = le.d2;
    const double cap = 2.0 * c - A * A * t * lam * lam;
    const double sl = lam + 2.0 * t * lamp;
    const int n = M.n;

    const double q_dense = (c * lam + 8.0 * c * t * lamp - 2.0 * A * A * t * t * lam * lamp * (lam - t * lamp)
                            + 2.0 * t * t * lampp * cap)
                         / (2.0 * t * t * cap * sl);
    const double s_dense = (3.0 * c * lam + 2.0 * c * t * lamp - 2.0 * A * A * t * lam * lam * (lam + t * lamp))
                         / (2.0 * t * sl);

    ConnectionCoefficients out{
        MTensor({Variance::Upper, Variance::Upper, Variance::Lower}, n),
        MTensor({Variance::Upper, Variance::Upper, Variance::Lower}, n),
        MTensor({Variance::Lower, Variance::Lower, Variance::Lower}, n),
        geo.gamma,
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int h = 0; h < n; ++h) {
                out.Q(i, j, h) = geo.g_inv(i, j) * geo.p[h] / (2.0 * t)
                               - ((i == h ? geo.g0[j] : 0.0) + (j == h ? geo.g0[i] : 0.0)) / (2.0 * t)
                               + q_dense * geo.g0[i] * geo.g0[j] * geo.p[h];
                out.P(h, i, j) = -geo.g_inv(h, i) * geo.p[j] / (2.0 * t)
                               + (i == j ? geo.g0[h] : 0.0) / (2.0 * t)
                               + sl / (2.0 * t * lam) * (h == j ? geo.g0[i] : 0.0)
                               - c * sl / (2.0 * t * t * lam * cap) * geo.g0[h] * geo.g0[i] * geo.p[j];
                out.S(h, i, j) = -lam * cap / (2.0 * sl) * geo.g(i, j) * geo.p[h]
                               - cap / 2.0 * geo.g(h, i) * geo.p[j]
                               + A * A * t * lam * lam / 2.0 * geo.g(h, j) * geo.p[i]
                               + s_dense * geo.p[h] * geo.p[i] * geo.p[j];
            }
    return out;
}

ConnectionCoefficients connection_generic_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const double t = geo.t;
    const StructureCoefficients s = coefficients_at(L, M.c, t);
    const CoefficientRates r = coefficient_rates_at(L, M.c, t);
    const auto [h1, h2] = inverse_metric_H_at(M, L, pt);
    const auto [g1, g2] = metric_G_at(M, L, pt);
    const int n = M.n;

    // analytic vertical derivatives of the metric blocks
    auto dg1 = [&](int m, int i, int j) {
        return r.c1 * geo.g0[m] * geo.g(i, j) + r.d1 * geo.g0[m] * geo.p[i] * geo.p[j]
             + s.d1 * ((m == i ? geo.p[j] : 0.0) + (m == j ? geo.p[i] : 0.0));
    };
    auto dg2 = [&](int m, int i, int j) {
        return r.c2 * geo.g0[m] * geo.g_inv(i, j) + r.d2 * geo.g0[m] * geo.g0[i] * geo.g0[j]
             + s.d2 * (geo.g_inv(m, i) * geo.g0[j] + geo.g0[i] * geo.g_inv(m, j));
    };

    ConnectionCoefficients out{
        MTensor({Variance::Upper, Variance::Upper, Variance::Lower}, n),
        MTensor({Variance::Upper, Variance::Upper, Variance::Lower}, n),
        MTensor({Variance::Lower, Variance::Lower, Variance::Lower}, n),
        geo.gamma,
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int h = 0; h < n; ++h) {
                double q = 0.0, p = 0.0, sv = 0.0;
                for (int k = 0; k < n; ++k) {
                    q += h2(h, k) * (dg2(i, j, k) + dg2(j, i, k) - dg2(k, i, j));
                    double curv = 0.0;
                    for (int l = 0; l < n; ++l) curv += g2(i, l) * geo.r0(l, j, k);
                    p += h1(h, k) * (dg1(i, j, k) - curv);
                    sv -= h2(h, k) * dg1(k, i, j);
                }
                out.Q(i, j, h) = 0.5 * q;
                out.P(h, i, j) = 0.5 * p;
                out.S(h, i, j) = 0.5 * sv + 0.5 * geo.r0(h, i, j);
            }
    return out;
}

}  // namespace klift
