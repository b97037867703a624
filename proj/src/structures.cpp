#include "klift/structures.hpp"

#include <cmath>

#include "klift/errors.hpp"

namespace klift {

namespace {

struct FamilyState {
    double t, lam, lamp, lampp, A, c;
};

FamilyState family_state(const LambdaFamily& L, double c, double t) {
    const LambdaEval e = L.eval(t);
    return {t, e.value, e.d1, e.d2, L.A(), c};
}

double metric_cap(const FamilyState& f) { return 2.0 * f.c - f.A * f.A * f.t * f.lam * f.lam; }
double slope(const FamilyState& f) { return f.lam + 2.0 * f.t * f.lamp; }

}  // namespace

void require_admissible(const LambdaFamily& L, double c, double t) {
    if (!(t > 0.0)) throw InadmissibleError(t, "energy density must be positive");
    const FamilyState f = family_state(L, c, t);
    if (!(f.lam > 0.0)) throw InadmissibleError(t, "lambda must be positive");
    if (!(metric_cap(f) > kDenominatorFloor)) throw InadmissibleError(t, "2c - A^2 t lambda^2 at boundary");
    if (!(slope(f) > kDenominatorFloor)) throw InadmissibleError(t, "lambda + 2t lambda' at boundary");
}

StructureCoefficients coefficients_at(const LambdaFamily& L, double c, double t) {
    return coefficients_at(L, c, t, L.eval(t).d1);
}

StructureCoefficients coefficients_at(const LambdaFamily& L, double c, double t, double mu) {
    require_admissible(L, c, t);
    const FamilyState f = family_state(L, c, t);
    const double A = f.A, lam = f.lam, lamp = f.lamp;
    const double cap = metric_cap(f), sl = slope(f);

    StructureCoefficients s{};
    s.mu = mu;
    s.a1 = A * t * lam;
    s.a2 = 1.0 / s.a1;
    s.b1 = (c - A * A * t * lam * (lam + t * lamp)) / (A * t * sl);
    s.b2 = -s.b1 / (A * t * t * lam * (A * lam + 2.0 * s.b1));
    s.c1 = A * t * lam * lam;
    s.c2 = 1.0 / (A * t);
    s.d1 = (lam * (c - A * A * t * lam * (lam + t * lamp)) + mu * t * cap) / (A * t * sl);
    s.d2 = (-c + A * A * t * lam * (lam + t * lamp) + mu * A * A * t * t * sl) / (A * t * t * cap);
    return s;
}

CoefficientRates coefficient_rates_at(const LambdaFamily& L, double c, double t) {
    require_admissible(L, c, t);
    const FamilyState f = family_state(L, c, t);
    const double A = f.A, lam = f.lam, lamp = f.lamp, lampp = f.lampp;

    CoefficientRates r{};
    r.c1 = A * (lam * lam + 2.0 * t * lam * lamp);
    r.c2 = -1.0 / (A * t * t);
    r.d1 = -c / (A * t * t) - 2.0 * A * lam * lamp;
    // d2 = N/D with N = -c + A^2 t (lam^2 + 2t lam lam' + 2t^2 lam'^2), D = A t^2 (2c - A^2 t lam^2)
    const double num = -c + A * A * t * (lam * lam + 2.0 * t * lam * lamp + 2.0 * t * t * lamp * lamp);
    const double den = A * t * t * metric_cap(f);
    const double num_p = A * A * (lam * lam + 2.0 * t * lam * lamp + 2.0 * t * t * lamp * lamp)
                       + A * A * t * (4.0 * lam * lamp + 6.0 * t * lamp * lamp + 2.0 * t * lam * lampp
                                      + 4.0 * t * t * lamp * lampp);
    const double den_p = A * (4.0 * c * t - 3.0 * A * A * t * t * lam * lam - 2.0 * A * A * t * t * t * lam * lamp);
    r.d2 = (num_p * den - num * den_p) / (den * den);
    return r;
}

namespace {

MTensor lower_pair(const PointGeometry& geo, double coef_g, double coef_pp) {
    MTensor out({Variance::Lower, Variance::Lower}, geo.n);
    for (int i = 0; i < geo.n; ++i)
        for (int j = 0; j < geo.n; ++j)
            out(i, j) = coef_g * geo.g(i, j) + coef_pp * geo.p[i] * geo.p[j];
    return out;
}

MTensor upper_pair(const PointGeometry& geo, double coef_gi, double coef_g0g0) {
    MTensor out({Variance::Upper, Variance::Upper}, geo.n);
    for (int i = 0; i < geo.n; ++i)
        for (int j = 0; j < geo.n; ++j)
            out(i, j) = coef_gi * geo.g_inv(i, j) + coef_g0g0 * geo.g0[i] * geo.g0[j];
    return out;
}

}  // namespace

std::pair<MTensor, MTensor> complex_structure_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const StructureCoefficients s = coefficients_at(L, M.c, geo.t);
    return {lower_pair(geo, s.a1, s.b1), upper_pair(geo, s.a2, s.b2)};
}

TangentVector apply_J(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt, const TangentVector& X) {
    const auto [j1, j2] = complex_structure_at(M, L, pt);
    TangentVector out = TangentVector::zero(M.n);
    for (int j = 0; j < M.n; ++j) {
        double vh = 0.0, vv = 0.0;
        for (int i = 0; i < M.n; ++i) {
            vh -= j2(i, j) * X.v[i];
            vv += j1(i, j) * X.h[i];
        }
        out.h[j] = vh;
        out.v[j] = vv;
    }
    return out;
}

double NijenhuisBlocks::max_abs() const {
    return std::max(horizontal_pair.max_abs(), std::max(mixed_pair.max_abs(), vertical_pair.max_abs()));
}

NijenhuisBlocks nijenhuis_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                             std::optional<double> b1_override) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const double t = geo.t;
    require_admissible(L, M.c, t);
    const FamilyState f = family_state(L, M.c, t);
    StructureCoefficients s = coefficients_at(L, M.c, t);
    if (b1_override) {
        s.b1 = *b1_override;
        s.b2 = -s.b1 / (f.A * t * t * f.lam * (f.A * f.lam + 2.0 * s.b1));
    }
    // Integrability brace coefficient (a1 + 2t b1) a1' - a1 b1 with a1 = A t lambda;
    // equals c exactly when b1 takes its integrable value.
    const double a1p = f.A * (f.lam + t * f.lamp);
    const double brace_k = (s.a1 + 2.0 * t * s.b1) * a1p - s.a1 * s.b1;

    const MTensor j2 = upper_pair(geo, s.a2, s.b2);
    const int n = M.n;
    auto brace = [&](int k, int i, int j) {
        return brace_k * (geo.p[i] * geo.g(j, k) - geo.p[j] * geo.g(i, k)) - geo.r0(k, i, j);
    };

    NijenhuisBlocks out{
        MTensor({Variance::Upper, Variance::Lower, Variance::Lower}, n),
        MTensor({Variance::Lower, Variance::Lower, Variance::Upper}, n),
        MTensor({Variance::Upper, Variance::Upper, Variance::Upper}, n),
    };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                out.horizontal_pair(k, i, j) = brace(k, i, j);
                double mixed = 0.0, vertical = 0.0;
                for (int l = 0; l < n; ++l)
                    for (int r = 0; r < n; ++r) {
                        mixed += j2(k, l) * j2(j, r) * brace(l, i, r);
                        vertical += j2(i, r) * j2(j, l) * brace(k, l, r);
                    }
                out.mixed_pair(k, i, j) = mixed;
                out.vertical_pair(k, i, j) = vertical;
            }
    return out;
}

std::pair<MTensor, MTensor> metric_G_hermitian_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                                  double mu) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const double t = geo.t;
    const StructureCoefficients s = coefficients_at(L, M.c, t, mu);
    if (!(s.c1 > 0.0 && s.c2 > 0.0 && s.c1 + 2.0 * t * s.d1 > 0.0 && s.c2 + 2.0 * t * s.d2 > 0.0))
        throw NotPositiveDefiniteError("metric positivity conditions fail at t=" + std::to_string(t));
    return {lower_pair(geo, s.c1, s.d1), upper_pair(geo, s.c2, s.d2)};
}

std::pair<MTensor, MTensor> metric_G_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt) {
    const double t = energy_density(M, pt);
    return metric_G_hermitian_at(M, L, pt, L.eval(t).d1);
}

std::pair<MTensor, MTensor> inverse_metric_H_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    const double t = geo.t;
    require_admissible(L, M.c, t);
    const FamilyState f = family_state(L, M.c, t);
    const double A = f.A, lam = f.lam, lamp = f.lamp;
    const double cap = metric_cap(f), sl = slope(f);

    const double h1_g = 1.0 / (A * t * lam * lam);
    const double h1_pp = -(M.c - A * A * t * lam * lam) / (A * t * t * lam * lam * cap);
    const double h2_g = A * t;
    const double h2_pp = (M.c - A * A * t * (lam * lam + 2.0 * t * lamp * (lam + t * lamp))) / (A * t * sl * sl);
    return {upper_pair(geo, h1_g, h1_pp), lower_pair(geo, h2_g, h2_pp)};
}

MTensor fundamental_form_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                            std::optional<double> mu_override) {
    const PointGeometry geo = PointGeometry::at(M, pt);
    require_admissible(L, M.c, geo.t);
    const LambdaEval e = L.eval(geo.t);
    const double mu = mu_override.value_or(e.d1);
    MTensor phi({Variance::Upper, Variance::Lower}, M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j)
            phi(i, j) = (i == j ? e.value : 0.0) + mu * geo.g0[i] * geo.p[j];
    return phi;
}

std::vector<double> bundle_metric_induced(const SpaceForm& M, const LambdaFamily& L, std::span<const double> z) {
    const int n = M.n;
    BundlePoint pt{{std::vector<double>(z.begin(), z.begin() + n)}, std::vector<double>(z.begin() + n, z.end())};
    const auto [g1, g2] = metric_G_at(M, L, pt);
    const MTensor gam0 = gamma0_at(M, pt);

    const int d = 2 * n;
    std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
    auto at = [&](int a, int b) -> double& { return out[static_cast<std::size_t>(a) * d + b]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double qq = g1(i, j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) qq += gam0(i, k) * g2(k, l) * gam0(j, l);
            at(i, j) = qq;
            double qp = 0.0;
            for (int k = 0; k < n; ++k) qp -= gam0(i, k) * g2(k, j);
            at(i, n + j) = qp;
            at(n + j, i) = qp;
            at(n + i, n + j) = g2(i, j);
        }
    return out;
}

std::vector<double> two_form_induced(const SpaceForm& M, const LambdaFamily& L, std::span<const double> z,
                                     std::optional<double> mu_override) {
    const int n = M.n;
    BundlePoint pt{{std::vector<double>(z.begin(), z.begin() + n)}, std::vector<double>(z.begin() + n, z.end())};
    const MTensor e = fundamental_form_at(M, L, pt, mu_override);
    const MTensor gam0 = gamma0_at(M, pt);

    const int d = 2 * n;
    std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
    auto at = [&](int a, int b) -> double& { return out[static_cast<std::size_t>(a) * d + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            at(n + a, b) = e(a, b);
            at(b, n + a) = -e(a, b);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) v += -e(i, b) * gam0(a, i) + e(i, a) * gam0(b, i);
            at(a, b) += v;
        }
    return out;
}

double dphi_residual(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                     std::optional<double> mu_override, const FDConfig& cfg) {
    const int d = 2 * M.n;
    std::vector<double> z(pt.q.x);
    z.insert(z.end(), pt.p.begin(), pt.p.end());
    VectorField form = [&](std::span<const double> zz) { return two_form_induced(M, L, zz, mu_override); };
    const std::vector<double> dw = fd_exterior_derivative(form, z, d, cfg);
    double m = 0.0;
    for (double x : dw) m = std::max(m, std::abs(x));
    double phi_scale = 0.0;
    for (double x : form(z)) phi_scale = std::max(phi_scale, std::abs(x));
    return m / (1.0 + phi_scale);
}

bool AdmissibilityReport::all_ok() const {
    for (const auto& r : rows)
        if (!r.all_ok()) return false;
    return true;
}

double AdmissibilityReport::first_failure_t() const {
    for (const auto& r : rows)
        if (!r.all_ok()) return r.t;
    return -1.0;
}

AdmissibilityReport admissibility_scan(const LambdaFamily& L, double c, std::span<const double> t_grid) {
    AdmissibilityReport rep;
    rep.rows.reserve(t_grid.size());
    const double A = L.A();
    for (double t : t_grid) {
        AdmissibilityRow row;
        row.t = t;
        const LambdaEval e = L.eval(t);
        const double lam = e.value, lamp = e.d1;
        row.lambda_value = lam;
        row.metric_cap = 2.0 * c - A * A * t * lam * lam;
        row.slope = lam + 2.0 * t * lamp;
        row.ok_lambda = row.lambda_value > 0.0;
        row.ok_metric_cap = row.metric_cap > 0.0;
        row.ok_slope = row.slope > 0.0;

        // derived quantities are only finite away from the boundary denominators
        const bool denominators_fine = std::abs(row.slope) > kDenominatorFloor
                                    && std::abs(row.metric_cap) > kDenominatorFloor && lam > 0.0;
        if (denominators_fine) {
            const double b1 = (c - A * A * t * lam * (lam + t * lamp)) / (A * t * row.slope);
            const double mu = e.d1;
            row.a_sum = A * lam + 2.0 * b1;
            row.c1 = A * t * lam * lam;
            row.c2 = 1.0 / (A * t);
            const double d1 = (lam * (c - A * A * t * lam * (lam + t * lamp)) + mu * t * row.metric_cap)
                            / (A * t * row.slope);
            const double d2 = (-c + A * A * t * lam * (lam + t * lamp) + mu * A * A * t * t * row.slope)
                            / (A * t * t * row.metric_cap);
            row.c1_plus = row.c1 + 2.0 * t * d1;
            row.c2_plus = row.c2 + 2.0 * t * d2;
            row.ok_a_sum = row.a_sum > 0.0;
            row.ok_c1 = row.c1 > 0.0;
            row.ok_c2 = row.c2 > 0.0;
            row.ok_c1_plus = row.c1_plus > 0.0;
            row.ok_c2_plus = row.c2_plus > 0.0;
        } else {
            const double nan = std::nan("");
            row.a_sum = row.c1 = row.c2 = row.c1_plus = row.c2_plus = nan;
            row.ok_a_sum = row.ok_c1 = row.ok_c2 = row.ok_c1_plus = row.ok_c2_plus = false;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace klift
