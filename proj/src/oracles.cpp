#include "klift/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "klift/errors.hpp"
#include "klift/structures.hpp"

namespace klift {

namespace {

double step_for(const FDConfig& cfg, std::span<const double> z, int dir) {
    return cfg.h * (1.0 + cfg.scale_guard * std::abs(z[dir]));
}

std::vector<double> central(const VectorField& f, std::span<const double> z, int dir, double h) {
    std::vector<double> zp(z.begin(), z.end()), zm(z.begin(), z.end());
    zp[dir] += h;
    zm[dir] -= h;
    std::vector<double> fp, fm;
    try {
        fp = f(zp);
        fm = f(zm);
    } catch (const std::domain_error& e) {
        throw EvaluationFailedError(std::string("probe point not evaluable: ") + e.what());
    }
    if (fp.size() != fm.size()) throw EvaluationFailedError("field returned inconsistent sizes");
    std::vector<double> out(fp.size());
    for (std::size_t i = 0; i < fp.size(); ++i) out[i] = (fp[i] - fm[i]) / (2.0 * h);
    return out;
}

}  // namespace

std::vector<double> fd_derivative(const VectorField& f, std::span<const double> z, int dir, const FDConfig& cfg) {
    const double h = step_for(cfg, z, dir);
    if (cfg.scheme == FDConfig::Scheme::Central) return central(f, z, dir, h);
    const std::vector<double> dh = central(f, z, dir, h);
    const std::vector<double> dh2 = central(f, z, dir, 0.5 * h);
    std::vector<double> out(dh.size());
    for (std::size_t i = 0; i < dh.size(); ++i) out[i] = (4.0 * dh2[i] - dh[i]) / 3.0;
    return out;
}

double fd_derivative(const ScalarField& f, std::span<const double> z, int dir, const FDConfig& cfg) {
    VectorField wrap = [&](std::span<const double> zz) { return std::vector<double>{f(zz)}; };
    return fd_derivative(wrap, z, dir, cfg)[0];
}

std::vector<double> koszul_connection(const VectorField& metric_field, std::span<const double> z, int dim,
                                      const FDConfig& cfg) {
    const std::vector<double> gflat = metric_field(z);
    if (gflat.size() != static_cast<std::size_t>(dim) * dim)
        throw EvaluationFailedError("metric field size mismatch");
    Eigen::MatrixXd g(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) g(a, b) = gflat[static_cast<std::size_t>(a) * dim + b];
    const Eigen::MatrixXd gi = g.inverse();

    std::vector<std::vector<double>> dg(dim);
    for (int d = 0; d < dim; ++d) dg[d] = fd_derivative(metric_field, z, d, cfg);
    auto dgf = [&](int d, int a, int b) { return dg[d][static_cast<std::size_t>(a) * dim + b]; };

    std::vector<double> out(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    auto at = [&](int a, int b, int c) -> double& {
        return out[(static_cast<std::size_t>(a) * dim + b) * dim + c];
    };
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c) {
                double v = 0.0;
                for (int d = 0; d < dim; ++d) v += gi(a, d) * (dgf(b, d, c) + dgf(c, b, d) - dgf(d, b, c));
                at(a, b, c) = 0.5 * v;
            }
    return out;
}

std::vector<double> curvature_from_connection(const VectorField& conn_field, std::span<const double> z, int dim,
                                              const FDConfig& cfg) {
    const std::vector<double> gm = conn_field(z);
    if (gm.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw EvaluationFailedError("connection field size mismatch");
    auto g = [&](int a, int b, int c) { return gm[(static_cast<std::size_t>(a) * dim + b) * dim + c]; };

    std::vector<std::vector<double>> dg(dim);
    for (int d = 0; d < dim; ++d) dg[d] = fd_derivative(conn_field, z, d, cfg);
    auto dgf = [&](int e, int a, int b, int c) {
        return dg[e][(static_cast<std::size_t>(a) * dim + b) * dim + c];
    };

    std::vector<double> out(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0);
    auto at = [&](int a, int b, int c, int d) -> double& {
        return out[((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + d];
    };
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) {
                    double v = dgf(c, a, d, b) - dgf(d, a, c, b);
                    for (int s = 0; s < dim; ++s) v += g(a, c, s) * g(s, d, b) - g(a, d, s) * g(s, c, b);
                    at(a, b, c, d) = v;
                }
    return out;
}

std::vector<double> fd_exterior_derivative(const VectorField& form_field, std::span<const double> z, int dim,
                                           const FDConfig& cfg) {
    std::vector<std::vector<double>> dw(dim);
    for (int d = 0; d < dim; ++d) dw[d] = fd_derivative(form_field, z, d, cfg);
    auto dwf = [&](int d, int a, int b) { return dw[d][static_cast<std::size_t>(a) * dim + b]; };

    std::vector<double> out(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    auto at = [&](int a, int b, int c) -> double& {
        return out[(static_cast<std::size_t>(a) * dim + b) * dim + c];
    };
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c) at(a, b, c) = dwf(a, b, c) + dwf(b, c, a) + dwf(c, a, b);
    return out;
}

Eigen::MatrixXd frame_matrix(const SpaceForm& M, const BundlePoint& pt) {
    const int n = M.n;
    const MTensor gam0 = gamma0_at(M, pt);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        e(i, i) = 1.0;
        for (int a = 0; a < n; ++a) e(n + a, i) = gam0(i, a);
        e(n + i, n + i) = 1.0;
    }
    return e;
}

namespace {

std::vector<double> frame_flat(const SpaceForm& M, std::span<const double> z) {
    const int n = M.n;
    BundlePoint pt{{std::vector<double>(z.begin(), z.begin() + n)}, std::vector<double>(z.begin() + n, z.end())};
    const Eigen::MatrixXd e = frame_matrix(M, pt);
    std::vector<double> out(static_cast<std::size_t>(2 * n) * 2 * n);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) out[static_cast<std::size_t>(a) * 2 * n + b] = e(a, b);
    return out;
}

void probe_admissibility(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt, const FDConfig& cfg) {
    const double t = energy_density(M, pt);
    // energy density moves with the covector probes; check a widened margin
    double pmax = 0.0;
    for (double pi : pt.p) pmax = std::max(pmax, std::abs(pi));
    const double margin = 2.0 * cfg.h * (1.0 + cfg.scale_guard * pmax);
    const double spread = 4.0 * margin * std::sqrt(std::max(t, 1.0));
    try {
        require_admissible(L, M.c, std::max(t - spread, 0.5 * t));
        require_admissible(L, M.c, t + spread);
    } catch (const InadmissibleError& e) {
        throw EvaluationFailedError(std::string("probe margin leaves the admissible region: ") + e.what());
    }
}

}  // namespace

std::vector<double> oracle_connection_frame(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                            const FDConfig& cfg) {
    probe_admissibility(M, L, pt, cfg);
    const int n = M.n, d = 2 * n;
    std::vector<double> z(pt.q.x);
    z.insert(z.end(), pt.p.begin(), pt.p.end());

    VectorField metric = [&](std::span<const double> zz) { return bundle_metric_induced(M, L, zz); };
    const std::vector<double> gh = koszul_connection(metric, z, d, cfg);
    auto ghf = [&](int a, int b, int c) { return gh[(static_cast<std::size_t>(a) * d + b) * d + c]; };

    VectorField frame_field = [&](std::span<const double> zz) { return frame_flat(M, zz); };
    const std::vector<double> eflat = frame_field(z);
    auto ef = [&](int a, int al) { return eflat[static_cast<std::size_t>(a) * d + al]; };
    std::vector<std::vector<double>> de(d);
    for (int dir = 0; dir < d; ++dir) de[dir] = fd_derivative(frame_field, z, dir, cfg);
    auto def = [&](int dir, int a, int al) { return de[dir][static_cast<std::size_t>(a) * d + al]; };

    Eigen::MatrixXd e(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) e(a, b) = ef(a, b);
    const Eigen::MatrixXd ei = e.inverse();

    std::vector<double> out(static_cast<std::size_t>(d) * d * d, 0.0);
    auto at = [&](int ga, int al, int be) -> double& {
        return out[(static_cast<std::size_t>(ga) * d + al) * d + be];
    };
    // nabla_{e_al} e_be = e_al^B (d_B e_be^A + Ghat^A_{BC} e_be^C) dz_A, then project on the coframe
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be) {
            std::vector<double> v(d, 0.0);
            for (int a = 0; a < d; ++a) {
                double acc = 0.0;
                for (int b = 0; b < d; ++b) {
                    const double w = ef(b, al);
                    if (w == 0.0) continue;
                    double term = def(b, a, be);
                    for (int c = 0; c < d; ++c) term += ghf(a, b, c) * ef(c, be);
                    acc += w * term;
                }
                v[a] = acc;
            }
            for (int ga = 0; ga < d; ++ga) {
                double acc = 0.0;
                for (int a = 0; a < d; ++a) acc += ei(ga, a) * v[a];
                at(ga, al, be) = acc;
            }
        }
    return out;
}

std::vector<double> oracle_curvature_frame(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                           const FDConfig& cfg) {
    probe_admissibility(M, L, pt, cfg);
    const int n = M.n, d = 2 * n;
    std::vector<double> z(pt.q.x);
    z.insert(z.end(), pt.p.begin(), pt.p.end());

    VectorField metric = [&](std::span<const double> zz) { return bundle_metric_induced(M, L, zz); };
    VectorField conn = [&](std::span<const double> zz) { return koszul_connection(metric, zz, d, cfg); };
    const std::vector<double> rh = curvature_from_connection(conn, z, d, cfg);
    auto rf = [&](int a, int b, int c, int dd) {
        return rh[((static_cast<std::size_t>(a) * d + b) * d + c) * d + dd];
    };

    const Eigen::MatrixXd e = frame_matrix(M, pt);
    const Eigen::MatrixXd ei = e.inverse();

    std::vector<double> out(static_cast<std::size_t>(d) * d * d * d, 0.0);
    auto at = [&](int al, int be, int ga, int dl) -> double& {
        return out[((static_cast<std::size_t>(al) * d + be) * d + ga) * d + dl];
    };
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be)
            for (int ga = 0; ga < d; ++ga) {
                std::vector<double> v(d, 0.0);
                for (int a = 0; a < d; ++a) {
                    double acc = 0.0;
                    for (int cc = 0; cc < d; ++cc) {
                        if (e(cc, al) == 0.0) continue;
                        for (int dd = 0; dd < d; ++dd) {
                            if (e(dd, be) == 0.0) continue;
                            const double w = e(cc, al) * e(dd, be);
                            for (int b = 0; b < d; ++b) {
                                if (e(b, ga) == 0.0) continue;
                                acc += w * e(b, ga) * rf(a, b, cc, dd);
                            }
                        }
                    }
                    v[a] = acc;
                }
                for (int dl = 0; dl < d; ++dl) {
                    double acc = 0.0;
                    for (int a = 0; a < d; ++a) acc += ei(dl, a) * v[a];
                    at(al, be, ga, dl) = acc;
                }
            }
    return out;
}

}  // namespace klift
