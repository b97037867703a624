#pragma once
#include <span>
#include <vector>

#include "klift/mtensor.hpp"
#include "klift/space_form.hpp"

namespace klift {

/// A point of the punctured cotangent bundle: base chart coordinates q and a
/// nonzero covector p in the induced chart.
struct BundlePoint {
    BasePoint q;
    std::vector<double> p;
};

/// Tangent vector in the adapted frame: X = h^i delta/delta q^i + v_i d/dp_i.
struct TangentVector {
    std::vector<double> h;
    std::vector<double> v;
    static TangentVector zero(int n) { return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)}; }
};

/// t = (1/2) g^{ik}(q) p_i p_k. Throws ZeroSectionError when p = 0.
double energy_density(const SpaceForm& M, const BundlePoint& pt);

/// g^{0i} = p_h g^{hi}.
std::vector<double> raised_covector(const SpaceForm& M, const BundlePoint& pt);

/// Gamma^0_{ij} = p_k Gamma^k_{ij}, type (0,2), symmetric.
MTensor gamma0_at(const SpaceForm& M, const BundlePoint& pt);

/// Components of X in the induced chart basis (dq-part first, dp-part second):
/// first n entries X.h, last n entries X.v_j + sum_i X.h^i Gamma^0_{ij}.
std::vector<double> adapted_to_induced(const SpaceForm& M, const BundlePoint& pt, const TangentVector& X);

/// Exact inverse of adapted_to_induced.
TangentVector induced_to_adapted(const SpaceForm& M, const BundlePoint& pt, std::span<const double> induced);

/// Brackets of the adapted frame fields:
///   [d/dp_i, d/dp_j] = 0
///   [d/dp_i, delta_j] = mixed(i,j,k) d/dp_k          with mixed(i,j,k) = Gamma^i_{jk}
///   [delta_i, delta_j] = horizontal(k,i,j) d/dp_k    with horizontal(k,i,j) = R^0_{kij}
struct FrameBrackets {
    MTensor vertical_vertical;
    MTensor mixed;
    MTensor horizontal_horizontal;
};
FrameBrackets frame_brackets(const SpaceForm& M, const BundlePoint& pt);

/// Per-point cache of the base geometry used by every structure tensor.
struct PointGeometry {
    int n = 0;
    double t = 0.0;
    MTensor g, g_inv, gamma, gamma0, riem;
    std::vector<double> p;
    std::vector<double> g0;   // raised covector
    MTensor r0;               // R^0_{kij} = p_h R^h_{kij}, stored (k,i,j)

    static PointGeometry at(const SpaceForm& M, const BundlePoint& pt);
};

}  // namespace klift
