#pragma once
#include <vector>

#include "klift/mtensor.hpp"

namespace klift {

/// Round n-sphere of constant sectional curvature c > 0, realized in the
/// stereographic chart with g_ij = delta_ij / (1 + (c/4)|x|^2)^2.
struct SpaceForm {
    int n;
    double c;
    SpaceForm(int n_, double c_);
};

struct BasePoint {
    std::vector<double> x;
};

double conformal_factor(const SpaceForm& M, const BasePoint& x);

/// g_ij(x), type (0,2), symmetric positive definite.
MTensor metric_at(const SpaceForm& M, const BasePoint& x);

/// g^{ij}(x), type (2,0).
MTensor inverse_metric_at(const SpaceForm& M, const BasePoint& x);

/// Gamma^k_{ij}(x) of the Levi-Civita connection, stored (k,i,j), type (1,2).
MTensor christoffel_at(const SpaceForm& M, const BasePoint& x);

/// R^l_{kij} = c (delta^l_i g_jk - delta^l_j g_ik), stored (l,k,i,j), type (1,3).
/// Convention: R(e_i, e_j) e_k = R^l_{kij} e_l.
MTensor curvature_at(const SpaceForm& M, const BasePoint& x);

}  // namespace klift
