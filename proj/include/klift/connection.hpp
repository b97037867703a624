#pragma once
#include "klift/bundle.hpp"
#include "klift/lambda_family.hpp"

namespace klift {

/// Levi-Civita connection of the bundle metric in the adapted frame:
///   nabla_{d/dp_i} d/dp_j  = Q(i,j,h) d/dp_h                       (Q symmetric in i,j)
///   nabla_{d/dp_i} delta_j = P(h,i,j) delta_h
///   nabla_{delta_i} d/dp_j = -Gamma^j_{ih} d/dp_h + P(h,j,i) delta_h
///   nabla_{delta_i} delta_j = Gamma^h_{ij} delta_h + S(h,i,j) d/dp_h
struct ConnectionCoefficients {
    MTensor Q;           // (2,1) stored (i,j,h)
    MTensor P;           // (2,1) stored (h,i,j)
    MTensor S;           // (0,3) stored (h,i,j)
    MTensor base_gamma;  // Gamma^k_{ij} at the base point
};

/// Constant-curvature closed form.
ConnectionCoefficients connection_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

/// Generic assembly from contractions of the analytic dG/dp with the closed-form
/// inverses; an independent algebraic route to the same coefficients.
ConnectionCoefficients connection_generic_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

}  // namespace klift
