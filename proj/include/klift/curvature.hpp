#pragma once
#include <array>
#include <span>
#include <vector>

#include "klift/connection.hpp"
#include "klift/oracles.hpp"

namespace klift {

/// Frame-block curvature of the bundle connection. Every block is stored with
/// axis order (input1, input2, argument, output):
///   qqq: K(delta_i, delta_j) delta_k = qqq(i,j,k,h) delta_h
///   qqp: K(delta_i, delta_j) dp_k   = qqp(i,j,k,h) dp_h     = -qqq(i,j,h,k)
///   ppq: K(dp_i, dp_j) delta_k      = ppq(i,j,k,h) delta_h
///   ppp: K(dp_i, dp_j) dp_k         = ppp(i,j,k,h) dp_h     = -ppq(i,j,h,k)
///   pqq: K(dp_i, delta_j) delta_k   = pqq(i,j,k,h) dp_h
///   pqp: K(dp_i, delta_j) dp_k      = pqp(i,j,k,h) delta_h
/// All remaining frame components vanish.
struct CurvatureBlocks {
    int n = 0;
    MTensor qqq, qqp, ppq, ppp, pqq, pqp;
};

CurvatureBlocks curvature_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

/// The full (2n)^4 adapted-frame array [alpha][beta][gamma][delta] with
/// K(e_alpha, e_beta) e_gamma = Kf^delta e_delta; horizontal frame legs first.
std::vector<double> curvature_frame_components(const CurvatureBlocks& blocks);

struct RicciBlocks {
    MTensor horizontal;  // Ric(delta_i, delta_j), (0,2)
    MTensor vertical;    // Ric(dp_i, dp_j), (2,0)
    double max_mixed_abs = 0.0;
};

/// Ricci as the trace over the first curvature slot, closed-form blocks.
RicciBlocks ricci_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

/// Same trace taken over an externally supplied frame curvature array
/// (e.g. the FD oracle route).
RicciBlocks ricci_from_frame(std::span<const double> kframe, int n);

/// Max scaled residual of (nabla_E K)(F,G)H over all frame arguments, using FD
/// derivatives of the closed-form blocks plus the algebraic connection terms.
double nabla_K_residual(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt, const FDConfig& cfg = {});

/// Scaled residuals of the eight covariant transport identities satisfied by
/// the curvature blocks (four horizontal-derivative laws, four vertical ones).
std::array<double, 8> block_transport_residuals(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                                const FDConfig& cfg = {});

/// H(X) = G(K(X, JX) JX, X) / G(X,X)^2. Throws ZeroVectorError on X = 0.
double holomorphic_sectional_curvature(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                       const TangentVector& X);

}  // namespace klift
