#pragma once
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "klift/bundle.hpp"
#include "klift/lambda_family.hpp"

namespace klift {

/// Finite-difference configuration for the ground-truth generators.
struct FDConfig {
    enum class Scheme { Central, Richardson };
    double h = 1e-5;
    Scheme scheme = Scheme::Central;
    double scale_guard = 1.0;  // per-direction step scaling: h * (1 + scale_guard * |z_d|)
};

using ScalarField = std::function<double(std::span<const double>)>;
using VectorField = std::function<std::vector<double>(std::span<const double>)>;

/// Central difference (f(z+h e_d) - f(z-h e_d)) / 2h; Richardson combines h and
/// h/2 for fourth order. Field evaluation failures surface as EvaluationFailedError.
std::vector<double> fd_derivative(const VectorField& f, std::span<const double> z, int dir, const FDConfig& cfg);
double fd_derivative(const ScalarField& f, std::span<const double> z, int dir, const FDConfig& cfg);

/// Coordinate Christoffel symbols of a dim-dimensional metric field via
/// (1/2) G^{ad} (d_b G_dc + d_c G_bd - d_d G_bc). Input and output row-major
/// flattened; result indexed [a][b][c].
std::vector<double> koszul_connection(const VectorField& metric_field, std::span<const double> z, int dim,
                                      const FDConfig& cfg);

/// Coordinate curvature dGamma - dGamma + GG - GG of a connection field;
/// result indexed [a][b][c][d] with K(e_c, e_d) e_b = R^a_{bcd} e_a.
std::vector<double> curvature_from_connection(const VectorField& conn_field, std::span<const double> z, int dim,
                                              const FDConfig& cfg);

/// (d omega)_{abc} = d_a omega_{bc} + d_b omega_{ca} + d_c omega_{ab} for an
/// antisymmetric 2-form field (flattened dim x dim); result indexed [a][b][c].
std::vector<double> fd_exterior_derivative(const VectorField& form_field, std::span<const double> z, int dim,
                                           const FDConfig& cfg);

/// Adapted frame as induced-coordinate columns: first n columns delta/delta q^i,
/// last n columns d/dp_i.
Eigen::MatrixXd frame_matrix(const SpaceForm& M, const BundlePoint& pt);

/// Koszul-oracle connection converted to the adapted frame:
/// result indexed [gamma][alpha][beta] (2n each), nabla_{e_alpha} e_beta = w^gamma e_gamma.
std::vector<double> oracle_connection_frame(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                            const FDConfig& cfg);

/// FD curvature of the Koszul-oracle connection converted to the adapted frame:
/// result indexed [alpha][beta][gamma][delta], K(e_alpha, e_beta) e_gamma = Kf^delta e_delta.
std::vector<double> oracle_curvature_frame(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                           const FDConfig& cfg);

}  // namespace klift
