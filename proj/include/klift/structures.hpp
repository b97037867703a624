#pragma once
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "klift/bundle.hpp"
#include "klift/lambda_family.hpp"
#include "klift/oracles.hpp"

namespace klift {

/// Structure coefficients at a fixed energy density t. The pair (a1, b1)
/// determines the complex structure, (c1, c2, d1, d2) the metric, mu the
/// Hermitian proportionality factor (lambda' in the closed case).
struct StructureCoefficients {
    double a1, a2, b1, b2, c1, c2, d1, d2, mu;
};

/// Denominators below this floor count as a boundary singularity of the family.
inline constexpr double kDenominatorFloor = 1e-8;

/// Throws InadmissibleError unless lambda > 0, 2c - A^2 t lambda^2 > floor and
/// lambda + 2t lambda' > floor at t.
void require_admissible(const LambdaFamily& L, double c, double t);

StructureCoefficients coefficients_at(const LambdaFamily& L, double c, double t);
/// Hermitian-stage variant with a free proportionality factor (testing only;
/// everything downstream fixes mu = lambda').
StructureCoefficients coefficients_at(const LambdaFamily& L, double c, double t, double mu);

/// t-derivatives of c1, c2, d1, d2 at mu = lambda', used by the generic
/// connection assembly.
struct CoefficientRates {
    double c1, c2, d1, d2;
};
CoefficientRates coefficient_rates_at(const LambdaFamily& L, double c, double t);

/// J^(1)_ij (0,2) and J_(2)^ij (2,0); J delta_i = J1_ij dp_j, J dp_i = -J2^ij delta_j.
std::pair<MTensor, MTensor> complex_structure_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

TangentVector apply_J(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt, const TangentVector& X);

/// The three frame blocks of the Nijenhuis tensor, stored (k, i, j):
///   horizontal_pair: N(delta_i, delta_j) = hp(k,i,j) d/dp_k
///   mixed_pair:      N(delta_i, d/dp_j) = mp(k,i,j) delta_k
///   vertical_pair:   N(d/dp_i, d/dp_j) = vp(k,i,j) d/dp_k
/// b1_override replaces the integrable b1 (b2 is re-derived so J stays almost
/// complex); used to exercise the only-if direction.
struct NijenhuisBlocks {
    MTensor horizontal_pair, mixed_pair, vertical_pair;
    double max_abs() const;
};
NijenhuisBlocks nijenhuis_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                             std::optional<double> b1_override = {});

/// Kaehler metric blocks G^(1) (0,2) and G_(2) (2,0). Throws
/// NotPositiveDefiniteError when the positivity conditions on
/// (c1, c2, c1+2td1, c2+2td2) fail.
std::pair<MTensor, MTensor> metric_G_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);
/// Hermitian-stage metric with free mu (testing only).
std::pair<MTensor, MTensor> metric_G_hermitian_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                                                  double mu);

/// Closed-form inverses H_(1) (2,0) and H^(2) (0,2) of the metric blocks.
std::pair<MTensor, MTensor> inverse_metric_H_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt);

/// phi(d/dp_i, delta_j) = lambda delta^i_j + mu g^{0i} p_j; the diagonal frame
/// blocks of phi vanish identically.
MTensor fundamental_form_at(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                            std::optional<double> mu_override = {});

/// The 2n x 2n bundle metric in induced coordinates (row-major flattened).
std::vector<double> bundle_metric_induced(const SpaceForm& M, const LambdaFamily& L, std::span<const double> z);

/// The 2-form phi as an antisymmetric 2n x 2n matrix in induced coordinates.
std::vector<double> two_form_induced(const SpaceForm& M, const LambdaFamily& L, std::span<const double> z,
                                     std::optional<double> mu_override = {});

/// Max-norm of the FD exterior derivative of phi at pt, scaled by
/// 1 + |phi|_inf. Zero (to FD tolerance) iff mu = lambda'.
double dphi_residual(const SpaceForm& M, const LambdaFamily& L, const BundlePoint& pt,
                     std::optional<double> mu_override = {}, const FDConfig& cfg = {});

/// Per-t admissibility report: the sign conditions on lambda, A lambda + 2 b1,
/// 2c - A^2 t lambda^2, lambda + 2t lambda', and the four metric positivity
/// margins c1, c2, c1 + 2t d1, c2 + 2t d2.
struct AdmissibilityRow {
    double t = 0.0;
    double lambda_value = 0.0, a_sum = 0.0, metric_cap = 0.0, slope = 0.0;
    double c1 = 0.0, c2 = 0.0, c1_plus = 0.0, c2_plus = 0.0;
    bool ok_lambda = false, ok_a_sum = false, ok_metric_cap = false, ok_slope = false;
    bool ok_c1 = false, ok_c2 = false, ok_c1_plus = false, ok_c2_plus = false;
    bool all_ok() const {
        return ok_lambda && ok_a_sum && ok_metric_cap && ok_slope && ok_c1 && ok_c2 && ok_c1_plus && ok_c2_plus;
    }
};
struct AdmissibilityReport {
    std::vector<AdmissibilityRow> rows;
    bool all_ok() const;
    /// t of the first failing row, or a negative value when every row passes.
    double first_failure_t() const;
};
AdmissibilityReport admissibility_scan(const LambdaFamily& L, double c, std::span<const double> t_grid);

}  // namespace klift
