#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "leoloc/constellation.hpp"

namespace leoloc {

// Link-quality threshold on 1/(B Ts Fc^2 SNR) for usable ToA ranging.
inline constexpr double kToaFeasibilityThresholdS = 4.81e-7;

// A Fisher matrix with condition number above this is treated as singular.
inline constexpr double kFimConditionLimit = 1e12;

// Pseudo-inverse: eigenvalues below this fraction of the largest are
// treated as gauge/zero modes.
inline constexpr double kPinvRankTolerance = 1e-9;

/// ToA channel constant. gamma = 1/(v_p * sigma_T)^2 holds by construction.
struct ChannelModel {
    double propagation_velocity_ms = 2.998e8;
    double sigma_toa_s = 0.0;
    double gamma_per_m2 = 0.0;
    static constexpr int path_loss_exponent = 2;  // ToA

    static ChannelModel from_sigma(double v_p_ms, double sigma_toa_s);
    static ChannelModel from_gamma(double v_p_ms, double gamma_per_m2);
};

struct LinkBudget {
    double bandwidth_hz = 0.0;
    double signal_duration_s = 0.0;
    double centre_frequency_hz = 0.0;
    double snr = 0.0;

    void validate() const;  // all strictly positive
};

// gamma = 1/(v_p sigma_T)^2, throws std::domain_error on non-positive input.
double gamma_from_sigma(double v_p_ms, double sigma_toa_s);

// sigma_T >= 1/(8 pi^2 B Ts Fc^2 SNR).
double sigma_toa_lower_bound(const LinkBudget& budget);

// 1/(B Ts Fc^2 SNR) <= 4.81e-7 s, boundary inclusive.
bool link_feasible(const LinkBudget& budget);

using FisherMatrix3 = Eigen::Matrix3d;

/// Position-information matrix for one satellite from ToA ranging to the
/// given neighbor set: F = gamma * sum_j u_j u_j^T with u_j the unit
/// direction to neighbor j. Positions in metres; F entries in 1/m^2.
/// Throws DegenerateGeometryError on a coincident neighbor.
FisherMatrix3 anchored_fim(const Vec3& sat_pos_m, const std::vector<Vec3>& neighbors_m,
                           double gamma_per_m2);

struct Rcrb {
    double rcrb_m = 0.0;
    bool degenerate = false;
};

/// Scalar bound sqrt(tr(F^-1)/3). Singular or ill-conditioned input
/// (condition number > kFimConditionLimit) is flagged degenerate and
/// carries no numeric value.
Rcrb rcrb(const FisherMatrix3& fim);

// Closed-form adjugate/determinant inverse; no conditioning checks.
FisherMatrix3 invert3(const FisherMatrix3& m);

/// Relative-position information matrix for the whole network:
/// F_rel = gamma J^T J with one Jacobian row per undirected link, carrying
/// +-(x_j - x_k)^T / d_jk in blocks j and k. Positions in metres; links as
/// (j, k) index pairs into `positions_m`.
Eigen::MatrixXd anchorless_fim_network(const std::vector<Vec3>& positions_m,
                                       const std::vector<std::pair<int, int>>& links,
                                       double gamma_per_m2);

/// Same computation as anchored_fim + rcrb with the neighbor set
/// restricted to linked satellites.
Rcrb anchorless_rcrb_per_sat(const Vec3& sat_pos_m,
                             const std::vector<Vec3>& linked_sats_m,
                             double gamma_per_m2);

/// Rank-tolerant pseudo-inverse of a symmetric PSD matrix via
/// eigendecomposition.
struct PsdPseudoInverse {
    Eigen::MatrixXd pinv;
    int zero_modes = 0;
    double max_eigenvalue = 0.0;
};
PsdPseudoInverse pseudo_inverse_psd(const Eigen::MatrixXd& m,
                                    double rank_tolerance = kPinvRankTolerance);

/// Network-mode bound for one satellite: sqrt(tr(block)/3) of its 3x3
/// diagonal block of pinv(F_rel). Flagged degenerate when the null space
/// exceeds the 6 rigid-motion gauge modes.
Rcrb anchorless_rcrb_network(const Eigen::MatrixXd& fim_rel, int sat_idx);

// One decomposition shared across all satellites.
std::vector<Rcrb> anchorless_rcrb_network_all(const Eigen::MatrixXd& fim_rel);

}  // namespace leoloc
