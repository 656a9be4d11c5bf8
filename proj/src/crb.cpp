#include "leoloc/crb.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "leoloc/errors.hpp"

namespace leoloc {

ChannelModel ChannelModel::from_sigma(double v_p_ms, double sigma_toa_s) {
    ChannelModel ch;
    ch.propagation_velocity_ms = v_p_ms;
    ch.sigma_toa_s = sigma_toa_s;
    ch.gamma_per_m2 = gamma_from_sigma(v_p_ms, sigma_toa_s);
    return ch;
}

ChannelModel ChannelModel::from_gamma(double v_p_ms, double gamma_per_m2) {
    if (v_p_ms <= 0.0 || gamma_per_m2 <= 0.0)
        throw std::domain_error("propagation velocity and gamma must be positive");
    ChannelModel ch;
    ch.propagation_velocity_ms = v_p_ms;
    ch.gamma_per_m2 = gamma_per_m2;
    ch.sigma_toa_s = 1.0 / (v_p_ms * std::sqrt(gamma_per_m2));
    return ch;
}

void LinkBudget::validate() const {
    if (bandwidth_hz <= 0.0) throw ConfigError("channel.bandwidth_hz must be > 0");
    if (signal_duration_s <= 0.0) throw ConfigError("channel.signal_duration_s must be > 0");
    if (centre_frequency_hz <= 0.0) throw ConfigError("channel.centre_frequency_hz must be > 0");
    if (snr <= 0.0) throw ConfigError("channel.snr must be > 0");
}

double gamma_from_sigma(double v_p_ms, double sigma_toa_s) {
    if (v_p_ms <= 0.0) throw std::domain_error("propagation velocity must be positive");
    if (sigma_toa_s <= 0.0) throw std::domain_error("ToA standard deviation must be positive");
    const double range_sigma_m = v_p_ms * sigma_toa_s;
    return 1.0 / (range_sigma_m * range_sigma_m);
}

double sigma_toa_lower_bound(const LinkBudget& budget) {
    budget.validate();
    return 1.0 / (8.0 * kPi * kPi * budget.bandwidth_hz * budget.signal_duration_s *
                  budget.centre_frequency_hz * budget.centre_frequency_hz * budget.snr);
}

bool link_feasible(const LinkBudget& budget) {
    budget.validate();
    const double quality = 1.0 / (budget.bandwidth_hz * budget.signal_duration_s *
                                  budget.centre_frequency_hz * budget.centre_frequency_hz *
                                  budget.snr);
    return quality <= kToaFeasibilityThresholdS;
}

FisherMatrix3 anchored_fim(const Vec3& sat_pos_m, const std::vector<Vec3>& neighbors_m,
                           double gamma_per_m2) {
    FisherMatrix3 sum = FisherMatrix3::Zero();
    for (const Vec3& nb : neighbors_m) {
        const Vec3 diff = sat_pos_m - nb;
        const double d2 = diff.squaredNorm();
        if (d2 == 0.0)
            throw DegenerateGeometryError("neighbor coincides with the satellite");
        // u u^T with u = diff / d; the 1/d^2 folds the ToA path-loss
        // exponent s = 2.
        sum.noalias() += (diff * diff.transpose()) / d2;
    }
    return gamma_per_m2 * sum;
}

FisherMatrix3 invert3(const FisherMatrix3& m) {
    FisherMatrix3 adj;
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double det = m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
    return adj / det;
}

Rcrb rcrb(const FisherMatrix3& fim) {
    Eigen::SelfAdjointEigenSolver<FisherMatrix3> eig;
    eig.computeDirect(fim, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues()(0);
    const double hi = eig.eigenvalues()(2);
    if (!(hi > 0.0) || !(lo > hi / kFimConditionLimit))
        return Rcrb{0.0, true};
    const FisherMatrix3 inv = invert3(fim);
    return Rcrb{std::sqrt(inv.trace() / 3.0), false};
}

Eigen::MatrixXd anchorless_fim_network(const std::vector<Vec3>& positions_m,
                                       const std::vector<std::pair<int, int>>& links,
                                       double gamma_per_m2) {
    const int n = static_cast<int>(positions_m.size());
    Eigen::MatrixXd fim = Eigen::MatrixXd::Zero(3 * n, 3 * n);
    for (const auto& [j, k] : links) {
        if (j < 0 || j >= n || k < 0 || k >= n || j == k)
            throw ValidationError("link endpoints out of range");
        const Vec3 diff = positions_m[j] - positions_m[k];
        const double d2 = diff.squaredNorm();
        if (d2 == 0.0)
            throw DegenerateGeometryError("linked satellites coincide");
        const Eigen::Matrix3d block = (diff * diff.transpose()) / d2;
        fim.block<3, 3>(3 * j, 3 * j) += block;
        fim.block<3, 3>(3 * k, 3 * k) += block;
        fim.block<3, 3>(3 * j, 3 * k) -= block;
        fim.block<3, 3>(3 * k, 3 * j) -= block;
    }
    return gamma_per_m2 * fim;
}

Rcrb anchorless_rcrb_per_sat(const Vec3& sat_pos_m,
                             const std::vector<Vec3>& linked_sats_m,
                             double gamma_per_m2) {
    return rcrb(anchored_fim(sat_pos_m, linked_sats_m, gamma_per_m2));
}

PsdPseudoInverse pseudo_inverse_psd(const Eigen::MatrixXd& m, double rank_tolerance) {
    if (m.rows() != m.cols())
        throw ValidationError("pseudo-inverse input must be square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    const Eigen::VectorXd& values = eig.eigenvalues();
    const double max_ev = values.size() > 0 ? values(values.size() - 1) : 0.0;
    const double cutoff = max_ev > 0.0 ? rank_tolerance * max_ev : 0.0;

    PsdPseudoInverse result;
    result.max_eigenvalue = max_ev;
    Eigen::VectorXd inv_values(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (max_ev <= 0.0 || values(i) <= cutoff) {
            inv_values(i) = 0.0;
            ++result.zero_modes;
        } else {
            inv_values(i) = 1.0 / values(i);
        }
    }
    result.pinv = eig.eigenvectors() * inv_values.asDiagonal() * eig.eigenvectors().transpose();
    return result;
}

Rcrb anchorless_rcrb_network(const Eigen::MatrixXd& fim_rel, int sat_idx) {
    if (fim_rel.rows() % 3 != 0 || 3 * sat_idx >= fim_rel.rows() || sat_idx < 0)
        throw ValidationError("satellite index outside the network FIM");
    const PsdPseudoInverse p = pseudo_inverse_psd(fim_rel);
    const double tr = p.pinv.block<3, 3>(3 * sat_idx, 3 * sat_idx).trace();
    const bool degenerate = p.zero_modes > 6 || !(tr > 0.0);
    return Rcrb{degenerate ? 0.0 : std::sqrt(tr / 3.0), degenerate};
}

std::vector<Rcrb> anchorless_rcrb_network_all(const Eigen::MatrixXd& fim_rel) {
    if (fim_rel.rows() % 3 != 0)
        throw ValidationError("network FIM dimension must be a multiple of 3");
    const PsdPseudoInverse p = pseudo_inverse_psd(fim_rel);
    const int n = static_cast<int>(fim_rel.rows() / 3);
    std::vector<Rcrb> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double tr = p.pinv.block<3, 3>(3 * i, 3 * i).trace();
        const bool degenerate = p.zero_modes > 6 || !(tr > 0.0);
        out[static_cast<size_t>(i)] = Rcrb{degenerate ? 0.0 : std::sqrt(tr / 3.0), degenerate};
    }
    return out;
}

}  // namespace leoloc
