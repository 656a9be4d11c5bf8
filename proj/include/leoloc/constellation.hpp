#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace leoloc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDeg2Rad = kPi / 180.0;
inline constexpr double kRad2Deg = 180.0 / kPi;

using Vec3 = Eigen::Vector3d;

/// Walker-delta shell parameters plus the physical constants the
/// propagator needs. Defaults model the Phase-1 Starlink shell.
struct ConstellationConfig {
    double altitude_km = 550.0;
    int num_planes = 72;
    int sats_per_plane = 22;
    double inclination_deg = 53.0;
    // Argument-of-latitude offset between same-index slots of adjacent planes.
    double phasing_offset_deg = 0.0;
    double earth_radius_km = 6371.0;
    double mu_km3s2 = 398600.4418;
    double j2 = 1.08263e-3;

    int total_sats() const { return num_planes * sats_per_plane; }
    double semi_major_axis_km() const { return earth_radius_km + altitude_km; }

    // Throws ConfigError naming the offending field.
    void validate() const;
};

/// 1-based (plane, slot) pair with canonical text form sXXYYY.
struct SatelliteId {
    int plane = 1;
    int slot = 1;

    std::string str() const;
    static SatelliteId parse(std::string_view text);  // throws ParseError

    auto operator<=>(const SatelliteId&) const = default;
};

// Row-major satellite index: plane-major, slot-minor, 0-based.
int sat_index(const SatelliteId& id, const ConstellationConfig& config);
SatelliteId sat_id_from_index(int index, const ConstellationConfig& config);

/// Circular-orbit elements; eccentricity is fixed at zero.
struct OrbitalElements {
    double semi_major_axis_km = 0.0;
    double inclination_rad = 0.0;
    double raan_rad = 0.0;
    double arg_latitude_rad = 0.0;  // at epoch t = 0
};

struct EciState {
    Vec3 position_km = Vec3::Zero();
    Vec3 velocity_kms = Vec3::Zero();
    double epoch_s = 0.0;
};

/// Secular drift rates relative to the unperturbed circular orbit.
/// Both vanish when J2 = 0.
struct J2SecularRates {
    double raan_rate_rad_s = 0.0;
    double arg_latitude_correction_rad_s = 0.0;
};

double wrap_two_pi(double angle_rad);

/// Lays out the shell: plane p gets raan (p-1)*360/P degrees, slot k gets
/// argument of latitude (k-1)*360/S + (p-1)*phasing_offset degrees.
/// Satellite s01001 therefore starts at [a, 0, 0].
std::vector<std::pair<SatelliteId, OrbitalElements>>
generate_walker(const ConstellationConfig& config);

// Two-body mean motion sqrt(mu/a^3), rad/s.
double mean_motion(const ConstellationConfig& config);

J2SecularRates j2_secular_rates(const OrbitalElements& elements,
                                const ConstellationConfig& config);

/// Analytic circular-orbit propagation with secular-only J2 drift.
/// Velocity is the in-plane tangent scaled by n*a.
EciState propagate(const OrbitalElements& elements, double t_s,
                   const ConstellationConfig& config);

}  // namespace leoloc
