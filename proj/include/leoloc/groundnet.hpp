#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "leoloc/constellation.hpp"

namespace leoloc {

// Earth rotation rate, rad/s. ECEF and ECI are aligned at t = 0.
inline constexpr double kEarthRotationRadS = 7.2921159e-5;

struct GroundStation {
    std::string name;
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_m = 0.0;
    double min_elevation_deg = 40.0;
};

struct EcefPosition {
    Vec3 position_km = Vec3::Zero();
};

/// Parses the station catalog CSV:
///   name,lat_deg,lon_deg,alt_m,min_elev_deg
/// '#' lines are comments; alt_m / min_elev_deg may be empty (0 and 40).
/// Throws ParseError (with line number) or ValidationError.
std::vector<GroundStation> parse_stations(std::istream& in, const std::string& label);
std::vector<GroundStation> load_stations(const std::string& path);

// Spherical-Earth placement at radius R_E + altitude.
EcefPosition station_to_ecef(const GroundStation& station,
                             const ConstellationConfig& config);

// Frame rotation about z by theta(t) = omega_E * t.
EcefPosition eci_to_ecef(const Vec3& position_eci_km, double t_s);

/// Maximum station-to-satellite distance for a shell at `altitude_km`
/// seen at elevation `elevation_deg` above the local horizon:
///   d = R_E [ sqrt(((a+R_E)/R_E)^2 - cos^2 e) - sin e ].
double max_slant_range(double altitude_km, double elevation_deg,
                       const ConstellationConfig& config);

// Slant-distance test against max_slant_range; boundary inclusive.
bool visible(const EcefPosition& sat_ecef, const GroundStation& station,
             const ConstellationConfig& config);

// Sub-satellite spherical latitude/longitude, degrees; lon in (-180, 180].
std::pair<double, double> ground_track(const EciState& state);

}  // namespace leoloc
