#include "leoloc/constellation.hpp"

#include <cmath>
#include <cstdio>

#include "leoloc/errors.hpp"

namespace leoloc {

void ConstellationConfig::validate() const {
    if (!(altitude_km > 0.0))
        throw ConfigError("constellation.altitude_km must be > 0");
    if (num_planes < 1)
        throw ConfigError("constellation.num_planes must be >= 1");
    if (num_planes > 99)
        throw ConfigError("constellation.num_planes must be <= 99 (sXXYYY identifier format)");
    if (sats_per_plane < 1)
        throw ConfigError("constellation.sats_per_plane must be >= 1");
    if (sats_per_plane > 999)
        throw ConfigError("constellation.sats_per_plane must be <= 999 (sXXYYY identifier format)");
    if (inclination_deg < 0.0 || inclination_deg > 180.0)
        throw ConfigError("constellation.inclination_deg must be in [0, 180]");
    if (!(earth_radius_km > 0.0))
        throw ConfigError("constellation.earth_radius_km must be > 0");
    if (!(mu_km3s2 > 0.0))
        throw ConfigError("constellation.mu_km3s2 must be > 0");
    if (j2 < 0.0)
        throw ConfigError("constellation.j2 must be >= 0");
}

std::string SatelliteId::str() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "s%02d%03d", plane, slot);
    return buf;
}

SatelliteId SatelliteId::parse(std::string_view text) {
    if (text.size() != 6 || text[0] != 's')
        throw ParseError("satellite id must have the form sXXYYY: '" + std::string(text) + "'");
    for (int i = 1; i < 6; ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("satellite id must have the form sXXYYY: '" + std::string(text) + "'");
    const int plane = (text[1] - '0') * 10 + (text[2] - '0');
    const int slot = (text[3] - '0') * 100 + (text[4] - '0') * 10 + (text[5] - '0');
    if (plane < 1 || slot < 1)
        throw ParseError("satellite id indices are 1-based: '" + std::string(text) + "'");
    return SatelliteId{plane, slot};
}

int sat_index(const SatelliteId& id, const ConstellationConfig& config) {
    if (id.plane < 1 || id.plane > config.num_planes || id.slot < 1 ||
        id.slot > config.sats_per_plane)
        throw ValidationError("satellite id " + id.str() + " outside the configured shell");
    return (id.plane - 1) * config.sats_per_plane + (id.slot - 1);
}

SatelliteId sat_id_from_index(int index, const ConstellationConfig& config) {
    if (index < 0 || index >= config.total_sats())
        throw ValidationError("satellite index out of range");
    return SatelliteId{index / config.sats_per_plane + 1, index % config.sats_per_plane + 1};
}

double wrap_two_pi(double angle_rad) {
    double a = std::fmod(angle_rad, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

std::vector<std::pair<SatelliteId, OrbitalElements>>
generate_walker(const ConstellationConfig& config) {
    config.validate();
    std::vector<std::pair<SatelliteId, OrbitalElements>> shell;
    shell.reserve(static_cast<size_t>(config.total_sats()));
    const double raan_step = 360.0 / config.num_planes;
    const double slot_step = 360.0 / config.sats_per_plane;
    for (int p = 1; p <= config.num_planes; ++p) {
        const double raan_deg = (p - 1) * raan_step;
        for (int k = 1; k <= config.sats_per_plane; ++k) {
            const double arg_deg = (k - 1) * slot_step + (p - 1) * config.phasing_offset_deg;
            OrbitalElements el;
            el.semi_major_axis_km = config.semi_major_axis_km();
            el.inclination_rad = config.inclination_deg * kDeg2Rad;
            el.raan_rad = wrap_two_pi(raan_deg * kDeg2Rad);
            el.arg_latitude_rad = wrap_two_pi(arg_deg * kDeg2Rad);
            shell.emplace_back(SatelliteId{p, k}, el);
        }
    }
    return shell;
}

double mean_motion(const ConstellationConfig& config) {
    const double a = config.semi_major_axis_km();
    return std::sqrt(config.mu_km3s2 / (a * a * a));
}

J2SecularRates j2_secular_rates(const OrbitalElements& elements,
                                const ConstellationConfig& config) {
    const double n = mean_motion(config);
    const double re_over_a = config.earth_radius_km / elements.semi_major_axis_km;
    const double k = config.j2 * re_over_a * re_over_a * n;
    const double ci = std::cos(elements.inclination_rad);
    J2SecularRates rates;
    rates.raan_rate_rad_s = -1.5 * k * ci;
    // Secular argument-of-perigee plus mean-anomaly corrections for e = 0:
    // (3/4) n J2 (Re/a)^2 [(5cos^2 i - 1) + (3cos^2 i - 1)].
    rates.arg_latitude_correction_rad_s = 0.75 * k * (8.0 * ci * ci - 2.0);
    return rates;
}

EciState propagate(const OrbitalElements& elements, double t_s,
                   const ConstellationConfig& config) {
    const double n = mean_motion(config);
    const J2SecularRates rates = j2_secular_rates(elements, config);
    const double u = wrap_two_pi(elements.arg_latitude_rad +
                                 (n + rates.arg_latitude_correction_rad_s) * t_s);
    const double raan = wrap_two_pi(elements.raan_rad + rates.raan_rate_rad_s * t_s);

    const double a = elements.semi_major_axis_km;
    const double ci = std::cos(elements.inclination_rad);
    const double si = std::sin(elements.inclination_rad);
    const double cu = std::cos(u);
    const double su = std::sin(u);
    const double co = std::cos(raan);
    const double so = std::sin(raan);

    EciState state;
    state.position_km =
        Vec3(a * (cu * co - su * ci * so), a * (cu * so + su * ci * co), a * su * si);
    // In-plane tangent; circular speed n*a.
    state.velocity_kms = n * a *
        Vec3(-su * co - cu * ci * so, -su * so + cu * ci * co, cu * si);
    state.epoch_s = t_s;
    return state;
}

}  // namespace leoloc
