#include "leoloc/topology.hpp"

#include <algorithm>
#include <cmath>

#include "leoloc/errors.hpp"

namespace leoloc {

double occlusion_radius_km(const LinkConstraints& constraints,
                           const ConstellationConfig& config) {
    return config.earth_radius_km + constraints.ionosphere_height_km;
}

double los_max_range_km(const LinkConstraints& constraints,
                        const ConstellationConfig& config) {
    const double shell = config.earth_radius_km + config.altitude_km;
    const double occ = occlusion_radius_km(constraints, config);
    return 2.0 * std::sqrt(shell * shell - occ * occ);
}

bool los_clear(const Vec3& p1_km, const Vec3& p2_km, double occlusion_radius_km) {
    const Vec3 d = p2_km - p1_km;
    const double len2 = d.squaredNorm();
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(-p1_km.dot(d) / len2, 0.0, 1.0);
    const Vec3 closest = p1_km + t * d;
    return closest.norm() >= occlusion_radius_km;
}

std::array<SatelliteId, 4> plus_grid_neighbors(const SatelliteId& id,
                                               const ConstellationConfig& config) {
    const int planes = config.num_planes;
    const int slots = config.sats_per_plane;
    if (id.plane < 1 || id.plane > planes || id.slot < 1 || id.slot > slots)
        throw ValidationError("satellite id " + id.str() + " outside the configured shell");
    const auto wrap = [](int v, int count) { return (v - 1 + count) % count + 1; };
    return {SatelliteId{id.plane, wrap(id.slot + 1, slots)},
            SatelliteId{id.plane, wrap(id.slot - 1, slots)},
            SatelliteId{wrap(id.plane + 1, planes), id.slot},
            SatelliteId{wrap(id.plane - 1, planes), id.slot}};
}

TopologySnapshot build_snapshot(const std::vector<EciState>& states,
                                const std::vector<GroundStation>& stations,
                                const LinkConstraints& constraints,
                                const ConstellationConfig& config) {
    config.validate();
    const int n = config.total_sats();
    if (static_cast<int>(states.size()) != n)
        throw ValidationError("expected one state per satellite");
    const double epoch = states.empty() ? 0.0 : states.front().epoch_s;
    for (const auto& s : states)
        if (s.epoch_s != epoch)
            throw ValidationError("snapshot states do not share a common epoch");

    TopologySnapshot snap;
    snap.epoch_s = epoch;

    const double occ = occlusion_radius_km(constraints, config);
    snap.sat_links.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        const SatelliteId id = sat_id_from_index(i, config);
        for (const SatelliteId& nb : plus_grid_neighbors(id, config)) {
            const int j = sat_index(nb, config);
            if (j <= i) continue;  // each undirected pair once; drops self-links
            if (los_clear(states[i].position_km, states[j].position_km, occ))
                snap.sat_links.emplace_back(i, j);
        }
    }
    std::sort(snap.sat_links.begin(), snap.sat_links.end());
    snap.sat_links.erase(std::unique(snap.sat_links.begin(), snap.sat_links.end()),
                         snap.sat_links.end());

    // Station geometry is time-invariant in ECEF; satellites rotate into it.
    std::vector<Vec3> station_pos(stations.size());
    std::vector<double> station_range(stations.size());
    for (size_t s = 0; s < stations.size(); ++s) {
        station_pos[s] = station_to_ecef(stations[s], config).position_km;
        station_range[s] =
            max_slant_range(config.altitude_km, stations[s].min_elevation_deg, config);
    }
    for (int i = 0; i < n; ++i) {
        const Vec3 sat = eci_to_ecef(states[i].position_km, epoch).position_km;
        for (size_t s = 0; s < stations.size(); ++s) {
            if ((sat - station_pos[s]).norm() <= station_range[s])
                snap.ground_links.emplace_back(i, static_cast<int>(s));
        }
    }
    return snap;
}

int count_los_candidates(int sat_idx, const std::vector<EciState>& states,
                         const LinkConstraints& constraints,
                         const ConstellationConfig& config) {
    if (sat_idx < 0 || sat_idx >= static_cast<int>(states.size()))
        throw ValidationError("satellite index out of range");
    const double occ = occlusion_radius_km(constraints, config);
    int count = 0;
    for (size_t j = 0; j < states.size(); ++j) {
        if (static_cast<int>(j) == sat_idx) continue;
        if (los_clear(states[sat_idx].position_km, states[j].position_km, occ)) ++count;
    }
    return count;
}

}  // namespace leoloc
