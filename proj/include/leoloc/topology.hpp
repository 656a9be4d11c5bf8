#pragma once

#include <array>
#include <utility>
#include <vector>

#include "leoloc/constellation.hpp"
#include "leoloc/groundnet.hpp"

namespace leoloc {

struct LinkConstraints {
    double ionosphere_height_km = 80.0;
    int max_links_per_sat = 4;  // enforced by +grid construction
};

// Radius below which an inter-satellite path counts as occluded.
double occlusion_radius_km(const LinkConstraints& constraints,
                           const ConstellationConfig& config);

// Longest clear chord between two satellites of the configured shell:
// 2 sqrt((R_E + a)^2 - (R_E + h)^2).
double los_max_range_km(const LinkConstraints& constraints,
                        const ConstellationConfig& config);

/// True iff the segment p1-p2 stays outside the sphere of radius
/// `occlusion_radius_km` centred at the origin. Grazing contact counts
/// as clear.
bool los_clear(const Vec3& p1_km, const Vec3& p2_km, double occlusion_radius_km);

/// +grid neighbors, in the fixed order {slot+1, slot-1, plane+1, plane-1}
/// with wrap-around. Entries may repeat for shells narrower than 3x3.
std::array<SatelliteId, 4> plus_grid_neighbors(const SatelliteId& id,
                                               const ConstellationConfig& config);

/// Active links at one instant. Satellites are addressed by walker index
/// (see sat_index); stations by their catalog position.
struct TopologySnapshot {
    double epoch_s = 0.0;
    std::vector<std::pair<int, int>> sat_links;     // undirected, first < second
    std::vector<std::pair<int, int>> ground_links;  // (sat index, station index)
};

/// +grid pairs that pass the line-of-sight test, plus every visible
/// (satellite, station) pair. All states must share one epoch.
TopologySnapshot build_snapshot(const std::vector<EciState>& states,
                                const std::vector<GroundStation>& stations,
                                const LinkConstraints& constraints,
                                const ConstellationConfig& config);

// Diagnostic: how many other satellites have a clear path to this one.
int count_los_candidates(int sat_idx, const std::vector<EciState>& states,
                         const LinkConstraints& constraints,
                         const ConstellationConfig& config);

}  // namespace leoloc
