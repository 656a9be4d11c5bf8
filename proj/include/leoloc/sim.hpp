#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leoloc/constellation.hpp"
#include "leoloc/crb.hpp"
#include "leoloc/groundnet.hpp"
#include "leoloc/topology.hpp"

namespace leoloc {

// Default ToA channel constant, 1/m^2. Reproduces the published
// performance-bound scale for the default shell; see README.
inline constexpr double kDefaultGammaPerM2 = 0.0995350;

enum class RunMode { anchored, anchorless_per_sat, anchorless_network, both };

const char* mode_name(RunMode mode);
RunMode parse_mode(const std::string& text);  // throws ConfigError

struct SimulationConfig {
    ConstellationConfig constellation;
    LinkConstraints links;

    double propagation_velocity_ms = 2.998e8;
    // Channel precedence: explicit gamma, then sigma, then link budget,
    // then the library default.
    std::optional<double> gamma_per_m2;
    std::optional<double> sigma_toa_s;
    std::optional<LinkBudget> budget;

    RunMode mode = RunMode::both;
    double duration_s = 5730.0;
    double time_step_s = 10.0;
    std::string station_file = "data/stations.csv";
    std::optional<double> epsilon0_override_deg;  // forces every station mask
    std::vector<SatelliteId> satellite_filter;    // empty = whole shell
    std::string output_dir = "out";
    bool export_ephemeris = false;
    bool export_topology = false;

    int step_count() const;
    ChannelModel channel() const;
    void validate() const;  // throws ConfigError
};

/// Line-oriented `key = value` config with dotted section prefixes.
/// Unknown keys are errors.
SimulationConfig load_config(const std::string& path);
SimulationConfig parse_config(std::istream& in, const std::string& label);

struct BoxStats {
    SatelliteId sat;
    double median_m = 0.0;
    double q1_m = 0.0;
    double q3_m = 0.0;
    double min_m = 0.0;
    double max_m = 0.0;
};

struct ModeSummary {
    RunMode mode = RunMode::anchored;
    double mean_rcrb_m = 0.0;
    double max_rcrb_m = 0.0;
    double min_rcrb_m = 0.0;
    long degenerate_count = 0;
    std::vector<BoxStats> per_satellite;
};

struct RunSummary {
    std::vector<ModeSummary> modes;
    long results_per_mode = 0;
};

/// One bound per reported satellite per step; NaN marks a degenerate
/// (flagged) result. Index layout: [step * n_reported + r].
struct ModeSeries {
    RunMode mode = RunMode::anchored;
    std::vector<double> rcrb_m;
};

struct RunResult {
    SimulationConfig config;
    std::vector<GroundStation> stations;
    std::vector<SatelliteId> reported;  // ascending walker order
    std::vector<double> times_s;

    // [step * n_reported + r]
    std::vector<uint16_t> n_sat_links;
    std::vector<uint16_t> n_ground_links;
    std::vector<double> latitude_deg;
    std::vector<double> longitude_deg;

    // whole-constellation topology statistics, per step
    std::vector<int> ground_connected_sats;
    std::vector<int> ground_link_total;

    std::vector<ModeSeries> series;
    RunSummary summary;

    int steps() const { return static_cast<int>(times_s.size()); }
    int n_reported() const { return static_cast<int>(reported.size()); }
    const ModeSeries& series_for(RunMode mode) const;
    double value_at(RunMode mode, int step, int reported_idx) const;
};

/// Propagate, build the per-step topology, and evaluate the requested
/// bounds. Performs no file output.
RunResult simulate(const SimulationConfig& config);

/// simulate() plus the full output-file set under config.output_dir.
RunResult run(const SimulationConfig& config);

/// Aggregates a computed result: overall mean/max/min per mode plus
/// per-satellite box statistics. Degenerate entries are excluded and
/// counted. Throws ValidationError when a mode has no valid results.
RunSummary summarize(const RunResult& result);

struct GroundPass {
    int first_step = 0;
    int last_step = 0;          // inclusive
    double entry_rcrb_m = 0.0;  // last value before the pass; NaN if none
    double min_in_pass_m = 0.0;
    int min_step = 0;
    double ratio = 0.0;  // min_in_pass / entry
};

/// Maximal intervals during which the satellite holds at least one
/// ground link, with the bound drop across each pass.
std::vector<GroundPass> ground_pass_report(const RunResult& result, const SatelliteId& sat,
                                           RunMode mode);

void write_outputs(const RunResult& result);

}  // namespace leoloc
