#include "leoloc/groundnet.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "leoloc/errors.hpp"

namespace leoloc {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& field, const std::string& label, int line_no,
                    const char* what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(label + ":" + std::to_string(line_no) + ": bad " + what + " '" +
                         field + "'");
    return value;
}

}  // namespace

std::vector<GroundStation> parse_stations(std::istream& in, const std::string& label) {
    std::vector<GroundStation> stations;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        if (!header_seen) {
            if (split_csv(stripped) !=
                std::vector<std::string>{"name", "lat_deg", "lon_deg", "alt_m", "min_elev_deg"})
                throw ParseError(label + ":" + std::to_string(line_no) +
                                 ": expected header 'name,lat_deg,lon_deg,alt_m,min_elev_deg'");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(stripped);
        if (fields.size() != 5)
            throw ParseError(label + ":" + std::to_string(line_no) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        GroundStation st;
        st.name = fields[0];
        if (st.name.empty())
            throw ParseError(label + ":" + std::to_string(line_no) + ": empty station name");
        st.latitude_deg = parse_double(fields[1], label, line_no, "lat_deg");
        st.longitude_deg = parse_double(fields[2], label, line_no, "lon_deg");
        st.altitude_m = fields[3].empty() ? 0.0 : parse_double(fields[3], label, line_no, "alt_m");
        st.min_elevation_deg =
            fields[4].empty() ? 40.0 : parse_double(fields[4], label, line_no, "min_elev_deg");
        if (st.latitude_deg < -90.0 || st.latitude_deg > 90.0)
            throw ValidationError(label + ":" + std::to_string(line_no) + ": latitude " +
                                  fields[1] + " outside [-90, 90]");
        if (st.longitude_deg <= -180.0 || st.longitude_deg > 180.0)
            throw ValidationError(label + ":" + std::to_string(line_no) + ": longitude " +
                                  fields[2] + " outside (-180, 180]");
        if (st.min_elevation_deg < 0.0 || st.min_elevation_deg >= 90.0)
            throw ValidationError(label + ":" + std::to_string(line_no) + ": min_elev_deg " +
                                  fields[4] + " outside [0, 90)");
        if (!seen.insert(st.name).second)
            throw ValidationError(label + ": duplicate station name '" + st.name + "'");
        stations.push_back(std::move(st));
    }
    if (!header_seen)
        throw ParseError(label + ": missing header row");
    return stations;
}

std::vector<GroundStation> load_stations(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open station catalog '" + path + "'");
    return parse_stations(in, path);
}

EcefPosition station_to_ecef(const GroundStation& station,
                             const ConstellationConfig& config) {
    const double r = config.earth_radius_km + station.altitude_m / 1000.0;
    const double lat = station.latitude_deg * kDeg2Rad;
    const double lon = station.longitude_deg * kDeg2Rad;
    return EcefPosition{
        Vec3(r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
             r * std::sin(lat))};
}

EcefPosition eci_to_ecef(const Vec3& position_eci_km, double t_s) {
    const double theta = kEarthRotationRadS * t_s;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return EcefPosition{Vec3(c * position_eci_km.x() + s * position_eci_km.y(),
                             -s * position_eci_km.x() + c * position_eci_km.y(),
                             position_eci_km.z())};
}

double max_slant_range(double altitude_km, double elevation_deg,
                       const ConstellationConfig& config) {
    const double re = config.earth_radius_km;
    const double ratio = (altitude_km + re) / re;
    const double ce = std::cos(elevation_deg * kDeg2Rad);
    const double se = std::sin(elevation_deg * kDeg2Rad);
    return re * (std::sqrt(ratio * ratio - ce * ce) - se);
}

bool visible(const EcefPosition& sat_ecef, const GroundStation& station,
             const ConstellationConfig& config) {
    const EcefPosition st = station_to_ecef(station, config);
    const double d_max =
        max_slant_range(config.altitude_km, station.min_elevation_deg, config);
    return (sat_ecef.position_km - st.position_km).norm() <= d_max;
}

std::pair<double, double> ground_track(const EciState& state) {
    const EcefPosition ecef = eci_to_ecef(state.position_km, state.epoch_s);
    const Vec3& p = ecef.position_km;
    const double lat = std::asin(p.z() / p.norm()) * kRad2Deg;
    double lon = std::atan2(p.y(), p.x()) * kRad2Deg;
    if (lon <= -180.0) lon += 360.0;
    return {lat, lon};
}

}  // namespace leoloc
