#pragma once

#include <stdexcept>
#include <string>

namespace leoloc {

// Bad configuration value; message names the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries file label and line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantically invalid data (range violations, duplicates, epoch mismatch).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry that makes an operation meaningless (coincident nodes).
struct DegenerateGeometryError : std::domain_error {
    using std::domain_error::domain_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace leoloc
