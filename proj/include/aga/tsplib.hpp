#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace aga {

struct City {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const City&) const = default;
};

struct TspInstance {
    std::string name;
    std::vector<City> cities;

    int dimension() const { return static_cast<int>(cities.size()); }
    bool operator==(const TspInstance&) const = default;
};

// Parse failure; the message names the offending header key or input line.
class TsplibParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses a TSPLIB EUC_2D instance: `KEY : value` header lines (unknown keys
// ignored) followed by NODE_COORD_SECTION with `<index> <x> <y>` lines until
// an EOF keyword, a blank line after the coordinates, or end of input.
// 1-based node indices are remapped to 0-based storage.
TspInstance parse_tsplib(std::istream& in);
TspInstance parse_tsplib(const std::string& text);
TspInstance load_tsplib(const std::filesystem::path& path);

// Canonical TSPLIB text; parse_tsplib(to_tsplib(x)) == x.
std::string to_tsplib(const TspInstance& instance);

// Stable 64-bit content digest of dimension + coordinates for provenance logging.
std::uint64_t instance_checksum(const TspInstance& instance);

}  // namespace aga
