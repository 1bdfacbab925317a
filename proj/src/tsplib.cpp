#include "aga/tsplib.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "aga/checksum.hpp"
#include "aga/format.hpp"

namespace aga {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string clip(const std::string& line) {
    return line.size() <= 60 ? line : line.substr(0, 57) + "...";
}

[[noreturn]] void fail(int line_no, const std::string& line, const std::string& what) {
    std::ostringstream msg;
    msg << "tsplib: line " << line_no << ": " << what << " (\"" << clip(line) << "\")";
    throw TsplibParseError(msg.str());
}

}  // namespace

TspInstance parse_tsplib(std::istream& in) {
    TspInstance instance;
    long long dimension = -1;
    std::vector<long long> indices;
    std::vector<int> index_lines;
    std::vector<City> cities;

    bool in_coords = false;
    bool done = false;
    std::string raw;
    int line_no = 0;
    while (!done && std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (!in_coords) {
            if (line.empty()) continue;
            if (line == "NODE_COORD_SECTION") {
                in_coords = true;
                continue;
            }
            if (line == "EOF") break;
            const auto colon = line.find(':');
            const std::string key =
                trim(colon == std::string::npos ? std::string_view(line)
                                                : std::string_view(line).substr(0, colon));
            const std::string value =
                colon == std::string::npos ? "" : trim(std::string_view(line).substr(colon + 1));
            if (key == "NAME") {
                instance.name = value;
            } else if (key == "DIMENSION") {
                long long parsed = 0;
                const char* first = value.data();
                const char* last = value.data() + value.size();
                const auto [ptr, ec] = std::from_chars(first, last, parsed);
                if (ec != std::errc{} || ptr != last || parsed <= 0)
                    fail(line_no, raw, "invalid DIMENSION value");
                dimension = parsed;
            } else if (key == "EDGE_WEIGHT_TYPE") {
                if (value != "EUC_2D")
                    fail(line_no, raw, "unsupported EDGE_WEIGHT_TYPE \"" + value + "\"");
            }
            // TYPE, COMMENT and unknown keys are ignored.
        } else {
            if (line.empty() || line == "EOF") {
                done = true;
                continue;
            }
            std::istringstream fields(line);
            long long index = 0;
            double x = 0.0;
            double y = 0.0;
            if (!(fields >> index >> x >> y)) fail(line_no, raw, "malformed coordinate line");
            std::string rest;
            if (fields >> rest) fail(line_no, raw, "trailing data on coordinate line");
            indices.push_back(index);
            index_lines.push_back(line_no);
            cities.push_back({x, y});
        }
    }

    if (dimension < 0) throw TsplibParseError("tsplib: missing DIMENSION header");
    if (static_cast<long long>(cities.size()) != dimension) {
        std::ostringstream msg;
        msg << "tsplib: read " << cities.size() << " coordinates but DIMENSION is " << dimension;
        throw TsplibParseError(msg.str());
    }

    instance.cities.assign(cities.size(), City{});
    std::vector<char> seen(cities.size(), 0);
    for (std::size_t i = 0; i < cities.size(); ++i) {
        const long long index = indices[i];
        if (index < 1 || index > dimension)
            fail(index_lines[i], "node " + std::to_string(index), "node index outside 1..DIMENSION");
        if (seen[index - 1])
            fail(index_lines[i], "node " + std::to_string(index), "duplicate node index");
        seen[index - 1] = 1;
        instance.cities[index - 1] = cities[i];
    }
    return instance;
}

TspInstance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    return parse_tsplib(in);
}

TspInstance load_tsplib(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TsplibParseError("tsplib: cannot open " + path.string());
    return parse_tsplib(in);
}

std::string to_tsplib(const TspInstance& instance) {
    std::ostringstream out;
    if (!instance.name.empty()) out << "NAME : " << instance.name << "\n";
    out << "TYPE : TSP\n";
    out << "DIMENSION : " << instance.dimension() << "\n";
    out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
    out << "NODE_COORD_SECTION\n";
    for (int i = 0; i < instance.dimension(); ++i) {
        const City& c = instance.cities[i];
        out << (i + 1) << " " << format_number(c.x) << " " << format_number(c.y) << "\n";
    }
    out << "EOF\n";
    return out.str();
}

std::uint64_t instance_checksum(const TspInstance& instance) {
    Fnv1a64 digest;
    digest.mix(static_cast<std::uint64_t>(instance.dimension()));
    for (const City& c : instance.cities) digest.mix(c.x).mix(c.y);
    return digest.digest();
}

}  // namespace aga
