#pragma once

// JSON input formats:
//   lattice:  {"gram": [[...],[...]]}
//   manifold: {"surgery": {"linking": [[...]]}}
//             {"standard": {"family": "S3" | "S2xS1" | "T3"}}
//             {"standard": {"family": "SigmaXS1", "g": 2}}
//             {"standard": {"family": "Lens", "p": 7, "q": 1}}
//             {"standard": {"family": "ConnectedSum", "summands": [...]}}

#include <fstream>
#include <string>

#include <json.hpp>

#include "toral/lattice.hpp"
#include "toral/presentation.hpp"

namespace toral {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

inline IntMat parse_int_matrix(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw InputError(field + ": expected an array of integer rows");
    std::size_t rows = j.size(), cols = j[0].size();
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError(field + ": ragged rows at row " + std::to_string(i));
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer())
                throw InputError(field + ": non-integer entry at row " + std::to_string(i));
            m(i, k) = Int(j[i][k].get<long long>());
        }
    }
    return m;
}

inline EvenLattice parse_lattice(const Json& j) {
    if (!j.contains("gram")) throw InputError("lattice: missing field \"gram\"");
    return validate_even_lattice(parse_int_matrix(j["gram"], "gram"));
}

inline Presentation parse_manifold(const Json& j) {
    if (j.contains("surgery")) {
        const Json& s = j["surgery"];
        if (!s.contains("linking")) throw InputError("surgery: missing field \"linking\"");
        return Presentation::surgery(parse_int_matrix(s["linking"], "linking"));
    }
    if (!j.contains("standard")) throw InputError("manifold: need \"surgery\" or \"standard\"");
    const Json& s = j["standard"];
    if (!s.contains("family")) throw InputError("standard: missing field \"family\"");
    std::string f = s["family"].get<std::string>();
    if (f == "S3") return Presentation::standard(Family::S3);
    if (f == "S2xS1") return Presentation::standard(Family::S2xS1);
    if (f == "T3") return Presentation::standard(Family::T3);
    if (f == "SigmaXS1") {
        if (!s.contains("g")) throw InputError("SigmaXS1: missing field \"g\"");
        return Presentation::sigma_x_s1(s["g"].get<long>());
    }
    if (f == "Lens") {
        if (!s.contains("p") || !s.contains("q"))
            throw InputError("Lens: missing field \"p\" or \"q\"");
        return Presentation::lens(s["p"].get<long>(), s["q"].get<long>());
    }
    if (f == "ConnectedSum") {
        if (!s.contains("summands")) throw InputError("ConnectedSum: missing \"summands\"");
        std::vector<Presentation> parts;
        for (const Json& part : s["summands"]) parts.push_back(parse_manifold(part));
        return Presentation::connected_sum(std::move(parts));
    }
    throw InputError("standard: unknown family \"" + f + "\"");
}

} // namespace toral
