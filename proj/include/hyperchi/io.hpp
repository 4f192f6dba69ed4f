#pragma once

// complex ingestion from the JSON file format
//   {"kind":"simplicial","maximal_faces":[[0,1,2],[1,2,3]]}
//   {"kind":"cubical","faces":[{"dim":2,"vertices":[0,1,2,3]}, ...]}
// Vertex order inside a face is irrelevant; vertices are non-negative
// integers. Ingestion size is capped by HYPERCHI_MAX_FACES (default 100000,
// 0 disables the cap).

#include "hyperchi/cubical.hpp"
#include "hyperchi/simplicial.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperchi {

using AnyComplex = std::variant<SimplicialComplex, CubicalComplex>;

inline std::size_t ingestion_cap() {
    const char* s = std::getenv("HYPERCHI_MAX_FACES");
    if (!s || !*s) return 100000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0')
        throw std::invalid_argument(std::string("HYPERCHI_MAX_FACES is set to \"") + s +
                                    "\", expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

namespace detail {

inline Face face_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array())
        throw std::runtime_error(std::string(what) + " must be an array of vertices, got " +
                                 arr.dump());
    Face f;
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::runtime_error(std::string(what) + " contains " + v.dump() +
                                     ", vertices must be non-negative integers");
        f.push_back(static_cast<int>(v.get<long long>()));
    }
    return canonical_face(f);
}

}  // namespace detail

inline AnyComplex complex_from_json(const nlohmann::json& j,
                                    std::vector<std::string>* warnings = nullptr,
                                    bool validate = true, std::size_t max_faces = 0) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::runtime_error("expected an object with a \"kind\" of \"simplicial\" or "
                                 "\"cubical\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "simplicial") {
        if (!j.contains("maximal_faces") || !j["maximal_faces"].is_array())
            throw std::runtime_error("simplicial input needs a \"maximal_faces\" array");
        std::vector<Face> maximal;
        for (const auto& arr : j["maximal_faces"])
            maximal.push_back(detail::face_from_json(arr, "maximal face"));
        return SimplicialComplex::from_maximal(maximal, warnings, max_faces);
    }
    if (kind == "cubical") {
        if (!j.contains("faces") || !j["faces"].is_array())
            throw std::runtime_error("cubical input needs a \"faces\" array");
        std::vector<CubicalFaceSpec> specs;
        for (const auto& e : j["faces"]) {
            if (!e.is_object() || !e.contains("dim") || !e.contains("vertices") ||
                !e["dim"].is_number_integer())
                throw std::runtime_error("each cubical face needs {\"dim\":k,\"vertices\":[...]}, "
                                         "got " + e.dump());
            int dim = e["dim"].get<int>();
            if (dim < 0 || dim > 25)
                throw std::runtime_error("cubical face dim " + std::to_string(dim) +
                                         " out of range 0..25");
            specs.push_back({detail::face_from_json(e["vertices"], "cubical face vertex list"),
                             dim});
        }
        return CubicalComplex::from_faces(specs, validate, warnings, max_faces);
    }
    throw std::runtime_error("unknown complex kind \"" + kind +
                             "\", expected \"simplicial\" or \"cubical\"");
}

// wraps the parse so syntax errors surface as path:line:column
inline AnyComplex load_complex(const std::string& path,
                               std::vector<std::string>* warnings = nullptr, bool validate = true,
                               std::size_t max_faces = ingestion_cap()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                 ": " + e.what());
    }
    try {
        return complex_from_json(j, warnings, validate, max_faces);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline bool is_simplicial(const AnyComplex& c) {
    return std::holds_alternative<SimplicialComplex>(c);
}

}  // namespace hyperchi
