/*
   Copyright 2026 The slicereg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SLICEREG_JSON_IO_HPP
#define SLICEREG_JSON_IO_HPP

#include <json.hpp>

#include "slicereg/slice_poly.hpp"

namespace slicereg {

/// {"basis": ["1","i","j","k"], "components": [[c0...],[c1...],[c2...],[c3...]]}
/// Coefficients ascend in degree; round-trips bit-exactly for finite doubles.
inline nlohmann::json to_json(const SlicePoly& f) {
    nlohmann::json components = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json c = nlohmann::json::array();
        for (double v : f[i].coeffs()) c.push_back(v);
        components.push_back(std::move(c));
    }
    return {{"basis", {"1", "i", "j", "k"}}, {"components", std::move(components)}};
}

inline SlicePoly slice_poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components"))
        throw error(errc::schema_error, "expected an object with \"components\"");
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.size() != 4)
        throw error(errc::schema_error, "\"components\" must hold four arrays");
    if (j.contains("basis")) {
        const auto& b = j.at("basis");
        if (!(b.is_array() && b.size() == 4 && b[0] == "1" && b[1] == "i" &&
              b[2] == "j" && b[3] == "k"))
            throw error(errc::schema_error, "unsupported basis");
    }
    SlicePoly f;
    for (int i = 0; i < 4; ++i) {
        if (!comps[i].is_array())
            throw error(errc::schema_error, "component is not an array");
        std::vector<double> c;
        c.reserve(comps[i].size());
        for (const auto& v : comps[i]) {
            if (!v.is_number())
                throw error(errc::schema_error, "coefficient is not a number");
            c.push_back(v.get<double>());
        }
        f[i] = RealPoly(std::move(c));
    }
    return f;
}

inline nlohmann::json to_json(const RealPoly& p) {
    nlohmann::json c = nlohmann::json::array();
    for (double v : p.coeffs()) c.push_back(v);
    return c;
}

inline nlohmann::json to_json(const Quaternion& q) {
    return nlohmann::json::array({q.w, q.x, q.y, q.z});
}

} // namespace slicereg

#endif
