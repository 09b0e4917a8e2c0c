#pragma once

// JSON encoding of surface models and of the values the CLI emits. Rationals
// travel as {"num": p, "den": q}; on input an integer or a "p/q" string is
// accepted too.

#include "fppkit/numeric.hpp"
#include "fppkit/surface.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace fppkit {

inline nlohmann::ordered_json rat_to_json(const Rat& r) {
    return {{"num", to_long(r.get_num())}, {"den", to_long(r.get_den())}};
}

namespace detail {

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

}  // namespace detail

inline Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return make_rat(Int(j.get<long>()), 1);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return make_rat(detail::int_from_string(s), 1);
        return make_rat(detail::int_from_string(s.substr(0, slash)),
                        detail::int_from_string(s.substr(slash + 1)));
    }
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return make_rat(Int(j.at("num").get<long>()), Int(j.at("den").get<long>()));
    throw std::invalid_argument("expected a rational (integer, \"p/q\" or {num, den}): " +
                                j.dump());
}

inline nlohmann::ordered_json model_to_json(const SurfaceModel& m) {
    nlohmann::ordered_json j;
    j["name"] = m.name;
    j["k2_resolution"] = rat_to_json(m.k2_resolution);
    j["singularities"] = nlohmann::ordered_json::array();
    for (const auto& p : m.singularities)
        j["singularities"].push_back(
            {{"q", to_long(p.q)}, {"a", to_long(p.a)}, {"label", p.label}});
    j["c"] = to_long(m.c);
    j["k_ample_sign"] = to_string(m.k_ample_sign);
    return j;
}

inline SurfaceModel model_from_json(const nlohmann::json& j) {
    SurfaceModel m;
    m.name = j.value("name", "model");
    if (!j.contains("k2_resolution"))
        throw std::invalid_argument("model: missing k2_resolution");
    m.k2_resolution = rat_from_json(j.at("k2_resolution"));
    if (!j.contains("singularities") || !j.at("singularities").is_array())
        throw std::invalid_argument("model: missing singularities array");
    int index = 0;
    for (const auto& s : j.at("singularities")) {
        ++index;
        std::string label = s.value("label", "p" + std::to_string(index));
        m.singularities.emplace_back(Int(s.at("q").get<long>()),
                                     Int(s.at("a").get<long>()), label);
    }
    m.c = Int(j.value("c", 1L));
    m.k_ample_sign = k_ample_sign_from_string(j.value("k_ample_sign", std::string("ample")));
    return m;
}

inline SurfaceModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open model file: " + path);
    nlohmann::json j;
    in >> j;
    return model_from_json(j);
}

}  // namespace fppkit
