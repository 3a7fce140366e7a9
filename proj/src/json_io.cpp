// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "json_io.hpp"

#include <stdexcept>

namespace nplc {

Json exponent_to_json(const Exponent& e) {
    Json a = Json::array();
    for (auto x : e) a.push_back(x);
    return a;
}

Json zvec_to_json(const ZVec& v) {
    Json a = Json::array();
    for (const Z& x : v) {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
            a.push_back(static_cast<std::int64_t>(x));
        else
            a.push_back(x.str());
    }
    return a;
}

static ZVec zvec_from_json(const Json& j) {
    ZVec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.push_back(Z(x.get<std::int64_t>()));
        else
            v.push_back(Z(x.get<std::string>()));
    }
    return v;
}

Json poly_to_json(const Poly& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    // grlex descending, matching to_string
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["coeff"] = it->second.str();
        t["exp"] = exponent_to_json(it->first);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.contains("nvars") || !j.contains("terms")) throw std::invalid_argument("poly json: missing nvars/terms");
    int nvars = j.at("nvars").get<int>();
    if (nvars < 1) throw std::invalid_argument("poly json: nvars must be positive");
    Poly p(nvars);
    for (const auto& t : j.at("terms")) {
        Q c = parse_rational(t.at("coeff").get<std::string>());
        Exponent e;
        for (const auto& x : t.at("exp")) {
            std::int64_t v = x.get<std::int64_t>();
            if (v < 0) throw std::invalid_argument("poly json: negative exponent");
            e.push_back(v);
        }
        if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("poly json: exponent length != nvars");
        p.add_term(e, c);
    }
    return p;
}

Json polyhedron_to_json(const NewtonPolyhedron& np) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : np.vertices) verts.push_back(exponent_to_json(v));
    j["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto& hs : np.facets) {
        Json f;
        f["normal"] = zvec_to_json(hs.normal);
        f["height"] = static_cast<std::int64_t>(hs.height);
        f["compact"] = hs.compact;
        facets.push_back(std::move(f));
    }
    j["facets"] = std::move(facets);
    return j;
}

Json delta1_to_json(const Delta1Region& d1) {
    Json j;
    j["axis"] = d1.axis;
    Json facets = Json::array();
    for (const auto& hs : d1.halfspaces) {
        Json f;
        f["normal"] = zvec_to_json(hs.normal);
        f["height"] = static_cast<std::int64_t>(hs.height);
        facets.push_back(std::move(f));
    }
    j["facets"] = std::move(facets);
    if (!d1.warnings.empty()) j["warnings"] = d1.warnings;
    return j;
}

Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim;
    Json rays = Json::array();
    for (const auto& r : fan.rays) rays.push_back(zvec_to_json(r));
    j["rays"] = std::move(rays);
    Json cones = Json::array();
    for (const auto& c : fan.cones) {
        Json idx = Json::array();
        for (auto i : c) idx.push_back(i);
        cones.push_back(std::move(idx));
    }
    j["cones"] = std::move(cones);
    return j;
}

Fan fan_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("rays") || !j.contains("cones"))
        throw std::invalid_argument("fan json: missing dim/rays/cones");
    Fan fan;
    fan.dim = j.at("dim").get<int>();
    if (fan.dim < 1) throw std::invalid_argument("fan json: dim must be positive");
    for (const auto& r : j.at("rays")) {
        ZVec v = zvec_from_json(r);
        if (v.size() != static_cast<std::size_t>(fan.dim)) throw std::invalid_argument("fan json: ray dimension mismatch");
        fan.rays.push_back(std::move(v));
    }
    for (const auto& c : j.at("cones")) {
        std::vector<std::size_t> idx;
        for (const auto& x : c) {
            std::int64_t i = x.get<std::int64_t>();
            if (i < 0 || static_cast<std::size_t>(i) >= fan.rays.size())
                throw std::invalid_argument("fan json: cone ray index out of range");
            idx.push_back(static_cast<std::size_t>(i));
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.empty()) throw std::invalid_argument("fan json: empty cone");
        fan.cones.push_back(std::move(idx));
    }
    return fan;
}

}  // namespace nplc
