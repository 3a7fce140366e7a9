// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fan.hpp"
#include "poly.hpp"
#include "polyhedron.hpp"

#include <json.hpp>

namespace nplc {

// Insertion-ordered JSON everywhere: reports must be byte-stable.
using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json polyhedron_to_json(const NewtonPolyhedron& np);
Json delta1_to_json(const Delta1Region& d1);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json exponent_to_json(const Exponent& e);
Json zvec_to_json(const ZVec& v);

}  // namespace nplc
