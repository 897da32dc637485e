#pragma once

// JSON encodings of the library's value types. Rationals are strings "p/q"
// (or "p"); infinite interval ends are null.

#include <json.hpp>

#include "nodal/curve.hpp"
#include "nodal/exact.hpp"
#include "nodal/feasibility.hpp"
#include "nodal/gluing.hpp"
#include "nodal/moduli.hpp"
#include "nodal/stability.hpp"

namespace nodal {

using json = nlohmann::json;

// Array of rows; entries are "p/q" strings or JSON integers.
RationalMatrix matrix_from_json(const json& j);
json matrix_to_json(const RationalMatrix& m);

} // namespace nodal

#define NODAL_JSON_SERIALIZER(T)                   \
    template <>                                    \
    struct nlohmann::adl_serializer<T> {           \
        static void to_json(json& j, const T& v);  \
        static T from_json(const json& j);         \
    }

NODAL_JSON_SERIALIZER(nodal::Rational);
NODAL_JSON_SERIALIZER(nodal::RationalInterval);
NODAL_JSON_SERIALIZER(nodal::NodalCurve);
NODAL_JSON_SERIALIZER(nodal::Polarization);
NODAL_JSON_SERIALIZER(nodal::SheafClass);
NODAL_JSON_SERIALIZER(nodal::StalkType);
NODAL_JSON_SERIALIZER(nodal::GluedClass);
NODAL_JSON_SERIALIZER(nodal::FeasibilityReport);
NODAL_JSON_SERIALIZER(nodal::RegionRow);
NODAL_JSON_SERIALIZER(nodal::SubsheafInvariant);
NODAL_JSON_SERIALIZER(nodal::SufficiencyResult);
NODAL_JSON_SERIALIZER(nodal::ComponentRecord);

#undef NODAL_JSON_SERIALIZER
