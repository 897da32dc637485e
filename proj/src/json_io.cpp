#include "nodal/json_io.hpp"

#include "nodal/error.hpp"

using nodal::json;

namespace nodal {

namespace {

Rational rational_entry(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("matrix entries must be \"p/q\" strings or integers, got " + j.dump());
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> read_optional_int(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
}

} // namespace

RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix rows must be JSON arrays");
        auto& out = rows.emplace_back();
        for (const auto& x : row) out.push_back(rational_entry(x));
    }
    return RationalMatrix(std::move(rows));
}

json matrix_to_json(const RationalMatrix& m) {
    json j = json::array();
    for (const auto& row : m.to_rows()) j.push_back(row);
    return j;
}

} // namespace nodal

using namespace nodal;

void nlohmann::adl_serializer<Rational>::to_json(json& j, const Rational& v) { j = v.str(); }
Rational nlohmann::adl_serializer<Rational>::from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

void nlohmann::adl_serializer<RationalInterval>::to_json(json& j, const RationalInterval& v) {
    j = json{
        {"lower", v.lower() ? json(*v.lower()) : json(nullptr)},
        {"upper", v.upper() ? json(*v.upper()) : json(nullptr)},
        {"lower_open", v.lower_open()},
        {"upper_open", v.upper_open()},
    };
}
RationalInterval nlohmann::adl_serializer<RationalInterval>::from_json(const json& j) {
    auto bound = [&](const char* key) -> RationalInterval::Bound {
        const auto& b = j.at(key);
        if (b.is_null()) return std::nullopt;
        return b.get<Rational>();
    };
    return {bound("lower"), bound("upper"), j.at("lower_open").get<bool>(), j.at("upper_open").get<bool>()};
}

void nlohmann::adl_serializer<NodalCurve>::to_json(json& j, const NodalCurve& v) {
    j = json{{"g1", v.g1()}, {"g2", v.g2()}};
}
NodalCurve nlohmann::adl_serializer<NodalCurve>::from_json(const json& j) {
    return {j.at("g1").get<std::int64_t>(), j.at("g2").get<std::int64_t>()};
}

void nlohmann::adl_serializer<Polarization>::to_json(json& j, const Polarization& v) {
    j = json{{"w1", v.w1()}, {"w2", v.w2()}};
}
Polarization nlohmann::adl_serializer<Polarization>::from_json(const json& j) {
    return {j.at("w1").get<Rational>(), j.at("w2").get<Rational>()};
}

void nlohmann::adl_serializer<SheafClass>::to_json(json& j, const SheafClass& v) {
    j = json{
        {"r1", v.r1()}, {"r2", v.r2()}, {"chi", v.chi()}, {"chi1", optional_int(v.chi1())}, {"chi2", optional_int(v.chi2())},
    };
}
SheafClass nlohmann::adl_serializer<SheafClass>::from_json(const json& j) {
    return {j.at("r1").get<std::int64_t>(), j.at("r2").get<std::int64_t>(), j.at("chi").get<std::int64_t>(),
            read_optional_int(j, "chi1"), read_optional_int(j, "chi2")};
}

void nlohmann::adl_serializer<StalkType>::to_json(json& j, const StalkType& v) { j = json::array({v.a, v.b, v.c}); }
StalkType nlohmann::adl_serializer<StalkType>::from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("stalk type must be [a, b, c]");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

void nlohmann::adl_serializer<GluedClass>::to_json(json& j, const GluedClass& v) {
    j = json{{"sheaf", v.sheaf}, {"chi", v.sheaf.chi()}, {"stalk", v.stalk}, {"vector_bundle", v.is_vector_bundle}};
}
GluedClass nlohmann::adl_serializer<GluedClass>::from_json(const json& j) {
    return {j.at("sheaf").get<SheafClass>(), j.at("stalk").get<StalkType>(), j.at("vector_bundle").get<bool>()};
}

void nlohmann::adl_serializer<FeasibilityReport>::to_json(json& j, const FeasibilityReport& v) {
    j = json{
        {"feasible", v.feasible},
        {"w1_interval", v.w1_interval},
        {"sample", v.sample ? json(*v.sample) : json(nullptr)},
        {"chi", v.chi},
    };
}
FeasibilityReport nlohmann::adl_serializer<FeasibilityReport>::from_json(const json& j) {
    FeasibilityReport r;
    r.feasible = j.at("feasible").get<bool>();
    r.w1_interval = j.at("w1_interval").get<RationalInterval>();
    if (!j.at("sample").is_null()) r.sample = j.at("sample").get<Polarization>();
    r.chi = j.at("chi").get<std::int64_t>();
    return r;
}

void nlohmann::adl_serializer<RegionRow>::to_json(json& j, const RegionRow& v) {
    j = json{{"chi1", v.chi1}, {"chi2", v.chi2}, {"feasible", v.feasible}, {"w1_interval", v.w1_interval}};
}
RegionRow nlohmann::adl_serializer<RegionRow>::from_json(const json& j) {
    return {j.at("chi1").get<std::int64_t>(), j.at("chi2").get<std::int64_t>(), j.at("feasible").get<bool>(),
            j.at("w1_interval").get<RationalInterval>()};
}

void nlohmann::adl_serializer<SubsheafInvariant>::to_json(json& j, const SubsheafInvariant& v) {
    j = json{{"s", v.s}, {"s1", v.s1}, {"s2", v.s2}, {"deg_g1", v.deg_g1}, {"deg_g2", v.deg_g2}};
}
SubsheafInvariant nlohmann::adl_serializer<SubsheafInvariant>::from_json(const json& j) {
    return {j.at("s").get<std::int64_t>(), j.at("s1").get<std::int64_t>(), j.at("s2").get<std::int64_t>(),
            j.at("deg_g1").get<std::int64_t>(), j.at("deg_g2").get<std::int64_t>()};
}

void nlohmann::adl_serializer<SufficiencyResult>::to_json(json& j, const SufficiencyResult& v) {
    j = json{
        {"holds", v.holds},
        {"witness", v.witness ? json(*v.witness) : json(nullptr)},
        {"shapes_checked", v.shapes_checked},
    };
}
SufficiencyResult nlohmann::adl_serializer<SufficiencyResult>::from_json(const json& j) {
    SufficiencyResult r;
    r.holds = j.at("holds").get<bool>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<SubsheafInvariant>();
    r.shapes_checked = j.at("shapes_checked").get<std::uint64_t>();
    return r;
}

void nlohmann::adl_serializer<ComponentRecord>::to_json(json& j, const ComponentRecord& v) {
    j = json{{"chi1", v.chi1}, {"chi2", v.chi2}, {"d1", v.d1}, {"d2", v.d2}, {"dimension", v.dimension}};
}
ComponentRecord nlohmann::adl_serializer<ComponentRecord>::from_json(const json& j) {
    return {j.at("chi1").get<std::int64_t>(), j.at("chi2").get<std::int64_t>(), j.at("d1").get<std::int64_t>(),
            j.at("d2").get<std::int64_t>(), j.at("dimension").get<std::int64_t>()};
}
