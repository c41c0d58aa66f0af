#pragma once

// JSON and CSV encodings of reports. Rationals are always "p/q" strings,
// polynomials and knot sets ascending comma-separated text, doubles the
// shortest decimal string that round-trips.

#include "floatlab.hpp"
#include "identity.hpp"
#include "interp.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <string>

namespace melzak {

using Json = nlohmann::ordered_json;

inline std::string shortest_decimal(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
    return {buf.data(), end};
}

inline const char* to_string(IdentityKind kind) {
    return kind == IdentityKind::melzak ? "melzak" : "generalized";
}

inline Json to_json(const MelzakInstance& inst) {
    return Json{{"f", inst.f.to_string()}, {"x", inst.x.to_string()}, {"y", inst.y.to_string()}, {"n", inst.n}};
}

inline Json to_json(const GeneralizedInstance& inst) {
    return Json{{"f", inst.f.to_string()},
                {"knots", inst.knots.to_string()},
                {"y", inst.y.to_string()},
                {"n", inst.n}};
}

inline Json to_json(const IdentityReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["instance"] = std::visit([](const auto& inst) { return to_json(inst); }, r.instance);
    j["lhs"] = r.lhs.to_string();
    j["rhs"] = r.rhs.to_string();
    j["residual"] = r.residual.to_string();
    j["holds"] = r.holds;
    j["degree_bound"] = r.degree_bound;
    return j;
}

inline Json to_json(const ResidueDecomposition& d) {
    Json knots = Json::array();
    for (const auto& k : d.knots.knots()) knots.push_back(k.to_string());
    Json residues = Json::array();
    for (const auto& c : d.residues) residues.push_back(c.to_string());
    return Json{{"knots", std::move(knots)}, {"residues", std::move(residues)}};
}

inline Json to_json(const FloatReport& r) {
    Json j;
    j["instance"] = to_json(r.instance);
    j["precision"] = r.precision;
    j["direct_value"] = shortest_decimal(r.direct_value);
    j["compensated_value"] = shortest_decimal(r.compensated_value);
    j["closed_form_value"] = shortest_decimal(r.closed_form_value);
    j["exact_value"] = r.exact_value.to_string();
    j["rel_err_direct"] = shortest_decimal(r.rel_err_direct);
    j["rel_err_compensated"] = shortest_decimal(r.rel_err_compensated);
    j["rel_err_closed"] = shortest_decimal(r.rel_err_closed);
    j["condition_number"] = shortest_decimal(r.condition_number);
    return j;
}

inline constexpr const char* float_report_csv_header =
    "f,x,y,n,precision,direct_value,compensated_value,closed_form_value,exact_value,"
    "rel_err_direct,rel_err_compensated,rel_err_closed,condition_number";

inline std::string to_csv_row(const FloatReport& r) {
    auto quoted = [](const std::string& s) { return '"' + s + '"'; };
    const auto& in = r.instance;
    return quoted(in.f.to_string()) + ',' + in.x.to_string() + ',' + in.y.to_string() + ',' + std::to_string(in.n) +
           ',' + r.precision + ',' + shortest_decimal(r.direct_value) + ',' + shortest_decimal(r.compensated_value) +
           ',' + shortest_decimal(r.closed_form_value) + ',' + r.exact_value.to_string() + ',' +
           shortest_decimal(r.rel_err_direct) + ',' + shortest_decimal(r.rel_err_compensated) + ',' +
           shortest_decimal(r.rel_err_closed) + ',' + shortest_decimal(r.condition_number);
}

}  // namespace melzak
