#pragma once

#include <memory>

#include <json.hpp>

#include "flagspace/linear_space.hpp"
#include "flagspace/pipeline.hpp"
#include "flagspace/spread.hpp"

namespace flagspace {

inline constexpr const char* kSchema = "flagspace/1";

// Field description: {p, k, base_modulus (ascending F_p ints), m,
// top_modulus (ascending, each middle coefficient an ascending F_p list)}.
nlohmann::json field_to_json(const Tower& t);
std::shared_ptr<const Tower> tower_from_json(const nlohmann::json& j);

// Top-field element: list of m middle coefficients, each an ascending F_p
// list of length 2k.
nlohmann::json element_to_json(const Tower& t, const Tower::TopVec& v);
Tower::TopVec element_from_json(const Tower& t, const nlohmann::json& j);

// Polynomial over the middle field: ascending coefficient list in the
// element format.
nlohmann::json polynomial_to_json(const SmallField& f, const Polynomial& poly);
Polynomial polynomial_from_json(const SmallField& f, const nlohmann::json& j);

nlohmann::json spread_to_json(const Tower& t, const Spread& s);
struct LoadedSpread {
    std::shared_ptr<const Tower> tower;
    Spread spread;
};
LoadedSpread spread_from_json(const nlohmann::json& j);

// {v, k, lines: list of point-rank lists}
nlohmann::json space_to_json(const LinearSpace& ls);
LinearSpace space_from_json(const nlohmann::json& j);

nlohmann::json design_report_to_json(const DesignReport& r);

nlohmann::json report_to_json(const PipelineReport& r);
PipelineReport report_from_json(const nlohmann::json& j);

}  // namespace flagspace
