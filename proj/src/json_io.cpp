#include "flagspace/json_io.hpp"

#include <algorithm>

#include "flagspace/errors.hpp"

namespace flagspace {

using nlohmann::json;

namespace {

json middle_coeff_to_json(const SmallField& mid, SmallField::Elem c) { return json(mid.coeffs(c)); }

SmallField::Elem middle_coeff_from_json(const SmallField& mid, const json& j) {
    if (!j.is_array()) throw DomainError("middle coefficient must be a list of F_p digits");
    std::vector<SmallField::Elem> digits;
    for (const auto& d : j) digits.push_back(d.get<SmallField::Elem>());
    return mid.from_coeffs(digits);
}

}  // namespace

json field_to_json(const Tower& t) {
    json top = json::array();
    for (SmallField::Elem c : t.top_modulus()) top.push_back(middle_coeff_to_json(t.middle_field(), c));
    return json{{"p", t.p()},
                {"k", t.k()},
                {"base_modulus", t.middle_field().modulus()},
                {"m", t.m()},
                {"top_modulus", top}};
}

std::shared_ptr<const Tower> tower_from_json(const json& j) {
    const std::uint64_t p = j.at("p").get<std::uint64_t>();
    const unsigned k = j.at("k").get<unsigned>();
    std::vector<SmallField::Elem> base = j.at("base_modulus").get<std::vector<SmallField::Elem>>();
    if (base.size() != 2 * k + 1) throw DomainError("base modulus must have degree 2k");
    SmallField middle = SmallField::extension(p, base);
    const unsigned m = j.at("m").get<unsigned>();
    const json& top = j.at("top_modulus");
    if (!top.is_array() || top.size() != m + 1) throw DomainError("top modulus must have degree m");
    std::vector<SmallField::Elem> coeffs;
    for (const auto& c : top) coeffs.push_back(middle_coeff_from_json(middle, c));
    return Tower::from_top_modulus(middle, Polynomial(middle, coeffs));
}

json element_to_json(const Tower& t, const Tower::TopVec& v) {
    json out = json::array();
    for (SmallField::Elem c : v) out.push_back(middle_coeff_to_json(t.middle_field(), c));
    return out;
}

Tower::TopVec element_from_json(const Tower& t, const json& j) {
    if (!j.is_array() || j.size() != t.m()) throw DomainError("element must list m middle coefficients");
    Tower::TopVec v;
    for (const auto& c : j) v.push_back(middle_coeff_from_json(t.middle_field(), c));
    return v;
}

json polynomial_to_json(const SmallField& f, const Polynomial& poly) {
    json out = json::array();
    for (SmallField::Elem c : poly.coeffs()) out.push_back(middle_coeff_to_json(f, c));
    return out;
}

Polynomial polynomial_from_json(const SmallField& f, const json& j) {
    if (!j.is_array()) throw DomainError("polynomial must be a coefficient list");
    std::vector<SmallField::Elem> coeffs;
    for (const auto& c : j) coeffs.push_back(middle_coeff_from_json(f, c));
    return Polynomial(f, std::move(coeffs));
}

json spread_to_json(const Tower& t, const Spread& s) {
    json lines = json::array();
    for (const LineSet& line : s.lines) {
        json jl = json::array();
        for (std::uint32_t rk : line.ranks) jl.push_back(element_to_json(t, t.top_unrank(rk)));
        lines.push_back(std::move(jl));
    }
    return json{{"schema", kSchema}, {"field", field_to_json(t)}, {"b", element_to_json(t, s.b)}, {"lines", lines}};
}

LoadedSpread spread_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != kSchema) throw DomainError("unsupported schema");
    LoadedSpread out;
    out.tower = tower_from_json(j.at("field"));
    const Tower& t = *out.tower;
    out.spread.b = element_from_json(t, j.at("b"));
    for (const auto& jl : j.at("lines")) {
        LineSet line;
        for (const auto& je : jl) line.ranks.push_back((std::uint32_t)t.top_rank(element_from_json(t, je)));
        std::sort(line.ranks.begin(), line.ranks.end());
        out.spread.lines.push_back(std::move(line));
    }
    std::sort(out.spread.lines.begin(), out.spread.lines.end(),
              [](const LineSet& a, const LineSet& b) { return a.ranks < b.ranks; });
    return out;
}

json space_to_json(const LinearSpace& ls) {
    json lines = json::array();
    for (std::uint64_t i = 0; i < ls.line_count; ++i) {
        auto line = ls.line(i);
        lines.push_back(json(std::vector<std::uint32_t>(line.begin(), line.end())));
    }
    return json{{"schema", kSchema}, {"v", ls.v}, {"k", ls.k}, {"lines", lines}};
}

LinearSpace space_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != kSchema) throw DomainError("unsupported schema");
    LinearSpace ls;
    ls.v = j.at("v").get<std::uint64_t>();
    ls.k = j.at("k").get<std::uint32_t>();
    const json& lines = j.at("lines");
    ls.line_count = lines.size();
    for (const auto& jl : lines) {
        if (jl.size() != ls.k) throw DomainError("line with the wrong number of points");
        for (const auto& pt : jl) ls.points.push_back(pt.get<std::uint32_t>());
    }
    return ls;
}

json design_report_to_json(const DesignReport& r) {
    return json{{"schema", kSchema},
                {"is_design", r.is_design},
                {"v", r.v},
                {"k", r.k},
                {"line_count", r.line_count},
                {"replication", r.replication},
                {"pairs_checked", r.pairs_checked},
                {"mode", r.mode == DesignMode::full ? "full" : "counting"},
                {"has_witness", r.has_witness},
                {"witness_a", r.witness_a},
                {"witness_b", r.witness_b},
                {"witness_count", r.witness_count}};
}

namespace {
const char* status_name(StageStatus s) {
    switch (s) {
        case StageStatus::pass: return "pass";
        case StageStatus::fail: return "fail";
        case StageStatus::skipped: return "skipped";
    }
    return "skipped";
}

StageStatus status_from_name(const std::string& s) {
    if (s == "pass") return StageStatus::pass;
    if (s == "fail") return StageStatus::fail;
    if (s == "skipped") return StageStatus::skipped;
    throw DomainError("unknown stage status: " + s);
}
}  // namespace

json report_to_json(const PipelineReport& r) {
    json stages = json::array();
    for (const StageResult& s : r.stages)
        stages.push_back(json{{"name", s.name}, {"status", status_name(s.status)}, {"note", s.note}});
    return json{{"schema", kSchema}, {"family", r.family}, {"params", r.params},
                {"stages", stages},  {"metrics", r.metrics}, {"ok", r.ok}};
}

PipelineReport report_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != kSchema) throw DomainError("unsupported schema");
    PipelineReport r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::uint64_t>>();
    r.metrics = j.at("metrics").get<std::map<std::string, std::uint64_t>>();
    r.ok = j.at("ok").get<bool>();
    for (const auto& js : j.at("stages"))
        r.stages.push_back(StageResult{js.at("name").get<std::string>(),
                                       status_from_name(js.at("status").get<std::string>()),
                                       js.at("note").get<std::string>()});
    return r;
}

}  // namespace flagspace
