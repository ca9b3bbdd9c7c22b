#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagspace/linear_space.hpp"
#include "flagspace/perm_check.hpp"

namespace flagspace {

// Stage names, in order: construct, irreducible, pp_criterion, pp_brute,
// condition_one, spread, design, flag_transitive, non_desarguesian.
// A stage is skipped when a prerequisite failed or a resource tier ruled
// it out; a report is ok when no stage failed.
enum class StageStatus { pass, fail, skipped };

struct StageResult {
    std::string name;
    StageStatus status = StageStatus::skipped;
    std::string note;

    bool operator==(const StageResult&) const = default;
};

struct PipelineReport {
    std::string family;
    std::map<std::string, std::uint64_t> params;
    std::vector<StageResult> stages;
    std::map<std::string, std::uint64_t> metrics;
    bool ok = false;

    const StageResult* stage(const std::string& name) const;
    bool operator==(const PipelineReport&) const = default;
};

struct PipelineOptions {
    std::uint64_t max_full_design_points = 1024;
    std::uint64_t max_materialized_lines = std::uint64_t(1) << 20;
    std::uint64_t max_flag_points = std::uint64_t(1) << 12;
    std::uint64_t max_enumeration = std::uint64_t(1) << 24;
};

// Power-difference family: degree n = d^t u over F_{q^2}; the full chain
// from the polynomial to the verified linear space.
PipelineReport run_power_diff_pipeline(std::uint64_t q, std::uint64_t d, std::uint64_t u,
                                       std::uint64_t t, const PipelineOptions& opts = {});

// Characteristic-3 cubic family over F_{3^k}; the parameter a is the least
// element of F_q^* passing the trace condition.
PipelineReport run_char3_pipeline(unsigned k, const PipelineOptions& opts = {});

// Pauley-Bamberg geometric-series family over F_{p^2} with m = p.
PipelineReport run_geometric_pipeline(std::uint64_t p, const PipelineOptions& opts = {});

}  // namespace flagspace
