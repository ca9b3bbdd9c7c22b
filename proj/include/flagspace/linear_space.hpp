#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flagspace/spread.hpp"

namespace flagspace {

// Point-line incidence structure from the Andre/Bruck-Bose construction:
// points are the top-field elements by rank, lines are the cosets S + w of
// the spread members. Lines are stored flat with stride k, each line
// ascending, lines in canonical (spread index, coset minimum) order.
struct LinearSpace {
    std::uint64_t v = 0;
    std::uint32_t k = 0;
    std::uint64_t line_count = 0;
    std::vector<std::uint32_t> points;

    std::span<const std::uint32_t> line(std::uint64_t i) const {
        return {points.data() + i * k, (std::size_t)k};
    }
};

enum class DesignMode { full, counting };

struct DesignReport {
    bool is_design = false;
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::uint64_t line_count = 0;
    std::uint64_t replication = 0;
    std::uint64_t pairs_checked = 0;
    DesignMode mode = DesignMode::full;
    bool has_witness = false;
    std::uint64_t witness_a = 0;  // pair (full) or point (counting)
    std::uint64_t witness_b = 0;
    std::uint64_t witness_count = 0;  // observed coverage/replication
};

// Materializes all distinct cosets; cosets are deduplicated by their
// minimum element. ResourceError beyond the point/line bounds.
LinearSpace andre_bruck_bose(const Tower& t, const Spread& s, std::uint64_t max_lines = std::uint64_t(1) << 20);

// full: every unordered point pair on exactly one line (v <= 2^10);
// counting: the identities line_count*k*(k-1) = v*(v-1) and per-point
// replication (v-1)/(k-1), checked for every point.
DesignReport verify_design(const LinearSpace& ls, DesignMode mode);

struct FlagOrbitReport {
    bool complete = false;
    std::uint64_t orbit_size = 0;
    std::uint64_t flag_count = 0;
};

// Orbit of the flag (0, base line) under the group generated by all
// translations and the scalar subgroup, by breadth-first expansion over
// (line, point) pairs. Complete iff the orbit is every flag.
FlagOrbitReport flag_transitivity_witness(const Tower& t, const LinearSpace& ls, const Spread& s,
                                          const ScalarSubgroup& c);

// d | m and gcd(m', q+1) = 1: the arithmetic criterion for the space over
// F_{q^(2 m m')} to be an inflation of one over F_{q^(2m)}.
bool inflation_criterion(std::uint64_t d, std::uint64_t m, std::uint64_t m_prime, std::uint64_t q);

// n | q-1 would make the parameters of a Kantor type-4 space match.
bool kantor_type4_parameter_clash(std::uint64_t q, std::uint64_t n);

}  // namespace flagspace
