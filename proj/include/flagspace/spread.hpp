#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "flagspace/tower.hpp"

namespace flagspace {

// A 2-dimensional F_q-subspace of the top field as its sorted element
// ranks (q^2 entries, 0 included).
struct LineSet {
    std::vector<std::uint32_t> ranks;
    bool operator==(const LineSet&) const = default;
};

// The scalar subgroup {u : u^{(q^{2m}-1)/(q+1)} = 1} of the top field,
// acting by multiplication.
struct ScalarSubgroup {
    Tower::TopVec generator;
    std::uint64_t order = 0;
};

// Orbit of the base line under the scalar subgroup, once it has been
// verified to partition the nonzero vectors. Lines are canonical: each
// sorted, and the list sorted lexicographically.
struct Spread {
    Tower::TopVec b;
    std::vector<LineSet> lines;
};

struct SpreadFailure {
    enum class Kind { wrong_orbit_size, not_covered, double_covered };
    Kind kind{};
    std::uint64_t witness_rank = 0;  // element covered twice / not at all
    std::uint64_t orbit_lines = 0;
    std::uint64_t expected_lines = 0;
};

struct SpreadOutcome {
    std::optional<Spread> spread;
    std::optional<SpreadFailure> failure;
    bool ok() const { return spread.has_value(); }
};

// The base line {x - b x^q : x in F_{q^2}}; requires b^{q+1} != 1 (else
// the map is not injective and the set is smaller than q^2).
LineSet build_base_line(const Tower& t, const Tower::TopVec& b);

ScalarSubgroup build_scalar_subgroup(const Tower& t);

// Expands the orbit of the base line, deduplicates, and checks that the
// nonzero parts partition the nonzero vectors: every nonzero element hit
// exactly once. Non-examples come back as a failure report with a witness.
SpreadOutcome build_spread(const Tower& t, const Tower::TopVec& b, const ScalarSubgroup& c);

// b lies in the embedded F_{q^2}, i.e. b^{q^2} = b.
bool is_desarguesian(const Tower& t, const Spread& s);

// |{u in C : u * base_line = base_line}|; equals |C| / #lines = q - 1 for
// a valid spread.
std::uint64_t line_stabilizer_order(const Tower& t, const Spread& s, const ScalarSubgroup& c);

// Closure under addition and under embedded F_q scalars.
bool line_is_subspace(const Tower& t, const LineSet& line);

struct SpreadBundle {
    std::shared_ptr<const Tower> tower;
    ScalarSubgroup subgroup;
    SpreadOutcome outcome;
};

// Builds the tower with top modulus h (so b = residue class of y is a
// root of h), then the scalar subgroup and the spread.
SpreadBundle spread_from_polynomial(const SmallField& fq2, const Polynomial& h);

}  // namespace flagspace
