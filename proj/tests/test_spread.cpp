#include <doctest.h>

#include <set>

#include "flagspace/errors.hpp"
#include "flagspace/perm_check.hpp"
#include "flagspace/spread.hpp"

using namespace flagspace;
using Elem = SmallField::Elem;

TEST_CASE("base line") {
    SmallField f4 = make_extension_field(2, 2);
    auto t = Tower::from_top_modulus(f4, Polynomial(f4, {1, 1, 0, 1}));

    // b = 0 gives the embedded middle field
    LineSet l0 = build_base_line(*t, t->top_zero());
    std::vector<std::uint32_t> expected{0, 1, 2, 3};
    CHECK(l0.ranks == expected);

    Tower::TopVec b = t->top_zero();
    b[1] = 1;
    LineSet lb = build_base_line(*t, b);
    CHECK(lb.ranks.size() == 4);
    CHECK(lb.ranks != expected);
    CHECK(line_is_subspace(*t, lb));

    // embedded element of order q+1 degenerates
    CHECK_THROWS_AS(build_base_line(*t, t->embed_middle(2)), DomainError);

    // every admissible b gives a line of exactly q^2 elements
    for (std::uint64_t r = 0; r < t->top_size(); ++r) {
        Tower::TopVec cand = t->top_unrank(r);
        if (t->top_pow(cand, 3) == t->top_one()) continue;
        CHECK(build_base_line(*t, cand).ranks.size() == 4);
    }
}

TEST_CASE("scalar subgroup orders") {
    auto t1 = Tower::make_canonical(2, 1, 3);
    ScalarSubgroup c1 = build_scalar_subgroup(*t1);
    CHECK(c1.order == 21);
    CHECK(t1->top_element_order(c1.generator) == 21);

    auto t2 = Tower::make_canonical(3, 1, 3);
    CHECK(build_scalar_subgroup(*t2).order == 182);
}

TEST_CASE("spread of the smallest power-difference instance") {
    SmallField f4 = make_extension_field(2, 2);
    Elem delta = f4.find_element_of_order(3);
    Polynomial g3 = build_power_diff_irreducible(f4, 2, 3, 1, 1, delta);
    SpreadBundle bundle = spread_from_polynomial(f4, g3);
    REQUIRE(bundle.outcome.ok());
    const Spread& s = *bundle.outcome.spread;
    CHECK(s.lines.size() == 21);
    CHECK_FALSE(is_desarguesian(*bundle.tower, s));
    CHECK(line_stabilizer_order(*bundle.tower, s, bundle.subgroup) == 1);  // q - 1

    // orbit-stabilizer consistency
    CHECK(s.lines.size() * line_stabilizer_order(*bundle.tower, s, bundle.subgroup) == bundle.subgroup.order);

    // all lines are subspaces and cover every nonzero vector once
    std::vector<unsigned> cover(64, 0);
    for (const LineSet& line : s.lines) {
        CHECK(line_is_subspace(*bundle.tower, line));
        for (std::uint32_t rk : line.ranks)
            if (rk) ++cover[rk];
    }
    for (std::uint64_t rk = 1; rk < 64; ++rk) CHECK(cover[rk] == 1);
}

TEST_CASE("spread of the characteristic-3 instance") {
    SmallField f9 = make_extension_field(3, 2);
    Polynomial h = build_char3_cubic(f9, 3, 1);
    SpreadBundle bundle = spread_from_polynomial(f9, h);
    REQUIRE(bundle.outcome.ok());
    CHECK(bundle.outcome.spread->lines.size() == 91);
    CHECK_FALSE(is_desarguesian(*bundle.tower, *bundle.outcome.spread));
    CHECK(line_stabilizer_order(*bundle.tower, *bundle.outcome.spread, bundle.subgroup) == 2);
}

TEST_CASE("geometric-series instance in characteristic 3") {
    SmallField f9 = make_extension_field(3, 2);
    SpreadBundle bundle = spread_from_polynomial(f9, build_pauley_bamberg(f9));
    REQUIRE(bundle.outcome.ok());
    CHECK(bundle.outcome.spread->lines.size() == 91);
    CHECK_FALSE(is_desarguesian(*bundle.tower, *bundle.outcome.spread));
}

TEST_CASE("Desarguesian spread from an embedded b") {
    // needs gcd(m, q+1) = 1: for a degree-1 minimal polynomial the ratio
    // condition reduces to the m-power map being injective on the order
    // q+1 subgroup
    auto t = Tower::make_canonical(3, 1, 3);  // F_3^6 over F_9, gcd(3, 4) = 1
    Tower::TopVec b = t->embed_middle(t->middle_field().primitive());  // order 8, so b^4 != 1
    ScalarSubgroup c = build_scalar_subgroup(*t);
    CHECK(c.order == 182);
    SpreadOutcome outcome = build_spread(*t, b, c);
    REQUIRE(outcome.ok());
    CHECK(outcome.spread->lines.size() == 91);
    CHECK(is_desarguesian(*t, *outcome.spread));
    CHECK(line_stabilizer_order(*t, *outcome.spread, c) == 2);

    Polynomial minpoly = minimal_polynomial(*t, b);
    CHECK(minpoly.degree() == 1);
    CHECK(spread_ratio_condition({minpoly, 3, 3}).holds);
}

TEST_CASE("embedded b fails when gcd(m, q+1) > 1") {
    auto t = Tower::make_canonical(3, 1, 2);  // gcd(2, 4) = 2
    Tower::TopVec b = t->embed_middle(t->middle_field().primitive());
    ScalarSubgroup c = build_scalar_subgroup(*t);
    SpreadOutcome outcome = build_spread(*t, b, c);
    CHECK_FALSE(outcome.ok());
    CHECK(outcome.failure->kind == SpreadFailure::Kind::wrong_orbit_size);
    CHECK_FALSE(spread_ratio_condition({minimal_polynomial(*t, b), 3, 2}).holds);
}

TEST_CASE("spread existence matches the ratio condition, exhaustively") {
    // every monic irreducible quadratic and cubic over F_4
    SmallField f4 = make_extension_field(2, 2);
    unsigned tested = 0, successes = 0;
    for (int deg = 2; deg <= 3; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= 4;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Elem> coeffs(deg + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < deg; ++i) {
                coeffs[i] = (Elem)(v % 4);
                v /= 4;
            }
            coeffs[deg] = 1;
            Polynomial h(f4, coeffs);
            if (!is_irreducible(h)) continue;
            ++tested;
            SpreadBundle bundle = spread_from_polynomial(f4, h);
            bool condition = spread_ratio_condition({h, 2, (std::uint64_t)deg}).holds;
            REQUIRE(bundle.outcome.ok() == condition);
            if (condition) ++successes;
            if (!bundle.outcome.ok()) {
                const SpreadFailure& f = *bundle.outcome.failure;
                if (f.kind != SpreadFailure::Kind::wrong_orbit_size) CHECK(f.witness_rank > 0);
            }
        }
    }
    CHECK(tested > 10);
    CHECK(successes > 0);
    CHECK(successes < tested);
}

TEST_CASE("spread construction guards") {
    SmallField f4 = make_extension_field(2, 2);
    CHECK_THROWS_AS(spread_from_polynomial(f4, Polynomial(f4, {1, 1, 1})), DomainError);  // reducible

    // corrupting a line breaks the subspace predicate
    Elem delta = f4.find_element_of_order(3);
    SpreadBundle bundle = spread_from_polynomial(f4, build_power_diff_irreducible(f4, 2, 3, 1, 1, delta));
    LineSet corrupt = bundle.outcome.spread->lines[0];
    for (std::uint32_t cand = 1; cand < 64; ++cand) {
        if (std::binary_search(corrupt.ranks.begin(), corrupt.ranks.end(), cand)) continue;
        corrupt.ranks[1] = cand;
        break;
    }
    std::sort(corrupt.ranks.begin(), corrupt.ranks.end());
    CHECK_FALSE(line_is_subspace(*bundle.tower, corrupt));
}
