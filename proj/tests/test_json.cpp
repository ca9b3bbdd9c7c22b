#include <doctest.h>

#include "flagspace/errors.hpp"
#include "flagspace/json_io.hpp"

using namespace flagspace;
using nlohmann::json;

TEST_CASE("field description round trip") {
    auto t = Tower::make_canonical(2, 1, 3);
    json j = field_to_json(*t);
    CHECK(j["p"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["base_modulus"] == json::array({1, 1, 1}));
    CHECK(j["m"] == 3);
    auto t2 = tower_from_json(j);
    CHECK(t->same_tower(*t2));
    CHECK(field_to_json(*t2) == j);
}

TEST_CASE("element round trip at the top level") {
    auto t = Tower::make_canonical(3, 1, 2);
    for (std::uint64_t r : {0ull, 1ull, 5ull, 80ull}) {
        json j = element_to_json(*t, t->top_unrank(r));
        CHECK(t->top_rank(element_from_json(*t, j)) == r);
    }
    CHECK_THROWS_AS(element_from_json(*t, json::array({1, 2})), DomainError);
}

TEST_CASE("spread serialization round trip") {
    SmallField f4 = make_extension_field(2, 2);
    SmallField::Elem delta = f4.find_element_of_order(3);
    Polynomial g3 = build_power_diff_irreducible(f4, 2, 3, 1, 1, delta);
    SpreadBundle bundle = spread_from_polynomial(f4, g3);
    REQUIRE(bundle.outcome.ok());

    json j = spread_to_json(*bundle.tower, *bundle.outcome.spread);
    CHECK(j["schema"] == kSchema);
    CHECK(j["lines"].size() == 21);

    LoadedSpread loaded = spread_from_json(j);
    CHECK(loaded.tower->same_tower(*bundle.tower));
    CHECK(loaded.spread.b == bundle.outcome.spread->b);
    REQUIRE(loaded.spread.lines.size() == bundle.outcome.spread->lines.size());
    for (std::size_t i = 0; i < loaded.spread.lines.size(); ++i)
        CHECK(loaded.spread.lines[i].ranks == bundle.outcome.spread->lines[i].ranks);
}

TEST_CASE("linear space serialization round trip") {
    SmallField f4 = make_extension_field(2, 2);
    SmallField::Elem delta = f4.find_element_of_order(3);
    SpreadBundle bundle = spread_from_polynomial(f4, build_power_diff_irreducible(f4, 2, 3, 1, 1, delta));
    LinearSpace ls = andre_bruck_bose(*bundle.tower, *bundle.outcome.spread);
    json j = space_to_json(ls);
    CHECK(j["v"] == 64);
    CHECK(j["k"] == 4);
    LinearSpace back = space_from_json(j);
    CHECK(back.v == ls.v);
    CHECK(back.k == ls.k);
    CHECK(back.line_count == ls.line_count);
    CHECK(back.points == ls.points);
    CHECK(verify_design(back, DesignMode::full).is_design);
}

TEST_CASE("pipeline report round trip") {
    PipelineReport rep = run_power_diff_pipeline(2, 3, 1, 1);
    json j = report_to_json(rep);
    CHECK(j["schema"] == kSchema);
    CHECK(j["ok"] == true);
    PipelineReport back = report_from_json(j);
    CHECK(back == rep);
    CHECK(report_to_json(back) == j);

    // a parse of re-serialized text is identical
    json reparsed = json::parse(j.dump());
    CHECK(reparsed == j);
}

TEST_CASE("design report serialization") {
    SmallField f9 = make_extension_field(3, 2);
    SpreadBundle bundle = spread_from_polynomial(f9, build_char3_cubic(f9, 3, 1));
    LinearSpace ls = andre_bruck_bose(*bundle.tower, *bundle.outcome.spread);
    json j = design_report_to_json(verify_design(ls, DesignMode::counting));
    CHECK(j["is_design"] == true);
    CHECK(j["v"] == 729);
    CHECK(j["replication"] == 91);
    CHECK(j["mode"] == "counting");
}

TEST_CASE("polynomial round trip") {
    SmallField f4 = make_extension_field(2, 2);
    Polynomial g3 = build_power_diff_irreducible(f4, 2, 3, 1, 1, f4.find_element_of_order(3));
    json j = polynomial_to_json(f4, g3);
    CHECK(polynomial_from_json(f4, j) == g3);
    SmallField f9 = make_extension_field(3, 2);
    Polynomial h = build_char3_cubic(f9, 3, 1);
    CHECK(polynomial_from_json(f9, polynomial_to_json(f9, h)) == h);
}

TEST_CASE("schema mismatches are rejected") {
    json j{{"schema", "flagspace/0"}, {"v", 1}, {"k", 2}, {"lines", json::array()}};
    CHECK_THROWS_AS(space_from_json(j), DomainError);
}
