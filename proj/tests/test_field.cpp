#include <doctest.h>

#include <set>

#include "flagspace/errors.hpp"
#include "flagspace/field.hpp"
#include "flagspace/poly.hpp"

using namespace flagspace;
using Elem = SmallField::Elem;

TEST_CASE("prime field basics") {
    SmallField f2 = SmallField::prime_field(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.add(1, 0) == 1);
    SmallField f3 = SmallField::prime_field(3);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.mul(2, 2) == 1);
    CHECK_THROWS_AS(SmallField::prime_field(6), DomainError);
}

TEST_CASE("F4 with the canonical modulus") {
    SmallField f4 = make_extension_field(2, 2);
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});  // x^2 + x + 1
    const Elem delta = 2;                               // the residue class of x
    CHECK(f4.mul(delta, delta) == 3);                   // delta^2 = delta + 1
    CHECK(f4.add(delta, f4.mul(delta, delta)) == 1);    // delta + delta^2 = 1
    CHECK(f4.inv(delta) == 3);                          // delta^3 = 1
    CHECK(f4.inv(1) == 1);
    CHECK_THROWS_AS(f4.inv(0), DomainError);
    CHECK(f4.pow(delta, 3) == 1);
    CHECK(f4.pow(delta, 1) == delta);
    CHECK(f4.pow(0, 5) == 0);
    CHECK(f4.pow(0, 0) == 1);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, deg] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}}) {
        SmallField f = make_extension_field(p, deg);
        for (Elem a = 0; a < f.size(); ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
            for (Elem b = 0; b < f.size(); ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.mul(a, b) == f.mul_direct(a, b));  // tables match direct arithmetic
                for (Elem c = 0; c < f.size(); ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("frobenius is a field automorphism") {
    SmallField f16 = make_extension_field(2, 4);
    for (Elem a = 0; a < f16.size(); ++a)
        for (Elem b = 0; b < f16.size(); ++b) {
            CHECK(f16.frobenius(f16.add(a, b)) == f16.add(f16.frobenius(a), f16.frobenius(b)));
            CHECK(f16.frobenius(f16.mul(a, b)) == f16.mul(f16.frobenius(a), f16.frobenius(b)));
        }
    // p-power iterate cycles back after `degree` steps
    for (Elem a = 0; a < f16.size(); ++a) CHECK(f16.frobenius_pow(a, 4) == a);
}

TEST_CASE("trace to the prime field") {
    SmallField f9 = make_extension_field(3, 2);
    CHECK(f9.trace(1) == 2);  // 1 + 1^3
    CHECK(f9.trace(0) == 0);
    // F_p-linear and surjective
    std::set<Elem> image;
    for (Elem a = 0; a < f9.size(); ++a) {
        image.insert(f9.trace(a));
        CHECK(f9.trace(f9.add(a, 1)) == f9.add(f9.trace(a), f9.trace(1)));
        for (Elem c = 0; c < 3; ++c) CHECK(f9.trace(f9.mul(c, a)) == f9.mul(c, f9.trace(a)));
    }
    CHECK(image == std::set<Elem>{0, 1, 2});

    SmallField f8 = make_extension_field(2, 3);
    std::set<Elem> image8;
    for (Elem a = 0; a < f8.size(); ++a) image8.insert(f8.trace(a));
    CHECK(image8 == std::set<Elem>{0, 1});

    // trace over an intermediate subfield stays in the prime field
    SmallField f81 = make_extension_field(3, 4);
    for (Elem a = 0; a < f81.size(); ++a) {
        if (!f81.in_subfield(a, 9)) continue;
        Elem t = f81.trace(a, 2);
        CHECK(t < 3);
    }
    CHECK_THROWS_AS(f81.trace(f81.primitive(), 2), DomainError);  // not in F_9
    CHECK_THROWS_AS(f81.trace(1, 3), DomainError);                // 3 does not divide 4
}

TEST_CASE("element orders") {
    SmallField f4 = make_extension_field(2, 2);
    CHECK(f4.element_order(1) == 1);
    CHECK(f4.element_order(2) == 3);
    CHECK_THROWS_AS(f4.element_order(0), DomainError);

    for (auto [p, deg] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}}) {
        SmallField f = make_extension_field(p, deg);
        for (Elem a = 1; a < f.size(); ++a) {
            std::uint64_t o = f.element_order(a);
            CHECK((f.size() - 1) % o == 0);
            CHECK(f.pow(a, o) == 1);
            if (o > 1) CHECK(f.pow(a, o / (o % 2 == 0 ? 2 : o)) != 1);
        }
    }
}

TEST_CASE("primitive elements and elements of given order") {
    CHECK(SmallField::prime_field(2).primitive() == 1);
    SmallField f4 = make_extension_field(2, 2);
    CHECK(f4.primitive() == 2);
    CHECK(f4.element_order(f4.find_element_of_order(3)) == 3);
    CHECK(f4.find_element_of_order(1) == 1);

    SmallField f9 = make_extension_field(3, 2);
    Elem d4 = f9.find_element_of_order(4);
    CHECK(f9.pow(d4, 4) == 1);
    CHECK(f9.pow(d4, 2) != 1);
    CHECK_THROWS_AS(f9.find_element_of_order(3), DomainError);

    SmallField f64 = make_extension_field(2, 6);
    CHECK(f64.element_order(f64.primitive()) == 63);
}

TEST_CASE("subfield membership and embedding") {
    SmallField f16 = make_extension_field(2, 4);
    unsigned count = 0;
    for (Elem a = 0; a < f16.size(); ++a)
        if (f16.in_subfield(a, 4)) ++count;
    CHECK(count == 4);

    SmallField f4 = make_extension_field(2, 2);
    auto img = find_subfield_embedding(f4, f16);
    CHECK(img[0] == 0);
    CHECK(img[1] == 1);
    std::set<Elem> distinct(img.begin(), img.end());
    CHECK(distinct.size() == f4.size());  // injective
    for (Elem a = 0; a < f4.size(); ++a) {
        CHECK(f16.in_subfield(img[a], 4));
        for (Elem b = 0; b < f4.size(); ++b) {
            CHECK(img[f4.mul(a, b)] == f16.mul(img[a], img[b]));
            CHECK(img[f4.add(a, b)] == f16.add(img[a], img[b]));
        }
    }

    SmallField f9 = make_extension_field(3, 2);
    SmallField f81 = make_extension_field(3, 4);
    auto img9 = find_subfield_embedding(f9, f81);
    for (Elem a = 0; a < f9.size(); ++a)
        for (Elem b = 0; b < f9.size(); ++b) CHECK(img9[f9.mul(a, b)] == f81.mul(img9[a], img9[b]));

    CHECK_THROWS_AS(find_subfield_embedding(f9, f16), StructuralError);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(SmallField::extension(2, {1, 0, 1}), DomainError);  // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(SmallField::extension(2, {1}), DomainError);        // degree 0
    CHECK_THROWS_AS(SmallField::extension(2, {1, 1, 2}), DomainError);  // coefficient out of range
    CHECK_THROWS_AS(SmallField::extension(2, std::vector<Elem>(18, 1)), ResourceError);
}

TEST_CASE("coefficient round trip") {
    SmallField f27 = make_extension_field(3, 3);
    for (Elem a = 0; a < f27.size(); ++a) {
        auto c = f27.coeffs(a);
        CHECK(c.size() == 3);
        CHECK(f27.from_coeffs(c) == a);
    }
    CHECK_THROWS_AS(f27.from_coeffs({0, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(f27.from_coeffs({3}), DomainError);
}
