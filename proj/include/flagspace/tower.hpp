#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "flagspace/field.hpp"
#include "flagspace/poly.hpp"

namespace flagspace {

enum class Level { prime, middle, top };

// Two-level extension tower F_p < F_{q^2} < F_{q^(2m)} with fixed defining
// polynomials: the middle field is F_p[x]/(base modulus) with deg = 2k and
// q = p^k; the top field is F_{q^2}[y]/(top modulus) with deg = m.
//
// Top-field elements are coefficient vectors of length m over the middle
// field (middle ranks). The tower is immutable once built.
class Tower {
public:
    using Mid = SmallField::Elem;
    using TopVec = std::vector<Mid>;

    // Canonical moduli: least irreducible polynomial of the required degree
    // in packed-rank order, at both levels.
    static std::shared_ptr<const Tower> make_canonical(std::uint64_t p, unsigned k, unsigned m);
    // Tower whose top modulus is the given irreducible polynomial over the
    // middle field; the residue class of y is then a root of it.
    static std::shared_ptr<const Tower> from_top_modulus(const SmallField& middle, const Polynomial& top_modulus);

    std::uint64_t p() const { return prime_.p(); }
    std::uint64_t q() const { return q_; }
    std::uint64_t q2() const { return middle_.size(); }
    unsigned k() const { return k_; }
    unsigned m() const { return m_; }
    std::uint64_t top_size() const { return top_size_; }

    const SmallField& prime_field() const { return prime_; }
    const SmallField& middle_field() const { return middle_; }
    const std::vector<Mid>& top_modulus() const { return top_modulus_; }

    Mid middle_frobenius_q(Mid a) const { return middle_.pow(a, q_); }

    // --- top-level arithmetic -------------------------------------------
    TopVec top_zero() const { return TopVec(m_, 0); }
    TopVec top_one() const;
    bool top_is_zero(const TopVec& a) const;
    TopVec top_add(const TopVec& a, const TopVec& b) const;
    TopVec top_sub(const TopVec& a, const TopVec& b) const;
    TopVec top_neg(const TopVec& a) const;
    TopVec top_mul(const TopVec& a, const TopVec& b) const;
    void top_mul_into(const Mid* a, const Mid* b, Mid* out) const;  // out length m
    TopVec top_inv(const TopVec& a) const;  // DomainError on 0
    TopVec top_pow(TopVec a, std::uint64_t e) const;
    TopVec top_frobenius_q(const TopVec& a) const { return top_pow(a, q_); }

    std::uint64_t top_rank(const TopVec& a) const;
    TopVec top_unrank(std::uint64_t rank) const;
    // Field addition directly on packed ranks (they are base-p digit
    // vectors); xor in characteristic 2.
    std::uint64_t rank_add(std::uint64_t a, std::uint64_t b) const;
    // Multiplication of a top element by a middle-field scalar is
    // coordinate-wise; exposed on ranks for the subspace checks.
    std::uint64_t rank_scale_middle(std::uint64_t a, Mid c) const;

    TopVec embed_middle(Mid a) const;
    bool top_in_middle(const TopVec& a) const;
    Mid project_middle(const TopVec& a) const;  // StructuralError if not in the middle field

    std::uint64_t top_element_order(const TopVec& a) const;  // DomainError on 0
    const TopVec& top_primitive() const { return primitive_; }
    TopVec top_element_of_order(std::uint64_t n) const;

    bool same_tower(const Tower& o) const;

private:
    Tower(SmallField middle, std::vector<Mid> top_modulus);

    SmallField prime_;
    SmallField middle_;
    std::vector<Mid> top_modulus_;  // ascending, monic, length m+1
    std::uint64_t q_ = 0;
    unsigned k_ = 0;
    unsigned m_ = 0;
    std::uint64_t top_size_ = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> top_group_factors_;
    TopVec primitive_;
};

// Immutable element of a tower level. Prime and middle elements carry a
// single canonical rank, top elements their coefficient vector; equality
// is canonical-form equality.
class FieldElement {
public:
    static FieldElement from_rank(std::shared_ptr<const Tower> t, Level lv, std::uint64_t rank);
    static FieldElement from_top(std::shared_ptr<const Tower> t, Tower::TopVec v);
    static FieldElement zero(std::shared_ptr<const Tower> t, Level lv);
    static FieldElement one(std::shared_ptr<const Tower> t, Level lv);

    Level level() const { return level_; }
    const Tower& tower() const { return *tower_; }
    const std::shared_ptr<const Tower>& tower_ptr() const { return tower_; }
    const Tower::TopVec& data() const { return data_; }
    std::uint64_t rank() const;
    bool is_zero() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius_q() const;  // x -> x^q

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

private:
    FieldElement(std::shared_ptr<const Tower> t, Level lv, Tower::TopVec data);

    std::shared_ptr<const Tower> tower_;
    Level level_;
    Tower::TopVec data_;  // single rank for prime/middle, m coords for top
};

std::uint64_t element_order(const FieldElement& a);
FieldElement embed(const FieldElement& a, Level target);
FieldElement trace_to_prime(const FieldElement& a);
// Trace over the subfield F_{p^sub_degree}; requires a in that subfield.
FieldElement trace_to_prime(const FieldElement& a, unsigned sub_degree);
FieldElement primitive_element(std::shared_ptr<const Tower> t, Level lv);
FieldElement find_element_of_order(std::shared_ptr<const Tower> t, Level lv, std::uint64_t n);

// Monic minimal polynomial of b over the middle field, from the
// q^2-power conjugates of b; degree divides m.
Polynomial minimal_polynomial(const Tower& t, const Tower::TopVec& b);

// Evaluate a middle-coefficient polynomial at a top element.
Tower::TopVec top_eval(const Tower& t, const Polynomial& f, const Tower::TopVec& x);

}  // namespace flagspace
