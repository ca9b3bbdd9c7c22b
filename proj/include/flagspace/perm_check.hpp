#pragma once

#include <cstdint>
#include <functional>

#include "flagspace/poly.hpp"

namespace flagspace {

struct PermCheckResult {
    bool is_permutation = false;
    // a collision f(a) = f(b), a != b, when not a permutation
    SmallField::Elem collision_a = 0;
    SmallField::Elem collision_b = 0;
};

// Exhaustive permutation test of a map on the whole field.
PermCheckResult is_permutation_brute(const SmallField& f,
                                     const std::function<SmallField::Elem(SmallField::Elem)>& fn);
PermCheckResult is_permutation_brute(const Polynomial& f);

// x^r h(x^{q-1}) as a map on F_{q^2}, with f(0) = 0 (r >= 1 makes the
// closed form and the polynomial form agree there).
SmallField::Elem index_form_eval(const SmallField& fq2, const Polynomial& h, std::uint64_t r,
                                 std::uint64_t q, SmallField::Elem x);
PermCheckResult index_form_brute(const Polynomial& h, std::uint64_t r, std::uint64_t q);

// Whether x^{deg h} h(x^{q-1}) permutes F_{q^2}; requires gcd(deg h, q-1)=1.
// When it does and self_check() is on, the ratio condition with m = deg h
// must hold as well and is asserted.
PermCheckResult index_form_pp_check(const Polynomial& h, std::uint64_t q);

// The power-difference permutation family on F_{q^2}:
//   f(x) = x^{d + k(q+1)} ((delta x^{q-1} - beta delta^q)^d - delta (x^{q-1} - beta)^d)
// with beta^{q+1} = 1 and delta outside F_q. It permutes F_{q^2} exactly
// when gcd(d(d+2k), q-1) = 1.
struct PowerDiffParams {
    std::uint64_t q = 0;
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    SmallField::Elem beta = 0;
    SmallField::Elem delta = 0;
};
bool power_diff_pp_criterion(const SmallField& fq2, const PowerDiffParams& p);
std::function<SmallField::Elem(SmallField::Elem)> power_diff_pp_map(const SmallField& fq2,
                                                                    const PowerDiffParams& p);

// Sufficient conditions for the characteristic-3 quadrinomial
//   f(x) = x^3 + a x^{q+2} - a x^{2q+1} + c x^{3q},  a, c in F_q^*
// to permute F_{q^2}: (1) c = a != -1 and a^{(q-1)/2} = 1; (2) c = a-1 and
// (-a)^{(q-1)/2} = 1; (3) c = 1-a, a != -1, k even; (4) c = 1.
bool quadrinomial_pp_sufficient(const SmallField& fq2, std::uint64_t q, SmallField::Elem a,
                                SmallField::Elem c);
std::function<SmallField::Elem(SmallField::Elem)> quadrinomial_pp_map(const SmallField& fq2,
                                                                      std::uint64_t q,
                                                                      SmallField::Elem a,
                                                                      SmallField::Elem c);

// The ratio condition on phi(x) = x^m h(x^{q-1})^{m/d} over F_{q^2}*:
// phi(x)/phi(y) in F_q forces x/y in F_q. Decided per coset of F_q*
// (x and y share a coset iff x^{q-1} = y^{q-1}); a zero value of phi at a
// nonzero point fails the condition outright.
struct SpreadConditionInstance {
    Polynomial h;
    std::uint64_t q = 0;
    std::uint64_t m = 0;  // deg h must divide m
};

struct SpreadConditionResult {
    bool holds = false;
    enum class Reason { ok, zero_value, coset_collision } reason = Reason::ok;
    SmallField::Elem witness_x = 0;  // phi vanishes here, or collides with...
    SmallField::Elem witness_y = 0;  // ...this representative
};

SpreadConditionResult spread_ratio_condition(const SpreadConditionInstance& inst);

}  // namespace flagspace
