#include "flagspace/perm_check.hpp"

#include <vector>

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {
constexpr std::uint64_t kMaxBruteSize = std::uint64_t(1) << 24;

void check_fq2(const SmallField& fld, std::uint64_t q) {
    if ((std::uint64_t)fld.size() != q * q) throw DomainError("field is not F_{q^2} for the given q");
}
}  // namespace

PermCheckResult is_permutation_brute(const SmallField& f,
                                     const std::function<SmallField::Elem(SmallField::Elem)>& fn) {
    if (f.size() > kMaxBruteSize) throw ResourceError("field too large for the exhaustive permutation test");
    std::vector<SmallField::Elem> preimage(f.size(), UINT32_MAX);
    for (SmallField::Elem x = 0; x < f.size(); ++x) {
        SmallField::Elem y = fn(x);
        if (y >= f.size()) throw InternalError("map left the field");
        if (preimage[y] != UINT32_MAX) return {false, preimage[y], x};
        preimage[y] = x;
    }
    return {true, 0, 0};
}

PermCheckResult is_permutation_brute(const Polynomial& f) {
    return is_permutation_brute(f.field(), [&f](SmallField::Elem x) { return f.eval(x); });
}

SmallField::Elem index_form_eval(const SmallField& fq2, const Polynomial& h, std::uint64_t r,
                                 std::uint64_t q, SmallField::Elem x) {
    if (x == 0) return 0;  // r >= 1
    return fq2.mul(fq2.pow(x, r), h.eval(fq2.pow(x, q - 1)));
}

PermCheckResult index_form_brute(const Polynomial& h, std::uint64_t r, std::uint64_t q) {
    const SmallField& fq2 = h.field();
    check_fq2(fq2, q);
    if (r == 0) throw DomainError("index form requires r >= 1");
    return is_permutation_brute(fq2, [&](SmallField::Elem x) { return index_form_eval(fq2, h, r, q, x); });
}

PermCheckResult index_form_pp_check(const Polynomial& h, std::uint64_t q) {
    if (h.degree() < 1) throw DomainError("h must be nonconstant");
    const std::uint64_t d = (std::uint64_t)h.degree();
    if (nt::gcd(d, q - 1) != 1) throw DomainError("requires gcd(deg h, q-1) = 1");
    PermCheckResult res = index_form_brute(h, d, q);
    if (res.is_permutation && self_check()) {
        SpreadConditionResult cond = spread_ratio_condition({h, q, d});
        if (!cond.holds) throw InternalError("permutation established but the ratio condition fails");
    }
    return res;
}

bool power_diff_pp_criterion(const SmallField& fq2, const PowerDiffParams& p) {
    check_fq2(fq2, p.q);
    if (p.d == 0) throw DomainError("d must be positive");
    if (fq2.pow(p.beta, p.q + 1) != 1) throw DomainError("beta^(q+1) must be 1");
    if (fq2.in_subfield(p.delta, p.q)) throw DomainError("delta must lie outside F_q");
    return nt::gcd(p.d * (p.d + 2 * p.k), p.q - 1) == 1;
}

std::function<SmallField::Elem(SmallField::Elem)> power_diff_pp_map(const SmallField& fq2,
                                                                    const PowerDiffParams& p) {
    check_fq2(fq2, p.q);
    if (p.d == 0) throw DomainError("d must be positive");
    if (fq2.pow(p.beta, p.q + 1) != 1) throw DomainError("beta^(q+1) must be 1");
    if (fq2.in_subfield(p.delta, p.q)) throw DomainError("delta must lie outside F_q");
    const std::uint64_t r = p.d + p.k * (p.q + 1);
    const SmallField::Elem beta_delta_q = fq2.mul(p.beta, fq2.pow(p.delta, p.q));
    return [&fq2, p, r, beta_delta_q](SmallField::Elem x) -> SmallField::Elem {
        if (x == 0) return 0;
        const SmallField::Elem s = fq2.pow(x, p.q - 1);
        const SmallField::Elem lhs = fq2.pow(fq2.sub(fq2.mul(p.delta, s), beta_delta_q), p.d);
        const SmallField::Elem rhs = fq2.mul(p.delta, fq2.pow(fq2.sub(s, p.beta), p.d));
        return fq2.mul(fq2.pow(x, r), fq2.sub(lhs, rhs));
    };
}

bool quadrinomial_pp_sufficient(const SmallField& fq2, std::uint64_t q, SmallField::Elem a,
                                SmallField::Elem c) {
    if (fq2.p() != 3) throw DomainError("quadrinomial family requires characteristic 3");
    check_fq2(fq2, q);
    if (a == 0 || c == 0) throw DomainError("a and c must be nonzero");
    if (!fq2.in_subfield(a, q) || !fq2.in_subfield(c, q)) throw DomainError("a and c must lie in F_q");
    unsigned k = 0;
    for (std::uint64_t v = q; v > 1; v /= 3) ++k;
    const SmallField::Elem minus_one = fq2.neg(1);
    const std::uint64_t half = (q - 1) / 2;
    if (c == a && a != minus_one && fq2.pow(a, half) == 1) return true;
    if (c == fq2.sub(a, 1) && fq2.pow(fq2.neg(a), half) == 1) return true;
    if (c == fq2.sub(1, a) && a != minus_one && k % 2 == 0) return true;
    if (c == 1) return true;
    return false;
}

std::function<SmallField::Elem(SmallField::Elem)> quadrinomial_pp_map(const SmallField& fq2,
                                                                      std::uint64_t q,
                                                                      SmallField::Elem a,
                                                                      SmallField::Elem c) {
    check_fq2(fq2, q);
    return [&fq2, q, a, c](SmallField::Elem x) -> SmallField::Elem {
        const SmallField::Elem x3 = fq2.pow(x, 3);
        SmallField::Elem v = fq2.add(x3, fq2.mul(a, fq2.pow(x, q + 2)));
        v = fq2.sub(v, fq2.mul(a, fq2.pow(x, 2 * q + 1)));
        return fq2.add(v, fq2.mul(c, fq2.pow(x, 3 * q)));
    };
}

SpreadConditionResult spread_ratio_condition(const SpreadConditionInstance& inst) {
    const SmallField& fq2 = inst.h.field();
    const std::uint64_t q = inst.q;
    check_fq2(fq2, q);
    if (inst.h.degree() < 1) throw DomainError("h must be nonconstant");
    const std::uint64_t d = (std::uint64_t)inst.h.degree();
    if (inst.m == 0 || inst.m % d != 0) throw DomainError("deg h must divide m");
    const std::uint64_t power = inst.m / d;

    // One representative per coset of F_q^*: x, y share a coset iff
    // x^{q-1} = y^{q-1}, giving q+1 classes keyed by that power.
    std::vector<SmallField::Elem> rep(fq2.size(), 0);
    std::vector<bool> have(fq2.size(), false);
    std::vector<SmallField::Elem> reps;
    reps.reserve((std::size_t)q + 1);
    for (SmallField::Elem x = 1; x < fq2.size(); ++x) {
        SmallField::Elem key = fq2.pow(x, q - 1);
        if (!have[key]) {
            have[key] = true;
            rep[key] = x;
            reps.push_back(x);
        }
    }
    if (reps.size() != q + 1) throw InternalError("coset enumeration did not find q+1 classes");

    SpreadConditionResult res;
    std::vector<bool> used(fq2.size(), false);
    std::vector<SmallField::Elem> value_key_owner(fq2.size(), 0);
    SmallField::Elem first_nonzero_rep = 0;
    bool saw_zero = false;
    SmallField::Elem zero_witness = 0;
    for (SmallField::Elem x : reps) {
        const SmallField::Elem hx = inst.h.eval(fq2.pow(x, q - 1));
        const SmallField::Elem phi = fq2.mul(fq2.pow(x, inst.m), fq2.pow(hx, power));
        if (phi == 0) {
            if (!saw_zero) {
                saw_zero = true;
                zero_witness = x;
            }
            continue;
        }
        if (first_nonzero_rep == 0) first_nonzero_rep = x;
        const SmallField::Elem key = fq2.pow(phi, q - 1);  // F_q^*-class of the value
        if (used[key]) {
            res.holds = false;
            res.reason = SpreadConditionResult::Reason::coset_collision;
            res.witness_x = x;
            res.witness_y = value_key_owner[key];
            return res;
        }
        used[key] = true;
        value_key_owner[key] = x;
    }
    if (saw_zero) {
        res.holds = false;
        res.reason = SpreadConditionResult::Reason::zero_value;
        res.witness_x = zero_witness;
        res.witness_y = first_nonzero_rep;  // phi(x)/phi(y) = 0 lies in F_q while x/y does not
        return res;
    }
    res.holds = true;
    return res;
}

}  // namespace flagspace
