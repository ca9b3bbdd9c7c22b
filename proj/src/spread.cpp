#include "flagspace/spread.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagspace/errors.hpp"

namespace flagspace {

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t(1) << 24;
constexpr std::uint64_t kSubspaceCheckBudget = std::uint64_t(1) << 27;

struct RankVecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return (std::size_t)h;
    }
};

std::vector<SmallField::Elem> embedded_fq_elements(const Tower& t) {
    std::vector<SmallField::Elem> fq;
    fq.reserve((std::size_t)t.q());
    for (SmallField::Elem x = 0; x < t.q2(); ++x)
        if (t.middle_field().in_subfield(x, t.q())) fq.push_back(x);
    return fq;
}

}  // namespace

LineSet build_base_line(const Tower& t, const Tower::TopVec& b) {
    if (b.size() != t.m()) throw StructuralError("b has the wrong coefficient length");
    if (t.top_size() - 1 > std::uint64_t(UINT32_MAX)) throw ResourceError("top field too large for rank storage");
    if (t.top_pow(b, t.q() + 1) == t.top_one()) throw DomainError("b^(q+1) = 1: the base line degenerates");

    LineSet line;
    line.ranks.reserve((std::size_t)t.q2());
    for (SmallField::Elem x = 0; x < t.q2(); ++x) {
        Tower::TopVec v = t.top_sub(t.embed_middle(x), t.top_mul(b, t.embed_middle(t.middle_frobenius_q(x))));
        line.ranks.push_back((std::uint32_t)t.top_rank(v));
    }
    std::sort(line.ranks.begin(), line.ranks.end());
    if (std::adjacent_find(line.ranks.begin(), line.ranks.end()) != line.ranks.end())
        throw InternalError("x - b x^q is not injective although b^(q+1) != 1");
    if (!line_is_subspace(t, line)) throw InternalError("base line is not an F_q-subspace");
    return line;
}

bool line_is_subspace(const Tower& t, const LineSet& line) {
    const auto& r = line.ranks;
    auto contains = [&](std::uint64_t x) { return std::binary_search(r.begin(), r.end(), (std::uint32_t)x); };
    if (r.empty() || r[0] != 0) return false;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i; j < r.size(); ++j)
            if (!contains(t.rank_add(r[i], r[j]))) return false;
    for (SmallField::Elem c : embedded_fq_elements(t))
        for (std::uint32_t x : r)
            if (!contains(t.rank_scale_middle(x, c))) return false;
    return true;
}

ScalarSubgroup build_scalar_subgroup(const Tower& t) {
    ScalarSubgroup c;
    c.order = (t.top_size() - 1) / (t.q() + 1);
    c.generator = t.top_pow(t.top_primitive(), t.q() + 1);
    if (t.top_element_order(c.generator) != c.order)
        throw InternalError("scalar subgroup generator has the wrong order");
    return c;
}

SpreadOutcome build_spread(const Tower& t, const Tower::TopVec& b, const ScalarSubgroup& c) {
    if (t.top_size() > kMaxEnumeration) throw ResourceError("spread verification exceeds the enumeration bound");
    const LineSet base = build_base_line(t, b);
    const std::uint64_t q2 = t.q2();
    const std::uint64_t expected = (t.top_size() - 1) / (q2 - 1);

    // orbit of the base line under successive powers of the generator
    std::vector<Tower::TopVec> cur;
    cur.reserve((std::size_t)q2);
    for (std::uint32_t rk : base.ranks) cur.push_back(t.top_unrank(rk));

    std::unordered_set<std::vector<std::uint32_t>, RankVecHash> seen;
    std::vector<LineSet> lines;
    std::vector<std::uint32_t> ranks((std::size_t)q2);
    for (std::uint64_t step = 0; step < c.order; ++step) {
        for (std::size_t i = 0; i < cur.size(); ++i) ranks[i] = (std::uint32_t)t.top_rank(cur[i]);
        std::sort(ranks.begin(), ranks.end());
        if (seen.insert(ranks).second) lines.push_back(LineSet{ranks});
        if (step + 1 < c.order)
            for (auto& v : cur) t.top_mul_into(v.data(), c.generator.data(), v.data());
    }

    SpreadOutcome out;
    if (lines.size() != expected) {
        out.failure = SpreadFailure{SpreadFailure::Kind::wrong_orbit_size, 0, lines.size(), expected};
        return out;
    }

    // coverage: every nonzero element on exactly one line
    std::vector<std::uint8_t> count((std::size_t)t.top_size(), 0);
    for (const LineSet& line : lines)
        for (std::uint32_t rk : line.ranks) {
            if (rk == 0) continue;
            if (++count[rk] > 1) {
                out.failure = SpreadFailure{SpreadFailure::Kind::double_covered, rk, lines.size(), expected};
                return out;
            }
        }
    for (std::uint64_t rk = 1; rk < t.top_size(); ++rk)
        if (count[rk] == 0) {
            out.failure = SpreadFailure{SpreadFailure::Kind::not_covered, rk, lines.size(), expected};
            return out;
        }

    // each orbit image is again a subspace; tiered by cost
    if (lines.size() * q2 * q2 <= kSubspaceCheckBudget)
        for (const LineSet& line : lines)
            if (!line_is_subspace(t, line)) throw InternalError("orbit image is not an F_q-subspace");

    std::sort(lines.begin(), lines.end(), [](const LineSet& a, const LineSet& b2) { return a.ranks < b2.ranks; });
    out.spread = Spread{b, std::move(lines)};
    return out;
}

bool is_desarguesian(const Tower& t, const Spread& s) { return t.top_pow(s.b, t.q2()) == s.b; }

std::uint64_t line_stabilizer_order(const Tower& t, const Spread& s, const ScalarSubgroup& c) {
    const LineSet base = build_base_line(t, s.b);
    std::vector<Tower::TopVec> cur;
    for (std::uint32_t rk : base.ranks) cur.push_back(t.top_unrank(rk));
    std::vector<std::uint32_t> ranks(base.ranks.size());
    std::uint64_t stab = 0;
    for (std::uint64_t step = 0; step < c.order; ++step) {
        for (std::size_t i = 0; i < cur.size(); ++i) ranks[i] = (std::uint32_t)t.top_rank(cur[i]);
        std::sort(ranks.begin(), ranks.end());
        if (ranks == base.ranks) ++stab;
        if (step + 1 < c.order)
            for (auto& v : cur) t.top_mul_into(v.data(), c.generator.data(), v.data());
    }
    return stab;
}

SpreadBundle spread_from_polynomial(const SmallField& fq2, const Polynomial& h) {
    SpreadBundle bundle;
    bundle.tower = Tower::from_top_modulus(fq2, h);  // DomainError if h is reducible
    const Tower& t = *bundle.tower;

    Tower::TopVec b;
    if (t.m() == 1) {
        b = t.embed_middle(t.middle_field().neg(h.coeff(0)));
    } else {
        b = t.top_zero();
        b[1] = 1;
    }
    Polynomial minpoly = minimal_polynomial(t, b);
    if (!(minpoly == Polynomial(t.middle_field(), h.coeffs())))
        throw InternalError("residue class is not a root of the top modulus");

    bundle.subgroup = build_scalar_subgroup(t);
    bundle.outcome = build_spread(t, b, bundle.subgroup);
    return bundle;
}

}  // namespace flagspace
