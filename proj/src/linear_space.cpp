#include "flagspace/linear_space.hpp"

#include <algorithm>
#include <unordered_map>

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {

constexpr std::uint64_t kMaxPoints = std::uint64_t(1) << 20;
constexpr std::uint64_t kMaxFullDesignPoints = std::uint64_t(1) << 10;
constexpr std::uint64_t kMaxFlagPoints = std::uint64_t(1) << 12;

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

}  // namespace

LinearSpace andre_bruck_bose(const Tower& t, const Spread& s, std::uint64_t max_lines) {
    const std::uint64_t v = t.top_size();
    if (v > kMaxPoints) throw ResourceError("linear space materialization exceeds the point bound");
    const std::uint64_t k = t.q2();
    const std::uint64_t cosets_per_member = v / k;
    const std::uint64_t line_count = s.lines.size() * cosets_per_member;
    if (line_count > max_lines) throw ResourceError("linear space materialization exceeds the line bound");

    LinearSpace ls;
    ls.v = v;
    ls.k = (std::uint32_t)k;
    ls.line_count = line_count;
    ls.points.reserve((std::size_t)(line_count * k));

    std::vector<bool> seen((std::size_t)v);
    std::vector<std::uint32_t> coset((std::size_t)k);
    for (const LineSet& member : s.lines) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint64_t w = 0; w < v; ++w) {
            if (seen[w]) continue;
            for (std::size_t i = 0; i < k; ++i) {
                coset[i] = (std::uint32_t)t.rank_add(member.ranks[i], w);
                seen[coset[i]] = true;
            }
            std::sort(coset.begin(), coset.end());
            ls.points.insert(ls.points.end(), coset.begin(), coset.end());
        }
    }
    if (ls.points.size() != line_count * k) throw InternalError("coset enumeration produced the wrong line count");
    return ls;
}

DesignReport verify_design(const LinearSpace& ls, DesignMode mode) {
    DesignReport rep;
    rep.v = ls.v;
    rep.k = ls.k;
    rep.line_count = ls.line_count;
    rep.mode = mode;
    if (ls.k < 2 || ls.v < 2) throw DomainError("degenerate incidence structure");
    const std::uint64_t v = ls.v, k = ls.k;

    if ((v - 1) % (k - 1) != 0) {
        rep.is_design = false;
        return rep;
    }
    rep.replication = (v - 1) / (k - 1);

    if (mode == DesignMode::full) {
        if (v > kMaxFullDesignPoints) throw ResourceError("full pair verification exceeds the point bound");
        std::vector<std::uint8_t> cover((std::size_t)(v * v), 0);
        for (std::uint64_t li = 0; li < ls.line_count; ++li) {
            auto line = ls.line(li);
            for (std::size_t i = 0; i < line.size(); ++i)
                for (std::size_t j = i + 1; j < line.size(); ++j) {
                    std::uint8_t& c = cover[(std::size_t)line[i] * v + line[j]];
                    if (++c > 1) {
                        rep.is_design = false;
                        rep.has_witness = true;
                        rep.witness_a = line[i];
                        rep.witness_b = line[j];
                        rep.witness_count = c;
                        return rep;
                    }
                }
        }
        for (std::uint64_t a = 0; a < v; ++a)
            for (std::uint64_t b = a + 1; b < v; ++b) {
                ++rep.pairs_checked;
                if (cover[(std::size_t)a * v + b] != 1) {
                    rep.is_design = false;
                    rep.has_witness = true;
                    rep.witness_a = a;
                    rep.witness_b = b;
                    rep.witness_count = cover[(std::size_t)a * v + b];
                    return rep;
                }
            }
        rep.is_design = true;
        return rep;
    }

    // counting mode
    if (ls.line_count * k * (k - 1) != v * (v - 1)) {
        rep.is_design = false;
        return rep;
    }
    std::vector<std::uint32_t> through((std::size_t)v, 0);
    for (std::uint32_t pt : ls.points) ++through[pt];
    for (std::uint64_t pt = 0; pt < v; ++pt)
        if (through[pt] != rep.replication) {
            rep.is_design = false;
            rep.has_witness = true;
            rep.witness_a = pt;
            rep.witness_count = through[pt];
            return rep;
        }
    rep.is_design = true;
    return rep;
}

FlagOrbitReport flag_transitivity_witness(const Tower& t, const LinearSpace& ls, const Spread& s,
                                          const ScalarSubgroup& c) {
    if (ls.v > kMaxFlagPoints) throw ResourceError("flag orbit computation exceeds the point bound");
    const std::uint64_t v = ls.v, k = ls.k;

    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, RankVecHash> line_id;
    line_id.reserve(ls.line_count * 2);
    for (std::uint64_t li = 0; li < ls.line_count; ++li) {
        auto line = ls.line(li);
        line_id.emplace(std::vector<std::uint32_t>(line.begin(), line.end()), (std::uint32_t)li);
    }

    // generators: translations by the F_p-basis, one scalar multiplication
    std::vector<std::uint64_t> translations;
    for (unsigned i = 0; i < t.m(); ++i) {
        std::uint64_t base = 1;
        for (unsigned d = 0; d < t.middle_field().degree(); ++d) {
            translations.push_back(base * nt::checked_pow(t.q2(), i, v));
            base *= t.p();
        }
    }
    std::vector<std::uint32_t> scale_map((std::size_t)v);
    for (std::uint64_t r = 0; r < v; ++r)
        scale_map[r] = (std::uint32_t)t.top_rank(t.top_mul(t.top_unrank(r), c.generator));

    const LineSet base_line = build_base_line(t, s.b);
    auto find_line = [&](const std::vector<std::uint32_t>& key) {
        auto it = line_id.find(key);
        if (it == line_id.end()) throw InternalError("image of a line is not a line of the space");
        return it->second;
    };
    const std::uint32_t base_id = find_line(base_line.ranks);

    std::vector<bool> visited((std::size_t)(ls.line_count * k), false);
    auto flag_index = [&](std::uint32_t li, std::uint32_t pt) {
        auto line = ls.line(li);
        auto pos = std::lower_bound(line.begin(), line.end(), pt);
        if (pos == line.end() || *pos != pt) throw InternalError("flag point is not on its line");
        return (std::size_t)li * k + (std::size_t)(pos - line.begin());
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{base_id, 0}};
    visited[flag_index(base_id, 0)] = true;
    std::uint64_t orbit = 1;
    std::vector<std::uint32_t> image((std::size_t)k);
    while (!queue.empty()) {
        auto [li, pt] = queue.back();
        queue.pop_back();
        auto line = ls.line(li);
        auto push = [&](std::uint32_t nli, std::uint32_t npt) {
            std::size_t idx = flag_index(nli, npt);
            if (!visited[idx]) {
                visited[idx] = true;
                ++orbit;
                queue.emplace_back(nli, npt);
            }
        };
        for (std::uint64_t e : translations) {
            for (std::size_t i = 0; i < k; ++i) image[i] = (std::uint32_t)t.rank_add(line[i], e);
            std::sort(image.begin(), image.end());
            push(find_line(image), (std::uint32_t)t.rank_add(pt, e));
        }
        for (std::size_t i = 0; i < k; ++i) image[i] = scale_map[line[i]];
        std::sort(image.begin(), image.end());
        push(find_line(image), scale_map[pt]);
    }

    FlagOrbitReport rep;
    rep.orbit_size = orbit;
    rep.flag_count = ls.line_count * k;
    rep.complete = rep.orbit_size == rep.flag_count;
    return rep;
}

bool inflation_criterion(std::uint64_t d, std::uint64_t m, std::uint64_t m_prime, std::uint64_t q) {
    if (d == 0 || m == 0 || m_prime == 0 || q < 2) throw DomainError("inflation criterion needs positive parameters");
    return m % d == 0 && nt::gcd(m_prime, q + 1) == 1;
}

bool kantor_type4_parameter_clash(std::uint64_t q, std::uint64_t n) {
    if (q < 2 || n < 2) throw DomainError("clash predicate needs q >= 2, n >= 2");
    return (q - 1) % n == 0;
}

}  // namespace flagspace
