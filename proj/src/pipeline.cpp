#include "flagspace/pipeline.hpp"

#include <algorithm>
#include <optional>

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {

struct PipelineRun {
    PipelineReport report;
    bool blocked = false;  // a stage failed; later stages are skipped

    void emit(const char* name, StageStatus status, std::string note = "") {
        report.stages.push_back(StageResult{name, status, std::move(note)});
        if (status == StageStatus::fail) blocked = true;
    }
    void pass(const char* name, std::string note = "") { emit(name, StageStatus::pass, std::move(note)); }
    void check(const char* name, bool ok, std::string fail_note, std::string pass_note = "") {
        if (blocked)
            emit(name, StageStatus::skipped, "earlier stage failed");
        else
            emit(name, ok ? StageStatus::pass : StageStatus::fail, ok ? std::move(pass_note) : std::move(fail_note));
    }
    void skip(const char* name, std::string note) { emit(name, StageStatus::skipped, std::move(note)); }
    void finish() {
        report.ok = std::all_of(report.stages.begin(), report.stages.end(),
                                [](const StageResult& s) { return s.status != StageStatus::fail; });
    }
};

// The chain behind the family-specific construction: h over F_{q^2} of
// degree d, spread condition with m = d, then the geometry tiers.
void run_downstream(PipelineRun& run, const SmallField& fq2, const Polynomial& h, std::uint64_t q,
                    std::uint64_t m, bool criterion_ok, const std::string& criterion_note,
                    const PipelineOptions& opts) {
    run.check("irreducible", is_irreducible(h), "h is reducible over F_{q^2}");

    run.check("pp_criterion", criterion_ok, criterion_note, criterion_note);

    if (run.blocked) {
        run.skip("pp_brute", "earlier stage failed");
    } else {
        PermCheckResult pp = index_form_pp_check(h, q);
        run.check("pp_brute", pp.is_permutation,
                  "x^d h(x^(q-1)) is not a permutation; collision at ranks " + std::to_string(pp.collision_a) +
                      "," + std::to_string(pp.collision_b));
    }

    if (run.blocked) {
        run.skip("condition_one", "earlier stage failed");
    } else {
        SpreadConditionResult cond = spread_ratio_condition({h, q, m});
        run.check("condition_one", cond.holds,
                  "ratio condition fails; witness ranks " + std::to_string(cond.witness_x) + "," +
                      std::to_string(cond.witness_y));
    }

    // Whether the top field is enumerable for the spread tiers.
    bool top_fits = true;
    {
        std::uint64_t top_size = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            if (top_size > opts.max_enumeration / fq2.size()) {
                top_fits = false;
                break;
            }
            top_size *= fq2.size();
        }
    }

    std::shared_ptr<const Tower> tower;
    Tower::TopVec b;
    ScalarSubgroup subgroup;
    SpreadOutcome outcome;

    if (run.blocked) {
        run.skip("spread", "earlier stage failed");
    } else if (!top_fits) {
        run.skip("spread", "top field exceeds the enumeration bound");
    } else {
        tower = Tower::from_top_modulus(fq2, h);
        if (tower->m() == 1) {
            b = tower->embed_middle(tower->middle_field().neg(h.coeff(0)));
        } else {
            b = tower->top_zero();
            b[1] = 1;
        }
        if (!(minimal_polynomial(*tower, b) == Polynomial(tower->middle_field(), h.coeffs())))
            throw InternalError("residue class is not a root of the top modulus");
        subgroup = build_scalar_subgroup(*tower);
        outcome = build_spread(*tower, b, subgroup);
        run.report.metrics["v"] = tower->top_size();
        run.report.metrics["k"] = tower->q2();
        if (outcome.ok()) {
            run.report.metrics["spread_lines"] = outcome.spread->lines.size();
            run.pass("spread", std::to_string(outcome.spread->lines.size()) + " subspaces partition the nonzero vectors");
        } else {
            const SpreadFailure& f = *outcome.failure;
            std::string note =
                f.kind == SpreadFailure::Kind::wrong_orbit_size
                    ? "orbit has " + std::to_string(f.orbit_lines) + " lines, expected " + std::to_string(f.expected_lines)
                    : (f.kind == SpreadFailure::Kind::double_covered ? std::string("element covered twice: rank ")
                                                                     : std::string("element not covered: rank ")) +
                          std::to_string(f.witness_rank);
            run.emit("spread", StageStatus::fail, std::move(note));
        }
    }

    std::optional<LinearSpace> space;
    if (run.blocked || !outcome.ok()) {
        run.skip("design", outcome.failure ? "spread failed" : "spread not computed");
    } else {
        const Tower& t = *tower;
        const std::uint64_t v = t.top_size();
        const std::uint64_t k = t.q2();
        const std::uint64_t projected_lines = outcome.spread->lines.size() * (v / k);
        if (projected_lines <= opts.max_materialized_lines && v <= (std::uint64_t(1) << 20)) {
            space = andre_bruck_bose(t, *outcome.spread, opts.max_materialized_lines);
            DesignMode mode = v <= opts.max_full_design_points ? DesignMode::full : DesignMode::counting;
            DesignReport dr = verify_design(*space, mode);
            run.report.metrics["line_count"] = dr.line_count;
            run.report.metrics["replication"] = dr.replication;
            if (mode == DesignMode::full) run.report.metrics["pairs_checked"] = dr.pairs_checked;
            run.check("design", dr.is_design,
                      "not a 2-design; witness " + std::to_string(dr.witness_a) + "," + std::to_string(dr.witness_b),
                      mode == DesignMode::full ? "full pair verification" : "counting verification");
        } else {
            // counting identities straight from the verified spread: each
            // point lies on exactly one coset of each spread member
            const std::uint64_t line_count = projected_lines;
            const std::uint64_t r = (v - 1) / (k - 1);
            bool ok = line_count * k * (k - 1) == v * (v - 1) && r == outcome.spread->lines.size();
            run.report.metrics["line_count"] = line_count;
            run.report.metrics["replication"] = r;
            run.check("design", ok, "counting identities fail", "structural counting verification");
        }
    }

    if (run.blocked || !space.has_value()) {
        run.skip("flag_transitive", space.has_value() ? "earlier stage failed" : "space not materialized");
    } else if (space->v > opts.max_flag_points) {
        run.skip("flag_transitive", "flag orbit exceeds the point bound");
    } else {
        FlagOrbitReport fr = flag_transitivity_witness(*tower, *space, *outcome.spread, subgroup);
        run.report.metrics["flag_orbit"] = fr.orbit_size;
        run.report.metrics["flag_count"] = fr.flag_count;
        run.check("flag_transitive", fr.complete,
                  "orbit stops at " + std::to_string(fr.orbit_size) + " of " + std::to_string(fr.flag_count) + " flags",
                  "orbit covers all " + std::to_string(fr.flag_count) + " flags");
    }

    if (run.blocked) {
        run.skip("non_desarguesian", "earlier stage failed");
    } else if (outcome.ok()) {
        run.check("non_desarguesian", !is_desarguesian(*tower, *outcome.spread), "spread is Desarguesian",
                  "b lies outside the embedded F_{q^2}");
    } else {
        // no tower enumeration: h is the minimal polynomial of b, so its
        // degree settles membership in F_{q^2}
        run.check("non_desarguesian", h.degree() > 1, "b lies in F_{q^2}", "minimal polynomial of b has degree > 1");
    }

    run.finish();
}

}  // namespace

const StageResult* PipelineReport::stage(const std::string& name) const {
    for (const StageResult& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

PipelineReport run_power_diff_pipeline(std::uint64_t q, std::uint64_t d, std::uint64_t u,
                                       std::uint64_t t, const PipelineOptions& opts) {
    auto pp = nt::prime_power(q);
    if (!pp) throw DomainError("q must be a prime power");
    if (d <= 1 || d % 2 == 0 || (q + 1) % d != 0) throw DomainError("d must be an odd divisor of q+1 with d > 1");
    if (u == 0 || u >= d || d % u != 0) throw DomainError("u must be a proper divisor of d");
    if (t == 0) throw DomainError("t must be positive");
    const std::uint64_t n = nt::checked_pow(d, t, 1u << 16) * u;

    PipelineRun run;
    run.report.family = "power-diff";
    run.report.params = {{"q", q}, {"d", d}, {"u", u}, {"t", t}, {"n", n}};

    SmallField fq2 = make_extension_field(pp->first, 2 * pp->second);
    SmallField::Elem delta = fq2.find_element_of_order(q + 1);

    Polynomial h = build_power_diff_irreducible(fq2, q, d, u, t, delta);
    run.pass("construct", "h = " + to_string(h));

    bool crit = power_diff_pp_criterion(fq2, PowerDiffParams{q, n, 0, delta, delta});
    run_downstream(run, fq2, h, q, n, crit, crit ? "gcd(n^2, q-1) = 1" : "gcd(n^2, q-1) != 1", opts);
    return run.report;
}

PipelineReport run_char3_pipeline(unsigned k, const PipelineOptions& opts) {
    if (k == 0) throw DomainError("k must be positive");
    const std::uint64_t q = nt::checked_pow(3, k, 1u << 8);

    PipelineRun run;
    run.report.family = "char3-cubic";
    run.report.params = {{"k", k}, {"q", q}};

    SmallField fq2 = make_extension_field(3, 2 * k);

    // least a in F_q^* with Tr_{q/3}(a^{-1}) != 0
    SmallField::Elem a = 0;
    for (SmallField::Elem cand = 1; cand < fq2.size(); ++cand) {
        if (!fq2.in_subfield(cand, q)) continue;
        SmallField::Elem c = fq2.inv(cand), tr = 0;
        for (unsigned i = 0; i < k; ++i) {
            tr = fq2.add(tr, c);
            c = fq2.frobenius(c);
        }
        if (tr != 0) {
            a = cand;
            break;
        }
    }
    if (a == 0) throw InternalError("no a with nonzero trace of a^{-1} exists");
    run.report.params["a"] = a;

    Polynomial h = build_char3_cubic(fq2, q, a);
    run.pass("construct", "h = " + to_string(h));

    bool crit = quadrinomial_pp_sufficient(fq2, q, fq2.neg(a), 1);
    run_downstream(run, fq2, h, q, 3, crit, crit ? "quadrinomial condition c = 1" : "no sufficient condition holds",
                   opts);
    return run.report;
}

PipelineReport run_geometric_pipeline(std::uint64_t p, const PipelineOptions& opts) {
    if (!nt::is_prime(p) || p == 2) throw DomainError("p must be an odd prime");

    PipelineRun run;
    run.report.family = "geometric";
    run.report.params = {{"p", p}};

    SmallField fp2 = make_extension_field(p, 2);

    Polynomial h = build_pauley_bamberg(fp2);
    run.pass("construct", "h = " + to_string(h));

    bool crit = nt::gcd(p, p - 1) == 1;
    run_downstream(run, fp2, h, p, p, crit, crit ? "gcd(p, p-1) = 1" : "gcd(p, p-1) != 1", opts);
    return run.report;
}

}  // namespace flagspace
