// Batch front end: constructs the linear-space families, runs the
// permutation and spread-condition checks, and sweeps the arithmetic
// identities. All output is UTF-8; JSON documents carry schema
// "flagspace/1". Exit codes: 0 all checks true, 1 a check came back
// false (witness in the output), 2 usage error, 3 resource bound.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "flagspace/errors.hpp"
#include "flagspace/json_io.hpp"
#include "flagspace/nt.hpp"
#include "flagspace/pipeline.hpp"

using namespace flagspace;
using nlohmann::json;

namespace {

struct OutputSink {
    std::string format = "text";
    std::string path;

    void emit(const json& doc, const std::string& text) const {
        std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(path);
            if (!out) throw DomainError("cannot open output file: " + path);
            out << payload;
        }
    }
};

// Coefficient grammar: "c0,c1,..." are base-field integers; with
// semicolons, "a0,a1;b0,b1;..." each group is one F_{q^2} coefficient as
// ascending F_p digits.
std::vector<SmallField::Elem> parse_digit_group(const std::string& s) {
    std::vector<SmallField::Elem> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw DomainError("empty coefficient in '" + s + "'");
        out.push_back((SmallField::Elem)std::stoul(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Polynomial parse_polynomial(const SmallField& fq2, const std::string& s) {
    std::vector<SmallField::Elem> coeffs;
    if (s.find(';') == std::string::npos) {
        for (SmallField::Elem c : parse_digit_group(s)) {
            if (c >= fq2.p()) throw DomainError("prime-field coefficient out of range");
            coeffs.push_back(c);
        }
    } else {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(';', pos);
            std::string group = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            coeffs.push_back(fq2.from_coeffs(parse_digit_group(group)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return Polynomial(fq2, std::move(coeffs));
}

SmallField middle_field_for(std::uint64_t q) {
    auto pp = nt::prime_power(q);
    if (!pp) throw DomainError("q must be a prime power");
    return make_extension_field(pp->first, 2 * pp->second);
}

// an element of F_q given by its digits over F_p, mapped into F_{q^2}
SmallField::Elem parse_subfield_element(const SmallField& fq2, std::uint64_t q, const std::string& s) {
    auto pp = nt::prime_power(q);
    SmallField fq = make_extension_field(pp->first, pp->second);
    SmallField::Elem raw = fq.from_coeffs(parse_digit_group(s));
    return find_subfield_embedding(fq, fq2)[raw];
}

const char* status_str(StageStatus s) {
    return s == StageStatus::pass ? "pass" : s == StageStatus::fail ? "fail" : "skipped";
}

std::string report_text(const PipelineReport& rep) {
    std::string out = "family: " + rep.family + "\nparams:";
    for (auto& [k, v] : rep.params) out += " " + k + "=" + std::to_string(v);
    out += "\n";
    for (const StageResult& s : rep.stages) {
        out += "  " + s.name + std::string(18 - std::min<std::size_t>(18, s.name.size()), ' ') + status_str(s.status);
        if (!s.note.empty()) out += "   " + s.note;
        out += "\n";
    }
    out += "metrics:";
    for (auto& [k, v] : rep.metrics) out += " " + k + "=" + std::to_string(v);
    out += "\nresult: " + std::string(rep.ok ? "ok" : "FAILED") + "\n";
    return out;
}

int run_construct(const std::string& family, std::uint64_t q, std::uint64_t d, std::uint64_t u,
                  std::uint64_t t, unsigned k, std::uint64_t p, const PipelineOptions& opts,
                  const OutputSink& sink) {
    PipelineReport rep;
    if (family == "power-diff")
        rep = run_power_diff_pipeline(q, d, u, t, opts);
    else if (family == "char3-cubic")
        rep = run_char3_pipeline(k, opts);
    else if (family == "geometric")
        rep = run_geometric_pipeline(p, opts);
    else
        throw DomainError("unknown family: " + family);
    sink.emit(report_to_json(rep), report_text(rep));
    return rep.ok ? 0 : 1;
}

int run_check_pp(const std::string& family, std::uint64_t q, std::uint64_t d, std::uint64_t k,
                 const std::string& a_str, const std::string& c_str, std::uint64_t p,
                 const std::string& h_str, std::uint64_t r, const OutputSink& sink) {
    json doc{{"schema", kSchema}, {"command", "check-pp"}};
    std::string text;
    bool result = false;

    if (family == "power-diff") {
        SmallField fq2 = middle_field_for(q);
        SmallField::Elem delta = fq2.find_element_of_order(q + 1);
        PowerDiffParams params{q, d, k, delta, delta};
        bool criterion = power_diff_pp_criterion(fq2, params);
        PermCheckResult brute = is_permutation_brute(fq2, power_diff_pp_map(fq2, params));
        if (criterion != brute.is_permutation) throw InternalError("criterion disagrees with brute force");
        result = criterion;
        doc["params"] = {{"q", q}, {"d", d}, {"k", k}};
        doc["criterion"] = criterion;
        doc["brute_force"] = brute.is_permutation;
        text = "power-diff q=" + std::to_string(q) + " d=" + std::to_string(d) + " k=" + std::to_string(k) +
               ": criterion " + (criterion ? "true" : "false") + ", brute force agrees\n";
    } else if (family == "quadrinomial") {
        SmallField fq2 = middle_field_for(q);
        SmallField::Elem a = parse_subfield_element(fq2, q, a_str);
        SmallField::Elem c = parse_subfield_element(fq2, q, c_str);
        bool sufficient = quadrinomial_pp_sufficient(fq2, q, a, c);
        PermCheckResult brute = is_permutation_brute(fq2, quadrinomial_pp_map(fq2, q, a, c));
        if (sufficient && !brute.is_permutation) throw InternalError("sufficient condition contradicted");
        result = brute.is_permutation;
        doc["params"] = {{"q", q}, {"a", a}, {"c", c}};
        doc["sufficient_condition"] = sufficient;
        doc["brute_force"] = brute.is_permutation;
        if (!brute.is_permutation) doc["witness"] = {{"x1", brute.collision_a}, {"x2", brute.collision_b}};
        text = "quadrinomial q=" + std::to_string(q) + ": " + (result ? "permutation" : "not a permutation") +
               (sufficient ? " (sufficient condition holds)" : " (no sufficient condition)") + "\n";
    } else if (family == "geometric") {
        SmallField fp2 = middle_field_for(p);
        Polynomial h = build_pauley_bamberg(fp2);
        PermCheckResult brute = index_form_brute(h, p, p);
        result = brute.is_permutation;
        doc["params"] = {{"p", p}};
        doc["brute_force"] = result;
        text = "geometric p=" + std::to_string(p) + ": x^p h(x^(p-1)) " +
               (result ? "permutes" : "does not permute") + "\n";
    } else if (family.empty()) {
        if (h_str.empty()) throw DomainError("check-pp needs --family or --h");
        SmallField fq2 = middle_field_for(q);
        Polynomial h = parse_polynomial(fq2, h_str);
        if (h.degree() < 1) throw DomainError("h must be nonconstant");
        std::uint64_t rr = r == 0 ? (std::uint64_t)h.degree() : r;
        PermCheckResult brute = index_form_brute(h, rr, q);
        result = brute.is_permutation;
        doc["params"] = {{"q", q}, {"r", rr}, {"h", h_str}};
        doc["brute_force"] = result;
        if (!result) doc["witness"] = {{"x1", brute.collision_a}, {"x2", brute.collision_b}};
        text = "x^" + std::to_string(rr) + " h(x^(q-1)) over F_" + std::to_string(q * q) + ": " +
               (result ? "permutation" : "not a permutation") + "\n";
    } else {
        throw DomainError("unknown family: " + family);
    }
    doc["result"] = result;
    sink.emit(doc, text);
    return result ? 0 : 1;
}

int run_check_condition(const std::string& family, std::uint64_t q, const std::string& h_str,
                        std::uint64_t m, std::uint64_t p, const OutputSink& sink) {
    SmallField fq2 = family == "geometric" ? middle_field_for(p) : middle_field_for(q);
    Polynomial h = family == "geometric" ? build_pauley_bamberg(fq2) : parse_polynomial(fq2, h_str);
    std::uint64_t qq = family == "geometric" ? p : q;
    std::uint64_t mm = m == 0 ? (std::uint64_t)h.degree() : m;
    SpreadConditionResult res = spread_ratio_condition({h, qq, mm});

    json doc{{"schema", kSchema},
             {"command", "check-condition"},
             {"params", {{"q", qq}, {"m", mm}, {"h", to_string(h)}}},
             {"result", res.holds}};
    std::string text = "condition for h = " + to_string(h) + ", m = " + std::to_string(mm) + ": " +
                       (res.holds ? "holds" : "fails") + "\n";
    if (!res.holds) {
        const char* reason =
            res.reason == SpreadConditionResult::Reason::zero_value ? "zero_value" : "coset_collision";
        doc["witness"] = {{"reason", reason}, {"x", res.witness_x}, {"y", res.witness_y}};
        text += "  witness: " + std::string(reason) + " at coset representatives x=" +
                std::to_string(res.witness_x) + " y=" + std::to_string(res.witness_y) + "\n";
    }
    sink.emit(doc, text);
    return res.holds ? 0 : 1;
}

int run_sweep(const std::string& family, std::uint64_t qmax, std::uint64_t tmax, std::uint64_t q,
              std::uint64_t dmax, std::uint64_t kmax, const OutputSink& sink) {
    json counterexamples = json::array();
    std::uint64_t instances = 0;

    if (family == "gcd-order") {
        for (std::uint64_t qq = 2; qq <= qmax; ++qq) {
            if (!nt::prime_power(qq)) continue;
            for (std::uint64_t d = 3; d <= qq + 1; d += 2) {
                if ((qq + 1) % d != 0) continue;
                for (std::uint64_t t = 1; t <= tmax; ++t) {
                    std::uint64_t dt = 1;
                    for (std::uint64_t i = 0; i < t; ++i) dt *= d;
                    for (std::uint64_t i = 2; i <= 2 * dt; i += 2) {
                        ++instances;
                        if (!nt::verify_gcd_identity({qq, d, t, i}))
                            counterexamples.push_back({{"q", qq}, {"d", d}, {"t", t}, {"i", i}, {"check", "gcd"}});
                    }
                    ++instances;
                    if (!nt::verify_order_claim(qq, d, t))
                        counterexamples.push_back({{"q", qq}, {"d", d}, {"t", t}, {"check", "order"}});
                }
            }
        }
    } else if (family == "power-diff") {
        for (std::uint64_t qq = 2; qq <= qmax; ++qq) {
            if (!nt::prime_power(qq)) continue;
            SmallField fq2 = middle_field_for(qq);
            std::vector<SmallField::Elem> betas, deltas;
            for (SmallField::Elem b = 1; b < fq2.size(); ++b)
                if (fq2.pow(b, qq + 1) == 1) betas.push_back(b);
            for (SmallField::Elem dd = 0; dd < fq2.size(); ++dd)
                if (!fq2.in_subfield(dd, qq)) deltas.push_back(dd);
            for (std::uint64_t d = 1; d <= dmax; ++d)
                for (std::uint64_t k = 0; k <= kmax; ++k)
                    for (SmallField::Elem beta : betas)
                        for (SmallField::Elem delta : deltas) {
                            ++instances;
                            PowerDiffParams params{qq, d, k, beta, delta};
                            bool criterion = power_diff_pp_criterion(fq2, params);
                            bool brute = is_permutation_brute(fq2, power_diff_pp_map(fq2, params)).is_permutation;
                            if (criterion != brute)
                                counterexamples.push_back(
                                    {{"q", qq}, {"d", d}, {"k", k}, {"beta", beta}, {"delta", delta}});
                        }
        }
    } else if (family == "quadrinomial") {
        SmallField fq2 = middle_field_for(q);
        for (SmallField::Elem a = 1; a < fq2.size(); ++a) {
            if (!fq2.in_subfield(a, q)) continue;
            for (SmallField::Elem c = 1; c < fq2.size(); ++c) {
                if (!fq2.in_subfield(c, q)) continue;
                ++instances;
                if (!quadrinomial_pp_sufficient(fq2, q, a, c)) continue;
                if (!is_permutation_brute(fq2, quadrinomial_pp_map(fq2, q, a, c)).is_permutation)
                    counterexamples.push_back({{"q", q}, {"a", a}, {"c", c}});
            }
        }
    } else {
        throw DomainError("unknown sweep family: " + family);
    }

    json doc{{"schema", kSchema},
             {"command", "sweep"},
             {"family", family},
             {"instances", instances},
             {"failures", counterexamples.size()},
             {"counterexamples", counterexamples}};
    std::string text = "sweep " + family + ": " + std::to_string(instances) + " instances, " +
                       std::to_string(counterexamples.size()) + " failures\n";
    sink.emit(doc, text);
    return counterexamples.empty() ? 0 : 1;
}

SpreadBundle bundle_from_args(std::uint64_t q, const std::string& h_str) {
    if (h_str.empty()) throw DomainError("missing --h");
    SmallField fq2 = middle_field_for(q);
    Polynomial h = parse_polynomial(fq2, h_str);
    return spread_from_polynomial(fq2, h);
}

int run_verify_spread(const std::string& in_path, std::uint64_t q, const std::string& h_str,
                      const OutputSink& sink) {
    json doc{{"schema", kSchema}, {"command", "verify-spread"}};
    bool ok = false;
    std::string text;
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw DomainError("cannot open input file: " + in_path);
        json j = json::parse(in);
        LoadedSpread loaded = spread_from_json(j);
        const Tower& t = *loaded.tower;
        // line shapes, subspace closure, partition, b consistent
        std::uint64_t expected = (t.top_size() - 1) / (t.q2() - 1);
        ok = loaded.spread.lines.size() == expected;
        std::vector<std::uint8_t> count((std::size_t)t.top_size(), 0);
        for (const LineSet& line : loaded.spread.lines) {
            if (!ok) break;
            if (line.ranks.size() != t.q2() || !line_is_subspace(t, line)) ok = false;
            for (std::uint32_t rk : line.ranks)
                if (rk != 0 && ++count[rk] > 1) ok = false;
        }
        if (ok)
            for (std::uint64_t rk = 1; rk < t.top_size(); ++rk)
                if (count[rk] == 0) ok = false;
        if (ok) {
            LineSet base = build_base_line(t, loaded.spread.b);
            ok = std::find_if(loaded.spread.lines.begin(), loaded.spread.lines.end(),
                              [&](const LineSet& l) { return l.ranks == base.ranks; }) != loaded.spread.lines.end();
        }
        doc["lines"] = loaded.spread.lines.size();
        text = "spread from " + in_path + ": " + (ok ? "valid" : "INVALID") + "\n";
    } else {
        SpreadBundle bundle = bundle_from_args(q, h_str);
        ok = bundle.outcome.ok();
        if (ok) doc["lines"] = bundle.outcome.spread->lines.size();
        if (!ok && bundle.outcome.failure) doc["witness"] = {{"rank", bundle.outcome.failure->witness_rank}};
        text = std::string("spread: ") + (ok ? "valid" : "INVALID") + "\n";
    }
    doc["result"] = ok;
    sink.emit(doc, text);
    return ok ? 0 : 1;
}

int run_export(const std::string& what, std::uint64_t q, const std::string& h_str, const OutputSink& sink) {
    SpreadBundle bundle = bundle_from_args(q, h_str);
    if (!bundle.outcome.ok()) throw DomainError("the orbit is not a spread; nothing to export");
    if (what == "spread") {
        json doc = spread_to_json(*bundle.tower, *bundle.outcome.spread);
        sink.emit(doc, doc.dump(2) + "\n");
    } else {
        LinearSpace ls = andre_bruck_bose(*bundle.tower, *bundle.outcome.spread);
        json doc = space_to_json(ls);
        sink.emit(doc, doc.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag-transitive linear spaces from permutation polynomials over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out are accepted after the subcommand too

    std::string format = "text", out_path;
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::string family, a_str, c_str, h_str, in_path, what = "spread";
    std::uint64_t q = 0, d = 0, u = 1, t = 1, p = 0, r = 0, m = 0, pd_k = 0;
    std::uint64_t qmax = 13, tmax = 3, dmax = 7, kmax = 3;
    unsigned kk = 1;
    PipelineOptions opts;

    auto* construct = app.add_subcommand("construct", "build a family instance and verify the full chain");
    construct->add_option("--family", family, "power-diff | char3-cubic | geometric")->required();
    construct->add_option("--q", q, "base prime power q");
    construct->add_option("--d", d, "odd divisor of q+1, d > 1");
    construct->add_option("--u", u, "proper divisor of d (default 1)");
    construct->add_option("--t", t, "tower exponent (default 1)");
    construct->add_option("--k", kk, "q = 3^k for the char3-cubic family");
    construct->add_option("--p", p, "odd prime for the geometric family");
    construct->add_option("--max-enum", opts.max_enumeration, "largest enumerable top field");
    construct->add_option("--max-lines", opts.max_materialized_lines, "largest materialized line set");

    auto* check_pp = app.add_subcommand("check-pp", "permutation-polynomial checks");
    check_pp->set_help_flag("--help", "print help");  // frees -h for the polynomial option
    check_pp->add_option("--family", family, "power-diff | quadrinomial | geometric (or inline --h)");
    check_pp->add_option("--q", q, "base prime power q");
    check_pp->add_option("--d", d, "exponent parameter d");
    check_pp->add_option("--k", pd_k, "exponent parameter k (power-diff)");
    check_pp->add_option("--a", a_str, "element of F_q as ascending F_p digits");
    check_pp->add_option("--c", c_str, "element of F_q as ascending F_p digits");
    check_pp->add_option("--p", p, "odd prime for the geometric family");
    check_pp->add_option("--h", h_str, "coefficients, ascending; ';' separates F_{q^2} digit groups");
    check_pp->add_option("--r", r, "monomial exponent for x^r h(x^{q-1}) (default deg h)");

    auto* check_cond = app.add_subcommand("check-condition", "the ratio condition for h over F_{q^2}");
    check_cond->set_help_flag("--help", "print help");
    check_cond->add_option("--family", family, "geometric (or inline --h)");
    check_cond->add_option("--q", q, "base prime power q");
    check_cond->add_option("--h", h_str, "polynomial coefficients");
    check_cond->add_option("--m", m, "extension degree m (default deg h)");
    check_cond->add_option("--p", p, "odd prime for the geometric family");

    auto* sweep = app.add_subcommand("sweep", "verify an identity or criterion across a parameter grid");
    sweep->add_option("--family", family, "gcd-order | power-diff | quadrinomial")->required();
    sweep->add_option("--qmax", qmax, "largest q (gcd-order, power-diff)");
    sweep->add_option("--tmax", tmax, "largest t (gcd-order)");
    sweep->add_option("--q", q, "single q (quadrinomial)");
    sweep->add_option("--dmax", dmax, "largest d (power-diff)");
    sweep->add_option("--kmax", kmax, "largest k (power-diff)");

    auto* verify = app.add_subcommand("verify-spread", "re-verify a spread from a file or from h");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--in", in_path, "spread JSON produced by export");
    verify->add_option("--q", q, "base prime power q");
    verify->add_option("--h", h_str, "top modulus coefficients");

    auto* exp = app.add_subcommand("export", "write spread or linear-space JSON");
    exp->set_help_flag("--help", "print help");
    exp->add_option("--what", what, "spread | space")->check(CLI::IsMember({"spread", "space"}));
    exp->add_option("--q", q, "base prime power q")->required();
    exp->add_option("--h", h_str, "top modulus coefficients")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputSink sink{format, out_path};
    try {
        if (construct->parsed()) return run_construct(family, q, d, u, t, kk, p, opts, sink);
        if (check_pp->parsed()) return run_check_pp(family, q, d, pd_k, a_str, c_str, p, h_str, r, sink);
        if (check_cond->parsed()) return run_check_condition(family, q, h_str, m, p, sink);
        if (sweep->parsed()) return run_sweep(family, qmax, tmax, q, dmax, kmax, sink);
        if (verify->parsed()) return run_verify_spread(in_path, q, h_str, sink);
        if (exp->parsed()) return run_export(what, q, h_str, sink);
    } catch (const ResourceError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
