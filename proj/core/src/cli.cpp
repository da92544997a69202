#include "poset_shell/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "poset_shell/covers.hpp"
#include "poset_shell/el_labeling.hpp"
#include "poset_shell/embeddings.hpp"
#include "poset_shell/families.hpp"
#include "poset_shell/rank_order.hpp"

namespace posets {

namespace {

using nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cap_for(const run_config& cfg) {
    if (cfg.command == "enumerate") return 6;
    if (cfg.command == "hasse") return 5;
    if (cfg.check_kind == "eulerian") return 5;
    if (cfg.check_kind == "iso") return cfg.side == "involutions" ? 5 : 4;
    return 4; // exhaustive interval checks: el, covers, shelling, mobius-cross
}

void enforce_cap(const run_config& cfg) {
    const int cap = cap_for(cfg);
    if (cfg.n > cap && !cfg.allow_large)
        throw usage_error("n=" + std::to_string(cfg.n) + " exceeds the default cap " +
                          std::to_string(cap) + " for this command; pass --allow-large to override");
    if (cfg.n < 0) throw usage_error("n must be >= 0");
}

std::string sink_output(const run_config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return {};
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw usage_error("cannot open output file: " + cfg.out);
    f << text;
    return cfg.out;
}

// ---------------------------------------------------------------- enumerate

struct listing {
    std::vector<std::string> words;
    std::vector<std::pair<std::string, bool>> cross_checks;
};

listing enumerate_listing(const run_config& cfg) {
    listing l;
    const int n = cfg.n;
    auto push_all = [&](const auto& elems) {
        for (const auto& e : elems) l.words.push_back(e.str());
    };
    if (cfg.poset == "rooks") {
        if (cfg.k) {
            auto elems = enumerate_rooks(n, *cfg.k);
            push_all(elems);
            l.cross_checks.emplace_back(
                "|R_{" + std::to_string(n) + "," + std::to_string(*cfg.k) +
                    "}| == k!*C(n,k)^2 == " + std::to_string(rook_count_formula(n, *cfg.k)),
                static_cast<long long>(elems.size()) == rook_count_formula(n, *cfg.k));
        } else {
            auto elems = enumerate_rooks(n);
            push_all(elems);
            long long total = 0;
            for (int k = 0; k <= n; ++k) total += rook_count_formula(n, k);
            l.cross_checks.emplace_back("|R_n| == sum_k k!*C(n,k)^2 == " + std::to_string(total),
                                        static_cast<long long>(elems.size()) == total);
        }
    } else if (cfg.poset == "partial-involutions") {
        if (cfg.k) {
            push_all(enumerate_partial_involutions(n, *cfg.k));
            if (*cfg.k == n)
                l.cross_checks.emplace_back(
                    "|P_{n,n}| == tau_n == " + std::to_string(involution_count(n)),
                    static_cast<long long>(l.words.size()) == involution_count(n));
        } else {
            push_all(enumerate_partial_involutions(n));
            if (n >= 1) {
                const auto uc = union_cardinalities(n);
                l.cross_checks.emplace_back(
                    "|P_{n,n-1} u P_{n,n}| == tau_{n+1} == " +
                        std::to_string(involution_count(n + 1)),
                    uc.second == involution_count(n + 1));
            }
        }
    } else if (cfg.poset == "permutations") {
        auto elems = enumerate_permutations(n);
        push_all(elems);
        l.cross_checks.emplace_back("|S_n| == n! == " + std::to_string(rook_count_formula(n, n)),
                                    static_cast<long long>(elems.size()) ==
                                        rook_count_formula(n, n));
    } else if (cfg.poset == "involutions") {
        auto elems = enumerate_involutions(n);
        push_all(elems);
        l.cross_checks.emplace_back("|I_n| == tau_n == " + std::to_string(involution_count(n)),
                                    static_cast<long long>(elems.size()) ==
                                        involution_count(n));
    } else {
        throw usage_error("unknown poset selector: " + cfg.poset);
    }
    return l;
}

int run_enumerate(const run_config& cfg, std::ostream& out) {
    const listing l = enumerate_listing(cfg);
    bool ok = true;
    for (const auto& [text, good] : l.cross_checks) ok = ok && good;

    std::string rendered;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = "poset-shell/1";
        j["command"] = "enumerate";
        j["poset"] = cfg.poset;
        j["n"] = cfg.n;
        if (cfg.k) j["k"] = *cfg.k;
        j["count"] = l.words.size();
        j["elements"] = l.words;
        auto checks = ordered_json::array();
        for (const auto& [text, good] : l.cross_checks)
            checks.push_back({{"check", text}, {"ok", good}});
        j["cross_checks"] = checks;
        rendered = j.dump(2) + "\n";
    } else if (cfg.format == "text") {
        std::ostringstream os;
        os << "schema: poset-shell/1\ncommand: enumerate\nposet: " << cfg.poset
           << "\nn: " << cfg.n;
        if (cfg.k) os << "\nk: " << *cfg.k;
        os << "\n";
        for (const auto& w : l.words) os << w << "\n";
        os << "count: " << l.words.size() << "\n";
        for (const auto& [text, good] : l.cross_checks)
            os << "cross-check: " << text << ": " << (good ? "ok" : "FAIL") << "\n";
        rendered = os.str();
    } else {
        throw usage_error("enumerate supports --format text|json");
    }
    sink_output(cfg, rendered, out);
    return ok ? 0 : 1;
}

// -------------------------------------------------------------------- hasse

struct built_poset {
    finite_poset poset;
    std::vector<int> rank;
    edge_labeling labels;            // only for full P_n
    std::vector<bool> highlight;     // union of the two top k-levels
    std::vector<std::string> words;  // element words
};

built_poset build_for_cli(const run_config& cfg) {
    built_poset b;
    const int n = cfg.n;
    auto finish = [&](auto&& family, auto&& ones_of) {
        b.poset = std::move(family.poset);
        for (const auto& e : family.elements) b.words.push_back(e.str());
        auto g = b.poset.graded();
        if (g.graded) b.rank = std::move(g.rank);
        if (cfg.highlight_embedding) {
            b.highlight.resize(family.elements.size(), false);
            for (std::size_t i = 0; i < family.elements.size(); ++i) {
                const int ones = ones_of(family.elements[i]);
                b.highlight[i] = ones == n || ones == n - 1;
            }
        }
    };
    if (cfg.poset == "rooks") {
        auto fam = cfg.k ? build_rnk(n, *cfg.k) : build_rn(n);
        finish(fam, [](const rook& r) { return r.ones(); });
    } else if (cfg.poset == "partial-involutions") {
        if (cfg.k) {
            finish(build_pnk(n, *cfg.k), [](const partial_involution& r) { return r.ones(); });
        } else {
            auto lp = build_labeled_pn(n);
            pinv_poset fam{std::move(lp.elements), std::move(lp.poset)};
            b.labels = std::move(lp.labels);
            finish(fam, [](const partial_involution& r) { return r.ones(); });
        }
    } else if (cfg.poset == "permutations") {
        finish(build_sn_bruhat(n), [](const rook& r) { return r.ones(); });
    } else if (cfg.poset == "involutions") {
        finish(build_in_bruhat(n), [](const partial_involution& r) { return r.ones(); });
    } else {
        throw usage_error("unknown poset selector: " + cfg.poset);
    }
    return b;
}

int run_hasse(const run_config& cfg, std::ostream& out) {
    built_poset b = build_for_cli(cfg);

    std::map<std::pair<std::size_t, std::size_t>, std::string> label_text;
    for (const auto& [edge, lab] : b.labels) label_text[edge] = lab.str();

    render_options opt;
    if (!b.rank.empty()) opt.rank = &b.rank;
    if (!label_text.empty()) opt.edge_labels = &label_text;
    if (!b.highlight.empty()) opt.highlight = &b.highlight;
    opt.name = cfg.poset + "-" + std::to_string(cfg.n) +
               (cfg.k ? "-" + std::to_string(*cfg.k) : "");

    std::string rendered;
    if (cfg.format == "dot") {
        rendered = to_dot(b.poset, opt);
    } else if (cfg.format == "json") {
        rendered = to_json(b.poset, opt) + "\n";
    } else if (cfg.format == "text") {
        std::ostringstream os;
        os << "schema: poset-shell/1\ncommand: hasse\nposet: " << cfg.poset << "\nn: " << cfg.n;
        if (cfg.k) os << "\nk: " << *cfg.k;
        os << "\nnodes: " << b.poset.size() << "\nedges: " << b.poset.hasse_edge_count()
           << "\n";
        for (std::size_t a = 0; a < b.poset.size(); ++a) {
            for (std::size_t v : b.poset.upper_covers()[a]) {
                os << b.poset.label(a) << " -> " << b.poset.label(v);
                auto it = b.labels.find({a, v});
                if (it != b.labels.end()) os << "  " << it->second.str();
                os << "\n";
            }
        }
        rendered = os.str();
    } else {
        throw usage_error("hasse supports --format text|json|dot");
    }
    sink_output(cfg, rendered, out);
    return 0;
}

// -------------------------------------------------------------------- check

struct check_output {
    std::vector<std::pair<std::string, std::string>> fields; // ordered key/value
    std::vector<std::string> detail;                         // per-item lines
    std::string dump_json; // full machine-readable dump, json format only
    bool pass = false;
};

std::string render_check(const run_config& cfg, const check_output& co) {
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = "poset-shell/1";
        j["command"] = "check " + cfg.check_kind;
        for (const auto& [k, v] : co.fields) j[k] = v;
        j["detail"] = co.detail;
        if (!co.dump_json.empty()) j["intervals"] = ordered_json::parse(co.dump_json);
        j["result"] = co.pass ? "PASS" : "FAIL";
        return j.dump(2) + "\n";
    }
    if (cfg.format != "text") throw usage_error("check supports --format text|json");
    std::ostringstream os;
    os << "schema: poset-shell/1\ncommand: check " << cfg.check_kind << "\n";
    for (const auto& [k, v] : co.fields) os << k << ": " << v << "\n";
    for (const auto& d : co.detail) os << d << "\n";
    os << "result: " << (co.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

check_output check_el(const run_config& cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));

    el_report report;
    if (cfg.transported.empty()) {
        auto lp = build_labeled_pn(cfg.n);
        report = verify_el(lp.poset, lp.labels, cfg.jobs);
        co.fields.emplace_back("poset", "P_" + std::to_string(cfg.n));
    } else if (cfg.transported == "involutions") {
        auto tl = transport_labeling_to_in1(cfg.n);
        report = verify_el(tl.target.poset, tl.labels, cfg.jobs);
        co.fields.emplace_back("poset",
                               "I_" + std::to_string(cfg.n + 1) + " (phi-transported labels)");
    } else if (cfg.transported == "permutations") {
        throw usage_error(
            "the induced labeling of S_{n+1} requires the rook-monoid labeling of R_n, "
            "which this library does not implement");
    } else {
        throw usage_error("--transported accepts involutions|permutations");
    }

    co.fields.emplace_back("intervals", std::to_string(report.intervals_checked));
    co.dump_json = report.json();
    const auto bad = report.violations();
    co.fields.emplace_back("violations", std::to_string(bad.size()));
    for (const auto& v : bad)
        co.detail.push_back("violation: [" + std::to_string(v.bottom) + "," +
                            std::to_string(v.top) + "] increasing_count=" +
                            std::to_string(v.increasing_count) + " lex_first_increasing=" +
                            (v.lex_first_increasing ? "true" : "false"));
    co.pass = bad.empty();
    return co;
}

check_output check_eulerian(const run_config& cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));
    std::vector<int> ks;
    if (cfg.all_k || !cfg.k) {
        for (int k = 1; k <= cfg.n; ++k) ks.push_back(k);
    } else {
        if (*cfg.k < 1 || *cfg.k > cfg.n) throw usage_error("need 1 <= k <= n");
        ks.push_back(*cfg.k);
    }
    bool pass = true;
    auto run_family = [&](const std::string& label, bool pinv_side) {
        for (int k : ks) {
            finite_poset sub;
            if (pinv_side)
                sub = build_pnk(cfg.n, k).poset;
            else
                sub = build_rnk(cfg.n, k).poset;
            const auto verdict = is_eulerian(sub);
            const bool expected = (k == cfg.n || k == cfg.n - 1);
            bool line_ok = verdict.eulerian() == expected &&
                           verdict.parity_eulerian == verdict.mobius_eulerian;
            std::string line = label + "_{" + std::to_string(cfg.n) + "," +
                               std::to_string(k) + "}: eulerian=" +
                               (verdict.eulerian() ? "true" : "false") +
                               " expected=" + (expected ? "true" : "false");
            if (k <= cfg.n - 2) {
                const auto ce = pinv_side ? eulerian_counterexample_pinv(cfg.n, k)
                                          : eulerian_counterexample_rooks(cfg.n, k);
                line += " counterexample-interval=" + std::to_string(ce.interval_size);
                line_ok = line_ok && ce.interval_is_three;
            }
            line += line_ok ? " ok" : " MISMATCH";
            co.detail.push_back(line);
            pass = pass && line_ok;
        }
    };
    if (cfg.poset == "rooks" || cfg.poset == "partial-involutions") {
        run_family("R", false);
        run_family("P", true);
    } else {
        throw usage_error("check eulerian supports --poset rooks|partial-involutions");
    }
    co.pass = pass;
    return co;
}

check_output check_covers(const run_config& cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));
    auto pp = build_pn(cfg.n);
    const auto& elems = pp.elements;

    std::size_t hasse = 0, moves = 0, oracle = 0, mismatches = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto move_covers = covers_of(elems[i]);
        std::set<partial_involution> move_set(move_covers.begin(), move_covers.end());
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const bool h = pp.poset.covers(i, j);
            const bool o = i != j && is_cover_oracle(elems[i], elems[j]);
            const bool m = move_set.count(elems[j]) != 0;
            hasse += h;
            oracle += o;
            moves += m;
            if (h != o || o != m) ++mismatches;
        }
    }
    co.fields.emplace_back("elements", std::to_string(elems.size()));
    co.fields.emplace_back("hasse_edges", std::to_string(hasse));
    co.fields.emplace_back("move_covers", std::to_string(moves));
    co.fields.emplace_back("oracle_covers", std::to_string(oracle));
    co.fields.emplace_back("discrepancies", std::to_string(mismatches));
    bool fixture_ok = true;
    if (cfg.n == 4) {
        // The move that removes the suitable rise (1,3): comparable but
        // not a cover.
        const partial_involution y(parse_rook("(2,1,3,0)"));
        const partial_involution x(parse_rook("(4,0,3,1)"));
        const bool comparable = leq_partial_involutions(y, x);
        const bool cover = is_cover_oracle(y, x);
        const auto cov = covers_of(y);
        const bool emitted = std::find(cov.begin(), cov.end(), x) != cov.end();
        fixture_ok = comparable && !cover && !emitted;
        co.detail.push_back(std::string("exclusion-fixture: comparable=") +
                            (comparable ? "true" : "false") + " cover=" +
                            (cover ? "true" : "false") + " emitted=" +
                            (emitted ? "true" : "false") + (fixture_ok ? " ok" : " MISMATCH"));
    }
    co.pass = mismatches == 0 && fixture_ok;
    return co;
}

check_output check_iso(const run_config& cfg, const run_config& full_cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));
    co.fields.emplace_back("side", cfg.side);
    embedding_check chk;
    if (cfg.side == "involutions") {
        chk = check_phi_embedding(cfg.n);
        co.fields.emplace_back("domain", "P_{n,n-1} u P_{n,n}");
        co.fields.emplace_back("codomain", "I_" + std::to_string(cfg.n + 1));
    } else if (cfg.side == "rooks") {
        chk = check_psi_embedding(cfg.n);
        co.fields.emplace_back("domain", "R_{n,n-1} u R_{n,n}");
        co.fields.emplace_back("codomain", "S_" + std::to_string(cfg.n + 1));
    } else {
        throw usage_error("check iso supports --side rooks|involutions");
    }
    co.fields.emplace_back("domain_size", std::to_string(chk.domain_size));
    co.fields.emplace_back("expected_size", std::to_string(chk.expected_size));
    co.fields.emplace_back("bijective", chk.report.bijective ? "yes" : "no");
    co.fields.emplace_back("order_preserving_forward",
                           chk.report.order_preserving_forward ? "yes" : "no");
    co.fields.emplace_back("order_preserving_backward",
                           chk.report.order_preserving_backward ? "yes" : "no");
    if (!chk.report.witness.empty()) co.detail.push_back("witness: " + chk.report.witness);
    co.pass = chk.report.ok() && chk.domain_size == chk.expected_size;

    if (!full_cfg.dot_out.empty()) {
        run_config hcfg = full_cfg;
        hcfg.command = "hasse";
        hcfg.poset = cfg.side == "involutions" ? "partial-involutions" : "rooks";
        hcfg.k.reset();
        hcfg.format = "dot";
        hcfg.highlight_embedding = true;
        hcfg.out = full_cfg.dot_out;
        std::ostringstream devnull;
        run_hasse(hcfg, devnull);
    }
    return co;
}

check_output check_shelling(const run_config& cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));
    auto lp = build_labeled_pn(cfg.n);
    const std::size_t bottom = 0, top = lp.poset.size() - 1;
    // Elements are listed lexicographically: the zero rook comes first
    // and is the maximum; the identity is the minimum.
    std::size_t bot_idx = bottom, top_idx = top;
    for (std::size_t i = 0; i < lp.poset.size(); ++i) {
        if (lp.elements[i].as_rook() == rook::identity(cfg.n)) bot_idx = i;
        if (lp.elements[i].as_rook() == rook::zero(cfg.n)) top_idx = i;
    }
    const auto words = chain_words(lp.poset, lp.labels, bot_idx, top_idx);
    const auto facets = order_complex_facets(lp.poset, bot_idx, top_idx, &words);
    const auto res = verify_shelling(facets);
    co.fields.emplace_back("facets", std::to_string(facets.size()));
    co.fields.emplace_back("facet_dimension",
                           std::to_string(facets.empty() ? 0 : facets.front().size() - 1));
    co.fields.emplace_back("shellable", res.shellable ? "yes" : "no");
    if (!res.shellable)
        co.detail.push_back("first-violation-facet: " + std::to_string(res.first_violation));
    co.pass = res.shellable;
    return co;
}

check_output check_mobius_cross(const run_config& cfg) {
    check_output co;
    co.fields.emplace_back("n", std::to_string(cfg.n));
    auto lp = build_labeled_pn(cfg.n);
    std::size_t intervals = 0, mismatches = 0;
    for (std::size_t x = 0; x < lp.poset.size(); ++x) {
        const auto mu = lp.poset.mobius_row(x);
        for (std::size_t y = 0; y < lp.poset.size(); ++y) {
            if (!lp.poset.leq(x, y)) continue;
            ++intervals;
            const long long dc = decreasing_chain_mobius(lp.poset, lp.labels, x, y);
            if (dc != mu[y]) {
                ++mismatches;
                co.detail.push_back("mismatch at [" + lp.poset.label(x) + "," +
                                    lp.poset.label(y) + "]: decreasing=" + std::to_string(dc) +
                                    " mobius=" + std::to_string(mu[y]));
            }
        }
    }
    co.fields.emplace_back("intervals", std::to_string(intervals));
    co.fields.emplace_back("mismatches", std::to_string(mismatches));
    co.pass = mismatches == 0;
    return co;
}

} // namespace

int cli_run(const run_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        enforce_cap(cfg);
        if (cfg.command == "enumerate") return run_enumerate(cfg, out);
        if (cfg.command == "hasse") return run_hasse(cfg, out);
        if (cfg.command == "check") {
            check_output co;
            if (cfg.check_kind == "el")
                co = check_el(cfg);
            else if (cfg.check_kind == "eulerian")
                co = check_eulerian(cfg);
            else if (cfg.check_kind == "covers")
                co = check_covers(cfg);
            else if (cfg.check_kind == "iso")
                co = check_iso(cfg, cfg);
            else if (cfg.check_kind == "shelling")
                co = check_shelling(cfg);
            else if (cfg.check_kind == "mobius-cross")
                co = check_mobius_cross(cfg);
            else
                throw usage_error("unknown check: " + cfg.check_kind);
            sink_output(cfg, render_check(cfg, co), out);
            return co.pass ? 0 : 1;
        }
        throw usage_error("unknown command: " + cfg.command);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace posets
