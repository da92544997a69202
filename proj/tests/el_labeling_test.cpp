#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "poset_shell/el_labeling.hpp"

using namespace posets;

TEST_SUITE_BEGIN("el_labeling");

namespace {

partial_involution pinv(const char* w) { return partial_involution(parse_rook(w)); }

} // namespace

TEST_CASE("labels of the worked cover examples") {
    CHECK(label_cover(pinv("(4,3,2,1,0)"), pinv("(4,5,0,1,2)")) == edge_label{3, 5});
    CHECK(label_cover(pinv("(6,5,0,0,2,1)"), pinv("(0,5,6,0,2,3)")) == edge_label{1, 3});
    CHECK(label_cover(pinv("(4,3,2,1,0)"), pinv("(4,0,3,1,5)")) == edge_label{2, 3});
}

TEST_CASE("label order is lexicographic") {
    CHECK(edge_label{1, 3} < edge_label{2, 1});
    CHECK(edge_label{2, 1} < edge_label{2, 2});
    CHECK_FALSE(edge_label{2, 2} < edge_label{2, 2});
    CHECK(edge_label{3, 5}.str() == "(3,5)");
}

TEST_CASE("jordan holder words") {
    CHECK(jordan_holder({pinv("(1,2,3)"), pinv("(1,2,0)"), pinv("(1,0,3)")}) ==
          std::vector<edge_label>{{3, 3}, {2, 2}});
    CHECK(jordan_holder({pinv("(1,2,3)"), pinv("(2,1,3)"), pinv("(3,2,1)"),
                         pinv("(3,0,1)")}) ==
          std::vector<edge_label>{{1, 2}, {1, 3}, {2, 2}});
    CHECK(jordan_holder({pinv("(0,0,3)"), pinv("(0,0,0)")}) ==
          std::vector<edge_label>{{3, 3}});
    // Unsaturated chains are rejected.
    CHECK_THROWS(jordan_holder({pinv("(1,2,3)"), pinv("(0,0,0)")}));
}

TEST_CASE("spot labels from the P_3 diagram") {
    const std::map<std::pair<std::string, std::string>, edge_label> expected{
        {{"(1,2,3)", "(1,2,0)"}, {3, 3}}, {{"(1,2,3)", "(1,3,2)"}, {2, 3}},
        {{"(1,2,3)", "(2,1,3)"}, {1, 2}}, {{"(0,0,3)", "(0,0,0)"}, {3, 3}},
        {{"(0,3,2)", "(0,0,3)"}, {2, 3}}, {{"(0,2,0)", "(0,0,3)"}, {2, 2}},
    };
    for (const auto& [edge, lab] : expected)
        CHECK(label_cover(partial_involution(parse_rook(edge.first)),
                          partial_involution(parse_rook(edge.second))) == lab);
}

TEST_CASE("build_labeled_pn labels every Hasse edge") {
    for (int n = 1; n <= 4; ++n) {
        auto lp = build_labeled_pn(n);
        CHECK(lp.labels.size() == lp.poset.hasse_edge_count());
        // Rebuilding yields identical words.
        auto again = build_labeled_pn(n);
        CHECK(lp.labels == again.labels);
    }
}

TEST_CASE("verify_el finds no violations on P_2 and P_3") {
    for (int n = 2; n <= 3; ++n) {
        auto lp = build_labeled_pn(n);
        auto report = verify_el(lp.poset, lp.labels);
        CHECK(report.ok());
        CHECK(report.violations().empty());
        for (const auto& r : report.results) {
            CHECK(r.increasing_count == 1);
            CHECK(r.lex_first_increasing);
        }
    }
}

TEST_CASE("verify_el surfaces the intervals of P_4 that defeat the labeling rules") {
    // The diamond [(3,2,1,0),(4,0,3,1)] has chains labeled ((2,2),(1,4))
    // and ((3,4),(2,2)): no weakly increasing chain exists, under this or
    // any other total order on the labels.  verify_el must surface it.
    auto lp = build_labeled_pn(4);
    auto report = verify_el(lp.poset, lp.labels);
    const auto bad = report.violations();
    CHECK(bad.size() == 8);
    bool diamond_found = false;
    for (const auto& v : bad) {
        CHECK(v.increasing_count == 0);
        if (lp.poset.label(v.bottom) == "(3,2,1,0)" && lp.poset.label(v.top) == "(4,0,3,1)") {
            diamond_found = true;
            auto chains = lp.poset.maximal_chains(v.bottom, v.top);
            REQUIRE(chains.size() == 2);
            std::vector<std::vector<edge_label>> words;
            for (const auto& c : chains) {
                std::vector<edge_label> w;
                for (std::size_t t = 0; t + 1 < c.size(); ++t)
                    w.push_back(lp.labels.at({c[t], c[t + 1]}));
                words.push_back(w);
            }
            std::sort(words.begin(), words.end());
            CHECK(words[0] == std::vector<edge_label>{{2, 2}, {1, 4}});
            CHECK(words[1] == std::vector<edge_label>{{3, 4}, {2, 2}});
        }
    }
    CHECK(diamond_found);
}

TEST_CASE("verify_el report is independent of the worker count") {
    auto lp = build_labeled_pn(3);
    auto seq = verify_el(lp.poset, lp.labels, 1);
    auto par = verify_el(lp.poset, lp.labels, 8);
    CHECK(seq.results == par.results);
    CHECK(seq.json() == par.json());
}

TEST_CASE("verify_el flags a diamond with two increasing chains") {
    auto p = finite_poset::build({"bot", "l", "r", "top"}, [](std::size_t a, std::size_t b) {
        if (a == b) return true;
        if (a == 0) return true;
        return b == 3;
    });
    edge_labeling labels;
    labels[{0, 1}] = {1, 1};
    labels[{1, 3}] = {2, 2};
    labels[{0, 2}] = {1, 2};
    labels[{2, 3}] = {1, 3};
    auto report = verify_el(p, labels);
    REQUIRE(report.violations().size() == 1);
    const auto v = report.violations().front();
    CHECK(v.bottom == 0);
    CHECK(v.top == 3);
    CHECK(v.increasing_count == 2);
}

TEST_CASE("decreasing chain count computes the Mobius function") {
    auto lp = build_labeled_pn(3);
    auto idx = [&](const char* w) -> std::size_t {
        for (std::size_t i = 0; i < lp.elements.size(); ++i)
            if (lp.elements[i].str() == w) return i;
        return lp.elements.size();
    };

    // Length-1 interval: the single chain is vacuously decreasing.
    CHECK(decreasing_chain_mobius(lp.poset, lp.labels, idx("(1,2,3)"), idx("(1,2,0)")) == -1);

    // The diamond [(1,2,3),(1,0,3)]: one strictly decreasing chain.
    CHECK(decreasing_chain_mobius(lp.poset, lp.labels, idx("(1,2,3)"), idx("(1,0,3)")) ==
          lp.poset.mobius(idx("(1,2,3)"), idx("(1,0,3)")));

    // Full interval and every other interval.
    for (std::size_t x = 0; x < lp.poset.size(); ++x) {
        const auto mu = lp.poset.mobius_row(x);
        for (std::size_t y = 0; y < lp.poset.size(); ++y)
            if (lp.poset.leq(x, y))
                CHECK(decreasing_chain_mobius(lp.poset, lp.labels, x, y) == mu[y]);
    }
}

TEST_SUITE_END();
