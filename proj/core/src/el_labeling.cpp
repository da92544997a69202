#include "poset_shell/el_labeling.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "poset_shell/parallel.hpp"

namespace posets {

edge_label label_of_move(const cover_move& m) {
    switch (m.kind) {
        case move_kind::c: return {m.c_rise->i, m.c_rise->j};
        case move_kind::d: return {m.d_index, m.d_index};
        case move_kind::r: return {m.r_source_col, m.r_target_col};
    }
    throw std::logic_error("label_of_move: bad kind");
}

edge_label label_cover(const partial_involution& x, const partial_involution& y) {
    return label_of_move(classify_cover(x, y));
}

std::vector<edge_label> jordan_holder(const std::vector<partial_involution>& chain) {
    if (chain.empty()) throw std::invalid_argument("jordan_holder: empty chain");
    std::vector<edge_label> word;
    word.reserve(chain.size() - 1);
    for (std::size_t t = 0; t + 1 < chain.size(); ++t)
        word.push_back(label_cover(chain[t], chain[t + 1])); // throws if unsaturated
    return word;
}

labeled_pinv_poset build_labeled_pn(int n) {
    labeled_pinv_poset lp;
    auto pp = build_pn(n);
    lp.elements = std::move(pp.elements);
    lp.poset = std::move(pp.poset);
    for (std::size_t a = 0; a < lp.poset.size(); ++a)
        for (std::size_t b : lp.poset.upper_covers()[a])
            lp.labels[{a, b}] = label_cover(lp.elements[a], lp.elements[b]);
    return lp;
}

namespace {

struct interval_walker {
    const finite_poset& p;
    const edge_labeling& labels;
    bitrow members;
    std::size_t top;

    edge_label label(std::size_t a, std::size_t b) const {
        auto it = labels.find({a, b});
        if (it == labels.end())
            throw std::invalid_argument("verify_el: unlabeled cover " + p.label(a) + " -> " +
                                        p.label(b));
        return it->second;
    }

    // Covers of z inside the interval, sorted by (label, index).
    std::vector<std::pair<edge_label, std::size_t>> steps(std::size_t z) const {
        std::vector<std::pair<edge_label, std::size_t>> out;
        for (std::size_t w : p.upper_covers()[z])
            if (members.test(w)) out.emplace_back(label(z, w), w);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Word of the lexicographically first maximal chain.  Because every
    // partial chain in the interval extends to the top and all words
    // have equal length when the interval is graded, depth-first descent
    // through the smallest labels finds it directly.
    std::vector<edge_label> lex_first_word(std::size_t from) const {
        std::vector<edge_label> word;
        std::size_t z = from;
        while (z != top) {
            auto s = steps(z);
            word.push_back(s.front().first);
            z = s.front().second;
        }
        return word;
    }

    // Number of maximal chains realizing the given word, counted up to
    // the cap.
    int count_word(std::size_t z, const std::vector<edge_label>& word, std::size_t depth,
                   int cap) const {
        if (z == top) return depth == word.size() ? 1 : 0;
        if (depth == word.size()) return 0;
        int c = 0;
        for (const auto& [lab, w] : steps(z)) {
            if (lab != word[depth]) continue;
            c += count_word(w, word, depth + 1, cap - c);
            if (c >= cap) return c;
        }
        return c;
    }

    // Counts weakly increasing maximal chains up to the cap; records
    // the word of the first one found, which the label-sorted descent
    // makes the lexicographically least increasing word.
    int count_increasing(std::size_t z, edge_label last, bool has_last,
                         std::vector<edge_label>& prefix, std::vector<edge_label>& first,
                         int cap) const {
        if (z == top) {
            if (first.empty()) first = prefix;
            return 1;
        }
        int c = 0;
        for (const auto& [lab, w] : steps(z)) {
            if (has_last && lab < last) continue;
            prefix.push_back(lab);
            c += count_increasing(w, lab, true, prefix, first, cap - c);
            prefix.pop_back();
            if (c >= cap) return c;
        }
        return c;
    }
};

el_interval_result check_interval(const finite_poset& p, const edge_labeling& labels,
                                  std::size_t x, std::size_t y) {
    interval_walker walk{p, labels, p.interval(x, y), y};
    el_interval_result res;
    res.bottom = x;
    res.top = y;

    const auto lex_min = walk.lex_first_word(x);
    const int lex_min_multiplicity = walk.count_word(x, lex_min, 0, 2);

    std::vector<edge_label> prefix, first_increasing;
    res.increasing_count = walk.count_increasing(x, {}, false, prefix, first_increasing, 2);
    res.lex_first_increasing = res.increasing_count >= 1 && first_increasing == lex_min &&
                               lex_min_multiplicity == 1;
    return res;
}

} // namespace

std::vector<el_interval_result> el_report::violations() const {
    std::vector<el_interval_result> v;
    for (const auto& r : results)
        if (!r.ok()) v.push_back(r);
    return v;
}

std::string el_report::json() const {
    nlohmann::ordered_json arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["bottom"] = r.bottom;
        item["top"] = r.top;
        item["increasing_count"] = r.increasing_count;
        item["lex_first_increasing"] = r.lex_first_increasing;
        arr.push_back(item);
    }
    return arr.dump();
}

el_report verify_el(const finite_poset& p, const edge_labeling& labels, unsigned jobs) {
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (x != y && p.leq(x, y)) intervals.emplace_back(x, y);

    el_report report;
    report.intervals_checked = intervals.size();
    report.results.resize(intervals.size());
    parallel_for_index(intervals.size(), jobs, [&](std::size_t idx) {
        report.results[idx] =
            check_interval(p, labels, intervals[idx].first, intervals[idx].second);
    });
    return report;
}

long long decreasing_chain_mobius(const finite_poset& p, const edge_labeling& labels,
                                  std::size_t x, std::size_t y) {
    interval_walker walk{p, labels, p.interval(x, y), y};
    long long count = 0;
    std::size_t length = 0;
    auto dfs = [&](auto&& self, std::size_t z, edge_label last, bool has_last,
                   std::size_t depth) -> void {
        if (z == y) {
            count += 1;
            length = depth;
            return;
        }
        for (const auto& [lab, w] : walk.steps(z)) {
            if (has_last && !(lab < last)) continue; // strictly decreasing
            self(self, w, lab, true, depth + 1);
        }
    };
    dfs(dfs, x, {}, false, 0);
    if (x == y) return 1;
    // All maximal chains of a graded interval share one length; recover
    // it from the cover structure when no decreasing chain exists.
    if (count == 0) {
        std::size_t z = x;
        while (z != y) z = walk.steps(z).front().second, ++length;
    }
    return (length % 2 == 0) ? count : -count;
}

std::vector<std::vector<std::pair<int, int>>> chain_words(const finite_poset& p,
                                                          const edge_labeling& labels,
                                                          std::size_t x, std::size_t y) {
    std::vector<std::vector<std::pair<int, int>>> words;
    for (const auto& chain : p.maximal_chains(x, y)) {
        std::vector<std::pair<int, int>> word;
        word.reserve(chain.size() - 1);
        for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
            auto it = labels.find({chain[t], chain[t + 1]});
            if (it == labels.end())
                throw std::invalid_argument("chain_words: unlabeled cover");
            word.emplace_back(it->second.i, it->second.j);
        }
        words.push_back(std::move(word));
    }
    return words;
}

} // namespace posets
