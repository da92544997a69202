#include "poset_shell/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace posets {

std::size_t bitrow::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool bitrow::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

bool bitrow::intersects(const bitrow& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool bitrow::is_subset_of(const bitrow& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

std::size_t bitrow::count_and(const bitrow& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
}

bitrow& bitrow::operator&=(const bitrow& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bitrow& bitrow::operator|=(const bitrow& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

finite_poset finite_poset::build(std::vector<std::string> labels,
                                 const std::function<bool(std::size_t, std::size_t)>& leq) {
    finite_poset p;
    p.labels_ = std::move(labels);
    const std::size_t m = p.labels_.size();
    p.up_set_.assign(m, bitrow(m));
    p.down_set_.assign(m, bitrow(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (leq(a, b)) {
                p.up_set_[a].set(b);
                p.down_set_[b].set(a);
            }

    for (std::size_t a = 0; a < m; ++a)
        if (!p.up_set_[a].test(a))
            throw std::invalid_argument("build: relation not reflexive at " + p.labels_[a]);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (p.up_set_[a].test(b) && p.up_set_[b].test(a))
                throw std::invalid_argument("build: antisymmetry fails for " + p.labels_[a] +
                                            " and " + p.labels_[b]);
    for (std::size_t a = 0; a < m; ++a) {
        bool bad = false;
        std::size_t bad_b = 0, bad_c = 0;
        p.up_set_[a].for_each([&](std::size_t b) {
            if (bad || p.up_set_[b].is_subset_of(p.up_set_[a])) return;
            p.up_set_[b].for_each([&](std::size_t c) {
                if (!bad && !p.up_set_[a].test(c)) {
                    bad = true;
                    bad_b = b;
                    bad_c = c;
                }
            });
        });
        if (bad)
            throw std::invalid_argument("build: transitivity fails: " + p.labels_[a] +
                                        " <= " + p.labels_[bad_b] + " <= " + p.labels_[bad_c] +
                                        " but not " + p.labels_[a] + " <= " + p.labels_[bad_c]);
    }

    // Hasse edges = transitive reduction: a < b with nothing strictly
    // between, i.e. |[a,b]| == 2.
    p.up_.assign(m, {});
    p.down_.assign(m, {});
    for (std::size_t a = 0; a < m; ++a) {
        p.up_set_[a].for_each([&](std::size_t b) {
            if (b == a) return;
            if (p.up_set_[a].count_and(p.down_set_[b]) == 2) {
                p.up_[a].push_back(b);
                p.down_[b].push_back(a);
            }
        });
    }
    for (auto& v : p.up_) std::sort(v.begin(), v.end());
    for (auto& v : p.down_) std::sort(v.begin(), v.end());
    return p;
}

bool finite_poset::covers(std::size_t a, std::size_t b) const {
    return std::binary_search(up_[a].begin(), up_[a].end(), b);
}

std::size_t finite_poset::hasse_edge_count() const {
    std::size_t c = 0;
    for (const auto& v : up_) c += v.size();
    return c;
}

std::vector<std::size_t> finite_poset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (down_set_[i].count() == 1) out.push_back(i);
    return out;
}

std::vector<std::size_t> finite_poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_set_[i].count() == 1) out.push_back(i);
    return out;
}

bitrow finite_poset::interval(std::size_t x, std::size_t y) const {
    if (!leq(x, y))
        throw std::invalid_argument("interval: " + labels_[x] + " is not <= " + labels_[y]);
    return up_set_[x] & down_set_[y];
}

std::vector<std::vector<std::size_t>> finite_poset::maximal_chains(std::size_t x,
                                                                   std::size_t y) const {
    const bitrow members = interval(x, y);
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> path{x};
    // Every partial chain inside [x,y] extends to y, so plain DFS along
    // covers emits exactly the saturated chains, in index-lex order.
    auto dfs = [&](auto&& self, std::size_t z) -> void {
        if (z == y) {
            chains.push_back(path);
            return;
        }
        for (std::size_t w : up_[z]) {
            if (!members.test(w)) continue;
            path.push_back(w);
            self(self, w);
            path.pop_back();
        }
    };
    dfs(dfs, x);
    return chains;
}

std::vector<long long> finite_poset::mobius_row(std::size_t x) const {
    const std::size_t m = size();
    std::vector<long long> mu(m, 0);
    // Any linear extension works; |down-set| is strictly monotone along <.
    std::vector<std::size_t> order;
    up_set_[x].for_each([&](std::size_t z) { order.push_back(z); });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ca = down_set_[a].count(), cb = down_set_[b].count();
        return ca != cb ? ca < cb : a < b;
    });
    for (std::size_t z : order) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        long long s = 0;
        (up_set_[x] & down_set_[z]).for_each([&](std::size_t w) {
            if (w != z) s += mu[w];
        });
        mu[z] = -s;
    }
    return mu;
}

long long finite_poset::mobius(std::size_t x, std::size_t y) const {
    if (!leq(x, y))
        throw std::invalid_argument("mobius: " + labels_[x] + " is not <= " + labels_[y]);
    return mobius_row(x)[y];
}

graded_result finite_poset::graded() const {
    const std::size_t m = size();
    graded_result res;
    std::vector<int> rank(m, 0);
    std::vector<char> seen(m, 0);

    // Propagate ranks along Hasse edges, component by component.
    for (std::size_t root = 0; root < m; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> component{root};
        seen[root] = 1;
        rank[root] = 0;
        for (std::size_t qi = 0; qi < component.size(); ++qi) {
            const std::size_t z = component[qi];
            auto visit = [&](std::size_t w, int r) {
                if (!seen[w]) {
                    seen[w] = 1;
                    rank[w] = r;
                    component.push_back(w);
                } else if (rank[w] != r) {
                    res.witness = "rank conflict at " + labels_[w];
                }
            };
            for (std::size_t w : up_[z]) visit(w, rank[z] + 1);
            for (std::size_t w : down_[z]) visit(w, rank[z] - 1);
        }
        if (!res.witness.empty()) break;
        int lo = rank[component.front()];
        for (std::size_t z : component) lo = std::min(lo, rank[z]);
        for (std::size_t z : component) {
            rank[z] -= lo;
            if (rank[z] != 0 && down_[z].empty()) {
                res.witness = "minimal element " + labels_[z] +
                              " sits at rank " + std::to_string(rank[z]);
            }
        }
        if (!res.witness.empty()) break;
    }

    if (res.witness.empty()) {
        res.graded = true;
        res.rank = std::move(rank);
        return res;
    }

    // Try to exhibit two saturated chains of different lengths between a
    // comparable pair.
    for (std::size_t x = 0; x < m && res.chain_a.empty(); ++x) {
        std::vector<int> shortest(m, -1), longest(m, -1);
        std::vector<std::size_t> par_short(m, m), par_long(m, m);
        std::vector<std::size_t> order;
        up_set_[x].for_each([&](std::size_t z) { order.push_back(z); });
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto ca = down_set_[a].count(), cb = down_set_[b].count();
            return ca != cb ? ca < cb : a < b;
        });
        shortest[x] = longest[x] = 0;
        for (std::size_t z : order) {
            if (z == x) continue;
            for (std::size_t w : down_[z]) {
                if (!up_set_[x].test(w) || shortest[w] < 0) continue;
                if (shortest[z] < 0 || shortest[w] + 1 < shortest[z]) {
                    shortest[z] = shortest[w] + 1;
                    par_short[z] = w;
                }
                if (longest[w] + 1 > longest[z]) {
                    longest[z] = longest[w] + 1;
                    par_long[z] = w;
                }
            }
            if (shortest[z] >= 0 && shortest[z] != longest[z]) {
                auto backtrack = [&](const std::vector<std::size_t>& par) {
                    std::vector<std::size_t> chain;
                    for (std::size_t c = z; c != m && !(chain.size() && chain.back() == x);
                         c = par[c]) {
                        chain.push_back(c);
                        if (c == x) break;
                    }
                    std::reverse(chain.begin(), chain.end());
                    return chain;
                };
                res.chain_a = backtrack(par_short);
                res.chain_b = backtrack(par_long);
                res.witness = "unequal saturated chains from " + labels_[x] + " to " +
                              labels_[z];
                break;
            }
        }
    }
    return res;
}

graded_result is_graded(const finite_poset& p) { return p.graded(); }

bool eulerian_result::eulerian() const {
    if (parity_eulerian != mobius_eulerian)
        throw std::logic_error("eulerian tests disagree");
    return parity_eulerian;
}

eulerian_result is_eulerian(const finite_poset& p, const std::vector<int>& rank) {
    const std::size_t m = p.size();
    if (rank.size() != m)
        throw std::invalid_argument("is_eulerian: rank size mismatch");
    eulerian_result res;
    res.parity_eulerian = true;
    res.mobius_eulerian = true;
    bitrow odd(m);
    for (std::size_t i = 0; i < m; ++i)
        if (rank[i] & 1) odd.set(i);
    for (std::size_t x = 0; x < m; ++x) {
        const auto mu = p.mobius_row(x);
        for (std::size_t y = 0; y < m; ++y) {
            if (!p.leq(x, y)) continue;
            const int len = rank[y] - rank[x];
            const long long expect = (len & 1) ? -1 : 1;
            bool ok = true;
            if (mu[y] != expect) {
                res.mobius_eulerian = false;
                ok = false;
            }
            if (x != y) {
                const bitrow members = p.interval(x, y);
                const std::size_t o = members.count_and(odd);
                if (2 * o != members.count()) {
                    res.parity_eulerian = false;
                    ok = false;
                }
            }
            if (!ok && !res.witness) res.witness = {x, y};
        }
    }
    return res;
}

eulerian_result is_eulerian(const finite_poset& p) {
    auto g = p.graded();
    if (!g.graded)
        throw std::invalid_argument("is_eulerian: poset is not graded: " + g.witness);
    return is_eulerian(p, g.rank);
}

std::vector<std::vector<std::size_t>> order_complex_facets(
    const finite_poset& p, std::size_t x, std::size_t y,
    const std::vector<std::vector<std::pair<int, int>>>* jh_words) {
    auto chains = p.maximal_chains(x, y);
    if (chains.empty() || chains.front().size() < 3)
        throw std::invalid_argument("order_complex_facets: interval of length < 2");
    if (jh_words && jh_words->size() != chains.size())
        throw std::invalid_argument("order_complex_facets: word list size mismatch");
    std::vector<std::size_t> idx(chains.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (jh_words) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if ((*jh_words)[a] != (*jh_words)[b]) return (*jh_words)[a] < (*jh_words)[b];
            return chains[a] < chains[b];
        });
    }
    std::vector<std::vector<std::size_t>> facets;
    facets.reserve(chains.size());
    for (std::size_t i : idx)
        facets.emplace_back(chains[i].begin() + 1, chains[i].end() - 1);
    return facets;
}

shelling_result verify_shelling(const std::vector<std::vector<std::size_t>>& facets) {
    shelling_result res;
    res.shellable = true;
    if (facets.empty()) return res;
    std::vector<std::vector<std::size_t>> sorted;
    sorted.reserve(facets.size());
    const std::size_t fsize = facets.front().size();
    for (const auto& f : facets) {
        if (f.size() != fsize)
            throw std::invalid_argument("verify_shelling: facets are not pure");
        auto s = f;
        std::sort(s.begin(), s.end());
        sorted.push_back(std::move(s));
    }
    for (std::size_t j = 1; j < sorted.size(); ++j) {
        std::vector<std::vector<std::size_t>> cuts;
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<std::size_t> cut;
            std::set_intersection(sorted[j].begin(), sorted[j].end(), sorted[i].begin(),
                                  sorted[i].end(), std::back_inserter(cut));
            cuts.push_back(std::move(cut));
        }
        // Pure of dimension fsize-2 means: every intersection extends to
        // one with fsize-1 vertices, and at least one exists.
        bool ok = false;
        for (const auto& cut : cuts)
            if (cut.size() + 1 == fsize) ok = true;
        if (ok) {
            for (const auto& cut : cuts) {
                if (cut.size() + 1 == fsize) continue;
                bool contained = false;
                for (const auto& big : cuts) {
                    if (big.size() + 1 != fsize) continue;
                    if (std::includes(big.begin(), big.end(), cut.begin(), cut.end())) {
                        contained = true;
                        break;
                    }
                }
                if (!contained) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            res.shellable = false;
            res.first_violation = j + 1;
            return res;
        }
    }
    return res;
}

std::string to_dot(const finite_poset& p, const render_options& opt) {
    std::string out = "digraph \"" + opt.name + "\" {\n";
    out += "  rankdir=BT;\n  edge [dir=none];\n  node [shape=plaintext];\n";
    auto lit = [&](std::size_t i) { return "n" + std::to_string(i); };
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += "  " + lit(i) + " [label=\"" + p.label(i) + "\"";
        if (opt.highlight && (*opt.highlight)[i])
            out += ", color=blue, fontcolor=blue, penwidth=2";
        out += "];\n";
    }
    if (opt.rank) {
        int top = 0;
        for (std::size_t i = 0; i < p.size(); ++i) top = std::max(top, (*opt.rank)[i]);
        for (int r = 0; r <= top; ++r) {
            std::string row;
            for (std::size_t i = 0; i < p.size(); ++i)
                if ((*opt.rank)[i] == r) row += " " + lit(i) + ";";
            if (!row.empty()) out += "  { rank=same;" + row + " }\n";
        }
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b : p.upper_covers()[a]) {
            out += "  " + lit(a) + " -> " + lit(b);
            std::string attrs;
            if (opt.edge_labels) {
                auto it = opt.edge_labels->find({a, b});
                if (it != opt.edge_labels->end()) attrs += "label=\"" + it->second + "\"";
            }
            if (opt.highlight && (*opt.highlight)[a] && (*opt.highlight)[b]) {
                if (!attrs.empty()) attrs += ", ";
                attrs += "color=blue, penwidth=2";
            }
            if (!attrs.empty()) out += " [" + attrs + "]";
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string to_json(const finite_poset& p, const render_options& opt) {
    nlohmann::ordered_json j;
    j["schema"] = "poset-shell/1";
    j["elements"] = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) j["elements"].push_back(p.label(i));
    j["edges"] = nlohmann::json::array();
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b : p.upper_covers()[a]) j["edges"].push_back({a, b});
    if (opt.rank) j["ranks"] = *opt.rank;
    if (opt.edge_labels) {
        auto arr = nlohmann::json::array();
        for (const auto& [edge, text] : *opt.edge_labels)
            arr.push_back({edge.first, edge.second, text});
        j["edge_labels"] = arr;
    }
    if (opt.highlight) {
        auto arr = nlohmann::json::array();
        for (std::size_t i = 0; i < p.size(); ++i)
            if ((*opt.highlight)[i]) arr.push_back(i);
        j["highlighted"] = arr;
    }
    return j.dump();
}

} // namespace posets
