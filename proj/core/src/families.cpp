#include "poset_shell/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "poset_shell/rank_order.hpp"

namespace posets {

namespace {

template <class Elem>
std::vector<std::string> labels_of(const std::vector<Elem>& elems) {
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.str());
    return out;
}

// Bruhat reachability on a fixed ground set of permutations, computed
// once per source by BFS over inversion-increasing transposition covers.
// Independent of the rank-control machinery on purpose.
std::vector<std::vector<char>> bruhat_closure(const std::vector<rook>& perms) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i].word()] = i;
    auto inversions = [](const std::vector<int>& w) {
        int inv = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inv;
        return inv;
    };
    // The ground set may be a strict subset of S_n (e.g. the involutions);
    // reachability must still walk through all of S_n.
    const std::size_t m = perms.size();
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (std::size_t src = 0; src < m; ++src) {
        std::set<std::vector<int>> seen{perms[src].word()};
        std::deque<std::vector<int>> queue{perms[src].word()};
        while (!queue.empty()) {
            std::vector<int> w = queue.front();
            queue.pop_front();
            auto it = index.find(w);
            if (it != index.end()) reach[src][it->second] = 1;
            const int inv = inversions(w);
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    if (w[i] >= w[j]) continue;
                    std::swap(w[i], w[j]);
                    if (inversions(w) == inv + 1 && !seen.count(w)) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                    std::swap(w[i], w[j]);
                }
            }
        }
    }
    return reach;
}

} // namespace

rook_poset build_rn(int n) {
    rook_poset rp;
    rp.elements = enumerate_rooks(n);
    rp.poset = finite_poset::build(labels_of(rp.elements), [&](std::size_t a, std::size_t b) {
        return leq_rooks(rp.elements[a], rp.elements[b]);
    });
    return rp;
}

rook_poset build_rnk(int n, int k) {
    rook_poset rp;
    rp.elements = enumerate_rooks(n, k);
    rp.poset = finite_poset::build(labels_of(rp.elements), [&](std::size_t a, std::size_t b) {
        return leq_rooks(rp.elements[a], rp.elements[b]);
    });
    return rp;
}

pinv_poset build_pn(int n) {
    pinv_poset pp;
    pp.elements = enumerate_partial_involutions(n);
    pp.poset = finite_poset::build(labels_of(pp.elements), [&](std::size_t a, std::size_t b) {
        return leq_partial_involutions(pp.elements[a], pp.elements[b]);
    });
    return pp;
}

pinv_poset build_pnk(int n, int k) {
    pinv_poset pp;
    pp.elements = enumerate_partial_involutions(n, k);
    pp.poset = finite_poset::build(labels_of(pp.elements), [&](std::size_t a, std::size_t b) {
        return leq_partial_involutions(pp.elements[a], pp.elements[b]);
    });
    return pp;
}

rook_poset build_sn_bruhat(int n) {
    rook_poset rp;
    rp.elements = enumerate_permutations(n);
    const auto reach = bruhat_closure(rp.elements);
    rp.poset = finite_poset::build(labels_of(rp.elements), [&](std::size_t a, std::size_t b) {
        return reach[a][b] != 0;
    });
    return rp;
}

pinv_poset build_in_bruhat(int n) {
    pinv_poset pp;
    pp.elements = enumerate_involutions(n);
    std::vector<rook> perms;
    perms.reserve(pp.elements.size());
    for (const auto& x : pp.elements) perms.push_back(x.as_rook());
    const auto reach = bruhat_closure(perms);
    pp.poset = finite_poset::build(labels_of(pp.elements), [&](std::size_t a, std::size_t b) {
        return reach[a][b] != 0;
    });
    return pp;
}

} // namespace posets
