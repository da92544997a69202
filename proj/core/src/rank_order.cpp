#include "poset_shell/rank_order.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace posets {

rank_control_matrix::rank_control_matrix(const rook& x) : n_(x.size()) {
    const std::size_t stride = static_cast<std::size_t>(n_) + 1;
    r_.assign(stride * stride, 0);
    // 2D prefix sums over the 0/1 matrix; row 0 and column 0 stay zero.
    for (int k = 1; k <= n_; ++k) {
        for (int l = 1; l <= n_; ++l) {
            const int one = (x.at(l) == k) ? 1 : 0;
            r_[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(l)] =
                at(k - 1, l) + at(k, l - 1) - at(k - 1, l - 1) + one;
        }
    }
}

std::string rank_control_matrix::str() const {
    std::string s;
    for (int k = 1; k <= n_; ++k) {
        s += '(';
        for (int l = 1; l <= n_; ++l) {
            if (l > 1) s += ' ';
            s += std::to_string(at(k, l));
        }
        s += ")\n";
    }
    return s;
}

std::string rank_control_matrix::json() const {
    std::string s = "[";
    for (int k = 1; k <= n_; ++k) {
        if (k > 1) s += ',';
        s += '[';
        for (int l = 1; l <= n_; ++l) {
            if (l > 1) s += ',';
            s += std::to_string(at(k, l));
        }
        s += ']';
    }
    s += ']';
    return s;
}

rank_control_matrix rank_control(const rook& x) { return rank_control_matrix(x); }

bool leq_entrywise(const rank_control_matrix& a, const rank_control_matrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("leq_entrywise: size mismatch");
    for (int k = 1; k <= a.size(); ++k)
        for (int l = 1; l <= a.size(); ++l)
            if (a.at(k, l) > b.at(k, l)) return false;
    return true;
}

int d_invariant(const rook& x) {
    const rank_control_matrix r(x);
    int d = 0;
    for (int i = 1; i <= x.size(); ++i)
        for (int j = i; j <= x.size(); ++j)
            if (r.at(i, j) == r.at(i - 1, j - 1)) ++d;
    return d;
}

std::vector<int> sort_desc(std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    return a;
}

bool leq_containment(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("leq_containment: length mismatch");
    const auto sa = sort_desc(a);
    const auto sb = sort_desc(b);
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (sa[i] > sb[i]) return false;
    return true;
}

namespace {

bool truncation_leq(const rook& x, const rook& y, int upto) {
    // Maintains the sorted truncations incrementally instead of
    // re-sorting each prefix.
    std::vector<int> sx, sy;
    sx.reserve(static_cast<std::size_t>(upto));
    sy.reserve(static_cast<std::size_t>(upto));
    for (int k = 1; k <= upto; ++k) {
        sx.insert(std::upper_bound(sx.begin(), sx.end(), x.at(k), std::greater<int>()),
                  x.at(k));
        sy.insert(std::upper_bound(sy.begin(), sy.end(), y.at(k), std::greater<int>()),
                  y.at(k));
        for (int i = 0; i < k; ++i)
            if (sx[static_cast<std::size_t>(i)] > sy[static_cast<std::size_t>(i)])
                return false;
    }
    return true;
}

} // namespace

bool leq_rooks(const rook& x, const rook& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("leq_rooks: size mismatch");
    return truncation_leq(x, y, x.size());
}

bool leq_perms(const rook& x, const rook& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("leq_perms: size mismatch");
    if (!x.is_permutation() || !y.is_permutation())
        throw std::invalid_argument("leq_perms: arguments must be full permutations");
    return truncation_leq(x, y, x.size() - 1);
}

bool leq_partial_involutions(const partial_involution& x, const partial_involution& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("leq_partial_involutions: size mismatch");
    return leq_entrywise(rank_control(y.as_rook()), rank_control(x.as_rook()));
}

namespace {

long long inversions(const std::vector<int>& w) {
    long long inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

} // namespace

bool bruhat_perm_oracle(const rook& x, const rook& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("bruhat_perm_oracle: size mismatch");
    if (x.size() > 6)
        throw std::invalid_argument("bruhat_perm_oracle: guarded to n <= 6");
    if (!x.is_permutation() || !y.is_permutation())
        throw std::invalid_argument("bruhat_perm_oracle: arguments must be permutations");
    if (x == y) return true;
    const long long target_inv = inversions(y.word());
    // BFS over inversion-increasing transposition covers starting at x.
    std::set<std::vector<int>> seen{x.word()};
    std::deque<std::vector<int>> queue{x.word()};
    const std::size_t n = x.word().size();
    while (!queue.empty()) {
        std::vector<int> w = queue.front();
        queue.pop_front();
        const long long inv = inversions(w);
        if (inv >= target_inv) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (w[i] >= w[j]) continue;
                std::swap(w[i], w[j]);
                if (inversions(w) == inv + 1) {
                    if (w == y.word()) return true;
                    if (seen.insert(w).second) queue.push_back(w);
                }
                std::swap(w[i], w[j]);
            }
        }
    }
    return false;
}

order_agreement compare_orders_on_pn(int n) {
    order_agreement agg;
    const auto pn = enumerate_partial_involutions(n);
    for (const auto& x : pn) {
        for (const auto& y : pn) {
            ++agg.pairs;
            const bool r = leq_rooks(x.as_rook(), y.as_rook());
            const bool p = leq_partial_involutions(x, y);
            if (r && p) ++agg.both;
            if (r && !p) ++agg.only_rooks;
            if (!r && p) ++agg.only_pinv;
        }
    }
    return agg;
}

} // namespace posets
