#include "poset_shell/rook.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace posets {

namespace {

void validate_word(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 0 || v > n)
            throw std::invalid_argument("rook word entry out of range 0.." +
                                        std::to_string(n) + ": " + std::to_string(v));
        if (v != 0) {
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("rook word repeats nonzero value " +
                                            std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

} // namespace

rook::rook(std::vector<int> word) : word_(std::move(word)) { validate_word(word_); }

rook rook::zero(int n) { return rook(std::vector<int>(static_cast<std::size_t>(n), 0)); }

rook rook::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = j;
    return rook(std::move(w));
}

rook rook::from_matrix(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::vector<int> row_count(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("from_matrix: matrix is not square");
        for (int j = 0; j < n; ++j) {
            const int e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e == 0) continue;
            if (e != 1)
                throw std::invalid_argument("from_matrix: entries must be 0 or 1");
            if (w[static_cast<std::size_t>(j)] != 0)
                throw std::invalid_argument("from_matrix: column " + std::to_string(j + 1) +
                                            " has more than one 1");
            if (++row_count[static_cast<std::size_t>(i)] > 1)
                throw std::invalid_argument("from_matrix: row " + std::to_string(i + 1) +
                                            " has more than one 1");
            w[static_cast<std::size_t>(j)] = i + 1;
        }
    }
    return rook(std::move(w));
}

std::vector<std::vector<int>> rook::to_matrix() const {
    const int n = size();
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 1; j <= n; ++j) {
        const int i = at(j);
        if (i != 0) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
    }
    return m;
}

int rook::ones() const {
    int k = 0;
    for (int v : word_)
        if (v != 0) ++k;
    return k;
}

bool rook::is_symmetric() const {
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        const int j = at(i);
        if (j != 0 && at(j) != i) return false;
    }
    return true;
}

std::string rook::str() const {
    std::string s = "(";
    for (std::size_t idx = 0; idx < word_.size(); ++idx) {
        if (idx > 0) s += ',';
        s += std::to_string(word_[idx]);
    }
    s += ')';
    return s;
}

rook parse_rook(std::string_view s) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> rook {
        throw std::invalid_argument("parse_rook: " + why + " in '" + std::string(s) + "'");
    };
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') return fail("expected '('");
    ++pos;
    std::vector<int> w;
    skip_ws();
    if (pos < s.size() && s[pos] == ')') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) return fail("expected integer");
            w.push_back(std::stoi(std::string(s.substr(start, pos - start))));
            skip_ws();
            if (pos >= s.size()) return fail("unterminated list");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            return fail("expected ',' or ')'");
        }
    }
    skip_ws();
    if (pos != s.size()) return fail("trailing characters");
    return rook(std::move(w));
}

partial_involution::partial_involution(rook r) : r_(std::move(r)) {
    if (!r_.is_symmetric())
        throw std::invalid_argument("not a partial involution: " + r_.str());
}

partial_involution parse_partial_involution(std::string_view s) {
    return partial_involution(parse_rook(s));
}

namespace {

void enumerate_words(int n, int k, std::vector<int>& word, std::vector<char>& used,
                     int placed, std::vector<rook>& out) {
    const int j = static_cast<int>(word.size());
    if (j == n) {
        if (placed == k) out.push_back(rook(word));
        return;
    }
    const int remaining = n - j;
    // Zero first keeps the output lexicographic.
    if (placed + remaining - 1 >= k) {
        word.push_back(0);
        enumerate_words(n, k, word, used, placed, out);
        word.pop_back();
    }
    if (placed < k) {
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            word.push_back(v);
            enumerate_words(n, k, word, used, placed + 1, out);
            word.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    }
}

} // namespace

std::vector<rook> enumerate_rooks(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("enumerate_rooks: need 0 <= k <= n");
    std::vector<rook> out;
    std::vector<int> word;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    word.reserve(static_cast<std::size_t>(n));
    enumerate_words(n, k, word, used, 0, out);
    return out;
}

std::vector<rook> enumerate_rooks(int n) {
    std::vector<rook> out;
    for (int k = 0; k <= n; ++k) {
        auto part = enumerate_rooks(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<rook> enumerate_permutations(int n) { return enumerate_rooks(n, n); }

std::vector<partial_involution> enumerate_partial_involutions(int n, int k) {
    std::vector<partial_involution> out;
    for (const rook& r : enumerate_rooks(n, k))
        if (r.is_symmetric()) out.push_back(partial_involution(r));
    return out;
}

std::vector<partial_involution> enumerate_partial_involutions(int n) {
    std::vector<partial_involution> out;
    for (int k = 0; k <= n; ++k) {
        auto part = enumerate_partial_involutions(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<partial_involution> enumerate_involutions(int n) {
    return enumerate_partial_involutions(n, n);
}

long long involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution_count: n must be >= 0");
    if (n == 0) return 1; // by convention
    return static_cast<long long>(enumerate_involutions(n).size());
}

long long rook_count_formula(int n, int k) {
    long long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    long long binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
    return fact * binom * binom;
}

std::pair<long long, long long> union_cardinalities(int n) {
    if (n < 1) throw std::invalid_argument("union_cardinalities: n must be >= 1");
    const long long r = static_cast<long long>(enumerate_rooks(n, n - 1).size() +
                                               enumerate_rooks(n, n).size());
    const long long p =
        static_cast<long long>(enumerate_partial_involutions(n, n - 1).size() +
                               enumerate_partial_involutions(n, n).size());
    return {r, p};
}

index_partition compute_index_partition(const rook& sigma) {
    if (!sigma.is_permutation())
        throw std::invalid_argument("index_partition: not a permutation: " + sigma.str());
    index_partition p;
    for (int i = 1; i <= sigma.size(); ++i) {
        const int v = sigma.at(i);
        if (v == i)
            p.fixed.push_back(i);
        else if (v > i)
            p.exceedance.push_back(i);
        else
            p.defect.push_back(i);
    }
    return p;
}

} // namespace posets
