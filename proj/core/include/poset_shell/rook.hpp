#ifndef POSET_SHELL_ROOK_HPP
#define POSET_SHELL_ROOK_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posets {

/*
  A rook is a partial permutation matrix, stored in one-line notation:
  word a_1..a_n where a_j is the row index of the 1 in column j, or 0 if
  column j is empty.  The word is the canonical representation; the 0/1
  matrix is a derived view.  All positions and values are 1-based, 0 is
  reserved for "empty column".
*/
class rook {
public:
    rook() = default;
    explicit rook(std::vector<int> word);

    static rook zero(int n);
    static rook identity(int n);

    // m is an n x n 0/1 matrix, m[i][j] with 0-based indices.
    // Rejects matrices with more than one 1 in a row or column.
    static rook from_matrix(const std::vector<std::vector<int>>& m);

    int size() const { return static_cast<int>(word_.size()); }
    // Row of the 1 in column j (1-based), or 0 if the column is empty.
    int at(int j) const { return word_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& word() const { return word_; }

    std::vector<std::vector<int>> to_matrix() const;

    // Number of nonzero entries (the k of R_{n,k}).
    int ones() const;
    bool is_permutation() const { return ones() == size(); }
    // a_i = j with j != 0 implies a_j = i (the matrix equals its transpose).
    bool is_symmetric() const;

    std::string str() const;

    auto operator<=>(const rook&) const = default;

private:
    std::vector<int> word_;
};

// Parses "(3,0,4,0)"; whitespace between tokens is accepted.
rook parse_rook(std::string_view s);

/*
  A partial involution is a symmetric rook.  P_n is the set of all of
  them, I_n = P_{n,n} the invertible (permutation) ones.
*/
class partial_involution {
public:
    partial_involution() = default;
    explicit partial_involution(rook r);

    const rook& as_rook() const { return r_; }
    int size() const { return r_.size(); }
    int at(int j) const { return r_.at(j); }
    const std::vector<int>& word() const { return r_.word(); }
    int ones() const { return r_.ones(); }
    bool is_permutation() const { return r_.is_permutation(); }
    std::string str() const { return r_.str(); }

    auto operator<=>(const partial_involution&) const = default;

private:
    rook r_;
};

partial_involution parse_partial_involution(std::string_view s);

// All k-rooks of size n in lexicographic order of their words.
std::vector<rook> enumerate_rooks(int n, int k);
// All rooks of size n (every k), lexicographic.
std::vector<rook> enumerate_rooks(int n);
std::vector<rook> enumerate_permutations(int n);

std::vector<partial_involution> enumerate_partial_involutions(int n, int k);
std::vector<partial_involution> enumerate_partial_involutions(int n);
// I_n: the invertible involutions.
std::vector<partial_involution> enumerate_involutions(int n);

// tau_n, the number of invertible involutions, by enumeration; tau_0 = 1.
long long involution_count(int n);

// k! * C(n,k)^2
long long rook_count_formula(int n, int k);

// (|R_{n,n-1} u R_{n,n}|, |P_{n,n-1} u P_{n,n}|), by enumeration.
std::pair<long long, long long> union_cardinalities(int n);

// Fixed points, exceedances and defects of a full permutation.
struct index_partition {
    std::vector<int> fixed;
    std::vector<int> exceedance;
    std::vector<int> defect;
};

index_partition compute_index_partition(const rook& sigma);

} // namespace posets

#endif
