#ifndef POSET_SHELL_RANK_ORDER_HPP
#define POSET_SHELL_RANK_ORDER_HPP

#include <compare>
#include <string>
#include <vector>

#include "poset_shell/rook.hpp"

namespace posets {

/*
  Rank-control matrix of a rook: entry (k,l) is the rank of the
  upper-left k x l submatrix, which for a rook matrix equals the number
  of its 1s inside that corner.  The zero border row/column (k = 0 or
  l = 0) is stored explicitly so the D-invariant and cover checks never
  special-case the first row or column.
*/
class rank_control_matrix {
public:
    explicit rank_control_matrix(const rook& x);

    int size() const { return n_; }
    // 0 <= k,l <= n; at(0,l) == at(k,0) == 0.
    int at(int k, int l) const {
        return r_[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ + 1) +
                  static_cast<std::size_t>(l)];
    }

    // Parenthesized n x n block, one row per line, matching the usual
    // printed layout.
    std::string str() const;
    // Row-major n x n integer array, e.g. "[[1,1],[1,2]]".
    std::string json() const;

    auto operator<=>(const rank_control_matrix&) const = default;

private:
    int n_ = 0;
    std::vector<int> r_; // (n+1) x (n+1), row-major
};

rank_control_matrix rank_control(const rook& x);

// a <=_R b : every entry of a is <= the corresponding entry of b.
bool leq_entrywise(const rank_control_matrix& a, const rank_control_matrix& b);

// D(x) = #{(i,j) : 1 <= i <= j <= n, r_ij = r_{i-1,j-1}}, zero border.
// This is the rank function of (P_n, <=).
int d_invariant(const rook& x);

// Non-increasing rearrangement of a.
std::vector<int> sort_desc(std::vector<int> a);

// The containment ordering <=_c: componentwise comparison of the
// non-increasing rearrangements.
bool leq_containment(const std::vector<int>& a, const std::vector<int>& b);

// Bruhat-Chevalley-Renner order on R_n; the zero rook is the minimum.
// x <= y iff every truncation x(k) is <=_c y(k), k = 1..n.
bool leq_rooks(const rook& x, const rook& y);

// Same order restricted to permutations; truncations k = 1..n-1 suffice.
bool leq_perms(const rook& x, const rook& y);

// The working order on P_n: x <= y iff R(y) <=_R R(x) entrywise.  The
// identity is the minimum and the zero rook the maximum; larger elements
// have smaller rank-control matrices.
bool leq_partial_involutions(const partial_involution& x, const partial_involution& y);

// Classical Bruhat order on permutations, decided independently of the
// rank/truncation machinery: reachability through inversion-increasing
// transposition covers.  Guarded to n <= 6.
bool bruhat_perm_oracle(const rook& x, const rook& y);

// How often leq_rooks restricted to P_n agrees with the working order on
// P_n.  Reported for the curious; nothing in the artifact depends on it.
struct order_agreement {
    long long pairs = 0;
    long long both = 0;          // related under both orders
    long long only_rooks = 0;    // x <= y in R_n only
    long long only_pinv = 0;     // x <= y in (P_n, <=) only
};
order_agreement compare_orders_on_pn(int n);

} // namespace posets

#endif
