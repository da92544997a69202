#ifndef POSET_SHELL_EMBEDDINGS_HPP
#define POSET_SHELL_EMBEDDINGS_HPP

#include <array>
#include <string>
#include <vector>

#include "poset_shell/el_labeling.hpp"
#include "poset_shell/families.hpp"
#include "poset_shell/poset.hpp"
#include "poset_shell/rook.hpp"

namespace posets {

// psi: R_{n,n-1} u R_{n,n} -> S_{n+1},
// x = (a_1..a_n) |-> (a_1+1, ..., a_n+1, a_x) where a_x is the unique
// member of [n+1] missing from the shifted word (a_x = 1 when x is a
// permutation).  Throws unless x has n or n-1 nonzero entries.
rook psi(const rook& x);

// phi: P_{n,n-1} u P_{n,n} -> I_{n+1}.  If a_i = 0 then b_i = n+1 and
// b_{n+1} is the unique member of {0..n} missing from the word; for a
// permutation, b_{n+1} = n+1.  Throws unless x has n or n-1 nonzero
// entries; the result is checked to be an involution.
partial_involution phi(const partial_involution& x);

struct isomorphism_report {
    bool bijective = false;
    bool order_preserving_forward = false;  // x <= y  =>  f(x) <= f(y)
    bool order_preserving_backward = false; // f(x) <= f(y)  =>  x <= y
    std::string witness; // first counterexample found, if any

    bool ok() const {
        return bijective && order_preserving_forward && order_preserving_backward;
    }
    std::string json() const;
};

// image_index[i] is the codomain index of domain element i, or
// npos-style out-of-range to mark a miss.  Checks bijectivity and order
// preservation in both directions over all pairs.
isomorphism_report verify_isomorphism(const std::vector<std::size_t>& image_index,
                                      const finite_poset& domain,
                                      const finite_poset& codomain);

struct embedding_check {
    isomorphism_report report;
    long long domain_size = 0;
    long long expected_size = 0; // (n+1)! resp. tau_{n+1}
};

// psi on (R_{n,n-1} u R_{n,n}, <=) against (S_{n+1}, Bruhat oracle).
embedding_check check_psi_embedding(int n);
// phi on (P_{n,n-1} u P_{n,n}, <=) against (I_{n+1}, Bruhat oracle).
embedding_check check_phi_embedding(int n);

// The three-element intervals witnessing failure of the Eulerian
// property in R_{n,k} and P_{n,k} for k <= n-2.
struct counterexample_triple {
    std::array<rook, 3> elements; // bottom, middle, top of the claimed interval
    bool interval_is_three = false;
    long long interval_size = 0;
};

counterexample_triple eulerian_counterexample_rooks(int n, int k);
counterexample_triple eulerian_counterexample_pinv(int n, int k);

struct transported_labeling {
    pinv_poset target;   // I_{n+1} with the Bruhat-oracle order
    edge_labeling labels; // pulled back through phi^{-1}
};

// Pulls the P_n labeling back along phi onto I_{n+1}.  Throws if phi
// fails to be an isomorphism at this n.
transported_labeling transport_labeling_to_in1(int n);

} // namespace posets

#endif
