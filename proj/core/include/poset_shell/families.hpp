#ifndef POSET_SHELL_FAMILIES_HPP
#define POSET_SHELL_FAMILIES_HPP

#include <vector>

#include "poset_shell/poset.hpp"
#include "poset_shell/rook.hpp"

namespace posets {

/*
  Ready-made posets for the ground sets the library works with.  Elements
  are listed in lexicographic word order; the poset element indices refer
  into that list.  Subposets R_{n,k} and P_{n,k} carry their own Hasse
  diagrams and rank functions obtained from the restricted order, not
  the ambient one.
*/

struct rook_poset {
    std::vector<rook> elements;
    finite_poset poset;
};

struct pinv_poset {
    std::vector<partial_involution> elements;
    finite_poset poset;
};

// (R_n, <=): Bruhat-Chevalley-Renner order, zero rook at the bottom.
rook_poset build_rn(int n);
rook_poset build_rnk(int n, int k);

// (P_n, <=): opposite of the closure order, identity at the bottom.
pinv_poset build_pn(int n);
pinv_poset build_pnk(int n, int k);

// (S_n, <=): classical Bruhat order via the transposition-cover oracle.
rook_poset build_sn_bruhat(int n);
// (I_n, <=): Bruhat order restricted to involutions, same oracle.
pinv_poset build_in_bruhat(int n);

} // namespace posets

#endif
