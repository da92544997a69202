#ifndef POSET_SHELL_EL_LABELING_HPP
#define POSET_SHELL_EL_LABELING_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "poset_shell/covers.hpp"
#include "poset_shell/families.hpp"
#include "poset_shell/poset.hpp"
#include "poset_shell/rook.hpp"

namespace posets {

/*
  Edge labels live in [n] x [n] with the lexicographic total order; label
  words of maximal chains are compared lexicographically over that.
*/
struct edge_label {
    int i = 0, j = 0;

    auto operator<=>(const edge_label&) const = default;
    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

// The edge labeling F on P_n covers:
//   c-cover -> the rise (i,j) of the covering transformation, in
//              original matrix indices;
//   d-cover -> (i,i) for the diagonal index pushed from;
//   r-cover -> (i,j) where i is the column of the first 1 pushed right
//              and j the column it lands in.
edge_label label_of_move(const cover_move& m);
edge_label label_cover(const partial_involution& x, const partial_involution& y);

// Label word along a saturated chain of partial involutions.
std::vector<edge_label> jordan_holder(const std::vector<partial_involution>& chain);

// Labels keyed by (lower, upper) poset indices.
using edge_labeling = std::map<std::pair<std::size_t, std::size_t>, edge_label>;

struct labeled_pinv_poset {
    std::vector<partial_involution> elements;
    finite_poset poset;
    edge_labeling labels;
};

// (P_n, <=) with the labeling attached to every Hasse edge.
labeled_pinv_poset build_labeled_pn(int n);

struct el_interval_result {
    std::size_t bottom = 0, top = 0;
    int increasing_count = 0;      // weakly increasing maximal chains (counted up to 2)
    bool lex_first_increasing = false; // the unique lex-least word is the increasing chain's

    bool ok() const { return increasing_count == 1 && lex_first_increasing; }
    auto operator<=>(const el_interval_result&) const = default;
};

struct el_report {
    std::size_t intervals_checked = 0;
    std::vector<el_interval_result> results; // one per interval, sorted by (bottom, top)

    std::vector<el_interval_result> violations() const;
    bool ok() const { return violations().empty(); }
    std::string json() const; // array of per-interval records
};

// Checks the EL conditions on every interval [x,y], x < y: exactly one
// weakly increasing maximal chain, whose Jordan-Holder word is the
// unique lexicographic minimum.  Interval checks fan out over `jobs`
// workers; the report is merged in interval order and does not depend
// on the worker count.
el_report verify_el(const finite_poset& p, const edge_labeling& labels, unsigned jobs = 1);

// (-1)^length times the number of maximal chains of [x,y] whose label
// word is strictly decreasing.  For an EL-labeled poset this equals
// mu(x,y).
long long decreasing_chain_mobius(const finite_poset& p, const edge_labeling& labels,
                                  std::size_t x, std::size_t y);

// JH words of maximal_chains(p, x, y), aligned index by index, as bare
// (i,j) pairs for order_complex_facets.
std::vector<std::vector<std::pair<int, int>>> chain_words(const finite_poset& p,
                                                          const edge_labeling& labels,
                                                          std::size_t x, std::size_t y);

} // namespace posets

#endif
