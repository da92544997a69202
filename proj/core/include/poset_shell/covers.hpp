#ifndef POSET_SHELL_COVERS_HPP
#define POSET_SHELL_COVERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poset_shell/rook.hpp"

namespace posets {

/*
  Rise machinery on permutations.  A rise of sigma is a pair i < j with
  sigma(i) < sigma(j); it is free when no k strictly between splits it.
  The type records whether each endpoint is a fixed point (f), an
  exceedance (e) or a defect (d); ee-rises are split into crossing
  (i < s(i) < j < s(j)) and non-crossing (i < j < s(i) < s(j)).
*/
enum class rise_type { ff, fe, ef, ee_crossing, ee_noncrossing, ed, fd, df, dd, de };

const char* rise_type_name(rise_type t);

struct rise {
    int i = 0, j = 0; // 1-based positions, i < j
    rise_type type = rise_type::ff;
    bool is_free = false;

    auto operator<=>(const rise&) const = default;
};

// All rises of a full permutation, sorted by (i, j).
std::vector<rise> rises(const rook& sigma);

// A rise of an involution is suitable when it is free and its type is
// one of ff, fe, ef, ee (either kind), ed.
bool is_suitable(const rise& r);

// All suitable rises of a full involution, sorted by (i, j).
// Throws on non-involutions.
std::vector<rise> suitable_rises(const rook& sigma);

// Incitti's covering transformation: the unique involution covering
// sigma in the Bruhat order associated with the suitable rise (i, j).
// Throws if r is not a suitable rise of sigma.
rook ct(const rook& sigma, const rise& r);

// Zero rows coincide with zero columns on a partial involution; this is
// the common support, as 1-based column indices.
std::vector<int> support(const partial_involution& x);

// Full involution obtained by deleting the zero rows and columns.
rook compress(const partial_involution& x);

// Inverse of compress: place the involution back on the given support.
partial_involution embed_involution(const rook& involution, const std::vector<int>& supp,
                                    int n);

// Suitable rises of the compressed involution, in original matrix
// indices.
std::vector<std::pair<int, int>> suitable_rise_pairs(const partial_involution& x);

/*
  Tagged classification of a P_n cover edge.  A c-cover comes from a
  covering transformation of the common compression; a d-cover moves a
  diagonal 1 down (possibly out of the matrix); an r-cover pushes an
  off-diagonal symmetric pair right/down, down/right, or collapses it
  onto the diagonal.
*/
enum class move_kind { c, d, r };

enum class r_move_variant { right_down, down_right, collapse_to_diagonal, push_out };

const char* r_move_variant_name(r_move_variant v);

struct cover_move {
    move_kind kind = move_kind::c;
    // c-cover: the rise, in original (uncompressed) indices.
    std::optional<rise> c_rise;
    // d-cover: the diagonal index the 1 is pushed from.
    int d_index = 0;
    // r-cover: column of the 1 that is pushed right and the column it
    // lands in; these two indices are also the edge label.
    int r_source_col = 0;
    int r_target_col = 0;
    r_move_variant r_variant = r_move_variant::right_down;

    // {"kind":"c"|"d"|"r","params":{...}}
    std::string json() const;
};

/*
  Move generators.  Each returns the covers of x produced by that move
  family, as (move, result) pairs sorted by result.  The *_candidates
  variants return the raw mechanical pushes; the plain versions keep
  only candidates satisfying the cover criterion — exactly the pushes
  that do not remove a suitable rise.
*/
std::vector<std::pair<cover_move, partial_involution>> c_moves(const partial_involution& x);
std::vector<std::pair<cover_move, partial_involution>> d_move_candidates(
    const partial_involution& x);
std::vector<std::pair<cover_move, partial_involution>> r_move_candidates(
    const partial_involution& x);
std::vector<std::pair<cover_move, partial_involution>> d_moves(const partial_involution& x);
std::vector<std::pair<cover_move, partial_involution>> r_moves(const partial_involution& x);

// Diagnostic for rejected pushes: the move from x to z removed a
// suitable rise of x whose endpoints both survive in the support of z.
bool removes_suitable_rise(const partial_involution& x, const partial_involution& z);

// All elements covering x in (P_n, <=): c-moves plus the filtered d- and
// r-moves, sorted.
std::vector<partial_involution> covers_of(const partial_involution& x);

// Bagno-Cherniavsky cover criterion, transposed to the working order:
// y covers x iff R(y) <=_R R(x) and D(y) = D(x) + 1.
bool is_cover_oracle(const partial_involution& x, const partial_involution& y);

// The unique move producing y from x.  Throws if (x, y) is not a cover
// or no move matches.
cover_move classify_cover(const partial_involution& x, const partial_involution& y);

} // namespace posets

#endif
