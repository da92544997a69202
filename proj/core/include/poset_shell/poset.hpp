#ifndef POSET_SHELL_POSET_HPP
#define POSET_SHELL_POSET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace posets {

// Fixed-capacity bit set used for the leq incidence rows.  At desk scale
// we can afford the full incidence matrix, which makes comparisons,
// interval extraction and the parity counts cheap.
class bitrow {
public:
    bitrow() = default;
    explicit bitrow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t capacity() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const;
    bool any() const;
    bool intersects(const bitrow& o) const;
    bool is_subset_of(const bitrow& o) const;
    std::size_t count_and(const bitrow& o) const;

    bitrow& operator&=(const bitrow& o);
    bitrow& operator|=(const bitrow& o);
    friend bitrow operator&(bitrow a, const bitrow& b) { return a &= b; }

    // Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const bitrow&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct graded_result {
    bool graded = false;
    std::vector<int> rank;  // valid iff graded
    std::string witness;    // human-readable failure description
    // When the failure is a pair of unequal saturated chains, both are
    // reported (element indices, bottom to top).
    std::vector<std::size_t> chain_a, chain_b;
};

struct eulerian_result {
    bool parity_eulerian = false; // odd-rank count == even-rank count in every [x,y], x < y
    bool mobius_eulerian = false; // mu(x,y) == (-1)^(rank(y)-rank(x)) for all x <= y
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    // The two tests are proved equivalent; we still run both and refuse
    // to answer if they ever disagree.
    bool eulerian() const;
};

/*
  A finite poset over indexed elements.  Construction verifies that the
  supplied relation is a partial order and stores the full incidence
  matrix together with its transitive reduction (the Hasse diagram).
  Once built the poset is immutable; all queries are const and safe to
  run concurrently.
*/
class finite_poset {
public:
    // leq(a, b) must decide a <= b for element indices a, b.  Throws
    // std::invalid_argument with a witness if the relation fails to be
    // reflexive, antisymmetric or transitive.
    static finite_poset build(std::vector<std::string> labels,
                              const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    bool leq(std::size_t a, std::size_t b) const { return up_set_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    // True iff b covers a.
    bool covers(std::size_t a, std::size_t b) const;

    const std::vector<std::vector<std::size_t>>& upper_covers() const { return up_; }
    const std::vector<std::vector<std::size_t>>& lower_covers() const { return down_; }
    std::size_t hasse_edge_count() const;

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    // Members z with x <= z <= y.  Throws if !leq(x, y).
    bitrow interval(std::size_t x, std::size_t y) const;

    // All saturated chains from x to y, each reported bottom to top
    // (including both endpoints), in lexicographic order of their index
    // sequences.  [x,x] yields the single chain {x}.
    std::vector<std::vector<std::size_t>> maximal_chains(std::size_t x, std::size_t y) const;

    // mu(x, y) for every y; entries with !leq(x, y) are 0.
    std::vector<long long> mobius_row(std::size_t x) const;
    long long mobius(std::size_t x, std::size_t y) const;

    graded_result graded() const;

private:
    std::vector<std::string> labels_;
    std::vector<bitrow> up_set_;   // up_set_[a] = { b : a <= b }
    std::vector<bitrow> down_set_; // down_set_[b] = { a : a <= b }
    std::vector<std::vector<std::size_t>> up_, down_; // cover lists, sorted
};

graded_result is_graded(const finite_poset& p);

// Runs both Eulerian tests (parity balance over proper intervals and
// mu = (-1)^length) against the given rank function.
eulerian_result is_eulerian(const finite_poset& p, const std::vector<int>& rank);
// Convenience: computes the rank via is_graded; throws if ungraded.
eulerian_result is_eulerian(const finite_poset& p);

/*
  Order complex machinery.  A facet is the vertex list of a maximal chain
  of the open interval (x, y), listed bottom to top.
*/

// Facets of the order complex of the open interval (x, y).  When
// jh_words is supplied (one word per closed maximal chain, aligned with
// maximal_chains(x, y)), facets are ordered by lexicographic word with
// the chain itself as tie-break; otherwise enumeration order is used.
// Throws on intervals of length < 2.
std::vector<std::vector<std::size_t>> order_complex_facets(
    const finite_poset& p, std::size_t x, std::size_t y,
    const std::vector<std::vector<std::pair<int, int>>>* jh_words = nullptr);

struct shelling_result {
    bool shellable = false;
    // 1-based index of the first facet whose intersection condition
    // fails; 0 when shellable.
    std::size_t first_violation = 0;
};

// Checks the shelling condition directly: for each j >= 2 the
// intersection of facet j with the union of the earlier sub-complexes
// must be pure of dimension dim F_j - 1.  Facets must all have the same
// dimension.
shelling_result verify_shelling(const std::vector<std::vector<std::size_t>>& facets);

struct render_options {
    const std::vector<int>* rank = nullptr;
    // Edge labels keyed by (lower, upper) element index.
    const std::map<std::pair<std::size_t, std::size_t>, std::string>* edge_labels = nullptr;
    const std::vector<bool>* highlight = nullptr;
    std::string name = "poset";
};

// Graphviz DOT; nodes carry the element labels, ranks become same-rank
// clusters, highlighted nodes/edges are drawn blue and bold.
std::string to_dot(const finite_poset& p, const render_options& opt = {});
// {"schema":"poset-shell/1","elements":[...],"edges":[[i,j],...],"ranks":[...]}
std::string to_json(const finite_poset& p, const render_options& opt = {});

} // namespace posets

#endif
