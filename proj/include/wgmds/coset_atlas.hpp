#pragma once

// Parametrizations of minimal coset representatives for braidless weights.
//
// For a braidless fundamental weight omega = omega_i, fix a reduced word
// tau_ell = s_{i_1} ... s_{i_N} of the longest minimal representative of
// W_omega \ W.  Positions 1..N of this word are the basic objects:
//
//   * the exchange class S_omega holds the permutations of positions induced
//     by swapping adjacent commuting letters;
//   * the prefix family C_omega holds the sets {sigma(1), ..., sigma(k)};
//   * f_omega sends such a set to the product of its letters, a bijection
//     C_omega -> ^omega W;
//   * the decoration graph T has an edge j -> k when the letters at j and k do
//     not commute and some sigma makes them adjacent; the predecessor-closed
//     vertex sets of T (the family G_omega) are again in bijection with
//     ^omega W.
//
// Positions are 1-based throughout.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgmds/root_system.hpp"
#include "wgmds/weyl.hpp"

namespace wgmds {

  using IndexSet    = std::vector<int>;  // sorted, 1-based positions
  using Permutation = std::vector<int>;  // entry l-1 holds sigma(l)

  inline constexpr std::size_t default_exchange_cap = 100'000;
  inline constexpr std::size_t default_orbit_cap    = 1'000'000;

  // W-orbit of a weight, breadth first from `lam`.  Throws OrbitTooLarge.
  std::vector<Weight> weight_orbit(RootSystem const& rs,
                                   Weight const&     lam,
                                   std::size_t       cap = default_orbit_cap);

  // For every mu in W.omega_i, the simple roots with <mu, alpha^vee> > 0 are
  // pairwise orthogonal.  Only s_1..s_j act when `within` = j is given.
  bool is_braidless(RootSystem const& rs,
                    int               omega_index,
                    std::size_t       cap    = default_orbit_cap,
                    std::optional<int> within = std::nullopt);

  // Greedy smallest-index ascent inside ^omega W.  Throws NotBraidless.
  Word coset_longest_word(RootSystem const& rs, int omega_index);

  // Minimal representatives of W_omega \ W, one per weight of W.omega,
  // obtained by walking the orbit downward.  Words in BFS order.
  std::vector<Word> minimal_representatives_by_orbit(RootSystem const& rs,
                                                     int               omega_index,
                                                     std::size_t cap = default_orbit_cap);

  // Adjacent-commutation class of a reduced word; nullopt when it exceeds cap.
  std::optional<std::vector<Permutation>> exchange_class(RootSystem const& rs,
                                                         Word const&       word,
                                                         std::size_t cap = default_exchange_cap);

  struct DecorationGraph {
    std::vector<int>                 labels;  // labels[v-1] = simple index at vertex v
    std::vector<std::pair<int, int>> edges;   // sorted (j, k), j < k

    std::size_t num_vertices() const noexcept {
      return labels.size();
    }
    // predecessors()[k-1] lists every j with an edge j -> k.
    std::vector<std::vector<int>> predecessors() const;
    friend bool operator==(DecorationGraph const&, DecorationGraph const&) = default;
  };

  // Hasse diagram of the order generated by j < k for non-commuting letters;
  // equals T without reference to S_omega.
  DecorationGraph heap_graph(RootSystem const& rs, Word const& word);

  class CosetAtlas {
   public:
    // Throws NotBraidless.  When `tau_word` is given it must be a reduced
    // word of the longest minimal representative (NotReduced otherwise).
    static CosetAtlas build(RootSystem const&    rs,
                            int                  omega_index,
                            std::optional<Word>  tau_word     = std::nullopt,
                            std::size_t          exchange_cap = default_exchange_cap);

    int omega_index() const noexcept {
      return _omega;
    }
    Word const& tau_ell() const noexcept {
      return _tau;
    }
    std::size_t word_length() const noexcept {
      return _tau.size();
    }
    bool exchange_class_materialized() const noexcept {
      return _exchange.has_value();
    }
    // Throws InternalInvariant if the class was too large to materialize.
    std::vector<Permutation> const& exchange_class() const;

    DecorationGraph const& graph() const noexcept {
      return _graph;
    }
    std::vector<IndexSet> const& prefix_family() const noexcept {
      return _prefixes;
    }

    bool is_prefix_set(IndexSet const& c) const;

    // Letters of C in increasing position order: a prefix of a reduced word
    // of tau_ell.  Throws NotAPrefixSet.
    Word prefix_word(IndexSet const& c) const;

   private:
    CosetAtlas() = default;

    int                                     _omega{0};
    Word                                    _tau;
    std::optional<std::vector<Permutation>> _exchange;
    std::vector<std::vector<bool>>          _below;  // _below[j][k]: j precedes k
    DecorationGraph                         _graph;
    std::vector<IndexSet>                   _prefixes;
  };

  // C_omega, read off from the exchange class.
  std::vector<IndexSet> prefix_family_from_exchange(std::vector<Permutation> const& sigmas);

  // f_omega(C) = s_{i_{sigma(1)}} ... s_{i_{sigma(k)}}.
  WeylElement f_omega(RootSystem const& rs, CosetAtlas const& atlas, IndexSet const& c);

  DecorationGraph decoration_graph(RootSystem const& rs, CosetAtlas const& atlas);

  // T built literally from the exchange class: edge j -> k when the letters do
  // not commute and some sigma has sigma(l) = j, sigma(l+1) = k.
  DecorationGraph decoration_graph_from_exchange(RootSystem const&               rs,
                                                 Word const&                     word,
                                                 std::vector<Permutation> const& sigmas);

  // G_omega: vertex sets closed under predecessors and containing vertex 1
  // when nonempty.  Sorted by size, then lexicographically.
  std::vector<IndexSet> subgraph_family(DecorationGraph const& graph);

  std::string to_dot(DecorationGraph const& graph, std::string const& name = "T");

  // One segment per j = 1..r: the longest minimal representative of
  // W_{j-1} \ W_j.  Throws UnsupportedFamily if the enumeration is not good.
  std::vector<Word> nice_decomposition(RootSystem const& rs);

  ////////////////////////////////////////////////////////////////////////
  // Explicit tuples for types A and C
  ////////////////////////////////////////////////////////////////////////

  struct DrTuple {
    IntVec a;  // a[i-1] = a_i
    friend bool operator==(DrTuple const&, DrTuple const&) = default;
    friend auto operator<=>(DrTuple const&, DrTuple const&) = default;
  };

  // Largest admissible a_i: i for type A, 2i-1 for type C.
  int dr_bound(RootSystem const& rs, int i);

  // pi_{a}: the first `a` letters of the i-th nice segment.
  Word pi_word(RootSystem const& rs, int i, int a);

  Word        dr_word(RootSystem const& rs, DrTuple const& t);
  WeylElement dr_decode(RootSystem const& rs, DrTuple const& t);
  DrTuple     dr_encode(RootSystem const& rs, WeylElement const& w);

  // Every tuple of D_r in lexicographic order.
  std::vector<DrTuple> all_dr_tuples(RootSystem const& rs);

}  // namespace wgmds
