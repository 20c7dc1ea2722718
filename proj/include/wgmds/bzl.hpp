#pragma once

// BZL patterns for types A and C along the nice decomposition of w0.
//
// Entries b_1..b_N are indexed in word order: b_1 is the single entry of the
// bottom row, and row m (from the bottom) holds the letters of the m-th nice
// segment.  Inside a row the entries weakly decrease from left to right.
//
//   phi_j : b_j >= (right neighbour in the row, or 0)
//   psi_j : b_j <= < lam - sum_{k>j} b_k alpha_{i_k}, alpha_{i_j}^vee >
//
// An entry is circled when phi_j is tight and boxed when psi_j is tight.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgmds/root_system.hpp"
#include "wgmds/weyl.hpp"

namespace wgmds {

  struct PatternShape {
    RootSystem       rs;
    Word             labels;     // labels[j-1] = i_j
    std::vector<int> row;        // row[j-1] = row of b_j, counted from the bottom
    std::vector<int> row_start;  // row_start[m-1] = first position of row m (1-based)
    std::vector<int> right;      // right[j-1] = position of the right neighbour, or 0

    Family family() const noexcept {
      return rs.family();
    }
    int rank() const noexcept {
      return rs.rank();
    }
    std::size_t size() const noexcept {
      return labels.size();
    }
    int row_length(int m) const;
  };

  // Throws UnsupportedFamily for anything but A and C, InvalidRank as usual.
  PatternShape pattern_shape(Family family, int rank);

  struct Decoration {
    bool circled{false};
    bool boxed{false};
    friend bool operator==(Decoration const&, Decoration const&) = default;
  };

  struct BZLPattern {
    IntVec                  b;
    std::vector<Decoration> deco;
    Weight                  lambda;
    friend bool operator==(BZLPattern const&, BZLPattern const&) = default;
  };

  enum class Stability { Stable, Unstable };

  // psi bound for position j (1-based) given b_{j+1}, ..., b_N.
  int psi_bound(PatternShape const& shape, Weight const& lam, IntVec const& b, int j);

  // Visits every lattice point of the cone + polytope for lam, depth first
  // from b_N down to b_1, in lexicographic order of (b_N, ..., b_1).
  // Throws NonDominantWeight.
  void for_each_pattern(PatternShape const&                        shape,
                        Weight const&                              lam,
                        std::function<void(IntVec const&)> const& visit);

  std::vector<BZLPattern> enumerate_crystal(PatternShape const& shape, Weight const& lam);

  // Throws InfeasibleEntries when b violates a cone or polytope inequality.
  BZLPattern decorate(PatternShape const& shape, Weight const& lam, IntVec const& b);

  Stability classify(BZLPattern const& pattern);

  // lam - sum_j b_j alpha_{i_j}, in the basis of fundamental weights.
  Weight weight_of(PatternShape const& shape, Weight const& lam, IntVec const& b);

  // The unique stable pattern with w_v = w.  Throws NonStrictlyDominant.
  BZLPattern stable_from_weyl(PatternShape const& shape, Weight const& lam, WeylElement const& w);

  // s_{i_1}^{e_1} ... s_{i_N}^{e_N} with e_j = 1 on boxed entries.  Throws NotStable.
  WeylElement weyl_from_stable(PatternShape const& shape, BZLPattern const& pattern);
  Word        sign_word(PatternShape const& shape, BZLPattern const& pattern);

  struct BoundReport {
    int         bound{0};  // <lam, alpha_0^vee>
    std::size_t patterns{0};
    std::size_t above_bound{0};
    std::size_t at_bound_unboxed{0};
    std::size_t circled_then_boxed{0};           // patterns with such an adjacent pair
    std::size_t circled_then_boxed_stable{0};    // of those, how many were stable

    bool ok() const noexcept {
      return above_bound == 0 && at_bound_unboxed == 0 && circled_then_boxed_stable == 0;
    }
  };

  // Checks the max-entry bound with forced boxing and the instability of an
  // adjacent (circled, boxed) pair over the whole crystal.
  BoundReport max_entry_bound_check(PatternShape const& shape, Weight const& lam);

  // Rows are listed from the top (row r) down; type A rows are right-aligned,
  // type C rows centred.  Marks follow each entry: ○ circled, □ boxed, ◎ both
  // (o, #, @ when `unicode` is false).
  std::string pretty_print(PatternShape const& shape, BZLPattern const& pattern, bool unicode = true);

  // Rows listed from the bottom: rows[m-1] are the entries of row m.
  nlohmann::json pattern_to_json(PatternShape const& shape, BZLPattern const& pattern);

}  // namespace wgmds
