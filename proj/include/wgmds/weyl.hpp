#pragma once

// Weyl group elements as integer matrices acting on simple-root coordinates.
//
// Column j of the matrix is the image of alpha_j.  Equality of elements is
// equality of matrices; reduced words are derived data.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wgmds/root_system.hpp"

namespace wgmds {

  // A word in the simple reflections; letters are 1-based indices.
  using Word = std::vector<int>;

  class WeylElement {
   public:
    WeylElement() = default;

    static WeylElement identity(int rank);

    // Row-major r x r matrix; the caller guarantees it is a group element.
    static WeylElement from_matrix(int rank, std::vector<int> row_major);

    int rank() const noexcept {
      return _rank;
    }

    // Entry (row, col), both 0-based.
    int at(int row, int col) const {
      return _m[static_cast<std::size_t>(row * _rank + col)];
    }

    std::vector<int> const& data() const noexcept {
      return _m;
    }

    // Image of a vector of simple-root coordinates.
    IntVec apply(IntVec const& root) const;

    // Image of alpha_i (1-based) in simple-root coordinates.
    IntVec column(int i) const;

    bool is_identity() const noexcept;

    friend WeylElement operator*(WeylElement const& x, WeylElement const& y);
    friend bool operator==(WeylElement const&, WeylElement const&) = default;
    friend auto operator<=>(WeylElement const&, WeylElement const&) = default;

    struct Hash {
      std::size_t operator()(WeylElement const& w) const noexcept;
    };

   private:
    int              _rank{0};
    std::vector<int> _m;
  };

  WeylElement simple_reflection(RootSystem const& rs, int i);
  WeylElement word_to_element(RootSystem const& rs, Word const& word);

  // w * s_i, computed column-wise.
  WeylElement times_simple(RootSystem const& rs, WeylElement const& w, int i);

  // True iff w(alpha_i) is a negative root, i.e. l(w s_i) < l(w).
  bool is_right_descent(WeylElement const& w, int i);

  // Weight action in the basis of fundamental weights.
  Weight apply_to_weight(RootSystem const& rs, WeylElement const& w, Weight const& lam);
  Weight apply_word_to_weight(RootSystem const& rs, Word const& word, Weight const& lam);

  // Greedy descent: repeatedly strip the smallest right descent.
  Word reduced_word(RootSystem const& rs, WeylElement const& w);

  WeylElement inverse(RootSystem const& rs, WeylElement const& w);

  // |{alpha > 0 : w(alpha) < 0}|.
  std::size_t length(RootSystem const& rs, WeylElement const& w);

  // Phi(w) for w = s_{i_1} ... s_{i_N} in the order
  //   alpha_{i_N}, s_{i_N}(alpha_{i_{N-1}}), ..., s_{i_N} ... s_{i_2}(alpha_{i_1}).
  // Throws NotReduced when a step leaves the positive roots or repeats.
  std::vector<PositiveRoot> inversion_set(RootSystem const& rs, Word const& word);

  bool is_reduced(RootSystem const& rs, Word const& word);

  // No simple root other than alpha_omega lies in Phi(w^{-1}).
  bool is_minimal_representative(RootSystem const& rs,
                                 WeylElement const& w,
                                 int omega_index);

  // Longest element of the minimal representatives of W_{j-1} \ W_j, where
  // W_j is generated by s_1, ..., s_j; found by greedy smallest-index ascent.
  Word parabolic_coset_longest_word(RootSystem const& rs, int j, int omega_index);

  struct LongestElement {
    WeylElement element;
    Word        word;  // the nice decomposition, concatenated
  };

  LongestElement longest_element(RootSystem const& rs);

  // Classical group orders.
  BigInt weyl_group_order(Family family, int rank);

  // Reads WGMDS_ENUM_CAP from the environment, default 10^6.
  std::size_t default_enumeration_cap();

  // BFS by right multiplication, ordered by length then by lexicographically
  // minimal reduced word.  Throws GroupTooLarge above `cap`.
  std::vector<WeylElement> enumerate_group(RootSystem const& rs,
                                           std::size_t        cap = default_enumeration_cap());

  // Every reduced word of w, by recursion over right descents.  Test oracle.
  std::vector<Word> all_reduced_words(RootSystem const& rs, WeylElement const& w);

  Word        parse_word(std::string_view text);
  std::string format_word(Word const& word);

}  // namespace wgmds
