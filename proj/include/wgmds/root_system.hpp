#pragma once

// Coordinate-free root system arithmetic.
//
// A root system is described entirely by its Cartan matrix under a fixed
// enumeration of the simple roots.  Roots are integer vectors in the basis of
// simple roots, coroots are integer vectors in the basis of simple coroots,
// and weights are integer vectors in the basis of fundamental weights.
// Nothing here embeds the roots in a Euclidean space.
//
// Simple root indices are 1-based everywhere in the public interface (s_1 is
// the reflection in alpha_1), matching reduced-word notation.  Coordinate
// vectors are ordinary 0-based containers.
//
// Enumerations (all of them good enumerations):
//   A_r   alpha_1 - alpha_2 - ... - alpha_r
//   B_r   alpha_1 => alpha_2 - ... - alpha_r   (alpha_1 short)
//   C_r   alpha_1 <= alpha_2 - ... - alpha_r   (alpha_1 long)
//   D_r   alpha_1, alpha_2 both joined to alpha_3, then alpha_3 - ... - alpha_r
//   E6    alpha_5 - alpha_4 - alpha_3 - alpha_2 - alpha_6, alpha_1 on alpha_3
//   E7    as E6 with alpha_7 joined to alpha_6
//   G2    alpha_1 short, alpha_2 long

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wgmds {

  using BigInt = boost::multiprecision::cpp_int;
  using IntVec = std::vector<int>;

  enum class Family { A, B, C, D, E6, E7, G2 };

  std::string_view family_name(Family f) noexcept;

  // Accepts "A", "B", "C", "D", "E6", "E7", "G2" (case-insensitive).
  Family parse_family(std::string_view name);

  // A weight in the basis of fundamental weights.
  struct Weight {
    IntVec coords;

    Weight() = default;
    explicit Weight(IntVec c) : coords(std::move(c)) {}

    std::size_t size() const noexcept {
      return coords.size();
    }
    int operator[](std::size_t i) const {
      return coords[i];
    }
    bool is_dominant() const noexcept;
    bool is_strictly_dominant() const noexcept;

    friend Weight operator+(Weight const& x, Weight const& y);
    friend Weight operator-(Weight const& x, Weight const& y);
    friend bool operator==(Weight const&, Weight const&) = default;
    friend auto operator<=>(Weight const&, Weight const&) = default;
  };

  struct PositiveRoot {
    IntVec root;    // simple-root coordinates
    IntVec coroot;  // simple-coroot coordinates
    int orbit;      // 1-based index of the simple root in whose W-orbit it lies
    int norm;       // ||root||^2, inherited from the simple root `orbit`
  };

  class RootSystem {
   public:
    // Builds the system by reflection closure of the simple (root, coroot)
    // pairs; throws UnsupportedFamily / InvalidRank.
    static RootSystem build(Family family, int rank);

    Family family() const noexcept {
      return _family;
    }
    int rank() const noexcept {
      return _rank;
    }

    // <alpha_j, alpha_i^vee>, both 1-based.
    int cartan(int i, int j) const {
      return _cartan[static_cast<std::size_t>((i - 1) * _rank + (j - 1))];
    }

    bool commute(int i, int j) const {
      return i != j && cartan(i, j) == 0;
    }

    // ||alpha_i||^2 for a simple root, 1-based.
    int simple_norm(int i) const {
      return _simple_norms[static_cast<std::size_t>(i - 1)];
    }
    IntVec const& simple_norms() const noexcept {
      return _simple_norms;
    }

    // Copy of this system with a different simple-norm table.
    RootSystem with_norms(IntVec norms) const;

    std::vector<PositiveRoot> const& positive_roots() const noexcept {
      return _roots;
    }
    std::size_t num_positive_roots() const noexcept {
      return _roots.size();
    }

    // Index into positive_roots(), or nullopt if `root` is not positive.
    std::optional<std::size_t> find_root(IntVec const& root) const;

    // <root, coroot> for a root in simple-root coordinates and a coroot in
    // simple-coroot coordinates.
    int root_coroot_pairing(IntVec const& root, IntVec const& coroot) const;

    // alpha_i in the basis of fundamental weights (column i of the Cartan
    // matrix).
    IntVec simple_root_as_weight(int i) const;

    Weight rho() const;
    Weight fundamental_weight(int i) const;
    Weight zero_weight() const;

    // Canonical text form: family, rank, Cartan rows.
    std::string to_text() const;

   private:
    RootSystem() = default;
    void close_under_reflections();

    Family              _family{Family::A};
    int                 _rank{0};
    IntVec              _cartan;
    IntVec              _simple_norms;
    std::vector<PositiveRoot> _roots;
  };

  // Number of positive roots of the family/rank by closed form.
  std::size_t expected_num_positive_roots(Family family, int rank);

  // sum_i cov_i * lam_i; throws DimensionMismatch.
  int pair(RootSystem const& rs, Weight const& lam, IntVec const& coroot);

  // <lam + rho, alpha^vee>; `alpha` in simple-root coordinates.
  int d_lambda(RootSystem const& rs, Weight const& lam, IntVec const& alpha);

  // Coroot coefficients t_i of the highest coroot.
  IntVec highest_coroot(RootSystem const& rs);

  // The highest root (simple-root coordinates) and its index.
  std::size_t highest_root_index(RootSystem const& rs);

  // prod d_lam(alpha) / prod d_0(alpha) over the positive roots.
  BigInt weyl_dimension(RootSystem const& rs, Weight const& lam);

  Weight parse_weight(std::string_view text);
  std::string format_vector(IntVec const& v, char sep = ',');

}  // namespace wgmds
