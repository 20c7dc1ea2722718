#pragma once

// Prime-power coefficients H(p^k; p^l) in the stable range: the Weyl group
// description, the crystal description over B_{lam+rho}, and their comparison.
//
// The coefficient index k is read off a crystal vertex of weight mu through
// rho + lam - mu = sum_i k_i alpha_i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgmds/bzl.hpp"
#include "wgmds/gauss.hpp"
#include "wgmds/root_system.hpp"
#include "wgmds/weyl.hpp"

namespace wgmds {

  struct StabilityCertificate {
    int    n{0};
    Weight lam;
    IntVec t;  // highest coroot coefficients
    int    alpha0_norm{0};
    int    gcd{0};
    int    d_alpha0{0};  // sum t_i (l_i + 1)
    std::int64_t threshold{0};
    bool   ok{false};    // n >= threshold
    bool   n_odd{false};
    bool   requires_odd{false};  // family C

    bool admissible() const noexcept {
      return ok && (!requires_odd || n_odd);
    }
    std::string to_string() const;
  };

  StabilityCertificate stability_check(RootSystem const& rs, int n, Weight const& lam);

  // Smallest n >= 1 whose certificate is admissible.
  int smallest_stable_n(RootSystem const& rs, Weight const& lam);

  nlohmann::json to_json(StabilityCertificate const& cert);

  // Simple-root coordinates of rho + lam - w(rho + lam).  Throws
  // NonIntegralCoordinates if the basis change does not land in Z^r.
  IntVec k_of_w(RootSystem const& rs, Weight const& lam, WeylElement const& w);

  // Solves v = sum_i k_i alpha_i for a weight v given in the fundamental basis.
  IntVec to_root_coordinates(RootSystem const& rs, IntVec const& v);

  // prod over Phi(w) of g_{|beta|^2}(p^{d-1}, p^d), d = d_lam(beta).
  FormalHValue h_stable(RootSystem const& rs, Weight const& lam, WeylElement const& w);

  enum class Vanishing { None, DoublyDecorated, NotDivisible };

  struct GContribution {
    FormalHValue value;
    Vanishing    reason{Vanishing::None};
  };

  // G(v) for a pattern decorated against lam + rho.
  GContribution g_of_v(PatternShape const& shape, int n, BZLPattern const& pattern);

  // k_i = sum of b_j over positions with i_j = i.
  IntVec k_of_pattern(PatternShape const& shape, IntVec const& b);

  // Sum of G(v) over v in B_{lam+rho} with index k.  Throws StabilityViolated
  // and UnsupportedFamily.
  FormalHValue h_crystal(RootSystem const& rs, Weight const& lam, int n, IntVec const& k);

  struct CoefficientRecord {
    IntVec                k;
    std::optional<Word>   w;  // set when k is in the image of k_of_w
    FormalHValue          stable;
    FormalHValue          crystal;
    bool                  equal{false};
    bool                  multiset_ok{false};
    std::optional<double> numeric_delta;  // relative, when a context was given and the sums fit
    std::string           witness;
  };

  struct ComparisonReport {
    Family                         family{Family::A};
    int                            rank{0};
    Weight                         lam;
    int                            n{0};
    StabilityCertificate           certificate;
    std::optional<std::int64_t>    p;
    std::vector<CoefficientRecord> records;  // sorted by k
    std::size_t                    patterns{0};
    std::size_t                    stable_patterns{0};
    std::size_t                    unstable_patterns{0};
    std::size_t                    unstable_nonzero{0};
    std::size_t                    numeric_skipped{0};
    double                         numeric_tolerance{1e-6};

    // Coefficients indexed by some w whose two descriptions agree.
    std::size_t matched() const;
    // Off-support coefficients that vanish as they should.
    std::size_t zero_outside() const;
    std::size_t mismatched() const;
    bool        all_match() const;
  };

  // Throws StabilityViolated (certificate in the message), UnsupportedFamily,
  // and ContextInvalid when ctx->n() != n.
  ComparisonReport compare_descriptions(RootSystem const&                rs,
                                        Weight const&                    lam,
                                        int                              n,
                                        std::optional<GaussContext> const& ctx = std::nullopt,
                                        std::int64_t                     cap = default_sum_cap);

  nlohmann::json to_json(ComparisonReport const& report);

}  // namespace wgmds
