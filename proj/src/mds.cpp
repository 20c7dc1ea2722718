#include "wgmds/mds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    using Rational = boost::multiprecision::cpp_rational;

    void require_supported(RootSystem const& rs) {
      if (rs.family() != Family::A && rs.family() != Family::C) {
        throw Error(ErrorCode::UnsupportedFamily, "the crystal description is implemented for types A and C");
      }
    }

    void require_admissible(RootSystem const& rs, int n, Weight const& lam) {
      auto const cert = stability_check(rs, n, lam);
      if (!cert.admissible()) {
        throw Error(ErrorCode::StabilityViolated, cert.to_string());
      }
    }

    double relative_delta(std::complex<double> x, std::complex<double> y) {
      double const scale = std::max({1.0, std::abs(x), std::abs(y)});
      return std::abs(x - y) / scale;
    }

    std::vector<GaussMonomial> expected_monomials(RootSystem const& rs, Weight const& lam, Word const& word) {
      std::vector<GaussMonomial> out;
      for (auto const& beta : inversion_set(rs, word)) {
        int const d = d_lambda(rs, lam, beta.root);
        out.push_back({beta.norm, d - 1, d});
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::string StabilityCertificate::to_string() const {
    std::ostringstream os;
    os << "n = " << n << ", lambda = (" << format_vector(lam.coords) << "), t = (" << format_vector(t)
       << "), |alpha_0|^2 = " << alpha0_norm << ", gcd = " << gcd << ", d_lambda(alpha_0) = " << d_alpha0
       << ", threshold = " << threshold << ": " << (ok ? "n >= threshold" : "n < threshold");
    if (requires_odd) {
      os << ", n " << (n_odd ? "odd" : "even (odd n required)");
    }
    return os.str();
  }

  StabilityCertificate stability_check(RootSystem const& rs, int n, Weight const& lam) {
    if (lam.size() != static_cast<std::size_t>(rs.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "weight length differs from rank");
    }
    if (!lam.is_dominant()) {
      throw Error(ErrorCode::NonDominantWeight, "(" + format_vector(lam.coords) + ")");
    }
    StabilityCertificate c;
    c.n           = n;
    c.lam         = lam;
    c.t           = highest_coroot(rs);
    c.alpha0_norm = rs.positive_roots()[highest_root_index(rs)].norm;
    c.gcd         = std::gcd(n, c.alpha0_norm);
    c.d_alpha0    = pair(rs, lam + rs.rho(), c.t);
    c.threshold   = static_cast<std::int64_t>(c.gcd) * c.d_alpha0;
    c.ok          = n >= 1 && n >= c.threshold;
    c.n_odd       = n % 2 != 0;
    c.requires_odd = rs.family() == Family::C;
    return c;
  }

  int smallest_stable_n(RootSystem const& rs, Weight const& lam) {
    for (int n = 1;; ++n) {
      if (stability_check(rs, n, lam).admissible()) {
        return n;
      }
    }
  }

  nlohmann::json to_json(StabilityCertificate const& c) {
    return {
        {"n", c.n},
        {"lambda", c.lam.coords},
        {"t", c.t},
        {"alpha0_norm", c.alpha0_norm},
        {"gcd", c.gcd},
        {"d_lambda_alpha0", c.d_alpha0},
        {"threshold", c.threshold},
        {"ok", c.ok},
        {"n_odd", c.n_odd},
        {"requires_odd", c.requires_odd},
        {"admissible", c.admissible()},
    };
  }

  IntVec to_root_coordinates(RootSystem const& rs, IntVec const& v) {
    int const r = rs.rank();
    if (v.size() != static_cast<std::size_t>(r)) {
      throw Error(ErrorCode::DimensionMismatch, "weight length differs from rank");
    }
    // Augmented system A k = v with A[m][i] = <alpha_i, alpha_m^vee>.
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r + 1)));
    for (int row = 0; row < r; ++row) {
      for (int col = 0; col < r; ++col) {
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = rs.cartan(row + 1, col + 1);
      }
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(row)];
    }
    auto const ur = static_cast<std::size_t>(r);
    for (std::size_t col = 0; col < ur; ++col) {
      std::size_t piv = col;
      while (piv < ur && m[piv][col] == 0) {
        ++piv;
      }
      if (piv == ur) {
        throw Error(ErrorCode::InternalInvariant, "singular Cartan matrix");
      }
      std::swap(m[piv], m[col]);
      for (std::size_t row = 0; row < ur; ++row) {
        if (row == col || m[row][col] == 0) {
          continue;
        }
        Rational const f = m[row][col] / m[col][col];
        for (std::size_t k = col; k <= ur; ++k) {
          m[row][k] -= f * m[col][k];
        }
      }
    }
    IntVec k(ur, 0);
    for (std::size_t i = 0; i < ur; ++i) {
      Rational const x = m[i][ur] / m[i][i];
      if (boost::multiprecision::denominator(x) != 1) {
        throw Error(ErrorCode::NonIntegralCoordinates,
                    "(" + format_vector(v) + ") is not in the root lattice");
      }
      k[i] = static_cast<int>(boost::multiprecision::numerator(x));
    }
    return k;
  }

  IntVec k_of_w(RootSystem const& rs, Weight const& lam, WeylElement const& w) {
    Weight const top = lam + rs.rho();
    return to_root_coordinates(rs, (top - apply_to_weight(rs, w, top)).coords);
  }

  FormalHValue h_stable(RootSystem const& rs, Weight const& lam, WeylElement const& w) {
    return FormalHValue::term(LaurentPoly::constant(1), expected_monomials(rs, lam, reduced_word(rs, w)));
  }

  GContribution g_of_v(PatternShape const& shape, int n, BZLPattern const& pattern) {
    if (pattern.b.size() != shape.size()) {
      throw Error(ErrorCode::DimensionMismatch, "pattern length differs from the shape");
    }
    LaurentPoly                coeff = LaurentPoly::constant(1);
    std::vector<GaussMonomial> mons;
    for (std::size_t j = 0; j < pattern.b.size(); ++j) {
      int const  b = pattern.b[j];
      auto const d = pattern.deco[j];
      if (d.circled && d.boxed) {
        return {FormalHValue::zero(), Vanishing::DoublyDecorated};
      }
      if (d.circled) {
        coeff = coeff * LaurentPoly::monomial(1, b);
      } else if (d.boxed) {
        mons.push_back({shape.rs.simple_norm(shape.labels[j]), b - 1, b});
      } else if (b % n == 0) {
        coeff = coeff * (LaurentPoly::monomial(1, b) + LaurentPoly::monomial(-1, b - 1));
      } else {
        return {FormalHValue::zero(), Vanishing::NotDivisible};
      }
    }
    return {FormalHValue::term(coeff, std::move(mons)), Vanishing::None};
  }

  IntVec k_of_pattern(PatternShape const& shape, IntVec const& b) {
    IntVec k(static_cast<std::size_t>(shape.rank()), 0);
    for (std::size_t j = 0; j < b.size(); ++j) {
      k[static_cast<std::size_t>(shape.labels[j] - 1)] += b[j];
    }
    return k;
  }

  FormalHValue h_crystal(RootSystem const& rs, Weight const& lam, int n, IntVec const& k) {
    require_supported(rs);
    require_admissible(rs, n, lam);
    if (k.size() != static_cast<std::size_t>(rs.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "k length differs from rank");
    }
    auto const   shape = pattern_shape(rs.family(), rs.rank());
    Weight const top   = lam + rs.rho();
    FormalHValue total;
    for_each_pattern(shape, top, [&](IntVec const& b) {
      if (k_of_pattern(shape, b) == k) {
        total += g_of_v(shape, n, decorate(shape, top, b)).value;
      }
    });
    return total;
  }

  std::size_t ComparisonReport::matched() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](auto const& r) {
      return r.w && r.equal && r.multiset_ok;
    }));
  }

  std::size_t ComparisonReport::zero_outside() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](auto const& r) {
      return !r.w && r.equal && r.multiset_ok;
    }));
  }

  std::size_t ComparisonReport::mismatched() const {
    return records.size() - matched() - zero_outside();
  }

  bool ComparisonReport::all_match() const {
    bool numeric_ok = std::all_of(records.begin(), records.end(), [&](auto const& r) {
      return !r.numeric_delta || *r.numeric_delta <= numeric_tolerance;
    });
    return mismatched() == 0 && unstable_nonzero == 0 && numeric_ok;
  }

  ComparisonReport compare_descriptions(RootSystem const&                  rs,
                                        Weight const&                      lam,
                                        int                                n,
                                        std::optional<GaussContext> const& ctx,
                                        std::int64_t                       cap) {
    require_supported(rs);
    ComparisonReport rep;
    rep.family      = rs.family();
    rep.rank        = rs.rank();
    rep.lam         = lam;
    rep.n           = n;
    rep.certificate = stability_check(rs, n, lam);
    if (!rep.certificate.admissible()) {
      throw Error(ErrorCode::StabilityViolated, rep.certificate.to_string());
    }
    if (ctx && ctx->n() != n) {
      throw Error(ErrorCode::ContextInvalid, "context n differs from the comparison n");
    }
    if (ctx) {
      rep.p = ctx->p();
    }

    auto const   shape = pattern_shape(rs.family(), rs.rank());
    Weight const top   = lam + rs.rho();

    std::map<IntVec, FormalHValue> crystal;
    for_each_pattern(shape, top, [&](IntVec const& b) {
      ++rep.patterns;
      auto const pattern = decorate(shape, top, b);
      auto const g       = g_of_v(shape, n, pattern);
      auto const k       = k_of_pattern(shape, b);
      if (classify(pattern) == Stability::Stable) {
        ++rep.stable_patterns;
      } else {
        ++rep.unstable_patterns;
        if (!g.value.is_zero()) {
          ++rep.unstable_nonzero;
        }
      }
      crystal[k] += g.value;
    });

    std::map<IntVec, CoefficientRecord> records;
    for (auto const& w : enumerate_group(rs)) {
      CoefficientRecord rec;
      rec.k      = k_of_w(rs, lam, w);
      rec.w      = reduced_word(rs, w);
      rec.stable = h_stable(rs, lam, w);
      if (records.contains(rec.k)) {
        throw Error(ErrorCode::InternalInvariant, "k_of_w is not injective at (" + format_vector(rec.k) + ")");
      }
      records.emplace(rec.k, std::move(rec));
    }
    for (auto const& [k, value] : crystal) {
      if (!records.contains(k)) {
        CoefficientRecord rec;
        rec.k      = k;
        rec.stable = FormalHValue::zero();
        records.emplace(k, std::move(rec));
      }
    }

    for (auto& [k, rec] : records) {
      auto it     = crystal.find(k);
      rec.crystal = it == crystal.end() ? FormalHValue::zero() : it->second;
      rec.equal   = rec.crystal == rec.stable;
      if (rec.w) {
        auto const expect = expected_monomials(rs, lam, *rec.w);
        rec.multiset_ok   = rec.crystal.terms().size() == 1 && rec.crystal.terms()[0].coeff == LaurentPoly::constant(1)
                          && rec.crystal.terms()[0].monomials == expect;
        rec.witness = rec.equal ? "stable pattern of w = [" + format_word(*rec.w) + "]"
                                : "crystal sum differs from the Weyl group product";
      } else {
        rec.multiset_ok = rec.crystal.is_zero();
        rec.witness     = rec.crystal.is_zero() ? "no crystal vertex of that weight survives"
                                                : "nonzero crystal sum outside the stable support";
      }
      if (ctx) {
        std::int64_t const m = std::max(largest_modulus(*ctx, rec.stable), largest_modulus(*ctx, rec.crystal));
        if (m <= cap) {
          rec.numeric_delta = relative_delta(evaluate_formal(*ctx, rec.stable, cap), evaluate_formal(*ctx, rec.crystal, cap));
        } else {
          ++rep.numeric_skipped;
        }
      }
      rep.records.push_back(std::move(rec));
    }
    return rep;
  }

  nlohmann::json to_json(ComparisonReport const& rep) {
    nlohmann::json records = nlohmann::json::array();
    for (auto const& r : rep.records) {
      records.push_back({
          {"k", r.k},
          {"w", r.w ? nlohmann::json(*r.w) : nlohmann::json(nullptr)},
          {"h_stable", to_json(r.stable)},
          {"h_crystal", to_json(r.crystal)},
          {"equal", r.equal},
          {"multiset_ok", r.multiset_ok},
          {"numeric_delta", r.numeric_delta ? nlohmann::json(*r.numeric_delta) : nlohmann::json(nullptr)},
          {"witness", r.witness},
      });
    }
    return {
        {"family", std::string(family_name(rep.family))},
        {"rank", rep.rank},
        {"lambda", rep.lam.coords},
        {"n", rep.n},
        {"p", rep.p ? nlohmann::json(*rep.p) : nlohmann::json(nullptr)},
        {"k_convention", "rho+lambda-mu = sum k_i alpha_i"},
        {"certificate", to_json(rep.certificate)},
        {"patterns", rep.patterns},
        {"stable_patterns", rep.stable_patterns},
        {"unstable_patterns", rep.unstable_patterns},
        {"unstable_nonzero", rep.unstable_nonzero},
        {"numeric_skipped", rep.numeric_skipped},
        {"matched", rep.matched()},
        {"zero_outside", rep.zero_outside()},
        {"mismatched", rep.mismatched()},
        {"all_match", rep.all_match()},
        {"records", records},
    };
  }

}  // namespace wgmds
