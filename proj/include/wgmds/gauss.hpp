#pragma once

// Formal products of Gauss sums g_t(p^a, p^c) with Laurent-polynomial
// coefficients in q, and a brute-force numeric evaluator over the rational
// integers at a single prime p = 1 mod n.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace wgmds {

  struct GaussMonomial {
    int t{0};  // norm subscript
    int a{0};  // g_t(p^a, p^c)
    int c{0};

    friend bool operator==(GaussMonomial const&, GaussMonomial const&) = default;
    friend std::strong_ordering operator<=>(GaussMonomial const& x, GaussMonomial const& y) {
      if (auto o = x.t <=> y.t; o != 0) {
        return o;
      }
      if (auto o = x.c <=> y.c; o != 0) {
        return o;
      }
      return x.a <=> y.a;
    }
  };

  // Finite sum of c_e q^e, e in Z.
  class LaurentPoly {
   public:
    LaurentPoly() = default;
    static LaurentPoly constant(std::int64_t c);
    static LaurentPoly monomial(std::int64_t c, int exponent);

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    std::map<int, std::int64_t> const& coefficients() const noexcept {
      return _coeffs;
    }
    double evaluate(double q) const;

    LaurentPoly& operator+=(LaurentPoly const& o);
    friend LaurentPoly operator+(LaurentPoly x, LaurentPoly const& y) {
      return x += y;
    }
    friend LaurentPoly operator*(LaurentPoly const& x, LaurentPoly const& y);
    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

    std::string to_string() const;

   private:
    std::map<int, std::int64_t> _coeffs;  // no zero coefficients stored
  };

  struct HTerm {
    LaurentPoly                coeff;
    std::vector<GaussMonomial> monomials;  // sorted
    friend bool operator==(HTerm const&, HTerm const&) = default;
  };

  // Canonical form: terms with equal monomial multisets merged, zero terms
  // dropped, terms sorted by monomial list.
  class FormalHValue {
   public:
    static FormalHValue zero() {
      return {};
    }
    static FormalHValue one();
    static FormalHValue term(LaurentPoly coeff, std::vector<GaussMonomial> monomials);

    std::vector<HTerm> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    FormalHValue& operator+=(FormalHValue const& o);
    friend FormalHValue operator+(FormalHValue x, FormalHValue const& y) {
      return x += y;
    }
    friend FormalHValue operator*(FormalHValue const& x, FormalHValue const& y);
    friend bool operator==(FormalHValue const&, FormalHValue const&) = default;

    std::string to_string() const;

   private:
    void canonicalize();
    std::vector<HTerm> _terms;
  };

  nlohmann::json to_json(FormalHValue const& v);

  class GaussContext {
   public:
    // Throws ContextInvalid unless p is an odd prime with p = 1 mod n.
    GaussContext(std::int64_t p, int n);

    std::int64_t p() const noexcept {
      return _p;
    }
    int n() const noexcept {
      return _n;
    }
    // Smallest primitive root mod p.
    std::int64_t generator() const noexcept {
      return _g;
    }
    // Discrete logarithm base g of a unit mod p.
    int index(std::int64_t d) const;

   private:
    std::int64_t     _p;
    int              _n;
    std::int64_t     _g{0};
    std::vector<int> _ind;
  };

  inline constexpr std::int64_t default_sum_cap = 10'000'000;

  // (d / p^k): zero if p | d, else exp(2 pi i k ind(d) / n).
  std::complex<double> residue_symbol(GaussContext const& ctx, std::int64_t d, int k);

  // sum over units d mod p^c of (d / p^c)^t e(d p^a / p^c).  Throws SumTooLarge.
  std::complex<double> gauss_numeric(GaussContext const& ctx,
                                     int                 t,
                                     int                 a,
                                     int                 c,
                                     std::int64_t        cap = default_sum_cap);

  // q -> p, each monomial -> gauss_numeric.  Throws SumTooLarge.
  std::complex<double> evaluate_formal(GaussContext const& ctx,
                                       FormalHValue const& v,
                                       std::int64_t        cap = default_sum_cap);

  // p^c for the largest c among the monomials of v (1 if there are none).
  std::int64_t largest_modulus(GaussContext const& ctx, FormalHValue const& v);

}  // namespace wgmds
