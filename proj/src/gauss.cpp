#include "wgmds/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
      std::int64_t out = 0;
      if (__builtin_mul_overflow(x, y, &out)) {
        throw Error(ErrorCode::Overflow, "coefficient overflow");
      }
      return out;
    }

    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t out = 0;
      if (__builtin_add_overflow(x, y, &out)) {
        throw Error(ErrorCode::Overflow, "coefficient overflow");
      }
      return out;
    }

    bool is_prime(std::int64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
      std::int64_t out = 1 % m;
      base %= m;
      while (e > 0) {
        if (e & 1) {
          out = out * base % m;
        }
        base = base * base % m;
        e >>= 1;
      }
      return out;
    }

    // p^e, or -1 once it exceeds cap.
    std::int64_t capped_power(std::int64_t p, int e, std::int64_t cap) {
      std::int64_t out = 1;
      for (int i = 0; i < e; ++i) {
        if (out > cap / p) {
          return -1;
        }
        out *= p;
      }
      return out;
    }

    std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
      double const angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
      return {std::cos(angle), std::sin(angle)};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly
  ////////////////////////////////////////////////////////////////////////

  LaurentPoly LaurentPoly::constant(std::int64_t c) {
    return monomial(c, 0);
  }

  LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) {
    LaurentPoly out;
    if (c != 0) {
      out._coeffs[exponent] = c;
    }
    return out;
  }

  double LaurentPoly::evaluate(double q) const {
    double s = 0.0;
    for (auto [e, c] : _coeffs) {
      s += static_cast<double>(c) * std::pow(q, e);
    }
    return s;
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
    for (auto [e, c] : o._coeffs) {
      auto const v = checked_add(_coeffs[e], c);
      if (v == 0) {
        _coeffs.erase(e);
      } else {
        _coeffs[e] = v;
      }
    }
    return *this;
  }

  LaurentPoly operator*(LaurentPoly const& x, LaurentPoly const& y) {
    LaurentPoly out;
    for (auto [ex, cx] : x._coeffs) {
      for (auto [ey, cy] : y._coeffs) {
        out += LaurentPoly::monomial(checked_mul(cx, cy), ex + ey);
      }
    }
    return out;
  }

  std::string LaurentPoly::to_string() const {
    if (_coeffs.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) {
        os << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        os << "-";
      }
      auto const mag = c < 0 ? -c : c;
      if (e == 0) {
        os << mag;
      } else {
        if (mag != 1) {
          os << mag << "*";
        }
        os << "q";
        if (e != 1) {
          os << "^" << e;
        }
      }
      first = false;
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // FormalHValue
  ////////////////////////////////////////////////////////////////////////

  FormalHValue FormalHValue::one() {
    return term(LaurentPoly::constant(1), {});
  }

  FormalHValue FormalHValue::term(LaurentPoly coeff, std::vector<GaussMonomial> monomials) {
    FormalHValue out;
    out._terms.push_back({std::move(coeff), std::move(monomials)});
    out.canonicalize();
    return out;
  }

  void FormalHValue::canonicalize() {
    std::map<std::vector<GaussMonomial>, LaurentPoly> merged;
    for (auto& t : _terms) {
      std::sort(t.monomials.begin(), t.monomials.end());
      merged[t.monomials] += t.coeff;
    }
    _terms.clear();
    for (auto& [mons, coeff] : merged) {
      if (!coeff.is_zero()) {
        _terms.push_back({coeff, mons});
      }
    }
  }

  FormalHValue& FormalHValue::operator+=(FormalHValue const& o) {
    _terms.insert(_terms.end(), o._terms.begin(), o._terms.end());
    canonicalize();
    return *this;
  }

  FormalHValue operator*(FormalHValue const& x, FormalHValue const& y) {
    FormalHValue out;
    for (auto const& tx : x._terms) {
      for (auto const& ty : y._terms) {
        HTerm t{tx.coeff * ty.coeff, tx.monomials};
        t.monomials.insert(t.monomials.end(), ty.monomials.begin(), ty.monomials.end());
        out._terms.push_back(std::move(t));
      }
    }
    out.canonicalize();
    return out;
  }

  std::string FormalHValue::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < _terms.size(); ++i) {
      if (i > 0) {
        os << " + ";
      }
      os << "(" << _terms[i].coeff.to_string() << ")";
      for (auto const& m : _terms[i].monomials) {
        os << "*g" << m.t << "(p^" << m.a << ",p^" << m.c << ")";
      }
    }
    return os.str();
  }

  nlohmann::json to_json(FormalHValue const& v) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& t : v.terms()) {
      auto const& cs    = t.coeff.coefficients();
      int const   lo    = cs.begin()->first;
      int const   hi    = cs.rbegin()->first;
      int const   shift = lo < 0 ? -lo : 0;
      std::vector<std::int64_t> num(static_cast<std::size_t>(hi + shift + 1), 0);
      for (auto [e, c] : cs) {
        num[static_cast<std::size_t>(e + shift)] = c;
      }
      std::vector<std::int64_t> den(static_cast<std::size_t>(shift + 1), 0);
      den.back() = 1;
      nlohmann::json mons = nlohmann::json::array();
      for (auto const& m : t.monomials) {
        mons.push_back({m.t, m.a, m.c});
      }
      out.push_back({{"coeff_num", num}, {"coeff_den", den}, {"monomials", mons}});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Numeric side
  ////////////////////////////////////////////////////////////////////////

  GaussContext::GaussContext(std::int64_t p, int n) : _p(p), _n(n) {
    if (n < 1) {
      throw Error(ErrorCode::ContextInvalid, "n must be positive");
    }
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
      throw Error(ErrorCode::ContextInvalid, std::to_string(p) + " is not an odd prime");
    }
    if ((p - 1) % n != 0) {
      throw Error(ErrorCode::ContextInvalid,
                  "p = " + std::to_string(p) + " is not 1 mod n = " + std::to_string(n));
    }
    if (p > default_sum_cap) {
      throw Error(ErrorCode::ContextInvalid, "p above the summation cap");
    }
    std::vector<std::int64_t> factors;
    std::int64_t              m = p - 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) {
          m /= d;
        }
      }
    }
    if (m > 1) {
      factors.push_back(m);
    }
    for (std::int64_t g = 2; g < p; ++g) {
      bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::int64_t f) {
        return pow_mod(g, (p - 1) / f, p) != 1;
      });
      if (primitive) {
        _g = g;
        break;
      }
    }
    _ind.assign(static_cast<std::size_t>(p), -1);
    std::int64_t x = 1;
    for (int e = 0; e < p - 1; ++e) {
      _ind[static_cast<std::size_t>(x)] = e;
      x                                 = x * _g % p;
    }
  }

  int GaussContext::index(std::int64_t d) const {
    std::int64_t r = ((d % _p) + _p) % _p;
    if (r == 0) {
      throw Error(ErrorCode::ContextInvalid, "index of a non-unit");
    }
    return _ind[static_cast<std::size_t>(r)];
  }

  std::complex<double> residue_symbol(GaussContext const& ctx, std::int64_t d, int k) {
    if (k < 1) {
      throw Error(ErrorCode::ContextInvalid, "modulus exponent must be positive");
    }
    if (d % ctx.p() == 0) {
      return {0.0, 0.0};
    }
    std::int64_t e = (static_cast<std::int64_t>(k) % ctx.n()) * ctx.index(d) % ctx.n();
    return unit_root(e, ctx.n());
  }

  std::complex<double> gauss_numeric(GaussContext const& ctx, int t, int a, int c, std::int64_t cap) {
    if (c < 1 || a < 0 || t < 0) {
      throw Error(ErrorCode::ContextInvalid, "need c >= 1, a >= 0, t >= 0");
    }
    std::int64_t const p = ctx.p();
    std::int64_t const m = capped_power(p, c, cap);
    if (m < 0) {
      throw Error(ErrorCode::SumTooLarge,
                  std::to_string(p) + "^" + std::to_string(c) + " exceeds " + std::to_string(cap));
    }
    int const          n     = ctx.n();
    std::int64_t const shift = a >= c ? 0 : capped_power(p, a, cap);
    // Character exponent t*c*ind(d) mod n depends only on d mod p.
    std::int64_t const tc = (static_cast<std::int64_t>(t) % n) * (c % n) % n;
    std::vector<std::complex<double>> chi(static_cast<std::size_t>(p));
    for (std::int64_t r = 1; r < p; ++r) {
      chi[static_cast<std::size_t>(r)] = unit_root(tc * ctx.index(r) % n, n);
    }
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t d = 1; d < m; ++d) {
      std::int64_t const r = d % p;
      if (r == 0) {
        continue;
      }
      std::complex<double> const add = shift == 0 ? std::complex<double>{1.0, 0.0}
                                                  : unit_root(d * shift % m, m);
      sum += chi[static_cast<std::size_t>(r)] * add;
    }
    return sum;
  }

  std::complex<double> evaluate_formal(GaussContext const& ctx, FormalHValue const& v, std::int64_t cap) {
    std::map<GaussMonomial, std::complex<double>> cache;
    std::complex<double>                          total{0.0, 0.0};
    for (auto const& term : v.terms()) {
      std::complex<double> x = term.coeff.evaluate(static_cast<double>(ctx.p()));
      for (auto const& m : term.monomials) {
        auto it = cache.find(m);
        if (it == cache.end()) {
          it = cache.emplace(m, gauss_numeric(ctx, m.t, m.a, m.c, cap)).first;
        }
        x *= it->second;
      }
      total += x;
    }
    return total;
  }

  std::int64_t largest_modulus(GaussContext const& ctx, FormalHValue const& v) {
    int c = 0;
    for (auto const& term : v.terms()) {
      for (auto const& m : term.monomials) {
        c = std::max(c, m.c);
      }
    }
    auto const m = capped_power(ctx.p(), c, std::numeric_limits<std::int64_t>::max() / ctx.p());
    return m < 0 ? std::numeric_limits<std::int64_t>::max() : m;
  }

}  // namespace wgmds
