#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wgmds/error.hpp"
#include "wgmds/mds.hpp"

using namespace wgmds;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalInvariant;
  }

  // rho + lam - w(rho + lam) by reflecting along a reduced word, right to left,
  // recording how many copies of each alpha_i were removed.
  IntVec k_by_reflections(RootSystem const& rs, Weight const& lam, Word const& word) {
    IntVec mu = (lam + rs.rho()).coords;
    IntVec k(mu.size(), 0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int const  i     = *it;
      int const  c     = mu[static_cast<std::size_t>(i - 1)];
      auto const alpha = rs.simple_root_as_weight(i);
      k[static_cast<std::size_t>(i - 1)] += c;
      for (std::size_t m = 0; m < mu.size(); ++m) {
        mu[m] -= c * alpha[m];
      }
    }
    return k;
  }

  FormalHValue product(std::vector<GaussMonomial> mons) {
    return FormalHValue::term(LaurentPoly::constant(1), std::move(mons));
  }

  RootSystem sys(Family f, int r) {
    return RootSystem::build(f, r);
  }

}  // namespace

TEST_CASE("stability assumption") {
  auto a2 = sys(Family::A, 2);
  auto c  = stability_check(a2, 3, a2.zero_weight());
  CHECK(c.t == IntVec{1, 1});
  CHECK(c.alpha0_norm == 2);
  CHECK(c.gcd == 1);
  CHECK(c.d_alpha0 == 2);
  CHECK(c.threshold == 2);
  CHECK(c.ok);
  CHECK(c.admissible());
  CHECK_FALSE(stability_check(a2, 1, a2.zero_weight()).ok);
  auto even = stability_check(a2, 2, a2.zero_weight());
  CHECK(even.gcd == 2);
  CHECK(even.threshold == 4);
  CHECK_FALSE(even.ok);

  auto c2 = sys(Family::C, 2);
  auto cc = stability_check(c2, 5, c2.zero_weight());
  CHECK(cc.t == IntVec{2, 1});
  CHECK(cc.alpha0_norm == 4);
  CHECK(cc.threshold == 3);
  CHECK(cc.ok);
  CHECK(cc.requires_odd);
  CHECK(cc.admissible());
  auto c4 = stability_check(c2, 4, c2.zero_weight());
  CHECK(c4.threshold == 12);
  CHECK_FALSE(c4.admissible());
  auto c6 = stability_check(c2, 6, c2.zero_weight());
  CHECK(c6.threshold == 6);
  CHECK(c6.ok);
  CHECK_FALSE(c6.admissible());
  CHECK(stability_check(sys(Family::C, 3), 5, Weight(IntVec{0, 0, 0})).t == IntVec{2, 2, 1});

  CHECK(smallest_stable_n(sys(Family::A, 1), Weight(IntVec{0})) == 1);
  CHECK(smallest_stable_n(a2, a2.zero_weight()) == 3);
  CHECK(smallest_stable_n(a2, a2.rho()) == 5);
  CHECK(smallest_stable_n(sys(Family::A, 3), Weight(IntVec{0, 0, 0})) == 3);
  CHECK(smallest_stable_n(c2, c2.zero_weight()) == 3);
  CHECK(smallest_stable_n(sys(Family::C, 3), Weight(IntVec{0, 0, 0})) == 5);
  CHECK(stability_check(sys(Family::A, 1), 2, Weight(IntVec{0})).admissible());

  auto j = to_json(cc);
  CHECK(j["threshold"] == 3);
  CHECK(j["admissible"] == true);
  CHECK(cc.to_string().find("threshold = 3") != std::string::npos);
  CHECK(code_of([&] { stability_check(a2, 3, Weight(IntVec{-1, 0})); }) == ErrorCode::NonDominantWeight);
}

TEST_CASE("k of w") {
  auto a2 = sys(Family::A, 2);
  CHECK(k_of_w(a2, a2.zero_weight(), WeylElement::identity(2)) == IntVec{0, 0});
  CHECK(k_of_w(a2, a2.zero_weight(), simple_reflection(a2, 1)) == IntVec{1, 0});
  CHECK(k_of_w(a2, a2.zero_weight(), longest_element(a2).element) == IntVec{2, 2});
  auto c2 = sys(Family::C, 2);
  CHECK(k_of_w(c2, c2.zero_weight(), longest_element(c2).element) == IntVec{3, 4});

  for (auto [f, r] : {std::pair{Family::A, 3}, {Family::C, 3}, {Family::B, 3}, {Family::G2, 2}, {Family::D, 4}}) {
    auto rs  = sys(f, r);
    auto lam = rs.rho();
    std::set<IntVec> seen;
    for (auto const& w : enumerate_group(rs)) {
      auto const k = k_of_w(rs, lam, w);
      CHECK(k == k_by_reflections(rs, lam, reduced_word(rs, w)));
      for (int x : k) {
        CHECK(x >= 0);
      }
      seen.insert(k);
    }
    CHECK(BigInt(seen.size()) == weyl_group_order(f, r));
  }
  CHECK(to_root_coordinates(a2, {2, -1}) == IntVec{1, 0});
  CHECK(code_of([&] { to_root_coordinates(a2, {1, 0}); }) == ErrorCode::NonIntegralCoordinates);
}

TEST_CASE("stable description") {
  auto a2 = sys(Family::A, 2);
  CHECK(h_stable(a2, a2.zero_weight(), WeylElement::identity(2)) == FormalHValue::one());
  CHECK(h_stable(a2, a2.zero_weight(), simple_reflection(a2, 1)) == product({{2, 0, 1}}));
  CHECK(h_stable(a2, a2.zero_weight(), longest_element(a2).element) == product({{2, 0, 1}, {2, 0, 1}, {2, 1, 2}}));
  auto c2 = sys(Family::C, 2);
  CHECK(h_stable(c2, c2.zero_weight(), longest_element(c2).element) ==
        product({{2, 0, 1}, {2, 2, 3}, {4, 0, 1}, {4, 1, 2}}));
  // lam shifts every d by <lam, beta^vee>
  CHECK(h_stable(a2, a2.rho(), simple_reflection(a2, 2)) == product({{2, 1, 2}}));
}

TEST_CASE("crystal contributions") {
  auto       shape = pattern_shape(Family::A, 2);
  auto const top   = shape.rs.rho();
  auto       zero  = g_of_v(shape, 3, decorate(shape, top, {0, 0, 0}));
  CHECK(zero.value == FormalHValue::one());
  CHECK(zero.reason == Vanishing::None);

  auto s1 = stable_from_weyl(shape, top, simple_reflection(shape.rs, 1));
  CHECK(g_of_v(shape, 3, s1).value == product({{2, 0, 1}}));

  auto dd = g_of_v(shape, 3, decorate(shape, top, {0, 1, 1}));
  CHECK(dd.value.is_zero());
  CHECK(dd.reason == Vanishing::DoublyDecorated);

  // lam + rho = (2, 2): b = (0, 1, 0) has b_2 = 1 neither circled nor boxed
  Weight big(IntVec{2, 2});
  auto   p = decorate(shape, big, {0, 1, 0});
  REQUIRE(p.deco[1] == Decoration{false, false});
  auto nd = g_of_v(shape, 3, p);
  CHECK(nd.value.is_zero());
  CHECK(nd.reason == Vanishing::NotDivisible);
  auto kept = g_of_v(shape, 1, p);
  CHECK(kept.reason == Vanishing::None);
  CHECK(kept.value == FormalHValue::term(LaurentPoly::monomial(1, 1) + LaurentPoly::constant(-1), {}));

  CHECK(k_of_pattern(shape, {1, 2, 3}) == IntVec{4, 2});
}

TEST_CASE("crystal description") {
  auto a2 = sys(Family::A, 2);
  CHECK(h_crystal(a2, a2.zero_weight(), 3, {0, 0}) == FormalHValue::one());
  CHECK(h_crystal(a2, a2.zero_weight(), 3, {1, 0}) == product({{2, 0, 1}}));
  CHECK(h_crystal(a2, a2.zero_weight(), 3, {1, 1}).is_zero());
  CHECK(h_crystal(a2, a2.zero_weight(), 3, {5, 0}).is_zero());

  auto c2 = sys(Family::C, 2);
  auto w0 = longest_element(c2).element;
  CHECK(h_crystal(c2, c2.zero_weight(), 5, k_of_w(c2, c2.zero_weight(), w0)) == h_stable(c2, c2.zero_weight(), w0));

  CHECK(code_of([&] { h_crystal(a2, a2.zero_weight(), 2, {0, 0}); }) == ErrorCode::StabilityViolated);
  CHECK(code_of([&] { h_crystal(c2, c2.zero_weight(), 4, {0, 0}); }) == ErrorCode::StabilityViolated);
  auto b2 = sys(Family::B, 2);
  CHECK(code_of([&] { h_crystal(b2, b2.zero_weight(), 9, {0, 0}); }) == ErrorCode::UnsupportedFamily);
}

TEST_CASE("comparison of the two descriptions") {
  struct Case {
    Family f;
    int    r;
    IntVec lam;
    int    n;
    std::size_t matched;
  };
  for (auto const& c : {Case{Family::A, 1, {0}, 2, 2}, Case{Family::A, 2, {0, 0}, 3, 6}, Case{Family::A, 2, {1, 1}, 5, 6},
                        Case{Family::A, 3, {0, 0, 0}, 3, 24}, Case{Family::C, 2, {0, 0}, 5, 8},
                        Case{Family::C, 2, {0, 0}, 3, 8}, Case{Family::C, 3, {0, 0, 0}, 5, 48}}) {
    CAPTURE(c.r);
    CAPTURE(c.lam);
    auto rs  = sys(c.f, c.r);
    auto rep = compare_descriptions(rs, Weight(c.lam), c.n);
    CHECK(rep.matched() == c.matched);
    CHECK(rep.mismatched() == 0);
    CHECK(rep.unstable_nonzero == 0);
    CHECK(rep.all_match());
    CHECK(rep.stable_patterns == c.matched);
    CHECK(BigInt(rep.patterns) == weyl_dimension(rs, Weight(c.lam) + rs.rho()));
    CHECK(rep.stable_patterns + rep.unstable_patterns == rep.patterns);
    for (std::size_t i = 1; i < rep.records.size(); ++i) {
      CHECK(rep.records[i - 1].k < rep.records[i].k);
    }
    for (auto const& rec : rep.records) {
      if (!rec.w) {
        CHECK(rec.crystal.is_zero());
        CHECK(rec.witness == "no crystal vertex of that weight survives");
      }
    }
  }
  auto a2  = sys(Family::A, 2);
  auto rep = compare_descriptions(a2, a2.zero_weight(), 3);
  CHECK(rep.zero_outside() == 1);
  CHECK(rep.records.size() == 7);

  CHECK(code_of([&] { compare_descriptions(a2, a2.zero_weight(), 2); }) == ErrorCode::StabilityViolated);
  try {
    compare_descriptions(a2, a2.zero_weight(), 1);
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("threshold = 2") != std::string::npos);
  }
  CHECK(code_of([&] { compare_descriptions(a2, a2.zero_weight(), 3, GaussContext(11, 5)); }) ==
        ErrorCode::ContextInvalid);
}

TEST_CASE("numeric corroboration") {
  auto a2  = sys(Family::A, 2);
  auto rep = compare_descriptions(a2, a2.zero_weight(), 3, GaussContext(7, 3));
  CHECK(rep.p == 7);
  CHECK(rep.numeric_skipped == 0);
  for (auto const& rec : rep.records) {
    REQUIRE(rec.numeric_delta.has_value());
    CHECK(*rec.numeric_delta < 1e-6);
  }
  auto c2   = sys(Family::C, 2);
  auto repc = compare_descriptions(c2, c2.zero_weight(), 5, GaussContext(11, 5));
  CHECK(repc.all_match());
  CHECK(repc.numeric_skipped == 0);

  auto tight = compare_descriptions(c2, c2.zero_weight(), 5, GaussContext(11, 5), 200);
  CHECK(tight.numeric_skipped > 0);
  CHECK(tight.all_match());
}

TEST_CASE("report json") {
  auto a1 = sys(Family::A, 1);
  auto j  = to_json(compare_descriptions(a1, a1.zero_weight(), 2));
  CHECK(j["family"] == "A");
  CHECK(j["n"] == 2);
  CHECK(j["p"].is_null());
  CHECK(j["matched"] == 2);
  CHECK(j["all_match"] == true);
  REQUIRE(j["records"].size() == 2);
  CHECK(j["records"][0]["k"] == nlohmann::json::array({0}));
  CHECK(j["records"][0]["w"] == nlohmann::json::array());
  CHECK(j["records"][1]["k"] == nlohmann::json::array({1}));
  CHECK(j["records"][1]["w"] == nlohmann::json::array({1}));
  CHECK(j["records"][1]["h_stable"] == nlohmann::json::parse(R"([{"coeff_num":[1],"coeff_den":[1],"monomials":[[2,0,1]]}])"));
  CHECK(j["records"][1]["h_crystal"] == j["records"][1]["h_stable"]);
  CHECK(j["records"][1]["numeric_delta"].is_null());
  CHECK(j.dump() == to_json(compare_descriptions(a1, a1.zero_weight(), 2)).dump());
}
