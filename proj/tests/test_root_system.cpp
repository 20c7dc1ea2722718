#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wgmds/error.hpp"
#include "wgmds/root_system.hpp"

using namespace wgmds;

namespace {

  struct Case {
    Family f;
    int    r;
  };

  std::vector<Case> const all_cases = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 5},
      {Family::D, 3}, {Family::D, 4}, {Family::D, 5}, {Family::E6, 6}, {Family::E7, 7},
      {Family::G2, 2},
  };

  // beta^vee = 2 beta / ||beta||^2 expressed in simple coroots:
  // coefficient of alpha_i^vee is beta_i * ||alpha_i||^2 / ||beta||^2.
  IntVec coroot_by_norms(RootSystem const& rs, PositiveRoot const& p) {
    IntVec out(p.root.size());
    for (std::size_t i = 0; i < p.root.size(); ++i) {
      int const num = p.root[i] * rs.simple_norm(static_cast<int>(i + 1));
      REQUIRE(num % p.norm == 0);
      out[i] = num / p.norm;
    }
    return out;
  }

  // Squared norm from the symmetrized form (alpha_i, alpha_j) = A[j][i] ||alpha_j||^2 / 2.
  int norm_by_form(RootSystem const& rs, IntVec const& beta) {
    int twice = 0;
    int const r = rs.rank();
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        twice += beta[static_cast<std::size_t>(i - 1)] * beta[static_cast<std::size_t>(j - 1)]
                 * rs.cartan(j, i) * rs.simple_norm(j);
      }
    }
    REQUIRE(twice % 2 == 0);
    return twice / 2;
  }

}  // namespace

TEST_CASE("positive root counts and basic invariants") {
  for (auto [f, r] : all_cases) {
    CAPTURE(family_name(f));
    CAPTURE(r);
    auto rs = RootSystem::build(f, r);
    CHECK(rs.num_positive_roots() == expected_num_positive_roots(f, r));
    for (int i = 1; i <= r; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 1; j <= r; ++j) {
        if (i != j) {
          CHECK(rs.cartan(i, j) <= 0);
          CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        }
      }
    }
    for (auto const& p : rs.positive_roots()) {
      CHECK(std::all_of(p.root.begin(), p.root.end(), [](int x) { return x >= 0; }));
      CHECK(rs.root_coroot_pairing(p.root, p.coroot) == 2);
      CHECK(p.coroot == coroot_by_norms(rs, p));
      CHECK(p.norm == norm_by_form(rs, p.root));
    }
    for (int i = 1; i <= r; ++i) {
      IntVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      auto idx = rs.find_root(e);
      REQUIRE(idx.has_value());
      CHECK(rs.positive_roots()[*idx].coroot == e);
    }
    CHECK(std::is_sorted(rs.positive_roots().begin(),
                         rs.positive_roots().end(),
                         [](auto const& x, auto const& y) { return x.root < y.root; }));
    CHECK(weyl_dimension(rs, rs.zero_weight()) == 1);
  }
}

TEST_CASE("closed-form counts") {
  CHECK(expected_num_positive_roots(Family::A, 4) == 10);
  CHECK(expected_num_positive_roots(Family::C, 3) == 9);
  CHECK(expected_num_positive_roots(Family::D, 4) == 12);
  CHECK(expected_num_positive_roots(Family::E6, 6) == 36);
  CHECK(expected_num_positive_roots(Family::E7, 7) == 63);
  CHECK(expected_num_positive_roots(Family::G2, 2) == 6);
}

TEST_CASE("small systems by hand") {
  auto a2 = RootSystem::build(Family::A, 2);
  REQUIRE(a2.num_positive_roots() == 3);
  CHECK(a2.positive_roots()[0].root == IntVec{0, 1});
  CHECK(a2.positive_roots()[1].root == IntVec{1, 0});
  CHECK(a2.positive_roots()[2].root == IntVec{1, 1});

  auto c2 = RootSystem::build(Family::C, 2);
  CHECK(c2.cartan(2, 1) == -2);
  CHECK(c2.cartan(1, 2) == -1);
  CHECK(c2.simple_norm(1) == 4);
  CHECK(c2.simple_norm(2) == 2);
  REQUIRE(c2.num_positive_roots() == 4);
  auto top = c2.find_root({1, 2});
  REQUIRE(top.has_value());
  CHECK(c2.positive_roots()[*top].coroot == IntVec{1, 1});
  CHECK(c2.positive_roots()[*top].norm == 4);
  auto mid = c2.find_root({1, 1});
  REQUIRE(mid.has_value());
  CHECK(c2.positive_roots()[*mid].coroot == IntVec{2, 1});
  CHECK(c2.positive_roots()[*mid].norm == 2);

  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(d4.num_positive_roots() == 12);
  CHECK(d4.commute(1, 2));
  CHECK(!d4.commute(1, 3));
  CHECK(!d4.commute(2, 3));
  CHECK(!d4.commute(3, 4));

  auto g2 = RootSystem::build(Family::G2, 2);
  CHECK(g2.cartan(1, 2) == -3);
  CHECK(g2.cartan(2, 1) == -1);
  CHECK(g2.simple_norm(2) == 6);
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(RootSystem::build(Family::A, 0), Error);
  CHECK_THROWS_AS(RootSystem::build(Family::C, 1), Error);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), Error);
  CHECK_THROWS_AS(RootSystem::build(Family::E6, 5), Error);
  CHECK_THROWS_AS(RootSystem::build(Family::G2, 3), Error);
  try {
    RootSystem::build(Family::B, 1);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::InvalidRank);
  }
  try {
    parse_family("F4");
    FAIL("F4 accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnsupportedFamily);
  }
  CHECK(parse_family("e7") == Family::E7);
  CHECK(parse_family("G") == Family::G2);
}

TEST_CASE("pairing and d_lambda") {
  auto a2  = RootSystem::build(Family::A, 2);
  auto rho = a2.rho();
  CHECK(pair(a2, rho, {1, 0}) == 1);
  CHECK(pair(a2, rho, {1, 1}) == 2);
  CHECK_THROWS_AS(pair(a2, rho, {1, 1, 1}), Error);
  CHECK(d_lambda(a2, a2.zero_weight(), {1, 0}) == 1);
  CHECK(d_lambda(a2, a2.zero_weight(), {1, 1}) == 2);
  CHECK(d_lambda(a2, Weight({2, 1}), {1, 1}) == 5);
  try {
    d_lambda(a2, rho, {2, 1});
    FAIL("non-root accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAPositiveRoot);
  }
}

TEST_CASE("highest coroot is maximal by brute force") {
  for (auto [f, r] : all_cases) {
    CAPTURE(family_name(f));
    CAPTURE(r);
    auto rs = RootSystem::build(f, r);
    auto t  = highest_coroot(rs);
    for (auto const& p : rs.positive_roots()) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(p.coroot[i] <= t[i]);
      }
    }
    auto const& hr = rs.positive_roots()[highest_root_index(rs)];
    for (auto const& p : rs.positive_roots()) {
      for (std::size_t i = 0; i < hr.root.size(); ++i) {
        CHECK(p.root[i] <= hr.root[i]);
      }
    }
  }
  CHECK(highest_coroot(RootSystem::build(Family::A, 2)) == IntVec{1, 1});
  CHECK(highest_coroot(RootSystem::build(Family::A, 5)) == IntVec{1, 1, 1, 1, 1});
  CHECK(highest_coroot(RootSystem::build(Family::C, 2)) == IntVec{2, 1});
  CHECK(highest_coroot(RootSystem::build(Family::C, 3)) == IntVec{2, 2, 1});
  CHECK(pair(RootSystem::build(Family::C, 2), Weight({1, 1}), {2, 1}) == 3);
}

TEST_CASE("Weyl dimension") {
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(weyl_dimension(a2, a2.zero_weight()) == 1);
  CHECK(weyl_dimension(a2, a2.rho()) == 8);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      CHECK(weyl_dimension(a2, Weight({a, b})) == (a + 1) * (b + 1) * (a + b + 2) / 2);
    }
  }
  auto c2 = RootSystem::build(Family::C, 2);
  CHECK(weyl_dimension(c2, c2.rho()) == 16);
  // C2 with alpha_2 short: omega_2 is the 4-dimensional standard representation.
  CHECK(weyl_dimension(c2, Weight({0, 1})) == 4);
  CHECK(weyl_dimension(c2, Weight({1, 0})) == 5);
  auto e6 = RootSystem::build(Family::E6, 6);
  CHECK(weyl_dimension(e6, e6.fundamental_weight(6)) == 27);
  auto e7 = RootSystem::build(Family::E7, 7);
  CHECK(weyl_dimension(e7, e7.fundamental_weight(7)) == 56);
  CHECK_THROWS_AS(weyl_dimension(a2, Weight({-1, 0})), Error);
}

TEST_CASE("weights and text form") {
  CHECK(parse_weight("1,0,2").coords == IntVec{1, 0, 2});
  CHECK(parse_weight(" 3 ").coords == IntVec{3});
  CHECK_THROWS_AS(parse_weight("1,x"), Error);
  CHECK(Weight({1, 1}).is_strictly_dominant());
  CHECK(!Weight({1, 0}).is_strictly_dominant());
  CHECK(Weight({1, 0}).is_dominant());
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(a2.to_text() == "family A\nrank 2\ncartan 2 -1\ncartan -1 2\n");
  CHECK(a2.simple_root_as_weight(1) == IntVec{2, -1});
}
