#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = wgmds::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  json call_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto r = call(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
  }

}  // namespace

TEST_CASE("coset counts") {
  CHECK(call({"coset", "--family", "E7", "--omega", "7", "--count"}).out == "56\n");
  CHECK(call({"coset", "--family", "E6", "--omega", "6", "--count"}).out == "27\n");
  CHECK(call({"coset", "--family", "D4relabeled", "--omega", "4", "--count"}).out == "8\n");
  CHECK(call({"coset", "--family", "G2", "--omega", "1", "--count"}).out == "6\n");
  for (int r = 2; r <= 5; ++r) {
    auto const res = call({"coset", "--family", "C", "--rank", std::to_string(r), "--omega", std::to_string(r), "--count"});
    CHECK(res.out == std::to_string(2 * r) + "\n");
  }
  auto j = call_json({"coset", "--family", "D4relabeled", "--omega", "4"});
  CHECK(j["tau_ell"] == json::array({4, 3, 1, 2, 3, 4}));
  CHECK(j["count"] == 8);
  CHECK(j["exchange_class_size"] == 2);
  std::set<std::vector<int>> words;
  for (auto const& rep : j["representatives"]) {
    words.insert(rep["word"].get<std::vector<int>>());
  }
  std::set<std::vector<int>> expected{{},           {4},          {4, 3},          {4, 3, 1},
                                      {4, 3, 2},    {4, 3, 1, 2}, {4, 3, 1, 2, 3}, {4, 3, 1, 2, 3, 4}};
  CHECK(words == expected);
}

TEST_CASE("decoration graph") {
  auto r = call({"graph", "--family", "D4relabeled", "--omega", "4", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "digraph T {\n"
        "  1 [label=\"s4\"];\n  2 [label=\"s3\"];\n  3 [label=\"s1\"];\n  4 [label=\"s2\"];\n"
        "  5 [label=\"s3\"];\n  6 [label=\"s4\"];\n"
        "  1 -> 2;\n  2 -> 3;\n  2 -> 4;\n  3 -> 5;\n  4 -> 5;\n  5 -> 6;\n}\n");
  CHECK(call({"graph", "--family", "D4relabeled", "--omega", "4"}).out == r.out);
  auto j = call_json({"graph", "--family", "A", "--rank", "3", "--omega", "2"});
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--family", "A", "--rank", "2", "--lambda", "0,0", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("matched 6  zero outside support 1  mismatched 0") != std::string::npos);

  auto j = call_json({"verify", "--family", "C", "--rank", "2", "--lambda", "0,0", "--n", "5", "--p", "11"});
  CHECK(j["matched"] == 8);
  CHECK(j["all_match"] == true);
  CHECK(j["p"] == 11);
  CHECK(j["k_convention"] == "rho+lambda-mu = sum k_i alpha_i");

  auto bad = call({"verify", "--family", "A", "--rank", "2", "--n", "2"});
  CHECK(bad.code == 3);
  CHECK(bad.out.find("threshold = 4") != std::string::npos);
  auto even = call({"verify", "--family", "C", "--rank", "2", "--n", "6", "--format", "json"});
  CHECK(even.code == 3);
  CHECK(json::parse(even.out)["certificate"]["admissible"] == false);

  CHECK(call({"verify", "--family", "B", "--rank", "2", "--n", "9"}).code == 2);
  CHECK(call({"verify", "--family", "A", "--rank", "2", "--n", "3", "--p", "11"}).code == 2);
}

TEST_CASE("hcoeff") {
  auto j = call_json({"hcoeff", "--family", "A", "--rank", "2", "--n", "3", "--k", "1,0", "--p", "7"});
  CHECK(j["w"] == json::array({1}));
  CHECK(j["h_stable"] == json::parse(R"([{"coeff_num":[1],"coeff_den":[1],"monomials":[[2,0,1]]}])"));
  CHECK(j["equal"] == true);
  double const re = j["numeric"]["stable"][0];
  double const im = j["numeric"]["stable"][1];
  CHECK(re * re + im * im == doctest::Approx(7.0));

  auto off = call_json({"hcoeff", "--family", "A", "--rank", "2", "--n", "3", "--k", "1,1"});
  CHECK(off["w"].is_null());
  CHECK(off["h_crystal"].empty());
  CHECK(off["numeric"].is_null());
  CHECK(call({"hcoeff", "--family", "A", "--rank", "2", "--n", "3", "--k", "1"}).code == 2);
}

TEST_CASE("crystal") {
  auto j = call_json({"crystal", "--family", "C", "--rank", "2", "--lambda", "1,1"});
  CHECK(j["count"] == 16);
  CHECK(j["stable"] == 8);
  CHECK(j["patterns"].size() == 16);
  auto s = call_json({"crystal", "--family", "A", "--rank", "2", "--lambda", "1,1", "--stable-only"});
  CHECK(s["patterns"].size() == 6);
  auto t = call({"crystal", "--family", "A", "--rank", "1", "--lambda", "2", "--ascii"});
  CHECK(t.out ==
        "family A  rank 1  lambda (2)\npatterns 3  stable 2\n\n"
        "#1  b (0)  weight (2)  stable  w []\n 0o\n\n"
        "#2  b (1)  weight (0)  unstable\n 1\n\n"
        "#3  b (2)  weight (-2)  stable  w [1]\n 2#\n");
  CHECK(call({"crystal", "--family", "D", "--rank", "4"}).code == 2);
  CHECK(call({"crystal", "--family", "A", "--rank", "2", "--lambda", "1,-1"}).code == 2);
}

TEST_CASE("roots, weyl, dr") {
  auto r = call({"roots", "--family", "A", "--rank", "2"});
  CHECK(r.out.rfind("family A\nrank 2\ncartan 2 -1\ncartan -1 2\n", 0) == 0);
  auto j = call_json({"roots", "--family", "G2"});
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["rank"] == 2);

  auto w = call_json({"weyl", "--family", "A", "--rank", "3", "--word", "1,1,2"});
  CHECK(w["order"] == 24);
  CHECK(w["element"]["reduced"] == false);
  CHECK(w["element"]["reduced_word"] == json::array({2}));
  CHECK(call_json({"weyl", "--family", "E7"})["order"] == 2903040);

  auto d = call_json({"dr", "--family", "C", "--rank", "2"});
  CHECK(d["count"] == 8);
  auto one = call_json({"dr", "--family", "A", "--rank", "3", "--tuple", "0,2,3"});
  CHECK(one["tuples"][0]["word"] == json::array({2, 1, 3, 2, 1}));
  auto enc = call_json({"dr", "--family", "A", "--rank", "3", "--word", "3,2,1"});
  CHECK(enc["tuples"][0]["a"] == json::array({0, 0, 3}));
  CHECK(call({"dr", "--family", "A", "--rank", "3", "--tuple", "2,0,0"}).code == 2);
  CHECK(call({"dr", "--family", "D", "--rank", "4"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"coset", "--family", "A", "--omega", "1"}).code == 2);
  CHECK(call({"coset", "--family", "E7", "--rank", "6", "--omega", "7"}).code == 2);
  CHECK(call({"coset", "--family", "F4", "--rank", "4", "--omega", "1"}).code == 2);
  auto nb = call({"coset", "--family", "E6", "--omega", "3"});
  CHECK(nb.code == 2);
  CHECK(nb.err == "error: NotBraidless: omega_3 of E6 is not braidless\n");
  CHECK(call({"graph", "--family", "A", "--rank", "2", "--omega", "1", "--format", "table"}).code == 2);
  CHECK(call({"verify", "--family", "A", "--rank", "2"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  std::vector<std::string> args{"verify", "--family", "A", "--rank", "2", "--lambda", "1,1", "--n", "5", "--p", "11", "--format", "json"};
  CHECK(call(args).out == call(args).out);
}
