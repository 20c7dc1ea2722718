#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgmds/bzl.hpp"
#include "wgmds/coset_atlas.hpp"
#include "wgmds/error.hpp"
#include "wgmds/gauss.hpp"
#include "wgmds/mds.hpp"
#include "wgmds/root_system.hpp"
#include "wgmds/weyl.hpp"

namespace wgmds::cli {

  namespace {

    using nlohmann::json;

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Target {
      std::string        family;
      std::optional<int> rank;
    };

    std::string upper(std::string s) {
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      return s;
    }

    RootSystem resolve(Target const& t) {
      if (upper(t.family) == "D4RELABELED") {
        if (t.rank && *t.rank != 4) {
          throw UsageError("D4relabeled has rank 4");
        }
        return RootSystem::build(Family::D, 4);
      }
      Family const f     = parse_family(t.family);
      int const    fixed = f == Family::E6 ? 6 : f == Family::E7 ? 7 : f == Family::G2 ? 2 : 0;
      if (fixed != 0) {
        if (t.rank && *t.rank != fixed) {
          throw UsageError(t.family + " has rank " + std::to_string(fixed));
        }
        return RootSystem::build(f, fixed);
      }
      if (!t.rank) {
        throw UsageError("--rank is required for family " + t.family);
      }
      return RootSystem::build(f, *t.rank);
    }

    Weight weight_for(RootSystem const& rs, std::optional<std::string> const& text) {
      if (!text) {
        return rs.zero_weight();
      }
      auto lam = parse_weight(*text);
      if (lam.size() != static_cast<std::size_t>(rs.rank())) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(rs.rank()) + " coordinates, got " + std::to_string(lam.size()));
      }
      return lam;
    }

    IntVec int_list(std::string const& text) {
      return parse_weight(text).coords;
    }

    json header(RootSystem const& rs) {
      return {{"family", std::string(family_name(rs.family()))}, {"rank", rs.rank()}};
    }

    void emit(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    std::string bracket(Word const& w) {
      return "[" + format_word(w) + "]";
    }

    std::string paren(IntVec const& v) {
      return "(" + format_vector(v) + ")";
    }

    ////////////////////////////////////////////////////////////////////////

    struct RootsArgs {
      Target      target;
      std::string format = "table";
    };

    int cmd_roots(RootsArgs const& a, std::ostream& out) {
      auto const rs   = resolve(a.target);
      auto const hi   = rs.positive_roots()[highest_root_index(rs)];
      auto const hcor = highest_coroot(rs);
      if (a.format == "json") {
        json j = header(rs);
        json cartan = json::array();
        for (int i = 1; i <= rs.rank(); ++i) {
          IntVec row;
          for (int k = 1; k <= rs.rank(); ++k) {
            row.push_back(rs.cartan(i, k));
          }
          cartan.push_back(row);
        }
        json roots = json::array();
        for (auto const& pr : rs.positive_roots()) {
          roots.push_back({{"root", pr.root}, {"coroot", pr.coroot}, {"norm", pr.norm}});
        }
        j["cartan"]         = cartan;
        j["simple_norms"]   = rs.simple_norms();
        j["rho"]            = rs.rho().coords;
        j["highest_root"]   = hi.root;
        j["highest_coroot"] = hcor;
        j["positive_roots"] = roots;
        emit(out, j);
        return Ok;
      }
      out << rs.to_text();
      out << "norms " << format_vector(rs.simple_norms(), ' ') << '\n';
      out << "rho " << format_vector(rs.rho().coords) << '\n';
      out << "highest_root " << format_vector(hi.root) << '\n';
      out << "highest_coroot " << format_vector(hcor) << '\n';
      out << "positive_roots " << rs.num_positive_roots() << '\n';
      for (auto const& pr : rs.positive_roots()) {
        out << "  root " << format_vector(pr.root) << "  coroot " << format_vector(pr.coroot) << "  norm " << pr.norm
            << '\n';
      }
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    struct WeylArgs {
      Target                     target;
      std::optional<std::string> word;
      std::string                format = "table";
    };

    int cmd_weyl(WeylArgs const& a, std::ostream& out) {
      auto const rs      = resolve(a.target);
      auto const order   = weyl_group_order(rs.family(), rs.rank());
      auto const longest = longest_element(rs);
      std::optional<Word> input;
      if (a.word) {
        input = parse_word(*a.word);
        for (int i : *input) {
          if (i < 1 || i > rs.rank()) {
            throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(i) + " out of range");
          }
        }
      }
      if (a.format == "json") {
        json j                   = header(rs);
        j["order"]               = order.convert_to<long long>();
        j["num_positive_roots"]  = rs.num_positive_roots();
        j["longest_word"]        = longest.word;
        if (input) {
          auto const w    = word_to_element(rs, *input);
          auto const red  = reduced_word(rs, w);
          json       inv  = json::array();
          for (auto const& pr : inversion_set(rs, red)) {
            inv.push_back(pr.root);
          }
          j["element"] = {
              {"word", *input},
              {"reduced", is_reduced(rs, *input)},
              {"reduced_word", red},
              {"length", red.size()},
              {"inversion_set", inv},
          };
        }
        emit(out, j);
        return Ok;
      }
      out << "family " << family_name(rs.family()) << '\n';
      out << "rank " << rs.rank() << '\n';
      out << "order " << order << '\n';
      out << "longest_word " << format_word(longest.word) << '\n';
      out << "longest_length " << longest.word.size() << '\n';
      if (input) {
        auto const w   = word_to_element(rs, *input);
        auto const red = reduced_word(rs, w);
        out << "word " << format_word(*input) << '\n';
        out << "reduced " << (is_reduced(rs, *input) ? "yes" : "no") << '\n';
        out << "reduced_word " << format_word(red) << '\n';
        out << "length " << red.size() << '\n';
        for (auto const& pr : inversion_set(rs, red)) {
          out << "  inversion " << format_vector(pr.root) << '\n';
        }
      }
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    struct CosetArgs {
      Target      target;
      int         omega{0};
      bool        count{false};
      std::string format = "table";
    };

    int cmd_coset(CosetArgs const& a, std::ostream& out) {
      auto const rs    = resolve(a.target);
      auto const atlas = CosetAtlas::build(rs, a.omega);
      auto const& fam  = atlas.prefix_family();
      if (a.count) {
        out << fam.size() << '\n';
        return Ok;
      }
      if (a.format == "json") {
        json j        = header(rs);
        j["omega"]    = a.omega;
        j["tau_ell"]  = atlas.tau_ell();
        j["length"]   = atlas.word_length();
        j["count"]    = fam.size();
        j["exchange_class_size"] =
            atlas.exchange_class_materialized() ? json(atlas.exchange_class().size()) : json(nullptr);
        json reps = json::array();
        for (auto const& c : fam) {
          reps.push_back({{"positions", c}, {"word", atlas.prefix_word(c)}});
        }
        j["representatives"] = reps;
        emit(out, j);
        return Ok;
      }
      out << "family " << family_name(rs.family()) << '\n';
      out << "rank " << rs.rank() << '\n';
      out << "omega " << a.omega << '\n';
      out << "tau_ell " << format_word(atlas.tau_ell()) << '\n';
      out << "length " << atlas.word_length() << '\n';
      out << "count " << fam.size() << '\n';
      for (auto const& c : fam) {
        out << "  " << bracket(atlas.prefix_word(c)) << '\n';
      }
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    struct GraphArgs {
      Target      target;
      int         omega{0};
      std::string format = "dot";
    };

    int cmd_graph(GraphArgs const& a, std::ostream& out) {
      auto const rs    = resolve(a.target);
      auto const atlas = CosetAtlas::build(rs, a.omega);
      auto const& g    = atlas.graph();
      if (a.format == "json") {
        json j       = header(rs);
        j["omega"]   = a.omega;
        j["tau_ell"] = atlas.tau_ell();
        json verts   = json::array();
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
          verts.push_back({{"id", v + 1}, {"label", g.labels[v]}});
        }
        json edges = json::array();
        for (auto [x, y] : g.edges) {
          edges.push_back({x, y});
        }
        j["vertices"] = verts;
        j["edges"]    = edges;
        emit(out, j);
        return Ok;
      }
      out << to_dot(g, "T");
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    struct DrArgs {
      Target                     target;
      std::optional<std::string> tuple;
      std::optional<std::string> word;
      std::string                format = "table";
    };

    int cmd_dr(DrArgs const& a, std::ostream& out) {
      if (a.tuple && a.word) {
        throw UsageError("--tuple and --word are exclusive");
      }
      auto const rs = resolve(a.target);
      auto entry    = [&](DrTuple const& t) {
        auto const w = dr_word(rs, t);
        return json{{"a", t.a}, {"word", w}, {"length", w.size()}};
      };
      auto line = [&](DrTuple const& t) {
        auto const w = dr_word(rs, t);
        return paren(t.a) + "  " + bracket(w) + "  length " + std::to_string(w.size());
      };
      std::vector<DrTuple> tuples;
      if (a.tuple) {
        DrTuple t{int_list(*a.tuple)};
        dr_decode(rs, t);
        tuples.push_back(t);
      } else if (a.word) {
        auto const w = parse_word(*a.word);
        for (int i : w) {
          if (i < 1 || i > rs.rank()) {
            throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(i) + " out of range");
          }
        }
        tuples.push_back(dr_encode(rs, word_to_element(rs, w)));
      } else {
        tuples = all_dr_tuples(rs);
      }
      if (a.format == "json") {
        json j = header(rs);
        json list = json::array();
        for (auto const& t : tuples) {
          list.push_back(entry(t));
        }
        j["count"]  = tuples.size();
        j["tuples"] = list;
        emit(out, j);
        return Ok;
      }
      for (auto const& t : tuples) {
        out << line(t) << '\n';
      }
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    struct CrystalArgs {
      Target                     target;
      std::optional<std::string> lambda;
      bool                       stable_only{false};
      bool                       ascii{false};
      std::string                format = "table";
    };

    int cmd_crystal(CrystalArgs const& a, std::ostream& out) {
      auto const rs    = resolve(a.target);
      auto const shape = pattern_shape(rs.family(), rs.rank());
      auto const lam   = weight_for(rs, a.lambda);
      std::vector<BZLPattern> patterns;
      std::size_t             total  = 0;
      std::size_t             stable = 0;
      for (auto& p : enumerate_crystal(shape, lam)) {
        ++total;
        bool const st = classify(p) == Stability::Stable;
        stable += st ? 1 : 0;
        if (st || !a.stable_only) {
          patterns.push_back(std::move(p));
        }
      }
      if (a.format == "json") {
        json j       = header(rs);
        j["lambda"]  = lam.coords;
        j["count"]   = total;
        j["stable"]  = stable;
        json list    = json::array();
        for (auto const& p : patterns) {
          auto pj      = pattern_to_json(shape, p);
          pj["b"]      = p.b;
          pj["weight"] = weight_of(shape, lam, p.b).coords;
          list.push_back(pj);
        }
        j["patterns"] = list;
        emit(out, j);
        return Ok;
      }
      out << "family " << family_name(rs.family()) << "  rank " << rs.rank() << "  lambda " << paren(lam.coords)
          << '\n';
      out << "patterns " << total << "  stable " << stable << '\n';
      std::size_t idx = 0;
      for (auto const& p : patterns) {
        bool const st = classify(p) == Stability::Stable;
        out << '\n'
            << "#" << ++idx << "  b " << paren(p.b) << "  weight " << paren(weight_of(shape, lam, p.b).coords)
            << "  " << (st ? "stable" : "unstable");
        if (st) {
          out << "  w " << bracket(sign_word(shape, p));
        }
        out << '\n' << pretty_print(shape, p, !a.ascii);
      }
      return Ok;
    }

    ////////////////////////////////////////////////////////////////////////

    // Prints the certificate and returns true when the assumption fails.
    bool stability_refused(RootSystem const& rs,
                           Weight const&     lam,
                           int               n,
                           std::string const& format,
                           std::ostream&     out,
                           std::ostream&     err) {
      if (rs.family() != Family::A && rs.family() != Family::C) {
        throw Error(ErrorCode::UnsupportedFamily, "the crystal description is implemented for types A and C");
      }
      auto const cert = stability_check(rs, n, lam);
      if (cert.admissible()) {
        return false;
      }
      if (format == "json") {
        json j           = header(rs);
        j["certificate"] = to_json(cert);
        emit(out, j);
      } else {
        out << "certificate " << cert.to_string() << '\n';
      }
      err << "error: StabilityViolated: " << cert.to_string() << '\n';
      return true;
    }

    std::optional<GaussContext> context_for(std::optional<std::int64_t> p, int n) {
      if (!p) {
        return std::nullopt;
      }
      return GaussContext(*p, n);
    }

    json complex_json(std::complex<double> z) {
      return json::array({z.real(), z.imag()});
    }

    struct HcoeffArgs {
      Target                      target;
      std::optional<std::string>  lambda;
      int                         n{0};
      std::string                 k;
      std::optional<std::int64_t> p;
      std::string                 format = "table";
    };

    int cmd_hcoeff(HcoeffArgs const& a, std::ostream& out, std::ostream& err) {
      auto const rs  = resolve(a.target);
      auto const lam = weight_for(rs, a.lambda);
      if (stability_refused(rs, lam, a.n, a.format, out, err)) {
        return Stability;
      }
      auto const k = int_list(a.k);
      if (k.size() != static_cast<std::size_t>(rs.rank())) {
        throw Error(ErrorCode::DimensionMismatch, "k needs " + std::to_string(rs.rank()) + " entries");
      }
      auto const ctx = context_for(a.p, a.n);
      std::optional<Word> w;
      FormalHValue        stable;
      for (auto const& g : enumerate_group(rs)) {
        if (k_of_w(rs, lam, g) == k) {
          w      = reduced_word(rs, g);
          stable = h_stable(rs, lam, g);
        }
      }
      auto const crystal = h_crystal(rs, lam, a.n, k);
      bool const equal   = crystal == stable;
      std::optional<std::pair<std::complex<double>, std::complex<double>>> numeric;
      if (ctx && std::max(largest_modulus(*ctx, stable), largest_modulus(*ctx, crystal)) <= default_sum_cap) {
        numeric = {evaluate_formal(*ctx, stable), evaluate_formal(*ctx, crystal)};
      }
      if (a.format == "json") {
        json j         = header(rs);
        j["lambda"]    = lam.coords;
        j["n"]         = a.n;
        j["k"]         = k;
        j["w"]         = w ? json(*w) : json(nullptr);
        j["h_stable"]  = to_json(stable);
        j["h_crystal"] = to_json(crystal);
        j["equal"]     = equal;
        j["p"]         = a.p ? json(*a.p) : json(nullptr);
        j["numeric"]   = numeric ? json{{"stable", complex_json(numeric->first)}, {"crystal", complex_json(numeric->second)}}
                                 : json(nullptr);
        emit(out, j);
      } else {
        out << "k " << paren(k) << '\n';
        out << "w " << (w ? bracket(*w) : std::string("none")) << '\n';
        out << "h_stable " << stable.to_string() << '\n';
        out << "h_crystal " << crystal.to_string() << '\n';
        out << "equal " << (equal ? "yes" : "no") << '\n';
        if (numeric) {
          out << "numeric p=" << *a.p << " stable " << numeric->first << " crystal " << numeric->second << '\n';
        }
      }
      return equal ? Ok : Mismatch;
    }

    ////////////////////////////////////////////////////////////////////////

    struct VerifyArgs {
      Target                      target;
      std::optional<std::string>  lambda;
      int                         n{0};
      std::optional<std::int64_t> p;
      std::string                 format = "table";
    };

    int cmd_verify(VerifyArgs const& a, std::ostream& out, std::ostream& err) {
      auto const rs  = resolve(a.target);
      auto const lam = weight_for(rs, a.lambda);
      if (stability_refused(rs, lam, a.n, a.format, out, err)) {
        return Stability;
      }
      auto const rep = compare_descriptions(rs, lam, a.n, context_for(a.p, a.n));
      if (a.format == "json") {
        emit(out, to_json(rep));
      } else {
        out << "family " << family_name(rs.family()) << "  rank " << rs.rank() << "  lambda " << paren(lam.coords)
            << "  n " << a.n;
        if (a.p) {
          out << "  p " << *a.p;
        }
        out << '\n';
        out << "certificate " << rep.certificate.to_string() << '\n';
        out << "k convention rho+lambda-mu = sum k_i alpha_i\n";
        for (auto const& r : rep.records) {
          out << "  k " << paren(r.k) << "  w " << (r.w ? bracket(*r.w) : std::string("-")) << "  "
              << (r.equal && r.multiset_ok ? "match" : "MISMATCH");
          if (r.numeric_delta) {
            std::ostringstream d;
            d.precision(3);
            d << std::scientific << *r.numeric_delta;
            out << "  delta " << d.str();
          }
          out << '\n';
        }
        out << "patterns " << rep.patterns << "  stable " << rep.stable_patterns << "  unstable "
            << rep.unstable_patterns << "  unstable nonzero " << rep.unstable_nonzero << '\n';
        out << "matched " << rep.matched() << "  zero outside support " << rep.zero_outside() << "  mismatched "
            << rep.mismatched() << '\n';
      }
      return rep.all_match() ? Ok : Mismatch;
    }

    ////////////////////////////////////////////////////////////////////////

    void add_target(CLI::App* sub, Target& t) {
      sub->add_option("--family", t.family, "A, B, C, D, E6, E7, G2 or D4relabeled")->required();
      sub->add_option("--rank", t.rank, "rank (implied for E6, E7, G2, D4relabeled)");
    }

    void add_format(CLI::App* sub, std::string& f, std::vector<std::string> const& allowed) {
      sub->add_option("--format", f, "output format")->check(CLI::IsMember(allowed));
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl group, BZL crystal and stable-range coefficient toolkit", "wgmds"};
    app.require_subcommand(1);

    RootsArgs roots;
    auto*     s_roots = app.add_subcommand("roots", "Cartan data and positive roots");
    add_target(s_roots, roots.target);
    add_format(s_roots, roots.format, {"table", "json"});

    WeylArgs weyl;
    auto*    s_weyl = app.add_subcommand("weyl", "group order, longest element, word data");
    add_target(s_weyl, weyl.target);
    s_weyl->add_option("--word", weyl.word, "comma-separated simple reflections");
    add_format(s_weyl, weyl.format, {"table", "json"});

    CosetArgs coset;
    auto*     s_coset = app.add_subcommand("coset", "minimal coset representatives for a braidless weight");
    add_target(s_coset, coset.target);
    s_coset->add_option("--omega", coset.omega, "index of the fundamental weight")->required();
    s_coset->add_flag("--count", coset.count, "print only the number of representatives");
    add_format(s_coset, coset.format, {"table", "json"});

    GraphArgs graph;
    auto*     s_graph = app.add_subcommand("graph", "decoration graph of the longest representative");
    add_target(s_graph, graph.target);
    s_graph->add_option("--omega", graph.omega, "index of the fundamental weight")->required();
    add_format(s_graph, graph.format, {"dot", "json"});

    DrArgs dr;
    auto*  s_dr = app.add_subcommand("dr", "tuple parametrization of W for types A and C");
    add_target(s_dr, dr.target);
    s_dr->add_option("--tuple", dr.tuple, "decode a tuple a_1,...,a_r");
    s_dr->add_option("--word", dr.word, "encode the element of a word");
    add_format(s_dr, dr.format, {"table", "json"});

    CrystalArgs crystal;
    auto*       s_crystal = app.add_subcommand("crystal", "decorated BZL patterns of B_lambda");
    add_target(s_crystal, crystal.target);
    s_crystal->add_option("--lambda", crystal.lambda, "highest weight l_1,...,l_r (default 0)");
    s_crystal->add_flag("--stable-only", crystal.stable_only, "list stable patterns only");
    s_crystal->add_flag("--ascii", crystal.ascii, "ASCII decoration marks");
    add_format(s_crystal, crystal.format, {"table", "json"});

    HcoeffArgs hcoeff;
    auto*      s_hcoeff = app.add_subcommand("hcoeff", "one coefficient H(p^k; p^l) by both descriptions");
    add_target(s_hcoeff, hcoeff.target);
    s_hcoeff->add_option("--lambda", hcoeff.lambda, "twist l_1,...,l_r (default 0)");
    s_hcoeff->add_option("--n", hcoeff.n, "cover degree")->required()->check(CLI::PositiveNumber);
    s_hcoeff->add_option("--k", hcoeff.k, "k_1,...,k_r")->required();
    s_hcoeff->add_option("--p", hcoeff.p, "prime = 1 mod n for numeric evaluation");
    add_format(s_hcoeff, hcoeff.format, {"table", "json"});

    VerifyArgs verify;
    auto*      s_verify = app.add_subcommand("verify", "compare both descriptions over the whole support");
    add_target(s_verify, verify.target);
    s_verify->add_option("--lambda", verify.lambda, "twist l_1,...,l_r (default 0)");
    s_verify->add_option("--n", verify.n, "cover degree")->required()->check(CLI::PositiveNumber);
    s_verify->add_option("--p", verify.p, "prime = 1 mod n for numeric corroboration");
    add_format(s_verify, verify.format, {"table", "json"});

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? Ok : Usage;
    }

    try {
      if (s_roots->parsed()) {
        return cmd_roots(roots, out);
      }
      if (s_weyl->parsed()) {
        return cmd_weyl(weyl, out);
      }
      if (s_coset->parsed()) {
        return cmd_coset(coset, out);
      }
      if (s_graph->parsed()) {
        return cmd_graph(graph, out);
      }
      if (s_dr->parsed()) {
        return cmd_dr(dr, out);
      }
      if (s_crystal->parsed()) {
        return cmd_crystal(crystal, out);
      }
      if (s_hcoeff->parsed()) {
        return cmd_hcoeff(hcoeff, out, err);
      }
      if (s_verify->parsed()) {
        return cmd_verify(verify, out, err);
      }
      err << "error: no subcommand\n";
      return Usage;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return Usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      if (e.code() == ErrorCode::StabilityViolated) {
        return Stability;
      }
      return is_internal(e.code()) ? Internal : Usage;
    } catch (std::exception const& e) {
      err << "error: internal: " << e.what() << '\n';
      return Internal;
    }
  }

}  // namespace wgmds::cli
