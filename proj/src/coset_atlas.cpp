#include "wgmds/coset_atlas.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    void check_omega(RootSystem const& rs, int omega_index) {
      if (omega_index < 1 || omega_index > rs.rank()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "omega index " + std::to_string(omega_index) + " outside 1.."
                        + std::to_string(rs.rank()));
      }
    }

    void check_dr_family(RootSystem const& rs) {
      if (rs.family() != Family::A && rs.family() != Family::C) {
        throw Error(ErrorCode::UnsupportedFamily,
                    "explicit D_r tuples exist only for types A and C");
      }
    }

    IntVec reflect(RootSystem const& rs, IntVec mu, int j) {
      int const c = mu[static_cast<std::size_t>(j - 1)];
      for (int k = 1; k <= rs.rank(); ++k) {
        mu[static_cast<std::size_t>(k - 1)] -= c * rs.cartan(k, j);
      }
      return mu;
    }

    bool letters_commute(RootSystem const& rs, int a, int b) {
      return rs.commute(a, b);
    }

    // Transitive closure of j < k, letters non-commuting.
    std::vector<std::vector<bool>> heap_order(RootSystem const& rs, Word const& word) {
      auto const                     n = word.size();
      std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
          if (!letters_commute(rs, word[j], word[k])) {
            below[j][k] = true;
          }
        }
      }
      // Positions are already a linear extension, so one forward sweep closes.
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < k; ++m) {
          if (!below[m][k]) {
            continue;
          }
          for (std::size_t j = 0; j < m; ++j) {
            if (below[j][m]) {
              below[j][k] = true;
            }
          }
        }
      }
      return below;
    }

    // Order ideals of the heap order, each as a sorted set.
    std::vector<IndexSet> order_ideals(std::vector<std::vector<bool>> const& below) {
      auto const         n = below.size();
      std::set<IndexSet>   seen{IndexSet{}};
      std::deque<IndexSet> queue{IndexSet{}};
      while (!queue.empty()) {
        IndexSet cur = queue.front();
        queue.pop_front();
        std::vector<bool> in(n, false);
        for (int v : cur) {
          in[static_cast<std::size_t>(v - 1)] = true;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (in[k]) {
            continue;
          }
          bool ok = true;
          for (std::size_t j = 0; j < k && ok; ++j) {
            if (below[j][k] && !in[j]) {
              ok = false;
            }
          }
          if (!ok) {
            continue;
          }
          IndexSet next = cur;
          next.insert(std::upper_bound(next.begin(), next.end(), static_cast<int>(k + 1)),
                      static_cast<int>(k + 1));
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    void sort_by_size_then_lex(std::vector<IndexSet>& sets) {
      std::sort(sets.begin(), sets.end(), [](IndexSet const& x, IndexSet const& y) {
        if (x.size() != y.size()) {
          return x.size() < y.size();
        }
        return x < y;
      });
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Orbits and braidless weights
  ////////////////////////////////////////////////////////////////////////

  std::vector<Weight> weight_orbit(RootSystem const& rs, Weight const& lam, std::size_t cap) {
    std::vector<Weight> out{lam};
    std::set<IntVec>    seen{lam.coords};
    for (std::size_t p = 0; p < out.size(); ++p) {
      for (int j = 1; j <= rs.rank(); ++j) {
        if (out[p][static_cast<std::size_t>(j - 1)] == 0) {
          continue;
        }
        IntVec next = reflect(rs, out[p].coords, j);
        if (seen.insert(next).second) {
          out.emplace_back(std::move(next));
          if (out.size() > cap) {
            throw Error(ErrorCode::OrbitTooLarge,
                        "orbit exceeds cap " + std::to_string(cap));
          }
        }
      }
    }
    return out;
  }

  bool is_braidless(RootSystem const& rs,
                    int               omega_index,
                    std::size_t       cap,
                    std::optional<int> within) {
    check_omega(rs, omega_index);
    int const top = within.value_or(rs.rank());
    std::vector<IntVec> orbit{rs.fundamental_weight(omega_index).coords};
    std::set<IntVec>    seen{orbit.front()};
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      std::vector<int> positive;
      for (int j = 1; j <= top; ++j) {
        if (orbit[p][static_cast<std::size_t>(j - 1)] > 0) {
          positive.push_back(j);
        }
      }
      for (std::size_t x = 0; x < positive.size(); ++x) {
        for (std::size_t y = x + 1; y < positive.size(); ++y) {
          if (rs.cartan(positive[x], positive[y]) != 0) {
            return false;
          }
        }
      }
      for (int j = 1; j <= top; ++j) {
        if (orbit[p][static_cast<std::size_t>(j - 1)] == 0) {
          continue;
        }
        IntVec next = reflect(rs, orbit[p], j);
        if (seen.insert(next).second) {
          orbit.push_back(std::move(next));
          if (orbit.size() > cap) {
            throw Error(ErrorCode::OrbitTooLarge, "orbit exceeds cap " + std::to_string(cap));
          }
        }
      }
    }
    return true;
  }

  Word coset_longest_word(RootSystem const& rs, int omega_index) {
    if (!is_braidless(rs, omega_index)) {
      throw Error(ErrorCode::NotBraidless,
                  "omega_" + std::to_string(omega_index) + " of "
                      + std::string(family_name(rs.family()))
                      + (rs.family() == Family::E6 || rs.family() == Family::E7 || rs.family() == Family::G2
                             ? std::string()
                             : std::to_string(rs.rank()))
                      + " is not braidless");
    }
    return parabolic_coset_longest_word(rs, rs.rank(), omega_index);
  }

  std::vector<Word> minimal_representatives_by_orbit(RootSystem const& rs,
                                                     int               omega_index,
                                                     std::size_t       cap) {
    check_omega(rs, omega_index);
    // tau^{-1}(omega) = mu; appending s_j moves mu to s_j(mu).
    std::vector<IntVec> orbit{rs.fundamental_weight(omega_index).coords};
    std::vector<Word>   words{Word{}};
    std::set<IntVec>    seen{orbit.front()};
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      for (int j = 1; j <= rs.rank(); ++j) {
        if (orbit[p][static_cast<std::size_t>(j - 1)] <= 0) {
          continue;
        }
        IntVec next = reflect(rs, orbit[p], j);
        if (seen.insert(next).second) {
          Word w = words[p];
          w.push_back(j);
          orbit.push_back(std::move(next));
          words.push_back(std::move(w));
          if (orbit.size() > cap) {
            throw Error(ErrorCode::OrbitTooLarge, "orbit exceeds cap " + std::to_string(cap));
          }
        }
      }
    }
    return words;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exchange class and graphs
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<Permutation>> exchange_class(RootSystem const& rs,
                                                         Word const&       word,
                                                         std::size_t       cap) {
    auto const  n = word.size();
    Permutation id(n);
    for (std::size_t l = 0; l < n; ++l) {
      id[l] = static_cast<int>(l + 1);
    }
    std::set<Permutation>   seen{id};
    std::deque<Permutation> queue{id};
    while (!queue.empty()) {
      Permutation cur = queue.front();
      queue.pop_front();
      for (std::size_t l = 0; l + 1 < n; ++l) {
        int const a = word[static_cast<std::size_t>(cur[l] - 1)];
        int const b = word[static_cast<std::size_t>(cur[l + 1] - 1)];
        if (!letters_commute(rs, a, b)) {
          continue;
        }
        Permutation next = cur;
        std::swap(next[l], next[l + 1]);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            return std::nullopt;
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return std::vector<Permutation>(seen.begin(), seen.end());
  }

  std::vector<std::vector<int>> DecorationGraph::predecessors() const {
    std::vector<std::vector<int>> pred(labels.size());
    for (auto [j, k] : edges) {
      pred[static_cast<std::size_t>(k - 1)].push_back(j);
    }
    return pred;
  }

  DecorationGraph heap_graph(RootSystem const& rs, Word const& word) {
    auto const      below = heap_order(rs, word);
    auto const      n     = word.size();
    DecorationGraph g;
    g.labels = word;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!below[j][k]) {
          continue;
        }
        bool cover = true;
        for (std::size_t m = j + 1; m < k && cover; ++m) {
          if (below[j][m] && below[m][k]) {
            cover = false;
          }
        }
        if (cover) {
          g.edges.emplace_back(static_cast<int>(j + 1), static_cast<int>(k + 1));
        }
      }
    }
    return g;
  }

  DecorationGraph decoration_graph_from_exchange(RootSystem const&               rs,
                                                 Word const&                     word,
                                                 std::vector<Permutation> const& sigmas) {
    std::set<std::pair<int, int>> edges;
    for (auto const& sigma : sigmas) {
      for (std::size_t l = 0; l + 1 < sigma.size(); ++l) {
        int const j = sigma[l];
        int const k = sigma[l + 1];
        if (!letters_commute(rs,
                             word[static_cast<std::size_t>(j - 1)],
                             word[static_cast<std::size_t>(k - 1)])) {
          edges.emplace(j, k);
        }
      }
    }
    DecorationGraph g;
    g.labels = word;
    g.edges.assign(edges.begin(), edges.end());
    return g;
  }

  std::vector<IndexSet> prefix_family_from_exchange(std::vector<Permutation> const& sigmas) {
    std::set<IndexSet> sets;
    for (auto const& sigma : sigmas) {
      IndexSet c;
      sets.insert(c);
      for (int v : sigma) {
        c.insert(std::upper_bound(c.begin(), c.end(), v), v);
        sets.insert(c);
      }
    }
    std::vector<IndexSet> out(sets.begin(), sets.end());
    sort_by_size_then_lex(out);
    return out;
  }

  std::vector<IndexSet> subgraph_family(DecorationGraph const& graph) {
    auto const            n    = graph.num_vertices();
    auto const            pred = graph.predecessors();
    std::set<IndexSet>    seen{IndexSet{}};
    std::deque<IndexSet>  queue{IndexSet{}};
    while (!queue.empty()) {
      IndexSet cur = queue.front();
      queue.pop_front();
      std::vector<bool> in(n, false);
      for (int v : cur) {
        in[static_cast<std::size_t>(v - 1)] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (in[k]) {
          continue;
        }
        // A nonempty member must contain vertex 1.
        if (cur.empty() && k != 0) {
          continue;
        }
        bool ok = std::all_of(pred[k].begin(), pred[k].end(), [&](int j) {
          return in[static_cast<std::size_t>(j - 1)];
        });
        if (!ok) {
          continue;
        }
        IndexSet next = cur;
        next.insert(std::upper_bound(next.begin(), next.end(), static_cast<int>(k + 1)),
                    static_cast<int>(k + 1));
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    std::vector<IndexSet> out(seen.begin(), seen.end());
    sort_by_size_then_lex(out);
    return out;
  }

  std::string to_dot(DecorationGraph const& graph, std::string const& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < graph.labels.size(); ++v) {
      os << "  " << v + 1 << " [label=\"s" << graph.labels[v] << "\"];\n";
    }
    for (auto [j, k] : graph.edges) {
      os << "  " << j << " -> " << k << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // CosetAtlas
  ////////////////////////////////////////////////////////////////////////

  CosetAtlas CosetAtlas::build(RootSystem const&   rs,
                               int                 omega_index,
                               std::optional<Word> tau_word,
                               std::size_t         exchange_cap) {
    check_omega(rs, omega_index);
    Word canonical = coset_longest_word(rs, omega_index);
    CosetAtlas atlas;
    atlas._omega = omega_index;
    if (tau_word) {
      if (!is_reduced(rs, *tau_word)
          || word_to_element(rs, *tau_word) != word_to_element(rs, canonical)) {
        throw Error(ErrorCode::NotReduced,
                    "word " + format_word(*tau_word)
                        + " is not a reduced word of the longest minimal representative");
      }
      atlas._tau = *tau_word;
    } else {
      atlas._tau = std::move(canonical);
    }
    atlas._exchange = wgmds::exchange_class(rs, atlas._tau, exchange_cap);
    atlas._below    = heap_order(rs, atlas._tau);
    if (atlas._exchange) {
      atlas._graph    = decoration_graph_from_exchange(rs, atlas._tau, *atlas._exchange);
      atlas._prefixes = prefix_family_from_exchange(*atlas._exchange);
    } else {
      atlas._graph    = heap_graph(rs, atlas._tau);
      atlas._prefixes = order_ideals(atlas._below);
      sort_by_size_then_lex(atlas._prefixes);
    }
    return atlas;
  }

  std::vector<Permutation> const& CosetAtlas::exchange_class() const {
    if (!_exchange) {
      throw Error(ErrorCode::InternalInvariant,
                  "exchange class was too large to materialize");
    }
    return *_exchange;
  }

  bool CosetAtlas::is_prefix_set(IndexSet const& c) const {
    auto const        n = _tau.size();
    std::vector<bool> in(n, false);
    for (int v : c) {
      if (v < 1 || static_cast<std::size_t>(v) > n || in[static_cast<std::size_t>(v - 1)]) {
        return false;
      }
      in[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!in[k]) {
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (_below[j][k] && !in[j]) {
          return false;
        }
      }
    }
    return true;
  }

  Word CosetAtlas::prefix_word(IndexSet const& c) const {
    if (!is_prefix_set(c)) {
      throw Error(ErrorCode::NotAPrefixSet, "{" + format_vector(c) + "} is not in C_omega");
    }
    IndexSet sorted = c;
    std::sort(sorted.begin(), sorted.end());
    Word out;
    for (int v : sorted) {
      out.push_back(_tau[static_cast<std::size_t>(v - 1)]);
    }
    return out;
  }

  WeylElement f_omega(RootSystem const& rs, CosetAtlas const& atlas, IndexSet const& c) {
    return word_to_element(rs, atlas.prefix_word(c));
  }

  DecorationGraph decoration_graph(RootSystem const&, CosetAtlas const& atlas) {
    return atlas.graph();
  }

  ////////////////////////////////////////////////////////////////////////
  // Nice decompositions and D_r tuples
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> nice_decomposition(RootSystem const& rs) {
    std::vector<Word> segments;
    for (int j = 1; j <= rs.rank(); ++j) {
      if (!is_braidless(rs, j, default_orbit_cap, j)) {
        throw Error(ErrorCode::UnsupportedFamily,
                    "enumeration is not good: alpha_" + std::to_string(j)
                        + " is not braidless in its initial subdiagram");
      }
      segments.push_back(parabolic_coset_longest_word(rs, j, j));
    }
    return segments;
  }

  int dr_bound(RootSystem const& rs, int i) {
    check_dr_family(rs);
    return rs.family() == Family::A ? i : 2 * i - 1;
  }

  Word pi_word(RootSystem const& rs, int i, int a) {
    check_dr_family(rs);
    check_omega(rs, i);
    if (a < 0 || a > dr_bound(rs, i)) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "a_" + std::to_string(i) + " = " + std::to_string(a) + " out of range");
    }
    Word w;
    for (int k = 0; k < a; ++k) {
      // s_i s_{i-1} ... s_1 s_2 ... s_i
      w.push_back(k < i ? i - k : k - i + 2);
    }
    return w;
  }

  Word dr_word(RootSystem const& rs, DrTuple const& t) {
    check_dr_family(rs);
    if (t.a.size() != static_cast<std::size_t>(rs.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "tuple length differs from rank");
    }
    Word w;
    for (int i = 1; i <= rs.rank(); ++i) {
      Word seg = pi_word(rs, i, t.a[static_cast<std::size_t>(i - 1)]);
      w.insert(w.end(), seg.begin(), seg.end());
    }
    return w;
  }

  WeylElement dr_decode(RootSystem const& rs, DrTuple const& t) {
    return word_to_element(rs, dr_word(rs, t));
  }

  DrTuple dr_encode(RootSystem const& rs, WeylElement const& w) {
    check_dr_family(rs);
    DrTuple     out{IntVec(static_cast<std::size_t>(rs.rank()), 0)};
    WeylElement cur = w;
    for (int i = rs.rank(); i >= 1; --i) {
      Weight const omega = rs.fundamental_weight(i);
      int          found = -1;
      WeylElement  rest;
      for (int a = 0; a <= dr_bound(rs, i); ++a) {
        Word inv = pi_word(rs, i, a);
        std::reverse(inv.begin(), inv.end());
        WeylElement cand = cur * word_to_element(rs, inv);
        if (apply_to_weight(rs, cand, omega) == omega) {
          if (found != -1) {
            throw Error(ErrorCode::EncodeFailure, "two coset representatives match");
          }
          found = a;
          rest  = std::move(cand);
        }
      }
      if (found == -1) {
        throw Error(ErrorCode::EncodeFailure,
                    "no pi_a peels W_" + std::to_string(i - 1) + " coset");
      }
      out.a[static_cast<std::size_t>(i - 1)] = found;
      cur                                    = std::move(rest);
    }
    if (!cur.is_identity()) {
      throw Error(ErrorCode::EncodeFailure, "residual element after peeling");
    }
    return out;
  }

  std::vector<DrTuple> all_dr_tuples(RootSystem const& rs) {
    check_dr_family(rs);
    std::vector<DrTuple> out;
    DrTuple              t{IntVec(static_cast<std::size_t>(rs.rank()), 0)};
    while (true) {
      out.push_back(t);
      int i = rs.rank();
      while (i >= 1 && t.a[static_cast<std::size_t>(i - 1)] == dr_bound(rs, i)) {
        t.a[static_cast<std::size_t>(i - 1)] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++t.a[static_cast<std::size_t>(i - 1)];
    }
    return out;
  }

}  // namespace wgmds
