#include "wgmds/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    using Edge = std::pair<int, int>;

    // Single-bond edges of the Dynkin diagram under our enumerations.
    std::vector<Edge> simple_edges(Family family, int rank) {
      std::vector<Edge> edges;
      switch (family) {
        case Family::A:
          for (int i = 1; i < rank; ++i) {
            edges.emplace_back(i, i + 1);
          }
          break;
        case Family::B:
        case Family::C:
          for (int i = 2; i < rank; ++i) {
            edges.emplace_back(i, i + 1);
          }
          break;
        case Family::D:
          edges.emplace_back(1, 3);
          edges.emplace_back(2, 3);
          for (int i = 3; i < rank; ++i) {
            edges.emplace_back(i, i + 1);
          }
          break;
        case Family::E6:
        case Family::E7:
          edges = {{5, 4}, {4, 3}, {3, 2}, {3, 1}, {2, 6}};
          if (family == Family::E7) {
            edges.emplace_back(6, 7);
          }
          break;
        case Family::G2:
          break;
      }
      return edges;
    }

    void validate_rank(Family family, int rank) {
      bool ok = false;
      switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B:
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E6: ok = rank == 6; break;
        case Family::E7: ok = rank == 7; break;
        case Family::G2: ok = rank == 2; break;
      }
      if (!ok) {
        throw Error(ErrorCode::InvalidRank,
                    "rank " + std::to_string(rank) + " is not valid for type "
                        + std::string(family_name(family)));
      }
    }

    bool all_nonnegative(IntVec const& v) {
      return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    }

    bool dominated_by(IntVec const& x, IntVec const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) {
          return false;
        }
      }
      return true;
    }

    // Index of the unique element that dominates every other vector
    // coordinatewise.
    std::size_t unique_maximum(std::vector<IntVec const*> const& vs) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        bool top = true;
        for (auto const* other : vs) {
          if (!dominated_by(*other, *vs[i])) {
            top = false;
            break;
          }
        }
        if (top) {
          return i;
        }
      }
      throw Error(ErrorCode::InternalInvariant,
                  "no unique maximal element (root system is not irreducible)");
    }

  }  // namespace

  std::string_view family_name(Family f) noexcept {
    switch (f) {
      case Family::A: return "A";
      case Family::B: return "B";
      case Family::C: return "C";
      case Family::D: return "D";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::G2: return "G2";
    }
    return "?";
  }

  Family parse_family(std::string_view name) {
    std::string up;
    for (char c : name) {
      up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (up == "A") return Family::A;
    if (up == "B") return Family::B;
    if (up == "C") return Family::C;
    if (up == "D") return Family::D;
    if (up == "E6") return Family::E6;
    if (up == "E7") return Family::E7;
    if (up == "G2" || up == "G") return Family::G2;
    throw Error(ErrorCode::UnsupportedFamily,
                "unsupported family '" + std::string(name)
                    + "' (F4 and E8 admit no good enumeration)");
  }

  bool Weight::is_dominant() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
  }

  bool Weight::is_strictly_dominant() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x > 0; });
  }

  Weight operator+(Weight const& x, Weight const& y) {
    if (x.size() != y.size()) {
      throw Error(ErrorCode::DimensionMismatch, "weight lengths differ");
    }
    Weight out = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      out.coords[i] += y.coords[i];
    }
    return out;
  }

  Weight operator-(Weight const& x, Weight const& y) {
    if (x.size() != y.size()) {
      throw Error(ErrorCode::DimensionMismatch, "weight lengths differ");
    }
    Weight out = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      out.coords[i] -= y.coords[i];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // RootSystem
  ////////////////////////////////////////////////////////////////////////

  RootSystem RootSystem::build(Family family, int rank) {
    validate_rank(family, rank);
    RootSystem rs;
    rs._family = family;
    rs._rank   = rank;
    auto r     = static_cast<std::size_t>(rank);
    rs._cartan.assign(r * r, 0);
    auto set = [&](int i, int j, int v) {
      rs._cartan[static_cast<std::size_t>((i - 1) * rank + (j - 1))] = v;
    };
    for (int i = 1; i <= rank; ++i) {
      set(i, i, 2);
    }
    for (auto [i, j] : simple_edges(family, rank)) {
      set(i, j, -1);
      set(j, i, -1);
    }
    rs._simple_norms.assign(r, 2);
    switch (family) {
      case Family::B:
        // alpha_1 short: <alpha_2, alpha_1^vee> = -2.
        set(1, 2, -2);
        set(2, 1, -1);
        std::fill(rs._simple_norms.begin() + 1, rs._simple_norms.end(), 4);
        break;
      case Family::C:
        // alpha_1 long: <alpha_1, alpha_2^vee> = -2.
        set(1, 2, -1);
        set(2, 1, -2);
        rs._simple_norms[0] = 4;
        break;
      case Family::G2:
        set(1, 2, -3);
        set(2, 1, -1);
        rs._simple_norms[1] = 6;
        break;
      default:
        break;
    }
    rs.close_under_reflections();
    return rs;
  }

  void RootSystem::close_under_reflections() {
    auto const r = static_cast<std::size_t>(_rank);
    std::map<IntVec, PositiveRoot> found;
    std::deque<IntVec>             queue;
    for (int i = 1; i <= _rank; ++i) {
      IntVec e(r, 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      found.emplace(e, PositiveRoot{e, e, i, 0});
      queue.push_back(e);
    }
    while (!queue.empty()) {
      PositiveRoot const beta = found.at(queue.front());
      queue.pop_front();
      for (int i = 1; i <= _rank; ++i) {
        // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
        int along = 0;
        for (int j = 1; j <= _rank; ++j) {
          along += beta.root[static_cast<std::size_t>(j - 1)] * cartan(i, j);
        }
        // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
        int co_along = 0;
        for (int j = 1; j <= _rank; ++j) {
          co_along += beta.coroot[static_cast<std::size_t>(j - 1)] * cartan(j, i);
        }
        IntVec root = beta.root;
        root[static_cast<std::size_t>(i - 1)] -= along;
        IntVec coroot = beta.coroot;
        coroot[static_cast<std::size_t>(i - 1)] -= co_along;
        if (!all_nonnegative(root) || found.count(root) != 0) {
          continue;
        }
        if (std::all_of(root.begin(), root.end(), [](int x) { return x == 0; })) {
          continue;
        }
        found.emplace(root, PositiveRoot{root, coroot, beta.orbit, 0});
        queue.push_back(root);
      }
    }
    _roots.clear();
    for (auto& [key, pr] : found) {
      pr.norm = simple_norm(pr.orbit);
      _roots.push_back(pr);
    }
  }

  RootSystem RootSystem::with_norms(IntVec norms) const {
    if (norms.size() != _simple_norms.size()) {
      throw Error(ErrorCode::DimensionMismatch, "norm table has wrong length");
    }
    RootSystem out    = *this;
    out._simple_norms = std::move(norms);
    for (auto& pr : out._roots) {
      pr.norm = out.simple_norm(pr.orbit);
    }
    return out;
  }

  std::optional<std::size_t> RootSystem::find_root(IntVec const& root) const {
    auto it = std::lower_bound(
        _roots.begin(), _roots.end(), root,
        [](PositiveRoot const& pr, IntVec const& key) { return pr.root < key; });
    if (it != _roots.end() && it->root == root) {
      return static_cast<std::size_t>(it - _roots.begin());
    }
    return std::nullopt;
  }

  int RootSystem::root_coroot_pairing(IntVec const& root, IntVec const& coroot) const {
    if (root.size() != static_cast<std::size_t>(_rank)
        || coroot.size() != static_cast<std::size_t>(_rank)) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank");
    }
    int total = 0;
    for (int i = 1; i <= _rank; ++i) {
      for (int j = 1; j <= _rank; ++j) {
        total += coroot[static_cast<std::size_t>(i - 1)] * cartan(i, j)
                 * root[static_cast<std::size_t>(j - 1)];
      }
    }
    return total;
  }

  IntVec RootSystem::simple_root_as_weight(int i) const {
    IntVec out(static_cast<std::size_t>(_rank));
    for (int k = 1; k <= _rank; ++k) {
      out[static_cast<std::size_t>(k - 1)] = cartan(k, i);
    }
    return out;
  }

  Weight RootSystem::rho() const {
    return Weight(IntVec(static_cast<std::size_t>(_rank), 1));
  }

  Weight RootSystem::fundamental_weight(int i) const {
    if (i < 1 || i > _rank) {
      throw Error(ErrorCode::IndexOutOfRange, "fundamental weight index " + std::to_string(i));
    }
    IntVec c(static_cast<std::size_t>(_rank), 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    return Weight(std::move(c));
  }

  Weight RootSystem::zero_weight() const {
    return Weight(IntVec(static_cast<std::size_t>(_rank), 0));
  }

  std::string RootSystem::to_text() const {
    std::ostringstream os;
    os << "family " << family_name(_family) << "\n";
    os << "rank " << _rank << "\n";
    for (int i = 1; i <= _rank; ++i) {
      os << "cartan";
      for (int j = 1; j <= _rank; ++j) {
        os << ' ' << cartan(i, j);
      }
      os << "\n";
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  std::size_t expected_num_positive_roots(Family family, int rank) {
    auto r = static_cast<std::size_t>(rank);
    switch (family) {
      case Family::A: return r * (r + 1) / 2;
      case Family::B:
      case Family::C: return r * r;
      case Family::D: return r * (r - 1);
      case Family::E6: return 36;
      case Family::E7: return 63;
      case Family::G2: return 6;
    }
    return 0;
  }

  int pair(RootSystem const& rs, Weight const& lam, IntVec const& coroot) {
    auto r = static_cast<std::size_t>(rs.rank());
    if (lam.size() != r || coroot.size() != r) {
      throw Error(ErrorCode::DimensionMismatch, "weight/coroot length differs from rank");
    }
    int total = 0;
    for (std::size_t i = 0; i < r; ++i) {
      total += coroot[i] * lam.coords[i];
    }
    return total;
  }

  int d_lambda(RootSystem const& rs, Weight const& lam, IntVec const& alpha) {
    auto idx = rs.find_root(alpha);
    if (!idx) {
      throw Error(ErrorCode::NotAPositiveRoot, "(" + format_vector(alpha) + ")");
    }
    return pair(rs, lam + rs.rho(), rs.positive_roots()[*idx].coroot);
  }

  IntVec highest_coroot(RootSystem const& rs) {
    std::vector<IntVec const*> coroots;
    for (auto const& pr : rs.positive_roots()) {
      coroots.push_back(&pr.coroot);
    }
    return *coroots[unique_maximum(coroots)];
  }

  std::size_t highest_root_index(RootSystem const& rs) {
    std::vector<IntVec const*> roots;
    for (auto const& pr : rs.positive_roots()) {
      roots.push_back(&pr.root);
    }
    return unique_maximum(roots);
  }

  BigInt weyl_dimension(RootSystem const& rs, Weight const& lam) {
    if (lam.size() != static_cast<std::size_t>(rs.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "weight length differs from rank");
    }
    if (!lam.is_dominant()) {
      throw Error(ErrorCode::NonDominantWeight, "(" + format_vector(lam.coords) + ")");
    }
    BigInt num = 1;
    BigInt den = 1;
    Weight shifted = lam + rs.rho();
    for (auto const& pr : rs.positive_roots()) {
      num *= pair(rs, shifted, pr.coroot);
      den *= pair(rs, rs.rho(), pr.coroot);
    }
    if (num % den != 0) {
      throw Error(ErrorCode::NonIntegralCoordinates, "Weyl dimension quotient is not integral");
    }
    return num / den;
  }

  Weight parse_weight(std::string_view text) {
    IntVec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - pos);
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) {
        piece.remove_prefix(1);
      }
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) {
        piece.remove_suffix(1);
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
        throw Error(ErrorCode::ParseError, "cannot parse integer list '" + std::string(text) + "'");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
    return Weight(std::move(out));
  }

  std::string format_vector(IntVec const& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) {
        out.push_back(sep);
      }
      out += std::to_string(v[i]);
    }
    return out;
  }

}  // namespace wgmds
