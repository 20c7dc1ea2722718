#include "wgmds/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <unordered_map>

#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    void check_index(RootSystem const& rs, int i) {
      if (i < 1 || i > rs.rank()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "simple reflection index " + std::to_string(i) + " outside 1.."
                        + std::to_string(rs.rank()));
      }
    }

    bool is_negative(IntVec const& v) {
      return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
    }

    // s_i on a weight in fundamental-weight coordinates.
    void reflect_weight(RootSystem const& rs, IntVec& coords, int i) {
      int const c = coords[static_cast<std::size_t>(i - 1)];
      if (c == 0) {
        return;
      }
      for (int k = 1; k <= rs.rank(); ++k) {
        coords[static_cast<std::size_t>(k - 1)] -= c * rs.cartan(k, i);
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // WeylElement
  ////////////////////////////////////////////////////////////////////////

  WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w._rank = rank;
    w._m.assign(static_cast<std::size_t>(rank * rank), 0);
    for (int i = 0; i < rank; ++i) {
      w._m[static_cast<std::size_t>(i * rank + i)] = 1;
    }
    return w;
  }

  WeylElement WeylElement::from_matrix(int rank, std::vector<int> row_major) {
    if (row_major.size() != static_cast<std::size_t>(rank * rank)) {
      throw Error(ErrorCode::DimensionMismatch, "matrix size differs from rank^2");
    }
    WeylElement w;
    w._rank = rank;
    w._m    = std::move(row_major);
    return w;
  }

  IntVec WeylElement::apply(IntVec const& root) const {
    if (root.size() != static_cast<std::size_t>(_rank)) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank");
    }
    IntVec out(root.size(), 0);
    for (int row = 0; row < _rank; ++row) {
      int acc = 0;
      for (int col = 0; col < _rank; ++col) {
        acc += at(row, col) * root[static_cast<std::size_t>(col)];
      }
      out[static_cast<std::size_t>(row)] = acc;
    }
    return out;
  }

  IntVec WeylElement::column(int i) const {
    IntVec out(static_cast<std::size_t>(_rank));
    for (int row = 0; row < _rank; ++row) {
      out[static_cast<std::size_t>(row)] = at(row, i - 1);
    }
    return out;
  }

  bool WeylElement::is_identity() const noexcept {
    for (int row = 0; row < _rank; ++row) {
      for (int col = 0; col < _rank; ++col) {
        if (at(row, col) != (row == col ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  WeylElement operator*(WeylElement const& x, WeylElement const& y) {
    if (x._rank != y._rank) {
      throw Error(ErrorCode::DimensionMismatch, "multiplying elements of different rank");
    }
    int const   r = x._rank;
    WeylElement out;
    out._rank = r;
    out._m.assign(x._m.size(), 0);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < r; ++k) {
        int const a = x.at(i, k);
        if (a == 0) {
          continue;
        }
        for (int j = 0; j < r; ++j) {
          out._m[static_cast<std::size_t>(i * r + j)] += a * y.at(k, j);
        }
      }
    }
    return out;
  }

  std::size_t WeylElement::Hash::operator()(WeylElement const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : w._m) {
      h ^= static_cast<std::size_t>(v + 0x9e37);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  WeylElement simple_reflection(RootSystem const& rs, int i) {
    check_index(rs, i);
    return times_simple(rs, WeylElement::identity(rs.rank()), i);
  }

  WeylElement times_simple(RootSystem const& rs, WeylElement const& w, int i) {
    check_index(rs, i);
    int const        r = rs.rank();
    std::vector<int> m = w.data();
    // (w s_i)(alpha_j) = w(alpha_j) - A[i][j] w(alpha_i)
    for (int j = 1; j <= r; ++j) {
      int const a = rs.cartan(i, j);
      if (a == 0) {
        continue;
      }
      for (int row = 0; row < r; ++row) {
        m[static_cast<std::size_t>(row * r + (j - 1))] -= a * w.at(row, i - 1);
      }
    }
    return WeylElement::from_matrix(r, std::move(m));
  }

  WeylElement word_to_element(RootSystem const& rs, Word const& word) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (int i : word) {
      w = times_simple(rs, w, i);
    }
    return w;
  }

  bool is_right_descent(WeylElement const& w, int i) {
    for (int row = 0; row < w.rank(); ++row) {
      if (w.at(row, i - 1) < 0) {
        return true;
      }
    }
    return false;
  }

  Weight apply_word_to_weight(RootSystem const& rs, Word const& word, Weight const& lam) {
    if (lam.size() != static_cast<std::size_t>(rs.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "weight length differs from rank");
    }
    IntVec coords = lam.coords;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      check_index(rs, *it);
      reflect_weight(rs, coords, *it);
    }
    return Weight(std::move(coords));
  }

  Weight apply_to_weight(RootSystem const& rs, WeylElement const& w, Weight const& lam) {
    return apply_word_to_weight(rs, reduced_word(rs, w), lam);
  }

  Word reduced_word(RootSystem const& rs, WeylElement const& w) {
    Word        reversed;
    WeylElement cur = w;
    while (!cur.is_identity()) {
      int descent = 0;
      for (int i = 1; i <= rs.rank(); ++i) {
        if (is_right_descent(cur, i)) {
          descent = i;
          break;
        }
      }
      if (descent == 0) {
        throw Error(ErrorCode::InternalInvariant, "non-identity element without descent");
      }
      reversed.push_back(descent);
      cur = times_simple(rs, cur, descent);
    }
    return Word(reversed.rbegin(), reversed.rend());
  }

  WeylElement inverse(RootSystem const& rs, WeylElement const& w) {
    Word word = reduced_word(rs, w);
    std::reverse(word.begin(), word.end());
    return word_to_element(rs, word);
  }

  std::size_t length(RootSystem const& rs, WeylElement const& w) {
    std::size_t count = 0;
    for (auto const& pr : rs.positive_roots()) {
      if (is_negative(w.apply(pr.root))) {
        ++count;
      }
    }
    return count;
  }

  std::vector<PositiveRoot> inversion_set(RootSystem const& rs, Word const& word) {
    std::vector<PositiveRoot> out;
    std::set<std::size_t>     seen;
    // Walk from the right: prefix = s_{i_N} ... s_{i_{k+1}} applied to alpha_{i_k}.
    WeylElement suffix = WeylElement::identity(rs.rank());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      check_index(rs, *it);
      IntVec e(static_cast<std::size_t>(rs.rank()), 0);
      e[static_cast<std::size_t>(*it - 1)] = 1;
      IntVec const beta = suffix.apply(e);
      auto         idx  = rs.find_root(beta);
      if (!idx || !seen.insert(*idx).second) {
        throw Error(ErrorCode::NotReduced, "word " + format_word(word) + " is not reduced");
      }
      out.push_back(rs.positive_roots()[*idx]);
      // suffix <- s_{i_N} ... s_{i_k} = suffix * s_{i_k}
      suffix = times_simple(rs, suffix, *it);
    }
    return out;
  }

  bool is_reduced(RootSystem const& rs, Word const& word) {
    return length(rs, word_to_element(rs, word)) == word.size();
  }

  bool is_minimal_representative(RootSystem const& rs,
                                 WeylElement const& w,
                                 int omega_index) {
    check_index(rs, omega_index);
    // alpha_k in Phi(w^{-1})  <=>  w(gamma) = -alpha_k for some gamma > 0.
    int const r = rs.rank();
    for (auto const& pr : rs.positive_roots()) {
      IntVec const img = w.apply(pr.root);
      int          k   = 0;
      bool         ok  = true;
      for (int i = 0; i < r && ok; ++i) {
        int const v = img[static_cast<std::size_t>(i)];
        if (v == -1 && k == 0) {
          k = i + 1;
        } else if (v != 0) {
          ok = false;
        }
      }
      if (ok && k != 0 && k != omega_index) {
        return false;
      }
    }
    return true;
  }

  Word parabolic_coset_longest_word(RootSystem const& rs, int j, int omega_index) {
    check_index(rs, j);
    check_index(rs, omega_index);
    Word        word;
    WeylElement tau = WeylElement::identity(rs.rank());
    bool        grew = true;
    while (grew) {
      grew = false;
      for (int g = 1; g <= j; ++g) {
        if (is_right_descent(tau, g)) {
          continue;
        }
        WeylElement cand = times_simple(rs, tau, g);
        if (is_minimal_representative(rs, cand, omega_index)) {
          tau = std::move(cand);
          word.push_back(g);
          grew = true;
          break;
        }
      }
    }
    return word;
  }

  LongestElement longest_element(RootSystem const& rs) {
    Word word;
    for (int j = 1; j <= rs.rank(); ++j) {
      Word seg = parabolic_coset_longest_word(rs, j, j);
      word.insert(word.end(), seg.begin(), seg.end());
    }
    WeylElement w0 = word_to_element(rs, word);
    if (word.size() != rs.num_positive_roots() || length(rs, w0) != word.size()) {
      throw Error(ErrorCode::InternalInvariant, "nice decomposition is not a reduced word of w0");
    }
    return {std::move(w0), std::move(word)};
  }

  BigInt weyl_group_order(Family family, int rank) {
    BigInt fact = 1;
    for (int k = 2; k <= rank; ++k) {
      fact *= k;
    }
    switch (family) {
      case Family::A: return fact * (rank + 1);
      case Family::B:
      case Family::C: return fact * (BigInt(1) << rank);
      case Family::D: return fact * (BigInt(1) << (rank - 1));
      case Family::E6: return 51840;
      case Family::E7: return 2903040;
      case Family::G2: return 12;
    }
    return 0;
  }

  std::size_t default_enumeration_cap() {
    if (char const* env = std::getenv("WGMDS_ENUM_CAP")) {
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return static_cast<std::size_t>(value);
      }
    }
    return 1'000'000;
  }

  std::vector<WeylElement> enumerate_group(RootSystem const& rs, std::size_t cap) {
    if (weyl_group_order(rs.family(), rs.rank()) > cap) {
      throw Error(ErrorCode::GroupTooLarge,
                  "|W(" + std::string(family_name(rs.family())) + std::to_string(rs.rank())
                      + ")| exceeds the enumeration cap " + std::to_string(cap));
    }
    std::vector<WeylElement>                                    all;
    std::unordered_map<WeylElement, std::size_t, WeylElement::Hash> index;
    all.push_back(WeylElement::identity(rs.rank()));
    index.emplace(all.back(), 0);
    std::size_t level_begin = 0;
    while (level_begin < all.size()) {
      std::size_t const level_end = all.size();
      for (std::size_t p = level_begin; p < level_end; ++p) {
        for (int i = 1; i <= rs.rank(); ++i) {
          if (is_right_descent(all[p], i)) {
            continue;
          }
          WeylElement child = times_simple(rs, all[p], i);
          if (index.count(child) == 0) {
            index.emplace(child, all.size());
            all.push_back(std::move(child));
            if (all.size() > cap) {
              throw Error(ErrorCode::GroupTooLarge, "enumeration exceeded cap");
            }
          }
        }
      }
      level_begin = level_end;
    }
    return all;
  }

  std::vector<Word> all_reduced_words(RootSystem const& rs, WeylElement const& w) {
    std::vector<Word>                          out;
    Word                                       suffix;
    std::function<void(WeylElement const&)> rec = [&](WeylElement const& cur) {
      if (cur.is_identity()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
      }
      for (int i = 1; i <= rs.rank(); ++i) {
        if (is_right_descent(cur, i)) {
          suffix.push_back(i);
          rec(times_simple(rs, cur, i));
          suffix.pop_back();
        }
      }
    };
    rec(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  Word parse_word(std::string_view text) {
    if (text.empty()) {
      return {};
    }
    return parse_weight(text).coords;
  }

  std::string format_word(Word const& word) {
    return format_vector(word, ',');
  }

}  // namespace wgmds
