#include "wgmds/bzl.hpp"

#include <algorithm>
#include <sstream>

#include "wgmds/coset_atlas.hpp"
#include "wgmds/error.hpp"

namespace wgmds {

  namespace {

    void require_dominant(Weight const& lam, std::size_t rank) {
      if (lam.size() != rank) {
        throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
      }
      if (!lam.is_dominant()) {
        throw Error(ErrorCode::NonDominantWeight, "weight (" + format_vector(lam.coords) + ") is not dominant");
      }
    }

    // lam - sum_{k >= from} b_k alpha_{i_k} (positions 1-based).
    IntVec partial_weight(PatternShape const& shape, Weight const& lam, IntVec const& b, int from) {
      IntVec cur = lam.coords;
      int const r = shape.rank();
      for (int k = static_cast<int>(shape.size()); k >= from; --k) {
        int const bk = b[static_cast<std::size_t>(k - 1)];
        if (bk == 0) {
          continue;
        }
        int const i = shape.labels[static_cast<std::size_t>(k - 1)];
        for (int m = 1; m <= r; ++m) {
          cur[static_cast<std::size_t>(m - 1)] -= bk * shape.rs.cartan(m, i);
        }
      }
      return cur;
    }

    struct Dfs {
      PatternShape const&                       shape;
      std::function<void(IntVec const&)> const& visit;
      IntVec                                    b;
      IntVec                                    cur;
      std::vector<IntVec>                       alpha;  // alpha_i in the weight basis

      void run(int j) {
        if (j == 0) {
          visit(b);
          return;
        }
        auto const idx   = static_cast<std::size_t>(j - 1);
        int const  i     = shape.labels[idx];
        int const  upper = cur[static_cast<std::size_t>(i - 1)];
        int const  nb    = shape.right[idx];
        int const  lower = nb == 0 ? 0 : b[static_cast<std::size_t>(nb - 1)];
        auto const& a    = alpha[static_cast<std::size_t>(i - 1)];
        for (int v = lower; v <= upper; ++v) {
          b[idx] = v;
          for (std::size_t m = 0; m < cur.size(); ++m) {
            cur[m] -= v * a[m];
          }
          run(j - 1);
          for (std::size_t m = 0; m < cur.size(); ++m) {
            cur[m] += v * a[m];
          }
        }
        b[idx] = 0;
      }
    };

  }  // namespace

  int PatternShape::row_length(int m) const {
    return family() == Family::A ? m : 2 * m - 1;
  }

  PatternShape pattern_shape(Family family, int rank) {
    if (family != Family::A && family != Family::C) {
      throw Error(ErrorCode::UnsupportedFamily, "BZL patterns are implemented for types A and C");
    }
    PatternShape shape{RootSystem::build(family, rank), {}, {}, {}, {}};
    auto const   segments = nice_decomposition(shape.rs);
    for (int m = 1; m <= rank; ++m) {
      auto const& seg = segments[static_cast<std::size_t>(m - 1)];
      shape.row_start.push_back(static_cast<int>(shape.labels.size()) + 1);
      for (std::size_t t = 0; t < seg.size(); ++t) {
        shape.labels.push_back(seg[t]);
        shape.row.push_back(m);
        bool const last = t + 1 == seg.size();
        shape.right.push_back(last ? 0 : static_cast<int>(shape.labels.size()) + 1);
      }
    }
    return shape;
  }

  int psi_bound(PatternShape const& shape, Weight const& lam, IntVec const& b, int j) {
    if (j < 1 || static_cast<std::size_t>(j) > shape.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "position " + std::to_string(j) + " out of range");
    }
    if (b.size() != shape.size() || lam.size() != static_cast<std::size_t>(shape.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "pattern or weight has wrong length");
    }
    auto cur = partial_weight(shape, lam, b, j + 1);
    return cur[static_cast<std::size_t>(shape.labels[static_cast<std::size_t>(j - 1)] - 1)];
  }

  void for_each_pattern(PatternShape const&                        shape,
                        Weight const&                              lam,
                        std::function<void(IntVec const&)> const& visit) {
    require_dominant(lam, static_cast<std::size_t>(shape.rank()));
    Dfs dfs{shape, visit, IntVec(shape.size(), 0), lam.coords, {}};
    for (int i = 1; i <= shape.rank(); ++i) {
      dfs.alpha.push_back(shape.rs.simple_root_as_weight(i));
    }
    dfs.run(static_cast<int>(shape.size()));
  }

  std::vector<BZLPattern> enumerate_crystal(PatternShape const& shape, Weight const& lam) {
    std::vector<BZLPattern> out;
    for_each_pattern(shape, lam, [&](IntVec const& b) { out.push_back(decorate(shape, lam, b)); });
    return out;
  }

  BZLPattern decorate(PatternShape const& shape, Weight const& lam, IntVec const& b) {
    if (b.size() != shape.size() || lam.size() != static_cast<std::size_t>(shape.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "pattern or weight has wrong length");
    }
    BZLPattern out{b, std::vector<Decoration>(b.size()), lam};
    IntVec     cur = lam.coords;
    for (int j = static_cast<int>(b.size()); j >= 1; --j) {
      auto const idx   = static_cast<std::size_t>(j - 1);
      int const  i     = shape.labels[idx];
      int const  upper = cur[static_cast<std::size_t>(i - 1)];
      int const  nb    = shape.right[idx];
      int const  lower = nb == 0 ? 0 : b[static_cast<std::size_t>(nb - 1)];
      if (b[idx] < lower || b[idx] > upper) {
        throw Error(ErrorCode::InfeasibleEntries,
                    "entry b_" + std::to_string(j) + " = " + std::to_string(b[idx]) + " outside ["
                        + std::to_string(lower) + ", " + std::to_string(upper) + "]");
      }
      out.deco[idx] = {b[idx] == lower, b[idx] == upper};
      for (int m = 1; m <= shape.rank(); ++m) {
        cur[static_cast<std::size_t>(m - 1)] -= b[idx] * shape.rs.cartan(m, i);
      }
    }
    return out;
  }

  Stability classify(BZLPattern const& pattern) {
    for (auto const& d : pattern.deco) {
      if (d.circled == d.boxed) {
        return Stability::Unstable;
      }
    }
    return Stability::Stable;
  }

  Weight weight_of(PatternShape const& shape, Weight const& lam, IntVec const& b) {
    if (b.size() != shape.size() || lam.size() != static_cast<std::size_t>(shape.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "pattern or weight has wrong length");
    }
    return Weight(partial_weight(shape, lam, b, 1));
  }

  BZLPattern stable_from_weyl(PatternShape const& shape, Weight const& lam, WeylElement const& w) {
    if (lam.size() != static_cast<std::size_t>(shape.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
    }
    if (!lam.is_strictly_dominant()) {
      throw Error(ErrorCode::NonStrictlyDominant,
                  "weight (" + format_vector(lam.coords) + ") is not strictly dominant");
    }
    auto const        tuple = dr_encode(shape.rs, w);
    std::vector<bool> sign(shape.size(), false);
    for (int m = 1; m <= shape.rank(); ++m) {
      int const start = shape.row_start[static_cast<std::size_t>(m - 1)];
      for (int t = 0; t < tuple.a[static_cast<std::size_t>(m - 1)]; ++t) {
        sign[static_cast<std::size_t>(start - 1 + t)] = true;
      }
    }
    IntVec b(shape.size(), 0);
    IntVec cur = lam.coords;
    for (int j = static_cast<int>(shape.size()); j >= 1; --j) {
      auto const idx = static_cast<std::size_t>(j - 1);
      if (!sign[idx]) {
        continue;
      }
      int const i = shape.labels[idx];
      b[idx]      = cur[static_cast<std::size_t>(i - 1)];
      for (int m = 1; m <= shape.rank(); ++m) {
        cur[static_cast<std::size_t>(m - 1)] -= b[idx] * shape.rs.cartan(m, i);
      }
    }
    return decorate(shape, lam, b);
  }

  Word sign_word(PatternShape const& shape, BZLPattern const& pattern) {
    if (classify(pattern) != Stability::Stable) {
      throw Error(ErrorCode::NotStable, "pattern is not stable");
    }
    Word w;
    for (std::size_t j = 0; j < shape.size(); ++j) {
      if (pattern.deco[j].boxed) {
        w.push_back(shape.labels[j]);
      }
    }
    return w;
  }

  WeylElement weyl_from_stable(PatternShape const& shape, BZLPattern const& pattern) {
    return word_to_element(shape.rs, sign_word(shape, pattern));
  }

  BoundReport max_entry_bound_check(PatternShape const& shape, Weight const& lam) {
    BoundReport rep;
    rep.bound = pair(shape.rs, lam, highest_coroot(shape.rs));
    for_each_pattern(shape, lam, [&](IntVec const& b) {
      ++rep.patterns;
      auto const p = decorate(shape, lam, b);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] > rep.bound) {
          ++rep.above_bound;
        }
        if (b[j] == rep.bound && !p.deco[j].boxed) {
          ++rep.at_bound_unboxed;
        }
      }
      bool adjacent = false;
      for (std::size_t j = 1; j < b.size(); ++j) {
        if (shape.row[j] == shape.row[j - 1] && p.deco[j - 1].circled && p.deco[j].boxed) {
          adjacent = true;
        }
      }
      if (adjacent) {
        ++rep.circled_then_boxed;
        if (classify(p) == Stability::Stable) {
          ++rep.circled_then_boxed_stable;
        }
      }
    });
    return rep;
  }

  std::string pretty_print(PatternShape const& shape, BZLPattern const& pattern, bool unicode) {
    auto mark = [&](Decoration d) -> std::string {
      if (d.circled && d.boxed) {
        return unicode ? "◎" : "@";
      }
      if (d.circled) {
        return unicode ? "○" : "o";
      }
      if (d.boxed) {
        return unicode ? "□" : "#";
      }
      return " ";
    };
    std::size_t width = 1;
    for (int v : pattern.b) {
      width = std::max(width, std::to_string(v).size());
    }
    int const   r     = shape.rank();
    int const   cols  = shape.row_length(r);
    std::string blank = std::string(width + 2, ' ');
    std::ostringstream os;
    for (int m = r; m >= 1; --m) {
      int const len    = shape.row_length(m);
      int const offset = shape.family() == Family::A ? cols - len : r - m;
      std::string line;
      for (int c = 0; c < offset; ++c) {
        line += blank;
      }
      int const start = shape.row_start[static_cast<std::size_t>(m - 1)];
      for (int t = 0; t < len; ++t) {
        auto const  idx = static_cast<std::size_t>(start - 1 + t);
        std::string v   = std::to_string(pattern.b[idx]);
        line += std::string(width - v.size() + 1, ' ') + v + mark(pattern.deco[idx]);
      }
      while (!line.empty() && line.back() == ' ') {
        line.pop_back();
      }
      os << line << '\n';
    }
    return os.str();
  }

  nlohmann::json pattern_to_json(PatternShape const& shape, BZLPattern const& pattern) {
    nlohmann::json rows    = nlohmann::json::array();
    nlohmann::json circled = nlohmann::json::array();
    nlohmann::json boxed   = nlohmann::json::array();
    for (int m = 1; m <= shape.rank(); ++m) {
      nlohmann::json rv = nlohmann::json::array();
      nlohmann::json cv = nlohmann::json::array();
      nlohmann::json bv = nlohmann::json::array();
      int const start = shape.row_start[static_cast<std::size_t>(m - 1)];
      for (int t = 0; t < shape.row_length(m); ++t) {
        auto const idx = static_cast<std::size_t>(start - 1 + t);
        rv.push_back(pattern.b[idx]);
        cv.push_back(pattern.deco[idx].circled);
        bv.push_back(pattern.deco[idx].boxed);
      }
      rows.push_back(rv);
      circled.push_back(cv);
      boxed.push_back(bv);
    }
    return {
        {"family", std::string(family_name(shape.family()))},
        {"rank", shape.rank()},
        {"lambda", pattern.lambda.coords},
        {"rows", rows},
        {"circled", circled},
        {"boxed", boxed},
        {"stable", classify(pattern) == Stability::Stable},
    };
  }

}  // namespace wgmds
