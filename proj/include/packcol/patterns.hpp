#pragma once

// Constructors for the explicit periodic colorings of G(Z,{2,t}) behind
// each chromatic value: the 3-coloring family, the (1,1,2,2) family, the
// (1,2,2,2,2[,2]) family (including the spiral construction for
// t = 4k+1, k >= 2), the d-distance block pattern, and the 2-distance
// family.  Every constructor verifies its output against the claimed
// width sequence before returning; a failure is a construction bug.

#include <optional>
#include <string>
#include <vector>

#include "packcol/core.hpp"
#include "packcol/verify.hpp"

namespace packcol {

/// A constructed pattern together with its claimed palette and widths.
struct Pattern {
  std::string family;
  std::int64_t t = 0;
  std::optional<int> d;
  int k = 0;
  WidthSequence widths;
  PeriodicColoring coloring;
};

namespace detail {

inline std::vector<int> repeat_block(const std::vector<int>& block,
                                     std::int64_t times,
                                     std::vector<int> out = {}) {
  for (std::int64_t r = 0; r < times; ++r)
    out.insert(out.end(), block.begin(), block.end());
  return out;
}

inline Pattern finish(std::string family, std::int64_t t, std::optional<int> d,
                      WidthSequence widths, std::vector<int> word) {
  Pattern p{std::move(family), t,          d, widths.size(),
            std::move(widths), PeriodicColoring(std::move(word))};
  DistanceOracle oracle(DistanceSpec::g2t(t));
  if (auto bad = verify_periodic(p.coloring, oracle, p.widths)) {
    throw construction_error(
        p.family + " pattern failed verification at pair (" +
        std::to_string(bad->u) + "," + std::to_string(bad->v) + ")");
  }
  return p;
}

}  // namespace detail

/// Proper 3-coloring of G_t as a period-(t+2) word:
/// (1122)^k 3 for t = 4k-1 and (1122)^k 132 for t = 4k+1.
inline Pattern chrom3_pattern(std::int64_t t) {
  DistanceSpec::g2t(t);  // validates t
  std::vector<int> word;
  if (t % 4 == 1) {
    word = detail::repeat_block({1, 1, 2, 2}, (t - 1) / 4);
    word.insert(word.end(), {1, 3, 2});
  } else {
    word = detail::repeat_block({1, 1, 2, 2}, (t + 1) / 4);
    word.push_back(3);
  }
  return detail::finish("chrom3", t, std::nullopt, WidthSequence({1, 1, 1}),
                        std::move(word));
}

/// (1,1,2,2)-packing 4-coloring of G_t, period 2(t+2):
/// (1122)^k 3 (1122)^k 4 for t = 4k-1, (1122)^k 132 (1122)^k 142 otherwise.
inline Pattern p1122_pattern(std::int64_t t) {
  DistanceSpec::g2t(t);
  std::vector<int> word;
  if (t % 4 == 1) {
    const std::int64_t k = (t - 1) / 4;
    word = detail::repeat_block({1, 1, 2, 2}, k);
    word.insert(word.end(), {1, 3, 2});
    word = detail::repeat_block({1, 1, 2, 2}, k, std::move(word));
    word.insert(word.end(), {1, 4, 2});
  } else {
    const std::int64_t k = (t + 1) / 4;
    word = detail::repeat_block({1, 1, 2, 2}, k);
    word.push_back(3);
    word = detail::repeat_block({1, 1, 2, 2}, k, std::move(word));
    word.push_back(4);
  }
  return detail::finish("p1122", t, std::nullopt,
                        WidthSequence({1, 1, 2, 2}), std::move(word));
}

namespace detail {

/// The two-spiral construction for t = 4k+1, k >= 2, emitted as an explicit
/// period-4t word.  Position n decomposes uniquely as n = 2i + j*t with
/// i in [0,t) (i is n times the inverse of 2 mod t); the color depends on
/// i and on j mod 4 only, so the word has period 4t.
inline std::vector<int> spiral_word(std::int64_t t) {
  std::vector<int> word(static_cast<std::size_t>(4 * t));
  const std::int64_t inv2 = (t + 1) / 2;  // 2 * inv2 == 1 (mod t)
  constexpr int kLineZero[4] = {2, 3, 4, 5};
  for (std::int64_t n = 0; n < 4 * t; ++n) {
    const std::int64_t i = (n % t) * inv2 % t;
    const std::int64_t j = (n - 2 * i) / t;
    const int jm = static_cast<int>(((j % 4) + 4) % 4);
    int color;
    if (i == 0) {
      color = kLineZero[jm];
    } else if ((i % 2 == 1 && j % 2 == 0) || (i % 2 == 0 && j % 2 != 0)) {
      color = 1;
    } else {
      switch (static_cast<int>(i % 4)) {
        case 1: color = (jm == 1) ? 5 : 3; break;
        case 3: color = (jm == 1) ? 3 : 5; break;
        case 2: color = (jm == 2) ? 2 : 4; break;
        default: color = (jm == 2) ? 4 : 2; break;  // i % 4 == 0
      }
    }
    word[static_cast<std::size_t>(n)] = color;
  }
  return word;
}

}  // namespace detail

/// (1,2,2,2,2)-packing 5-coloring of G_t for odd t > 3, and the
/// (1,2,2,2,2,2)-packing 6-coloring of G_3 (whose value is 6, not 5).
inline Pattern p12222_pattern(std::int64_t t) {
  DistanceSpec::g2t(t);
  if (t == 3) {
    return detail::finish(
        "p12222", t, std::nullopt, WidthSequence({1, 2, 2, 2, 2, 2}),
        {1, 1, 2, 3, 4, 1, 1, 5, 6, 2, 1, 1, 3, 4, 5, 1, 1, 6, 2, 3, 1, 1, 4, 5, 6});
  }
  const WidthSequence widths({1, 2, 2, 2, 2});
  if (t == 5) {
    return detail::finish("p12222", t, std::nullopt, widths,
                          {1, 1, 2, 2, 1, 3, 3, 1, 1, 4, 4, 1, 5, 5});
  }
  if (t % 4 == 1) {
    return detail::finish("p12222", t, std::nullopt, widths,
                          detail::spiral_word(t));
  }
  if (t % 3 != 0) {
    return detail::finish("p12222", t, std::nullopt, widths,
                          {1, 2, 3, 1, 4, 5});
  }
  // t = 4k-1 divisible by 3 (t >= 15): 1 (122133)^v 1 (144155)^v with
  // v = 2(k-1)/3; period 2(t-2).
  const std::int64_t k = (t + 1) / 4;
  const std::int64_t v = 2 * (k - 1) / 3;
  std::vector<int> word{1};
  word = detail::repeat_block({1, 2, 2, 1, 3, 3}, v, std::move(word));
  word.push_back(1);
  word = detail::repeat_block({1, 4, 4, 1, 5, 5}, v, std::move(word));
  return detail::finish("p12222", t, std::nullopt, widths, std::move(word));
}

/// Number of colors of the exact d-distance pattern: 3d+1 for t = 3 and
/// 1 + t(d - (t-3)/2) for odd t >= 5, d >= t-3.
inline std::int64_t ddist_palette_size(std::int64_t t, int d) {
  if (t == 3) return 3 * static_cast<std::int64_t>(d) + 1;
  return 1 + t * (d - (t - 3) / 2);
}

/// d-distance coloring of G_t by the block pattern 1,2,...,l: valid for
/// t = 3 with d >= 2 and for odd t >= 5 with d >= t-3.
inline Pattern ddist_pattern(std::int64_t t, int d) {
  DistanceSpec::g2t(t);
  if (d > kMaxWidth) throw precondition_error("ddist_pattern: d exceeds cap");
  if (t == 3) {
    if (d < 2) throw precondition_error("ddist_pattern: t=3 requires d >= 2");
  } else if (d < t - 3) {
    throw precondition_error("ddist_pattern: requires d >= t-3 for t >= 5");
  }
  const std::int64_t len = ddist_palette_size(t, d);
  if (len > 200'000) {
    throw resource_limit_error("ddist_pattern: palette too large to materialize");
  }
  std::vector<int> word(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i)
    word[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
  return detail::finish("ddist", t, d,
                        WidthSequence::constant(d, static_cast<int>(len)),
                        std::move(word));
}

/// 2-distance coloring of G_t: 1234567 for t = 3, 12345 when
/// t = 1,9 (mod 10), 123456 for t in {5,7,13}, and (12345)^k (123456)^l
/// with t+1 = 5a+l, k = a-l for the remaining t >= 15.
inline Pattern dist2_pattern(std::int64_t t) {
  DistanceSpec::g2t(t);
  std::vector<int> word;
  if (t == 3) {
    word = {1, 2, 3, 4, 5, 6, 7};
  } else if (t % 10 == 1 || t % 10 == 9) {
    word = {1, 2, 3, 4, 5};
  } else if (t == 5 || t == 7 || t == 13) {
    word = {1, 2, 3, 4, 5, 6};
  } else {
    const std::int64_t l = (t + 1) % 5;
    const std::int64_t a = (t + 1) / 5;
    const std::int64_t k = a - l;
    if (k < 0) throw construction_error("dist2_pattern: negative block count");
    word = detail::repeat_block({1, 2, 3, 4, 5}, k);
    word = detail::repeat_block({1, 2, 3, 4, 5, 6}, l, std::move(word));
  }
  int palette = 0;
  for (int c : word) palette = std::max(palette, c);
  return detail::finish("dist2", t, std::nullopt,
                        WidthSequence::constant(2, palette), std::move(word));
}

/// Dispatch by family name as used on the command line.
inline Pattern make_pattern(const std::string& family, std::int64_t t,
                            std::optional<int> d) {
  if (family == "chrom3") return chrom3_pattern(t);
  if (family == "p1122") return p1122_pattern(t);
  if (family == "p12222") return p12222_pattern(t);
  if (family == "dist2") return dist2_pattern(t);
  if (family == "ddist") {
    if (!d) throw precondition_error("pattern family ddist requires --d");
    return ddist_pattern(t, *d);
  }
  throw precondition_error("unknown pattern family '" + family +
                           "' (expected chrom3|p1122|p12222|ddist|dist2)");
}

}  // namespace packcol
