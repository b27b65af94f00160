#pragma once

// Certified checking that a proposed coloring -- a periodic word over Z or
// an assignment on a finite host -- is an S-packing coloring.  Verdicts are
// exact: a periodic word is checked over a finite scan whose completeness
// follows from conflict offsets being bounded by width*max_gen, and a
// failure always carries the least witnessing pair.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "packcol/core.hpp"

namespace packcol {

// ---------------------------------------------------------------------------
// Colorings
// ---------------------------------------------------------------------------

/// A period-p color word interpreted over all of Z: f(i) = word[i mod p],
/// with position 0 carrying word[0].
class PeriodicColoring {
 public:
  explicit PeriodicColoring(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw precondition_error("PeriodicColoring: empty word");
    for (int c : word_) {
      if (c < 1) throw precondition_error("PeriodicColoring: colors must be >= 1");
    }
  }

  /// Accepts the compact digit form ("1122132", colors 1..9 only) and the
  /// canonical comma-separated form ("1,12,3").
  static PeriodicColoring parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
      text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
      text.remove_prefix(1);
    if (text.empty()) throw precondition_error("pattern word: empty");
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(start, comma - start));
        try {
          word.push_back(std::stoi(token));
        } catch (const std::exception&) {
          throw precondition_error("pattern word: bad token '" + token + "'");
        }
        if (comma == text.size()) break;
        start = comma + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') {
          throw precondition_error(
              "pattern word: compact form allows digits 1-9 only");
        }
        word.push_back(ch - '0');
      }
    }
    return PeriodicColoring(std::move(word));
  }

  int period() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  int color_at(std::int64_t i) const {
    std::int64_t m = i % period();
    if (m < 0) m += period();
    return word_[static_cast<std::size_t>(m)];
  }

  int max_color() const {
    int k = 1;
    for (int c : word_) k = std::max(k, c);
    return k;
  }

  std::string to_comma() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(word_[i]);
    }
    return out;
  }

  /// Compact digits when every color fits one, else the comma form.
  std::string to_text() const {
    if (max_color() > 9) return to_comma();
    std::string out;
    for (int c : word_) out += static_cast<char>('0' + c);
    return out;
  }

  friend bool operator==(const PeriodicColoring& a, const PeriodicColoring& b) {
    return a.word_ == b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Window {0..width} of G(Z,D); pair distances are the true distances of
/// the underlying infinite graph, so any constraint violated here is
/// violated in G(Z,D) as well.
struct WindowHost {
  DistanceSpec spec;
  std::int64_t width = 0;  // vertices 0..width inclusive
};

using FiniteHost = std::variant<CirculantSpec, WindowHost, HtGadget>;

/// A total palette assignment on a finite host; vertex order is the host's
/// natural one (circulant index, window integer, H_t row-major).
struct FiniteColoring {
  FiniteHost host;
  std::vector<int> colors;  // 1-based colors, indexed by vertex

  int vertex_count() const {
    if (const auto* c = std::get_if<CirculantSpec>(&host)) return c->n;
    if (const auto* w = std::get_if<WindowHost>(&host))
      return static_cast<int>(w->width + 1);
    return std::get<HtGadget>(host).vertex_count();
  }
};

/// Witness that a coloring is not an S-packing coloring: a same-colored
/// pair at distance within the color's width.
struct Violation {
  std::int64_t u = 0;
  std::int64_t v = 0;
  int color = 0;
  int width = 0;
  int distance = 0;
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace detail {

inline void check_palette(int max_color_used, const WidthSequence& s) {
  if (max_color_used > s.size()) {
    throw precondition_error("coloring uses color " +
                             std::to_string(max_color_used) +
                             " but the width sequence has only " +
                             std::to_string(s.size()) + " entries");
  }
}

}  // namespace detail

/// Decides whether the periodic word is an S-packing coloring of G(Z,D).
/// For each position x in one period and each candidate partner y within
/// x + width*max_gen, the pair is checked against the exact oracle; by
/// shift-invariance this finite scan decides validity over all of Z.
/// Returns the least witnessing pair (u,v) on failure, nullopt when valid.
inline std::optional<Violation> verify_periodic(const PeriodicColoring& coloring,
                                                const DistanceOracle& oracle,
                                                const WidthSequence& s) {
  detail::check_palette(coloring.max_color(), s);
  const int p = coloring.period();
  const std::int64_t max_gen = oracle.spec().max_gen();
  for (int x = 0; x < p; ++x) {
    const int c = coloring.word()[static_cast<std::size_t>(x)];
    const int a = s.width_of(c);
    const std::int64_t reach = static_cast<std::int64_t>(a) * max_gen;
    for (std::int64_t y = x + 1; y <= x + reach; ++y) {
      if (coloring.color_at(y) != c) continue;
      const int d = oracle.distance(y - x);
      if (d <= a) return Violation{x, y, c, a, d};
    }
  }
  return std::nullopt;
}

inline std::optional<Violation> verify_periodic(const PeriodicColoring& coloring,
                                                const DistanceSpec& spec,
                                                const WidthSequence& s) {
  DistanceOracle oracle(spec);
  return verify_periodic(coloring, oracle, s);
}

/// Decides whether a finite assignment is an S-packing coloring of its
/// host.  Distances: circulant hop distance for circulant hosts, true
/// G(Z,D) distance for window hosts, internal gadget distance for H_t.
inline std::optional<Violation> verify_finite(const FiniteColoring& coloring,
                                              const WidthSequence& s) {
  const int n = coloring.vertex_count();
  if (static_cast<int>(coloring.colors.size()) != n) {
    throw precondition_error("FiniteColoring: assignment not total");
  }
  int max_used = 0;
  for (int c : coloring.colors) {
    if (c < 1) throw precondition_error("FiniteColoring: colors must be >= 1");
    max_used = std::max(max_used, c);
  }
  detail::check_palette(max_used, s);

  if (const auto* circ = std::get_if<CirculantSpec>(&coloring.host)) {
    const auto from_zero = circulant_distances(*circ, 0);
    // Deltas within reach, grouped by width; the delta set is symmetric
    // (dist(d) == dist(n-d)), so scanning v > u covers every pair.
    for (int u = 0; u < n; ++u) {
      const int c = coloring.colors[static_cast<std::size_t>(u)];
      const int a = s.width_of(c);
      for (int v = u + 1; v < n; ++v) {
        if (coloring.colors[static_cast<std::size_t>(v)] != c) continue;
        const int d = from_zero[static_cast<std::size_t>(v - u)];
        if (d >= 0 && d <= a) return Violation{u, v, c, a, d};
      }
    }
    return std::nullopt;
  }

  if (const auto* win = std::get_if<WindowHost>(&coloring.host)) {
    DistanceOracle oracle(win->spec);
    for (int u = 0; u < n; ++u) {
      const int c = coloring.colors[static_cast<std::size_t>(u)];
      const int a = s.width_of(c);
      const std::int64_t reach =
          static_cast<std::int64_t>(a) * win->spec.max_gen();
      for (int v = u + 1; v < n && v - u <= reach; ++v) {
        if (coloring.colors[static_cast<std::size_t>(v)] != c) continue;
        const int d = oracle.distance(v - u);
        if (d <= a) return Violation{u, v, c, a, d};
      }
    }
    return std::nullopt;
  }

  const auto& ht = std::get<HtGadget>(coloring.host);
  for (int u = 0; u < n; ++u) {
    const int c = coloring.colors[static_cast<std::size_t>(u)];
    const int a = s.width_of(c);
    for (int v = u + 1; v < n; ++v) {
      if (coloring.colors[static_cast<std::size_t>(v)] != c) continue;
      const int d = ht.dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d >= 0 && d <= a) return Violation{u, v, c, a, d};
    }
  }
  return std::nullopt;
}

}  // namespace packcol
