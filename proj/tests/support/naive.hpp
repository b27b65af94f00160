#pragma once

// Independent reference implementations used only by tests: a plain BFS
// over a wide fixed interval, an L1-representation distance, a brute-force
// periodic-word checker, and a full-enumeration circulant decision.  They
// deliberately share no code with the library paths they check.

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace testsupport {

/// Plain BFS from 0 over [-radius, radius]; dist[g + radius] is the hop
/// count, -1 if unreached.  No windowing argument: the caller picks a
/// radius generous enough for the gaps it will read.
inline std::vector<int> naive_distances(const std::vector<std::int64_t>& gens,
                                        std::int64_t radius) {
  std::vector<int> dist(static_cast<std::size_t>(2 * radius + 1), -1);
  dist[static_cast<std::size_t>(radius)] = 0;
  std::vector<std::int64_t> frontier{0}, next;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (std::int64_t u : frontier) {
      for (std::int64_t g : gens) {
        for (std::int64_t v : {u + g, u - g}) {
          if (v < -radius || v > radius) continue;
          auto idx = static_cast<std::size_t>(v + radius);
          if (dist[idx] < 0) {
            dist[idx] = level;
            next.push_back(v);
          }
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

/// BFS distance in G(Z,{2,t}) with the spec-mandated test radius 300*t;
/// exact for |gap| <= 200 and the usual t range.
inline int naive_distance(std::int64_t t, std::int64_t gap) {
  static thread_local std::int64_t cached_t = -1;
  static thread_local std::vector<int> table;
  const std::int64_t radius = 300 * t;
  if (cached_t != t) {
    table = naive_distances({2, t}, radius);
    cached_t = t;
  }
  if (gap < 0) gap = -gap;
  return table[static_cast<std::size_t>(gap + radius)];
}

/// Second independent route for {2,t}: the distance equals the least
/// |x| + |y| over representations gap = 2x + t*y, found by scanning y.
inline int representation_distance(std::int64_t t, std::int64_t gap) {
  if (gap < 0) gap = -gap;
  if (gap == 0) return 0;
  long best = -1;
  const std::int64_t ylim = gap / t + 3;
  for (std::int64_t y = -ylim; y <= ylim; ++y) {
    const std::int64_t rest = gap - t * y;
    if (rest % 2 != 0) continue;
    const long cost = static_cast<long>(std::llabs(y) + std::llabs(rest) / 2);
    if (best < 0 || cost < best) best = cost;
  }
  return static_cast<int>(best);
}

/// Brute-force S-packing verdict for a periodic word: expand it over
/// [0, 4 * p * t * max_width) and test every pair against naive BFS
/// distances.  Pairs farther apart than max_width * t are skipped on the
/// grounds that each hop moves at most t, so their distance exceeds every
/// width.
inline bool brute_periodic_valid(const std::vector<int>& word, std::int64_t t,
                                 const std::vector<int>& widths) {
  int max_width = 1;
  for (int w : widths) max_width = std::max(max_width, w);
  const std::int64_t n =
      4 * static_cast<std::int64_t>(word.size()) * t * max_width;
  const std::int64_t reach = static_cast<std::int64_t>(max_width) * t;
  for (std::int64_t x = 0; x < n; ++x) {
    const int c = word[static_cast<std::size_t>(x % static_cast<std::int64_t>(word.size()))];
    const int a = widths[static_cast<std::size_t>(c - 1)];
    for (std::int64_t y = x + 1; y < n; ++y) {
      if (word[static_cast<std::size_t>(y % static_cast<std::int64_t>(word.size()))] != c)
        continue;
      if (y - x > reach) break;
      const int d = naive_distance(t, y - x);
      if (d >= 0 && d <= a) return false;
    }
  }
  return true;
}

/// Hop distances from 0 in C_n(steps) by plain BFS (own implementation).
inline std::vector<int> naive_circulant_distances(int n,
                                                  const std::vector<int>& steps) {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[0] = 0;
  std::vector<int> frontier{0}, next;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (int u : frontier) {
      for (int s : steps) {
        for (int v : {(u + s) % n, (u - s + n) % n}) {
          if (dist[static_cast<std::size_t>(v)] < 0) {
            dist[static_cast<std::size_t>(v)] = level;
            next.push_back(v);
          }
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

/// Does C_n(steps) admit an S-packing coloring with the given widths?
/// Decided by enumerating all |widths|^n assignments (odometer order).
inline bool enumerate_circulant_feasible(int n, const std::vector<int>& steps,
                                         const std::vector<int>& widths) {
  const int k = static_cast<int>(widths.size());
  const auto dist0 = naive_circulant_distances(n, steps);
  std::vector<int> assign(static_cast<std::size_t>(n), 1);
  while (true) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      const int a = widths[static_cast<std::size_t>(assign[static_cast<std::size_t>(u)] - 1)];
      for (int v = u + 1; v < n; ++v) {
        if (assign[static_cast<std::size_t>(v)] != assign[static_cast<std::size_t>(u)])
          continue;
        const int d = dist0[static_cast<std::size_t>(v - u)];
        if (d >= 0 && d <= a) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
    int pos = n - 1;
    while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == k) {
      assign[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return false;
    ++assign[static_cast<std::size_t>(pos)];
  }
}

}  // namespace testsupport
