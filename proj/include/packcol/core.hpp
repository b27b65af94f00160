#pragma once

// Graph models for S-packing colorings of the integer distance graphs
// G(Z,D) -- canonically D = {2,t} with t odd -- and of circulant graphs
// C_n(s_1,...,s_k), plus the exact distance oracle every other module
// consumes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace packcol {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters supplied by a caller (rejected input, not a bug).
class precondition_error : public error {
 public:
  using error::error;
};

/// A query reached a vertex that is unreachable (only possible for
/// generator sets built through DistanceSpec::general).
class disconnected_error : public error {
 public:
  using error::error;
};

/// An internally built object failed its own validation; indicates a
/// construction bug, never expected for valid inputs.
class construction_error : public error {
 public:
  using error::error;
};

/// The exact computation would exceed the supported memory envelope.
class resource_limit_error : public error {
 public:
  using error::error;
};

// Input caps; chosen so that t*d products stay far from int64 overflow.
inline constexpr std::int64_t kMaxT = 1'000'000;
inline constexpr std::int64_t kMaxWidth = 10'000;
// Largest BFS window the oracle will materialize (cells, not bytes).
inline constexpr std::int64_t kMaxBfsCells = std::int64_t{1} << 25;

// ---------------------------------------------------------------------------
// DistanceSpec
// ---------------------------------------------------------------------------

/// Generator set D of an integer distance graph G(Z,D): vertices are the
/// integers, i ~ j iff |i-j| is a generator.  The canonical family is
/// D = {2,t} with t odd, t >= 3; arbitrary D is available through
/// `general` for experiments (even t splits the graph into two components,
/// so the canonical constructor rejects it).
class DistanceSpec {
 public:
  static DistanceSpec g2t(std::int64_t t) {
    if (t < 3 || t % 2 == 0) {
      throw precondition_error("DistanceSpec: t must be odd and >= 3, got " +
                               std::to_string(t));
    }
    if (t > kMaxT) {
      throw precondition_error("DistanceSpec: t exceeds supported cap " +
                               std::to_string(kMaxT));
    }
    return DistanceSpec({2, t}, t);
  }

  /// Escape hatch: any nonempty set of distinct positive generators.
  static DistanceSpec general(std::vector<std::int64_t> gens) {
    if (gens.empty()) {
      throw precondition_error("DistanceSpec: empty generator set");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() < 1 || gens.back() > kMaxT) {
      throw precondition_error("DistanceSpec: generators must be in [1, " +
                               std::to_string(kMaxT) + "]");
    }
    return DistanceSpec(std::move(gens), std::nullopt);
  }

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t max_gen() const { return gens_.back(); }

  bool is_g2t() const { return t_.has_value(); }

  /// The odd generator t of the canonical {2,t} family.
  std::int64_t t() const {
    if (!t_) throw precondition_error("DistanceSpec: not a {2,t} spec");
    return *t_;
  }

  friend bool operator==(const DistanceSpec& a, const DistanceSpec& b) {
    return a.gens_ == b.gens_;
  }

 private:
  DistanceSpec(std::vector<std::int64_t> gens, std::optional<std::int64_t> t)
      : gens_(std::move(gens)), t_(t) {
    std::sort(gens_.begin(), gens_.end());
  }

  std::vector<std::int64_t> gens_;
  std::optional<std::int64_t> t_;
};

// ---------------------------------------------------------------------------
// DistanceOracle
// ---------------------------------------------------------------------------

namespace detail {

/// BFS from 0 over the integer window [-radius, radius].  Returns hop
/// distances indexed by position+radius, -1 where unreached.  Expansion
/// stops once `target` is final or all levels <= `level_cap` are settled.
inline std::vector<std::int32_t> windowed_bfs(
    const std::vector<std::int64_t>& gens, std::int64_t radius,
    std::optional<std::int64_t> target, std::optional<int> level_cap) {
  if (radius < 0) radius = 0;
  const std::int64_t cells = 2 * radius + 1;
  if (cells > kMaxBfsCells) {
    throw resource_limit_error(
        "distance query needs a BFS window of " + std::to_string(cells) +
        " cells, above the supported cap of " + std::to_string(kMaxBfsCells));
  }
  std::vector<std::int32_t> dist(static_cast<std::size_t>(cells), -1);
  dist[static_cast<std::size_t>(radius)] = 0;
  if (target && *target == 0) return dist;

  std::vector<std::int64_t> frontier{0}, next;
  std::int32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    if (level_cap && level > *level_cap) break;
    next.clear();
    for (std::int64_t pos : frontier) {
      for (std::int64_t g : gens) {
        for (std::int64_t nb : {pos + g, pos - g}) {
          if (nb < -radius || nb > radius) continue;
          auto idx = static_cast<std::size_t>(nb + radius);
          if (dist[idx] >= 0) continue;
          dist[idx] = level;
          if (target && nb == *target) return dist;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

/// Steps sufficient to realize `gap` as a signed sum of generators, via a
/// chained extended gcd.  Nullopt when gap is not a multiple of gcd(D)
/// (the gap is then unreachable).  Values use __int128 internally so the
/// caller can range-check before trusting the bound.
inline std::optional<__int128> representation_steps(
    const std::vector<std::int64_t>& gens, std::int64_t gap) {
  // coefficients c_i with sum c_i * gens_i == g == gcd(gens)
  std::vector<__int128> coeff{1};
  __int128 g = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i) {
    // extended gcd of (g, gens[i])
    __int128 old_r = g, r = gens[i];
    __int128 old_s = 1, s = 0;
    while (r != 0) {
      const __int128 q = old_r / r;
      const __int128 next_r = old_r - q * r;
      const __int128 next_s = old_s - q * s;
      old_r = r;
      r = next_r;
      old_s = s;
      s = next_s;
    }
    // old_r = gcd, old_s * g + y * gens[i] = old_r
    __int128 y = (old_r - old_s * g) / static_cast<__int128>(gens[i]);
    for (auto& c : coeff) c *= old_s;
    coeff.push_back(y);
    g = old_r;
  }
  if (static_cast<__int128>(gap) % g != 0) return std::nullopt;
  const __int128 mult = static_cast<__int128>(gap) / g;
  __int128 steps = 0;
  for (__int128 c : coeff) {
    __int128 v = c * mult;
    steps += v < 0 ? -v : v;
  }
  return steps;
}

}  // namespace detail

/// Memoized exact distances d_{G(Z,D)}(0, gap).  A query first derives a
/// constructive upper bound U on the distance, then runs a BFS restricted
/// to [-U*max_gen, U*max_gen]: a path of length L never leaves L*max_gen
/// of its origin, so truncation cannot cut a shortest path and the result
/// is exact.  Thread-safe for concurrent readers.
class DistanceOracle {
 public:
  explicit DistanceOracle(DistanceSpec spec) : spec_(std::move(spec)) {}

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const DistanceSpec& spec() const { return spec_; }

  /// Exact hop distance between integers at the given (signed) gap.
  int distance(std::int64_t gap) const {
    if (gap == std::numeric_limits<std::int64_t>::min()) {
      throw precondition_error("distance: gap out of range");
    }
    if (gap < 0) gap = -gap;
    if (gap == 0) return 0;
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find(gap);
      if (it != memo_.end()) return it->second;
    }
    const __int128 radius128 =
        static_cast<__int128>(bound_steps(gap)) * spec_.max_gen();
    if (2 * radius128 + 1 > kMaxBfsCells) {
      throw resource_limit_error("distance query out of supported range");
    }
    const auto radius = static_cast<std::int64_t>(radius128);
    auto dist =
        detail::windowed_bfs(spec_.generators(), radius, gap, std::nullopt);
    const std::int32_t d = dist[static_cast<std::size_t>(gap + radius)];
    if (d < 0) {
      throw construction_error("exactness bound violated for gap " +
                               std::to_string(gap));
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(gap, d);
    return d;
  }

  /// All positive gaps g with distance(g) <= width; every member is
  /// <= width*max_gen, which is what makes downstream scans finite.
  std::vector<std::int64_t> conflict_offsets(int width) const {
    if (width < 1) throw precondition_error("conflict_offsets: width < 1");
    if (width > kMaxWidth) {
      throw precondition_error("conflict_offsets: width exceeds cap " +
                               std::to_string(kMaxWidth));
    }
    const std::int64_t radius = static_cast<std::int64_t>(width) * spec_.max_gen();
    auto dist =
        detail::windowed_bfs(spec_.generators(), radius, std::nullopt, width);
    std::vector<std::int64_t> offsets;
    {
      // Every settled level L <= width is exact: a shorter true path would
      // fit inside the window and BFS would have found it first.
      std::unique_lock lock(mutex_);
      for (std::int64_t g = 1; g <= radius; ++g) {
        auto d = dist[static_cast<std::size_t>(g + radius)];
        if (d >= 0 && d <= width) {
          offsets.push_back(g);
          memo_.emplace(g, d);
        }
      }
    }
    return offsets;
  }

 private:
  std::int64_t bound_steps(std::int64_t gap) const {
    if (spec_.is_g2t()) {
      const std::int64_t t = spec_.t();
      if (gap % 2 == 0) return gap / 2;
      return std::min(std::llabs(gap - t), std::llabs(gap + t)) / 2 + 1;
    }
    auto steps = detail::representation_steps(spec_.generators(), gap);
    if (!steps) {
      throw disconnected_error("gap " + std::to_string(gap) +
                               " is unreachable in G(Z,D)");
    }
    if (*steps * static_cast<__int128>(spec_.max_gen()) > kMaxBfsCells) {
      throw resource_limit_error("distance query out of supported range");
    }
    return static_cast<std::int64_t>(*steps);
  }

  DistanceSpec spec_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::int64_t, std::int32_t> memo_;
};

/// d_{G(Z,D)}(0, gap), exact.
inline int dist_delta(const DistanceOracle& oracle, std::int64_t gap) {
  return oracle.distance(gap);
}

/// { g >= 1 : d(0,g) <= width }, sorted ascending.
inline std::vector<std::int64_t> conflict_offsets(const DistanceOracle& oracle,
                                                  int width) {
  return oracle.conflict_offsets(width);
}

// ---------------------------------------------------------------------------
// WidthSequence
// ---------------------------------------------------------------------------

/// Finite prefix of the non-decreasing width sequence S = (a_1, a_2, ...):
/// color i may repeat only at graph distance > a_i.  A prefix of length k
/// fully determines k-colorability.
class WidthSequence {
 public:
  explicit WidthSequence(std::vector<int> widths) : widths_(std::move(widths)) {
    if (widths_.empty()) {
      throw precondition_error("WidthSequence: empty");
    }
    for (std::size_t i = 0; i < widths_.size(); ++i) {
      if (widths_[i] < 1 || widths_[i] > kMaxWidth) {
        throw precondition_error("WidthSequence: width out of range");
      }
      if (i > 0 && widths_[i] < widths_[i - 1]) {
        throw precondition_error("WidthSequence: must be non-decreasing");
      }
    }
  }

  static WidthSequence constant(int width, int count) {
    if (count < 1) throw precondition_error("WidthSequence: count < 1");
    return WidthSequence(std::vector<int>(static_cast<std::size_t>(count), width));
  }

  /// Parses "1,1,2,2" with the shorthand "2*5" meaning five 2s; tokens mix
  /// freely ("1,2*4").
  static WidthSequence parse(std::string_view text) {
    std::vector<int> widths;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string token(text.substr(start, comma - start));
      if (token.empty()) {
        throw precondition_error("width sequence: empty token in '" +
                                 std::string(text) + "'");
      }
      long width = 0, repeat = 1;
      std::size_t star = token.find('*');
      try {
        if (star == std::string::npos) {
          width = std::stol(token);
        } else {
          width = std::stol(token.substr(0, star));
          repeat = std::stol(token.substr(star + 1));
        }
      } catch (const std::exception&) {
        throw precondition_error("width sequence: bad token '" + token + "'");
      }
      if (repeat < 1 || repeat > kMaxWidth) {
        throw precondition_error("width sequence: bad repeat in '" + token + "'");
      }
      for (long i = 0; i < repeat; ++i) widths.push_back(static_cast<int>(width));
      if (comma == text.size()) break;
      start = comma + 1;
    }
    return WidthSequence(std::move(widths));
  }

  int size() const { return static_cast<int>(widths_.size()); }
  const std::vector<int>& widths() const { return widths_; }

  /// Width of 1-based color c.
  int width_of(int color) const {
    if (color < 1 || color > size()) {
      throw precondition_error("color " + std::to_string(color) +
                               " outside palette of size " + std::to_string(size()));
    }
    return widths_[static_cast<std::size_t>(color - 1)];
  }

  WidthSequence prefix(int k) const {
    if (k < 1 || k > size()) {
      throw precondition_error("WidthSequence: bad prefix length");
    }
    return WidthSequence(std::vector<int>(widths_.begin(), widths_.begin() + k));
  }

  int max_width() const { return widths_.back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < widths_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(widths_[i]);
    }
    return out;
  }

  friend bool operator==(const WidthSequence& a, const WidthSequence& b) {
    return a.widths_ == b.widths_;
  }

 private:
  std::vector<int> widths_;
};

// ---------------------------------------------------------------------------
// CirculantSpec
// ---------------------------------------------------------------------------

/// Circulant graph C_n(s_1,...,s_k): vertices 0..n-1, i adjacent to
/// i +- s_j (mod n).  Connectivity is not assumed; report it.
struct CirculantSpec {
  int n = 0;
  std::vector<int> steps;

  static CirculantSpec make(int n, std::vector<int> steps) {
    if (n < 2 || n > 10'000) {
      throw precondition_error("CirculantSpec: n must be in [2, 10000]");
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    if (steps.empty() || steps.front() < 1 || steps.back() >= n) {
      throw precondition_error("CirculantSpec: steps must satisfy 1 <= s < n");
    }
    return CirculantSpec{n, std::move(steps)};
  }

  bool connected() const {
    int g = n;
    for (int s : steps) g = std::gcd(g, s);
    return g == 1;
  }

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// Hop distances from `source` to every vertex (-1 where unreachable).
inline std::vector<int> circulant_distances(const CirculantSpec& spec,
                                            int source) {
  std::vector<int> dist(static_cast<std::size_t>(spec.n), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::vector<int> frontier{source}, next;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (int u : frontier) {
      for (int s : spec.steps) {
        for (int v : {(u + s) % spec.n, (u - s + spec.n) % spec.n}) {
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

/// Exact hop distance in C_n(steps); nullopt when u and v lie in
/// different components.
inline std::optional<int> dist_circulant(const CirculantSpec& spec, int u,
                                         int v) {
  if (u < 0 || u >= spec.n || v < 0 || v >= spec.n) {
    throw precondition_error("dist_circulant: vertex out of range");
  }
  // Vertex-transitive: shift so the source is 0.
  int delta = v - u;
  if (delta < 0) delta += spec.n;
  int d = circulant_distances(spec, 0)[static_cast<std::size_t>(delta)];
  if (d < 0) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// HtGadget
// ---------------------------------------------------------------------------

/// The grid gadget H_t: P_4 x P_t plus the extra edge ((2,1),(4,t)),
/// together with an embedding of its vertices into Z that realizes every
/// gadget edge as a {2,t} gap.  Used for the 2-distance lower bound.
struct HtGadget {
  std::int64_t t = 0;
  std::vector<std::pair<int, int>> edges;      // vertex-index pairs
  std::vector<std::vector<int>> dist;          // internal all-pairs hops

  int vertex_count() const { return static_cast<int>(4 * t); }

  /// Row-major vertex index for (i,j), i in [1..4], j in [1..t].
  int index(int i, int j) const {
    return static_cast<int>((i - 1) * t + (j - 1));
  }

  /// Embedding phi(i,j) = (i-1)*t + 2*(t-j): rows step by t, columns by 2,
  /// and the extra edge lands on gap 2.
  std::int64_t embed(int i, int j) const { return (i - 1) * t + 2 * (t - j); }

  std::int64_t embed_index(int v) const {
    return embed(static_cast<int>(v / t) + 1, static_cast<int>(v % t) + 1);
  }

  friend bool operator==(const HtGadget& a, const HtGadget& b) {
    return a.t == b.t;
  }
};

/// Builds H_t and validates the embedding edge by edge against the {2,t}
/// generator set before returning.
inline HtGadget build_ht(std::int64_t t) {
  if (t < 5 || t % 2 == 0) {
    throw precondition_error("build_ht: t must be odd and >= 5");
  }
  if (t > 2001) {
    throw precondition_error("build_ht: t too large for the gadget tables");
  }
  HtGadget h;
  h.t = t;
  const int n = h.vertex_count();

  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= static_cast<int>(t); ++j) {
      if (j < t) h.edges.emplace_back(h.index(i, j), h.index(i, j + 1));
      if (i < 4) h.edges.emplace_back(h.index(i, j), h.index(i + 1, j));
    }
  }
  h.edges.emplace_back(h.index(2, 1), h.index(4, static_cast<int>(t)));

  // Embedding validation: injectivity plus every edge mapping to a gap in
  // {2,t}.  A failure is a construction bug, not a caller error.
  {
    std::vector<std::int64_t> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) images.push_back(h.embed_index(v));
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw construction_error("H_t embedding is not injective");
    }
    for (auto [a, b] : h.edges) {
      std::int64_t gap = std::llabs(images[static_cast<std::size_t>(a)] -
                                    images[static_cast<std::size_t>(b)]);
      if (gap != 2 && gap != t) {
        throw construction_error("H_t embedding maps an edge to gap " +
                                 std::to_string(gap));
      }
    }
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : h.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  h.dist.assign(static_cast<std::size_t>(n),
                std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = h.dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> frontier{s}, next;
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      next.clear();
      for (int u : frontier) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
          if (d[static_cast<std::size_t>(v)] < 0) {
            d[static_cast<std::size_t>(v)] = level;
            next.push_back(v);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return h;
}

}  // namespace packcol
