#pragma once

// Exact decision and optimization: minimum palette on circulant graphs,
// infeasibility certificates on finite windows of G(Z,{2,t}), H_t
// 5-colorability, and period-p word search.  The engine is a backtracking
// search over a fixed vertex order with precomputed per-width conflict
// bitsets, symmetry breaking restricted to equal-width color blocks, and a
// deterministic node budget.  Every feasible outcome is re-verified through
// the verify module before being returned.

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "packcol/core.hpp"
#include "packcol/verify.hpp"

namespace packcol {

enum class SolveStatus { feasible, infeasible, timeout };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    default: return "timeout";
  }
}

struct SolveOptions {
  std::uint64_t node_budget = 1'000'000'000ULL;
  int threads = 1;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  int k = 0;                // palette size of the reported decision
  std::uint64_t nodes = 0;  // search nodes expanded across the whole call
  std::optional<std::vector<int>> witness;  // vertex -> color, or period word
  std::optional<int> optimum;               // minimize mode: least feasible k
  bool lower_exhausted = false;  // minimize: k-1 was exhausted, not timed out
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(int n = 0) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64)) {}
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= bit(i); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~bit(i); }
  bool test(int i) const { return w_[static_cast<std::size_t>(i) >> 6] & bit(i); }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  void set_all() {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = ~std::uint64_t{0};
    if (n_ % 64) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  int size() const { return n_; }

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// A coloring decision problem in conflict form: vertex v may not share a
/// color of width index w with anything in conflicts[w][v], and may not
/// take such a color at all if forbidden[w] marks it.
struct ConflictProblem {
  int n = 0;
  std::vector<int> widths;                     // palette, 1-based colors
  std::vector<int> width_index;                // color -> distinct-width slot
  std::vector<int> class_start;                // color -> first color of its
                                               // equal-width block (0-based)
  std::vector<std::vector<Bitset>> conflicts;  // [slot][vertex]
  std::vector<Bitset> forbidden;               // [slot]

  static ConflictProblem shell(int n, const WidthSequence& s) {
    ConflictProblem p;
    p.n = n;
    p.widths = s.widths();
    std::vector<int> distinct;
    for (std::size_t c = 0; c < p.widths.size(); ++c) {
      if (distinct.empty() || distinct.back() != p.widths[c])
        distinct.push_back(p.widths[c]);
      p.width_index.push_back(static_cast<int>(distinct.size()) - 1);
      p.class_start.push_back(
          c > 0 && p.widths[c] == p.widths[c - 1] ? p.class_start[c - 1]
                                                  : static_cast<int>(c));
    }
    p.conflicts.assign(distinct.size(),
                       std::vector<Bitset>(static_cast<std::size_t>(n), Bitset(n)));
    p.forbidden.assign(distinct.size(), Bitset(n));
    return p;
  }

  int distinct_width_count() const { return static_cast<int>(forbidden.size()); }
  /// The width value stored in a distinct slot.
  int slot_width(int slot) const {
    for (std::size_t c = 0; c < widths.size(); ++c)
      if (width_index[c] == slot) return widths[c];
    return 0;
  }
};

struct SearchResult {
  SolveStatus status = SolveStatus::infeasible;
  std::uint64_t nodes = 0;
  std::optional<std::vector<int>> assignment;
};

/// May vertex v take 1-based color c given the currently occupied sets?
/// Colors are interchangeable only inside an equal-width block, so a color
/// that is not the first of its block may be placed only once its
/// predecessor is in use (canonical witnesses: first occurrences of
/// equal-width colors appear in increasing order).
inline bool color_allowed(const ConflictProblem& p,
                          const std::vector<Bitset>& occupied, int v, int c) {
  const int slot = p.width_index[static_cast<std::size_t>(c - 1)];
  if (p.forbidden[static_cast<std::size_t>(slot)].test(v)) return false;
  if (c - 1 > p.class_start[static_cast<std::size_t>(c - 1)] &&
      !occupied[static_cast<std::size_t>(c - 2)].any())
    return false;
  return !occupied[static_cast<std::size_t>(c - 1)].intersects(
      p.conflicts[static_cast<std::size_t>(slot)][static_cast<std::size_t>(v)]);
}

/// Depth-first search below a fixed prefix, colors tried in ascending
/// order; deterministic for a fixed problem and budget.
class Searcher {
 public:
  Searcher(const ConflictProblem& p, std::uint64_t budget)
      : p_(p),
        budget_(budget),
        occupied_(p.widths.size(), Bitset(p.n)),
        assignment_(static_cast<std::size_t>(p.n), 0) {}

  void load_prefix(const std::vector<int>& prefix) {
    for (std::size_t v = 0; v < prefix.size(); ++v) {
      assignment_[v] = prefix[v];
      occupied_[static_cast<std::size_t>(prefix[v] - 1)].set(static_cast<int>(v));
    }
    depth_ = static_cast<int>(prefix.size());
  }

  SearchResult run() {
    SearchResult r;
    const bool found = dfs(depth_);
    r.nodes = nodes_;
    if (found) {
      r.status = SolveStatus::feasible;
      r.assignment = assignment_;
    } else {
      r.status = timed_out_ ? SolveStatus::timeout : SolveStatus::infeasible;
    }
    return r;
  }

 private:
  bool dfs(int v) {
    if (v == p_.n) return true;
    for (int c = 1; c <= static_cast<int>(p_.widths.size()); ++c) {
      if (!color_allowed(p_, occupied_, v, c)) continue;
      if (++nodes_ > budget_) {
        timed_out_ = true;
        return false;
      }
      occupied_[static_cast<std::size_t>(c - 1)].set(v);
      assignment_[static_cast<std::size_t>(v)] = c;
      if (dfs(v + 1)) return true;
      occupied_[static_cast<std::size_t>(c - 1)].reset(v);
      assignment_[static_cast<std::size_t>(v)] = 0;
      if (timed_out_) return false;
    }
    return false;
  }

  const ConflictProblem& p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  int depth_ = 0;
  std::vector<Bitset> occupied_;
  std::vector<int> assignment_;
};

/// Every consistent assignment prefix of the given depth, in lexicographic
/// order, counting expanded nodes against the budget.
inline std::vector<std::vector<int>> enumerate_prefixes(
    const ConflictProblem& p, int depth, std::uint64_t budget,
    std::uint64_t& nodes, bool& timed_out) {
  std::vector<std::vector<int>> out;
  std::vector<Bitset> occupied(p.widths.size(), Bitset(p.n));
  std::vector<int> current;
  auto rec = [&](auto&& self, int v) -> void {
    if (timed_out) return;
    if (v == depth) {
      out.push_back(current);
      return;
    }
    for (int c = 1; c <= static_cast<int>(p.widths.size()); ++c) {
      if (!color_allowed(p, occupied, v, c)) continue;
      if (++nodes > budget) {
        timed_out = true;
        return;
      }
      occupied[static_cast<std::size_t>(c - 1)].set(v);
      current.push_back(c);
      self(self, v + 1);
      current.pop_back();
      occupied[static_cast<std::size_t>(c - 1)].reset(v);
      if (timed_out) return;
    }
  };
  rec(rec, 0);
  return out;
}

/// Decides a ConflictProblem.  With threads > 1 the top of the tree is
/// split into consistent prefixes processed round-robin; the reported
/// witness is the one the sequential search would find (the leftmost
/// feasible leaf), independent of the schedule.
inline SearchResult solve_problem(const ConflictProblem& p,
                                  const SolveOptions& opt) {
  const int threads = std::max(1, opt.threads);
  if (threads == 1 || p.n < 4) {
    Searcher s(p, opt.node_budget);
    return s.run();
  }

  std::uint64_t enum_nodes = 0;
  bool enum_timeout = false;
  int depth = 1;
  std::vector<std::vector<int>> prefixes;
  while (depth < p.n) {
    prefixes = enumerate_prefixes(p, depth, opt.node_budget, enum_nodes,
                                  enum_timeout);
    if (enum_timeout) return {SolveStatus::timeout, enum_nodes, std::nullopt};
    if (static_cast<int>(prefixes.size()) >= 4 * threads ||
        static_cast<int>(prefixes.size()) > 2048 || depth >= p.n / 2)
      break;
    ++depth;
  }
  if (prefixes.empty()) return {SolveStatus::infeasible, enum_nodes, std::nullopt};

  const std::uint64_t remaining =
      opt.node_budget > enum_nodes ? opt.node_budget - enum_nodes : 0;
  const std::uint64_t share = remaining / static_cast<std::uint64_t>(threads);

  struct WorkerResult {
    std::uint64_t nodes = 0;
    bool timed_out = false;
    std::optional<std::size_t> found_index;
    std::optional<std::vector<int>> assignment;
  };
  std::vector<WorkerResult> results(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      WorkerResult& res = results[static_cast<std::size_t>(w)];
      for (std::size_t i = static_cast<std::size_t>(w); i < prefixes.size();
           i += static_cast<std::size_t>(threads)) {
        if (res.nodes >= share) {
          res.timed_out = true;
          break;
        }
        Searcher s(p, share - res.nodes);
        s.load_prefix(prefixes[i]);
        SearchResult r = s.run();
        res.nodes += r.nodes;
        if (r.status == SolveStatus::feasible) {
          res.found_index = i;
          res.assignment = std::move(r.assignment);
          break;
        }
        if (r.status == SolveStatus::timeout) {
          res.timed_out = true;
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  SearchResult merged;
  merged.nodes = enum_nodes;
  std::optional<std::size_t> best;
  bool any_timeout = false;
  for (auto& res : results) {
    merged.nodes += res.nodes;
    any_timeout = any_timeout || res.timed_out;
    if (res.found_index && (!best || *res.found_index < *best)) {
      best = res.found_index;
      merged.assignment = res.assignment;
    }
  }
  if (best) {
    merged.status = SolveStatus::feasible;
  } else {
    merged.status = any_timeout ? SolveStatus::timeout : SolveStatus::infeasible;
  }
  return merged;
}

inline void add_conflict(ConflictProblem& p, int slot, int u, int v) {
  if (u == v) return;
  p.conflicts[static_cast<std::size_t>(slot)][static_cast<std::size_t>(u)].set(v);
  p.conflicts[static_cast<std::size_t>(slot)][static_cast<std::size_t>(v)].set(u);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hosts
// ---------------------------------------------------------------------------

namespace detail {

inline ConflictProblem circulant_problem(const CirculantSpec& spec,
                                         const WidthSequence& s) {
  ConflictProblem p = ConflictProblem::shell(spec.n, s);
  const auto dist0 = circulant_distances(spec, 0);
  for (int slot = 0; slot < p.distinct_width_count(); ++slot) {
    const int a = p.slot_width(slot);
    for (int delta = 1; delta < spec.n; ++delta) {
      const int d = dist0[static_cast<std::size_t>(delta)];
      if (d < 1 || d > a) continue;
      for (int u = 0; u < spec.n; ++u) add_conflict(p, slot, u, (u + delta) % spec.n);
    }
  }
  return p;
}

inline ConflictProblem window_problem(const DistanceOracle& oracle,
                                      const WidthSequence& s, std::int64_t w) {
  const int n = static_cast<int>(w + 1);
  ConflictProblem p = ConflictProblem::shell(n, s);
  for (int slot = 0; slot < p.distinct_width_count(); ++slot) {
    const int a = p.slot_width(slot);
    for (std::int64_t g : oracle.conflict_offsets(a)) {
      if (g > w) break;
      for (int u = 0; u + g <= w; ++u)
        add_conflict(p, slot, u, u + static_cast<int>(g));
    }
  }
  return p;
}

inline ConflictProblem ht_problem(const HtGadget& ht, const WidthSequence& s) {
  const int n = ht.vertex_count();
  ConflictProblem p = ConflictProblem::shell(n, s);
  for (int slot = 0; slot < p.distinct_width_count(); ++slot) {
    const int a = p.slot_width(slot);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const int d = ht.dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (d >= 1 && d <= a) add_conflict(p, slot, u, v);
      }
    }
  }
  return p;
}

/// Residue conflict graph for period-p words over G_t: residues r,s clash
/// at width a iff some lift m = s-r (mod p) with 0 < |m| <= a*t has
/// d(0,m) <= a; a conflicting lift that is a multiple of p rules the width
/// out everywhere.
inline ConflictProblem periodic_problem(const DistanceOracle& oracle,
                                        const WidthSequence& s, int period) {
  ConflictProblem p = ConflictProblem::shell(period, s);
  for (int slot = 0; slot < p.distinct_width_count(); ++slot) {
    const int a = p.slot_width(slot);
    for (std::int64_t g : oracle.conflict_offsets(a)) {
      if (g % period == 0) {
        p.forbidden[static_cast<std::size_t>(slot)].set_all();
        continue;
      }
      const int delta = static_cast<int>(g % period);
      for (int r = 0; r < period; ++r) {
        add_conflict(p, slot, r, (r + delta) % period);
      }
    }
  }
  return p;
}

inline SolveOutcome decide(const ConflictProblem& problem, int k,
                           const SolveOptions& opt) {
  SearchResult r = solve_problem(problem, opt);
  SolveOutcome out;
  out.status = r.status;
  out.k = k;
  out.nodes = r.nodes;
  out.witness = std::move(r.assignment);
  return out;
}

template <typename Build, typename Reverify>
SolveOutcome minimize(Build build, int kmax, const SolveOptions& opt,
                      Reverify reverify) {
  SolveOutcome out;
  std::uint64_t total = 0;
  std::uint64_t remaining = opt.node_budget;
  for (int k = 1; k <= kmax; ++k) {
    SolveOptions sub = opt;
    sub.node_budget = remaining;
    SolveOutcome r = decide(build(k), k, sub);
    total += r.nodes;
    remaining = remaining > r.nodes ? remaining - r.nodes : 0;
    if (r.status == SolveStatus::timeout) {
      r.nodes = total;
      return r;
    }
    if (r.status == SolveStatus::feasible) {
      r.nodes = total;
      r.optimum = k;
      r.lower_exhausted = k > 1;
      reverify(r);
      return r;
    }
  }
  out.status = SolveStatus::infeasible;
  out.k = kmax;
  out.nodes = total;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Exhaustively decides whether C_n(steps) admits an S(1..k)-packing
/// coloring.  Feasible outcomes carry a re-verified witness.
inline SolveOutcome solve_circulant(const CirculantSpec& spec,
                                    const WidthSequence& s, int k,
                                    const SolveOptions& opt = {}) {
  if (k < 1 || k > s.size()) {
    throw precondition_error("solve_circulant: k must be in [1, |S|]");
  }
  if (s.max_width() > 4) {
    throw precondition_error("solve_circulant: widths above 4 are unsupported");
  }
  const WidthSequence prefix = s.prefix(k);
  SolveOutcome out = detail::decide(detail::circulant_problem(spec, prefix), k, opt);
  if (out.status == SolveStatus::feasible) {
    if (verify_finite(FiniteColoring{spec, *out.witness}, prefix)) {
      throw construction_error("solve_circulant: witness failed re-verification");
    }
  }
  return out;
}

/// Least k <= kmax admitting a coloring of C_n(steps); records both the
/// witness at the optimum and the exhaustive infeasibility below it.
inline SolveOutcome solve_circulant_min(const CirculantSpec& spec,
                                        const WidthSequence& s, int kmax,
                                        const SolveOptions& opt = {}) {
  if (kmax < 1) throw precondition_error("solve_circulant_min: kmax < 1");
  kmax = std::min(kmax, s.size());
  if (s.max_width() > 4) {
    throw precondition_error("solve_circulant_min: widths above 4 are unsupported");
  }
  return detail::minimize(
      [&](int k) { return detail::circulant_problem(spec, s.prefix(k)); }, kmax,
      opt, [&](const SolveOutcome& r) {
        if (verify_finite(FiniteColoring{spec, *r.witness}, s.prefix(*r.optimum))) {
          throw construction_error("solve_circulant_min: witness failed re-verification");
        }
      });
}

/// Exhaustive k-colorability of the window {0..w} of G_t under true
/// G_t distances; infeasibility certifies chi_S(G_t) > k, since any valid
/// coloring of G_t restricted to the window satisfies every checked
/// constraint.
inline SolveOutcome window_infeasible(std::int64_t t, const WidthSequence& s,
                                      int k, std::int64_t w,
                                      const SolveOptions& opt = {}) {
  const DistanceSpec spec = DistanceSpec::g2t(t);
  if (w < 1 || w > 12 * t) {
    throw precondition_error("window_infeasible: w must be in [1, 12t]");
  }
  if (k < 1 || k > s.size()) {
    throw precondition_error("window_infeasible: k must be in [1, |S|]");
  }
  DistanceOracle oracle(spec);
  const WidthSequence prefix = s.prefix(k);
  SolveOutcome out =
      detail::decide(detail::window_problem(oracle, prefix, w), k, opt);
  if (out.status == SolveStatus::feasible) {
    if (verify_finite(FiniteColoring{WindowHost{spec, w}, *out.witness}, prefix)) {
      throw construction_error("window_infeasible: witness failed re-verification");
    }
  }
  return out;
}

/// Exhaustive k-colorability of H_t with all widths 2.  Infeasibility for
/// t = 3,5,7 (mod 10) certifies chi_2(G_t) >= k+1 through the verified
/// embedding of H_t into G_t.
inline SolveOutcome ht_infeasible(std::int64_t t, int k = 5,
                                  const SolveOptions& opt = {}) {
  if (t < 5 || t > 25 || t % 2 == 0) {
    throw precondition_error("ht_infeasible: t must be odd in [5, 25]");
  }
  if (k < 1 || k > 16) throw precondition_error("ht_infeasible: bad k");
  const HtGadget ht = build_ht(t);
  const WidthSequence s = WidthSequence::constant(2, k);
  SolveOutcome out = detail::decide(detail::ht_problem(ht, s), k, opt);
  if (out.status == SolveStatus::feasible) {
    if (verify_finite(FiniteColoring{ht, *out.witness}, s)) {
      throw construction_error("ht_infeasible: witness failed re-verification");
    }
  }
  return out;
}

/// Decides existence of a period-p word over [1..k] that is an S-packing
/// coloring of G_t; a feasible witness always re-verifies.
inline SolveOutcome periodic_search(std::int64_t t, const WidthSequence& s,
                                    int k, int period,
                                    const SolveOptions& opt = {}) {
  const DistanceSpec spec = DistanceSpec::g2t(t);
  if (period < 1 || period > 200) {
    throw precondition_error("periodic_search: period must be in [1, 200]");
  }
  if (k < 1 || k > s.size()) {
    throw precondition_error("periodic_search: k must be in [1, |S|]");
  }
  DistanceOracle oracle(spec);
  const WidthSequence prefix = s.prefix(k);
  SolveOutcome out =
      detail::decide(detail::periodic_problem(oracle, prefix, period), k, opt);
  if (out.status == SolveStatus::feasible) {
    if (verify_periodic(PeriodicColoring(*out.witness), oracle, prefix)) {
      throw construction_error("periodic_search: witness failed re-verification");
    }
  }
  return out;
}

}  // namespace packcol
